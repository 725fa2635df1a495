#include "taut/algebra.hpp"

#include "taut/special_numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace taut {

namespace {

TailGraph bare_stratum(int g, int n, int k) {
    TailGraph t;
    t.g = g;
    t.n = n;
    t.k = k;
    t.root.leg_psi.assign(n, 0);
    t.root.star_psi.assign(k, 0);
    t.tails.assign(k, TailDecoration{});
    return t;
}

/// All injections [r] -> [k], as position vectors.
std::vector<std::vector<int>> injections(int r, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(k, false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == r) {
            out.push_back(cur);
            return;
        }
        for (int slot = 0; slot < k; ++slot) {
            if (used[slot]) continue;
            used[slot] = true;
            cur.push_back(slot);
            self(self, depth + 1);
            cur.pop_back();
            used[slot] = false;
        }
    };
    rec(rec, 0);
    return out;
}

struct Pending {
    TailGraph graph;
    Rational coeff;
};

/// Distribute one explicit lambda_m from an absorbed root over a set of new
/// tail slots: lambda_m -> sum over subsets S, lambda_{m-|S|} on the root and
/// one lambda_1 on each tail in S.
void distribute_lambda(std::vector<Pending>& work, int m, const std::vector<int>& slots) {
    std::vector<Pending> next;
    for (const auto& p : work) {
        int limit = 1 << slots.size();
        for (int mask = 0; mask < limit; ++mask) {
            int size = __builtin_popcount(static_cast<unsigned>(mask));
            if (size > m) continue;
            Pending q = p;
            int residual = m - size;
            if (residual > q.graph.root_genus()) continue;  // lambda beyond genus vanishes
            if (residual >= 1) q.graph.root.lambda.push_back(residual);
            for (std::size_t b = 0; b < slots.size(); ++b)
                if (mask & (1 << b)) q.graph.tails[slots[b]].lambda1 += 1;
            next.push_back(std::move(q));
        }
    }
    work = std::move(next);
}

void product_single(const TailGraph& a, const Rational& ca, const TailGraph& b, const Rational& cb,
                    GraphSum& out, ProductDiagnostics* diag) {
    const int g = a.g;
    const int n = a.n;
    const int r = a.k;
    const int s = b.k;

    for (int k = std::max(r, s); k <= std::min(r + s, g); ++k) {
        if (!root_vertex_stable(g, n, k)) {
            if (diag) ++diag->dropped_unstable;
            continue;
        }
        Rational base = ca * cb / Rational(factorial(k));
        auto fas = injections(r, k);
        auto fbs = injections(s, k);
        for (const auto& fa : fas) {
            std::vector<int> owner_a(k, -1);
            for (int i = 0; i < r; ++i) owner_a[fa[i]] = i;
            for (const auto& fb : fbs) {
                std::vector<int> owner_b(k, -1);
                for (int j = 0; j < s; ++j) owner_b[fb[j]] = j;
                bool covered = true;
                for (int t = 0; t < k; ++t)
                    if (owner_a[t] < 0 && owner_b[t] < 0) { covered = false; break; }
                if (!covered) continue;

                TailGraph res = bare_stratum(g, n, k);
                for (int i = 0; i < n; ++i)
                    res.root.leg_psi[i] = a.root.leg_psi[i] + b.root.leg_psi[i];
                res.root.big_lambda = a.root.big_lambda;
                res.root.big_lambda.insert(res.root.big_lambda.end(), b.root.big_lambda.begin(),
                                           b.root.big_lambda.end());

                std::vector<int> common_slots, a_only, b_only;
                for (int t = 0; t < k; ++t) {
                    int ia = owner_a[t], jb = owner_b[t];
                    if (ia >= 0) {
                        res.root.star_psi[t] += a.root.star_psi[ia];
                        res.tails[t].bullet_psi += a.tails[ia].bullet_psi;
                        res.tails[t].lambda1 += a.tails[ia].lambda1;
                        res.tails[t].big_lambda.insert(res.tails[t].big_lambda.end(),
                                                       a.tails[ia].big_lambda.begin(),
                                                       a.tails[ia].big_lambda.end());
                    }
                    if (jb >= 0) {
                        res.root.star_psi[t] += b.root.star_psi[jb];
                        res.tails[t].bullet_psi += b.tails[jb].bullet_psi;
                        res.tails[t].lambda1 += b.tails[jb].lambda1;
                        res.tails[t].big_lambda.insert(res.tails[t].big_lambda.end(),
                                                       b.tails[jb].big_lambda.begin(),
                                                       b.tails[jb].big_lambda.end());
                    }
                    if (ia >= 0 && jb >= 0) {
                        common_slots.push_back(t);
                    } else if (ia >= 0) {
                        // This tail vertex lies over b's root, so b's symbolic
                        // Lambda factors restrict onto it as Lambda_1 factors.
                        a_only.push_back(t);
                        res.tails[t].big_lambda.insert(res.tails[t].big_lambda.end(),
                                                       b.root.big_lambda.begin(),
                                                       b.root.big_lambda.end());
                    } else {
                        b_only.push_back(t);
                        res.tails[t].big_lambda.insert(res.tails[t].big_lambda.end(),
                                                       a.root.big_lambda.begin(),
                                                       a.root.big_lambda.end());
                    }
                }

                std::vector<Pending> work{{std::move(res), base}};
                for (int m : a.root.lambda) distribute_lambda(work, m, b_only);
                for (int m : b.root.lambda) distribute_lambda(work, m, a_only);

                // Each common edge carries the factor (-psi_bullet - psi_star).
                for (int t : common_slots) {
                    std::vector<Pending> next;
                    next.reserve(work.size() * 2);
                    for (const auto& p : work) {
                        Pending q1 = p;
                        q1.graph.tails[t].bullet_psi += 1;
                        q1.coeff = -q1.coeff;
                        next.push_back(std::move(q1));
                        Pending q2 = p;
                        q2.graph.root.star_psi[t] += 1;
                        q2.coeff = -q2.coeff;
                        next.push_back(std::move(q2));
                    }
                    work = std::move(next);
                }

                for (auto& p : work) out.add_term(p.graph, p.coeff);
            }
        }
    }
}

}  // namespace

GraphSum unit_class(int g, int n) {
    GraphSum s(g, n);
    s.add_term(bare_stratum(g, n, 0), Rational(1));
    return s;
}

GraphSum product(const GraphSum& a, const GraphSum& b, ProductDiagnostics* diag) {
    if (a.ambient_g() != b.ambient_g() || a.ambient_n() != b.ambient_n())
        throw std::invalid_argument("product: ambient (g, n) mismatch");
    GraphSum out(a.ambient_g(), a.ambient_n());
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) product_single(ta, ca, tb, cb, out, diag);
    return out;
}

GraphSum pullback_lambda(int g, int n, int j) {
    if (j < 0 || j > g) throw std::invalid_argument("pullback_lambda: need 0 <= j <= g");
    if (!validate_indices(g, n, StabilityMode::Stable))
        throw std::invalid_argument("pullback_lambda: unstable ambient (g, n)");
    GraphSum out(g, n);
    for (int i = 0; i <= j; ++i) {
        if (!root_vertex_stable(g, n, i)) continue;
        TailGraph t = bare_stratum(g, n, i);
        if (j - i >= 1) {
            if (j - i > t.root_genus()) continue;
            t.root.lambda.push_back(j - i);
        }
        out.add_term(t, Rational(1) / Rational(factorial(i)));
    }
    return out;
}

GraphSum pullback_psi_polynomial(const PsiPolynomial& F, int g) {
    int n = F.n();
    if (!validate_indices(g, n, StabilityMode::Stable))
        throw std::invalid_argument("pullback_psi_polynomial: unstable ambient (g, n)");
    GraphSum out(g, n);
    for (const auto& [exps, coeff] : F.terms()) {
        TailGraph t = bare_stratum(g, n, 0);
        t.root.leg_psi = exps;
        out.add_term(t, coeff);
    }
    return out;
}

namespace {

void cancel_mumford_pairs(std::vector<int>& big_lambda) {
    auto plus = std::count(big_lambda.begin(), big_lambda.end(), 1);
    auto minus = std::count(big_lambda.begin(), big_lambda.end(), -1);
    auto pairs = std::min(plus, minus);
    if (pairs == 0) return;
    std::vector<int> kept;
    long drop_plus = pairs, drop_minus = pairs;
    for (int c : big_lambda) {
        if (c == 1 && drop_plus > 0) { --drop_plus; continue; }
        if (c == -1 && drop_minus > 0) { --drop_minus; continue; }
        kept.push_back(c);
    }
    big_lambda = std::move(kept);
}

}  // namespace

GraphSum normalize(const GraphSum& x) {
    GraphSum out(x.ambient_g(), x.ambient_n());
    for (const auto& [graph, coeff] : x.terms()) {
        TailGraph base = graph;
        cancel_mumford_pairs(base.root.big_lambda);
        for (auto& t : base.tails) cancel_mumford_pairs(t.big_lambda);

        std::vector<int> root_factors = std::move(base.root.big_lambda);
        base.root.big_lambda.clear();
        std::vector<std::vector<int>> tail_factors(base.tails.size());
        for (std::size_t t = 0; t < base.tails.size(); ++t) {
            tail_factors[t] = std::move(base.tails[t].big_lambda);
            base.tails[t].big_lambda.clear();
        }

        std::vector<Pending> work{{base, coeff}};

        // Root expansion: Lambda_{g'}(c) = sum_i c^i lambda_i.
        for (int c : root_factors) {
            std::vector<Pending> next;
            for (const auto& p : work) {
                for (int i = 0; i <= p.graph.root_genus(); ++i) {
                    Pending q = p;
                    q.coeff *= Rational(pow_int(Integer(c), i));
                    if (q.coeff.is_zero()) continue;
                    if (i >= 1) q.graph.root.lambda.push_back(i);
                    next.push_back(std::move(q));
                }
            }
            work = std::move(next);
        }

        // Tail expansion: Lambda_1(c) = 1 + c lambda_1.
        for (std::size_t t = 0; t < base.tails.size(); ++t) {
            for (int c : tail_factors[t]) {
                std::vector<Pending> next;
                for (const auto& p : work) {
                    next.push_back(p);
                    Pending q = p;
                    q.graph.tails[t].lambda1 += 1;
                    q.coeff *= Rational(Integer(c));
                    if (!q.coeff.is_zero()) next.push_back(std::move(q));
                }
                work = std::move(next);
            }
        }

        // On a tail, lambda_1 = psi_bullet; degree >= 2 vanishes on the
        // one-dimensional tail moduli.
        for (auto& p : work) {
            bool dead = false;
            for (auto& t : p.graph.tails) {
                t.bullet_psi += t.lambda1;
                t.lambda1 = 0;
                if (t.bullet_psi >= 2) { dead = true; break; }
            }
            if (!dead) out.add_term(p.graph, p.coeff);
        }
    }
    return out;
}

GraphSum mumford_lhs(int g, int n) {
    if (!validate_indices(g, n, StabilityMode::Stable))
        throw std::invalid_argument("mumford_lhs: invalid (g, n)");
    GraphSum left(g, n), right(g, n);
    for (int i = 0; i <= g; ++i) {
        if (!root_vertex_stable(g, n, i)) continue;
        TailGraph t = bare_stratum(g, n, i);
        t.root.big_lambda.push_back(1);
        left.add_term(t, Rational(1) / Rational(factorial(i)));
        TailGraph u = bare_stratum(g, n, i);
        u.root.big_lambda.push_back(-1);
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        right.add_term(u, sign / Rational(factorial(i)));
    }
    return normalize(product(left, right));
}

GraphSum mumford_rhs(int g, int n) {
    if (!validate_indices(g, n, StabilityMode::Stable))
        throw std::invalid_argument("mumford_rhs: invalid (g, n)");
    GraphSum out(g, n);
    for (int i = 0; i <= g; ++i) {
        if (!root_vertex_stable(g, n, i)) continue;
        Rational c = Rational(1) / Rational(factorial(i));
        for (int mask = 0; mask < (1 << i); ++mask) {
            TailGraph t = bare_stratum(g, n, i);
            int bullets = 0;
            for (int j = 0; j < i; ++j) {
                if (mask & (1 << j)) {
                    t.tails[j].bullet_psi = 1;
                    ++bullets;
                } else {
                    t.root.star_psi[j] = 1;
                }
            }
            Rational sign = (bullets % 2 == 0) ? Rational(1) : Rational(-1);
            out.add_term(t, c * sign);
        }
    }
    return out;
}

GraphSum codim_part(const GraphSum& x, int c) {
    GraphSum out(x.ambient_g(), x.ambient_n());
    for (const auto& [graph, coeff] : x.terms())
        if (term_codim(graph) == c) out.add_term(graph, coeff);
    return out;
}

Integer structure_count_closed_form(int r, int s, int k) {
    int N = r + s - k;
    if (N < 0 || N > std::min(r, s) || k < std::max(r, s)) return 0;
    return factorial(k) * factorial(r) * factorial(s) /
           (factorial(N) * factorial(r - N) * factorial(s - N));
}

std::int64_t structure_count_brute_force(int r, int s, int k) {
    if (k < std::max(r, s) || k > r + s) return 0;
    auto fas = injections(r, k);
    auto fbs = injections(s, k);
    std::int64_t count = 0;
    for (const auto& fa : fas) {
        std::vector<bool> in_a(k, false);
        for (int p : fa) in_a[p] = true;
        for (const auto& fb : fbs) {
            std::vector<bool> hit = in_a;
            for (int p : fb) hit[p] = true;
            bool covered = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
            if (covered) ++count;
        }
    }
    return count;
}

}  // namespace taut
