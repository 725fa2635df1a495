#include "taut/hodge.hpp"

#include "taut/algebra.hpp"
#include "taut/special_numbers.hpp"
#include "taut/wk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace taut {

Rational faber_integral(int g, const std::vector<int>& d) {
    if (g < 1) throw std::domain_error("faber_integral: need g >= 1");
    const int n = static_cast<int>(d.size());
    if (!validate_indices(g, n, StabilityMode::Stable)) return Rational(0);
    long total = std::accumulate(d.begin(), d.end(), 0L);
    if (total != 3L * g - 3 + n - (2L * g - 1)) return Rational(0);
    Integer num = factorial(2 * g - 3 + n);
    Rational b = bernoulli(2 * g);
    if (b < Rational(0)) b = -b;
    Integer den = pow_int(2, 2 * g - 1) * factorial(2 * g);
    for (int dj : d) den *= double_factorial_odd(2 * dj - 1);
    return Rational(num) * b / Rational(den);
}

Rational stable_hodge_integral(int g, int n, int li, int lj, const std::vector<int>& psi_exp) {
    if (static_cast<int>(psi_exp.size()) != n)
        throw std::invalid_argument("stable_hodge_integral: exponent vector length mismatch");
    if (li < 0 || lj < 0 || li > g || lj > g) return Rational(0);
    if (!validate_indices(g, n, StabilityMode::Stable)) return Rational(0);
    long total = li + lj + std::accumulate(psi_exp.begin(), psi_exp.end(), 0L);
    if (total != 3L * g - 3 + n) return Rational(0);

    int hi = std::max(li, lj), lo = std::min(li, lj);
    if (hi == 0) return wk_engine().psi_intersection(g, psi_exp);
    if (lo == 0 && g == 1 && hi == 1) return faber_integral(1, psi_exp);
    if (hi == g && lo == g && g >= 1) return Rational(0);  // lambda_g^2 = 0
    if (hi == g && lo == g - 1) return faber_integral(g, psi_exp);
    throw UnsupportedHodgePart("no registered evaluator for lambda_" + std::to_string(hi) +
                               " lambda_" + std::to_string(lo) + " at genus " + std::to_string(g));
}

namespace {

/// Cancel Lambda(1)Lambda(-1) pairs; true if nothing is left over.
bool mumford_pairs_only(const std::vector<int>& big_lambda) {
    auto plus = std::count(big_lambda.begin(), big_lambda.end(), 1);
    auto minus = std::count(big_lambda.begin(), big_lambda.end(), -1);
    return plus == minus && plus + minus == static_cast<long>(big_lambda.size());
}

}  // namespace

Rational integrate(const GraphSum& x, const PsiPolynomial& F, IntegrateStats* stats) {
    if (F.n() != x.ambient_n())
        throw std::invalid_argument("integrate: psi polynomial over wrong point count");
    const Rational tail_factor(1, 24);
    Rational acc;
    for (const auto& [graph, coeff] : x.terms()) {
        // Symbolic Lambda content must either be absent or the literal
        // Mumford combination Lambda(1)Lambda(-1), which is the unit class.
        if (!mumford_pairs_only(graph.root.big_lambda))
            throw UnsupportedHodgePart("integrate: unexpanded Lambda factors on root");

        bool dead = false;
        for (const auto& t : graph.tails) {
            if (!mumford_pairs_only(t.big_lambda))
                throw UnsupportedHodgePart("integrate: unexpanded Lambda factors on tail");
            if (t.bullet_psi + t.lambda1 != 1) { dead = true; break; }
        }
        if (dead) {
            if (stats) ++stats->dropped_inadmissible;
            continue;
        }
        Rational tails(1);
        for (int t = 0; t < graph.k; ++t) tails *= tail_factor;

        const int gr = graph.root_genus();
        const int nr = graph.n + graph.k;
        if (graph.root.lambda.size() > 2)
            throw UnsupportedHodgePart("integrate: more than two lambda classes on root");
        int li = graph.root.lambda.empty() ? 0 : graph.root.lambda.back();
        int lj = graph.root.lambda.size() < 2 ? 0 : graph.root.lambda.front();

        for (const auto& [exps, fc] : F.terms()) {
            std::vector<int> root_exp(nr, 0);
            for (int i = 0; i < graph.n; ++i) root_exp[i] = graph.root.leg_psi[i] + exps[i];
            for (int j = 0; j < graph.k; ++j) root_exp[graph.n + j] = graph.root.star_psi[j];
            long total = li + lj + std::accumulate(root_exp.begin(), root_exp.end(), 0L);
            if (total != 3L * gr - 3 + nr) {
                if (stats) ++stats->dropped_inadmissible;
                continue;
            }
            Rational root_value = stable_hodge_integral(gr, nr, li, lj, root_exp);
            if (stats) ++stats->terms_evaluated;
            acc += coeff * fc * tails * root_value;
        }
    }
    return acc;
}

Rational qhi_rhs(int g, int n, int i, int j, const PsiPolynomial& F) {
    if (i < 0 || j < 0 || i > g || j > g)
        throw std::invalid_argument("qhi_rhs: need 0 <= i, j <= g");
    if (F.n() != n) throw std::invalid_argument("qhi_rhs: psi polynomial over wrong point count");
    Rational acc;
    for (int k = 0; k <= std::min(i, j); ++k) {
        Rational weight = Rational(Integer(1), pow_int(24, k) * factorial(k));
        Rational inner;
        for (const auto& [exps, fc] : F.terms()) {
            std::vector<int> e = exps;
            e.resize(n + k, 0);
            inner += fc * stable_hodge_integral(g - k, n + k, i - k, j - k, e);
        }
        acc += weight * inner;
    }
    return acc;
}

Rational qhi_lhs_via_graphs(int g, int n, int i, int j, const PsiPolynomial& F) {
    GraphSum p = normalize(product(pullback_lambda(g, n, i), pullback_lambda(g, n, j)));
    return integrate(p, F);
}

Rational mumford_family_closed_form(int g, int k) {
    if (k < 0 || k > g) throw std::invalid_argument("mumford_family_closed_form: need 0 <= k <= g");
    Rational v(Integer(1), pow_int(24, g) * factorial(k) * factorial(g - k));
    return (k % 2 == 0) ? v : -v;
}

Rational mumford_integral_family(int g, int n, int k) {
    if (k < 0 || k > g) throw std::invalid_argument("mumford_integral_family: need 0 <= k <= g");
    if (!validate_indices(g, n, StabilityMode::Stable))
        throw std::invalid_argument("mumford_integral_family: invalid (g, n)");
    int e1 = 3 * g - 2 * k + n - 3;
    if (e1 < 0) return Rational(0);
    if (n == 0 && e1 > 0)
        throw std::invalid_argument("mumford_integral_family: psi_1 power needs a marked point");
    std::vector<int> exps(n, 0);
    if (n > 0) exps[0] = e1;
    // The full expansion is expensive at larger genus and callers sweep k,
    // so keep the last (g, n) expansion around.
    static std::mutex mutex;
    static std::map<std::pair<int, int>, GraphSum> cache;
    std::unique_lock lock(mutex);
    auto it = cache.find({g, n});
    if (it == cache.end()) {
        if (cache.size() > 8) cache.clear();
        it = cache.emplace(std::pair{g, n}, mumford_lhs(g, n)).first;
    }
    GraphSum part = codim_part(it->second, 2 * k);
    lock.unlock();
    return integrate(part, PsiPolynomial::monomial(std::move(exps)));
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

Rational mfint_full(int g, int n) {
    if (!validate_indices(g, n, StabilityMode::Pseudostable))
        throw std::invalid_argument("mfint_full: invalid pseudostable (g, n)");
    Rational acc;
    for (int i = 0; i <= g; ++i) {
        int gi = g - i, ni = n + i;
        if (!validate_indices(gi, ni, StabilityMode::Stable)) continue;
        int dim = 3 * gi - 3 + ni;
        if (dim < 0) continue;
        Rational inner;
        auto emit = [&](const std::vector<int>& e) {
            std::vector<int> d = e;
            d.resize(n + i, 0);  // extra gluing points carry psi^0
            inner += wk_engine().psi_intersection(gi, d);
        };
        if (n == 0) {
            if (dim == 0) emit({});
        } else {
            std::vector<int> cur;
            compositions(dim, n, cur, emit);
        }
        Rational weight(Integer(1), pow_int(24, i) * factorial(i));
        acc += (i % 2 == 0 ? weight : -weight) * inner;
    }
    return acc;
}

Rational lemma_sum(int k) {
    if (k < 0) throw std::invalid_argument("lemma_sum: need k >= 0");
    Rational acc;
    for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= k; ++s) {
            if (r + s < k) continue;
            int N = r + s - k;
            Rational term(Integer(1), factorial(N) * factorial(k - s) * factorial(k - r));
            acc += (N % 2 == 0) ? term : -term;
        }
    return acc;
}

Rational ps_faber(int g, int n, std::vector<int> d) {
    if (g < 1) throw std::domain_error("ps_faber: need g >= 1");
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("ps_faber: exponent vector length mismatch");
    long total = std::accumulate(d.begin(), d.end(), 0L);
    if (total != static_cast<long>(g) - 2 + n) return Rational(0);
    Rational acc;
    for (int k = 0; k <= g - 1; ++k) {
        std::vector<int> e = d;
        e.resize(n + k, 0);
        Rational weight(Integer(1), pow_int(24, k) * factorial(k));
        acc += weight * faber_integral(g - k, e);
    }
    return acc;
}

}  // namespace taut
