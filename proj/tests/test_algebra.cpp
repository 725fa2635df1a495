#include "taut/algebra.hpp"
#include "taut/special_numbers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace taut;

namespace {

TailGraph bare(int g, int n, int k) {
    TailGraph t;
    t.g = g;
    t.n = n;
    t.k = k;
    t.root.leg_psi.assign(n, 0);
    t.root.star_psi.assign(k, 0);
    t.tails.assign(k, TailDecoration{});
    return t;
}

GraphSum single(const TailGraph& t, const Rational& c = Rational(1)) {
    GraphSum s(t.g, t.n);
    s.add_term(t, c);
    return s;
}

/// A small deterministic pseudo-random decorated sum for law checks.
GraphSum random_sum(int g, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kdist(0, 2), small(0, 1), coeff(-3, 3);
    GraphSum s(g, n);
    for (int term = 0; term < 2; ++term) {
        int k = kdist(rng);
        TailGraph t = bare(g, n, k);
        for (int i = 0; i < n; ++i) t.root.leg_psi[i] = small(rng);
        for (int j = 0; j < k; ++j) {
            t.root.star_psi[j] = small(rng);
            t.tails[j].bullet_psi = small(rng);
        }
        int c = coeff(rng);
        if (c != 0) s.add_term(t, Rational(c));
    }
    return s;
}

}  // namespace

TEST_CASE("unit class is the multiplicative identity") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        GraphSum a = random_sum(4, 1, rng);
        CHECK(product(unit_class(4, 1), a) == a);
        CHECK(product(a, unit_class(4, 1)) == a);
    }
}

TEST_CASE("product is commutative and bilinear") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        GraphSum a = random_sum(4, 1, rng);
        GraphSum b = random_sum(4, 1, rng);
        GraphSum c = random_sum(4, 1, rng);
        CHECK(product(a, b) == product(b, a));
        CHECK(product(a + b, c) == product(a, c) + product(b, c));
        CHECK(product(a * Rational(3, 7), b) == product(a, b) * Rational(3, 7));
    }
}

TEST_CASE("product is associative on small tail counts") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        GraphSum a = single(bare(4, 1, 1));
        GraphSum b = random_sum(4, 1, rng);
        GraphSum c = random_sum(4, 1, rng);
        CHECK(product(product(a, b), c) == product(a, product(b, c)));
    }
}

TEST_CASE("product grading adds codimensions") {
    TailGraph u = bare(4, 1, 1);
    u.root.star_psi[0] = 1;
    TailGraph v = bare(4, 1, 2);
    v.tails[0].bullet_psi = 1;
    GraphSum p = product(single(u), single(v));
    for (const auto& [graph, coeff] : p.terms())
        CHECK(term_codim(graph) == term_codim(u) + term_codim(v));
}

TEST_CASE("ambient mismatch is rejected") {
    CHECK_THROWS_AS(product(unit_class(3, 1), unit_class(3, 2)), std::invalid_argument);
}

TEST_CASE("bare one-tail square in ambient genus 3") {
    // G1 * G1 on the (3,0) ambient: the shared-slot structure carries the
    // expanded edge class on a 1-tail stratum, and the disjoint structures
    // merge to the bare 2-tail stratum with coefficient 2/2! = 1.
    GraphSum p = product(single(bare(3, 0, 1)), single(bare(3, 0, 1)));

    GraphSum expected(3, 0);
    TailGraph bullet = bare(3, 0, 1);
    bullet.tails[0].bullet_psi = 1;
    expected.add_term(bullet, Rational(-1));
    TailGraph star = bare(3, 0, 1);
    star.root.star_psi[0] = 1;
    expected.add_term(star, Rational(-1));
    expected.add_term(bare(3, 0, 2), Rational(1));
    CHECK(p == expected);
}

TEST_CASE("one-tail times two-tail in ambient genus 3") {
    // G1 * G2 on the (3,0) ambient: one shared slot out of two in the k = 2
    // piece (coefficient 2 before edge expansion), plus the bare 3-tail
    // stratum with coefficient 1.
    GraphSum p = product(single(bare(3, 0, 1)), single(bare(3, 0, 2)));

    GraphSum expected(3, 0);
    TailGraph bullet = bare(3, 0, 2);
    bullet.tails[0].bullet_psi = 1;
    expected.add_term(bullet, Rational(-2));
    TailGraph star = bare(3, 0, 2);
    star.root.star_psi[0] = 1;
    expected.add_term(star, Rational(-2));
    expected.add_term(bare(3, 0, 3), Rational(1));
    CHECK(p == expected);
}

TEST_CASE("unstable root strata are dropped with a diagnostic") {
    // G1 * G1 in ambient (2,0): the 2-tail stratum would need a genus-0 root
    // with only two special points.
    ProductDiagnostics diag;
    GraphSum p = product(single(bare(2, 0, 1)), single(bare(2, 0, 1)), &diag);
    CHECK(diag.dropped_unstable == 1);
    for (const auto& [graph, coeff] : p.terms()) CHECK(graph.k != 2);
}

TEST_CASE("pullback of lambda classes") {
    GraphSum l0 = pullback_lambda(3, 1, 0);
    CHECK(l0 == unit_class(3, 1));

    GraphSum l2 = pullback_lambda(3, 1, 2);
    CHECK(l2.size() == 3);
    TailGraph root_only = bare(3, 1, 0);
    root_only.root.lambda = {2};
    CHECK(l2.terms().at(canonicalize(root_only)) == Rational(1));
    TailGraph one_tail = bare(3, 1, 1);
    one_tail.root.lambda = {1};
    CHECK(l2.terms().at(canonicalize(one_tail)) == Rational(1));
    TailGraph two_tails = bare(3, 1, 2);
    CHECK(l2.terms().at(canonicalize(two_tails)) == Rational(1, 2));

    CHECK_THROWS_AS(pullback_lambda(3, 1, 4), std::invalid_argument);
}

TEST_CASE("normalize cancels Mumford pairs and rewrites tails") {
    // Root Lambda(1)Lambda(-1) cancels to the unit.
    TailGraph t = bare(2, 1, 0);
    t.root.big_lambda = {-1, 1};
    CHECK(normalize(single(t)) == unit_class(2, 1));

    // Tail Lambda_1(c) expands to 1 + c psi_bullet.
    TailGraph u = bare(2, 1, 1);
    u.tails[0].big_lambda = {-1};
    GraphSum nu = normalize(single(u));
    GraphSum expected(2, 1);
    expected.add_term(bare(2, 1, 1), Rational(1));
    TailGraph with_bullet = bare(2, 1, 1);
    with_bullet.tails[0].bullet_psi = 1;
    expected.add_term(with_bullet, Rational(-1));
    CHECK(nu == expected);

    // Tail lambda_1 against an existing psi_bullet dies (degree 2 on a
    // one-dimensional space).
    TailGraph v = bare(2, 1, 1);
    v.tails[0].bullet_psi = 1;
    v.tails[0].lambda1 = 1;
    CHECK(normalize(single(v)).empty());

    // Root expansion keeps lambda powers up to the root genus.
    TailGraph w = bare(2, 1, 0);
    w.root.big_lambda = {1};
    GraphSum nw = normalize(single(w));
    CHECK(nw.size() == 3);  // 1 + lambda_1 + lambda_2
}

TEST_CASE("normalize is idempotent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        GraphSum a = random_sum(4, 1, rng);
        TailGraph t = bare(4, 1, 2);
        t.root.big_lambda = {1};
        t.tails[1].big_lambda = {-1};
        a.add_term(t, Rational(1, 2));
        GraphSum na = normalize(a);
        CHECK(normalize(na) == na);
    }
}

TEST_CASE("structure census closed form matches brute force") {
    for (int r = 0; r + 0 <= 6; ++r)
        for (int s = 0; r + s <= 6; ++s)
            for (int k = 0; k <= r + s; ++k)
                CHECK(structure_count_closed_form(r, s, k) ==
                      Integer(structure_count_brute_force(r, s, k)));
}

TEST_CASE("census coefficient identity against the product engine") {
    // For bare strata the product coefficient of the k-tail piece with N
    // common edges, relative to the 1/r! 1/s! prefactors, is
    // (-1)^N / (N! (r-N)! (s-N)!) summed over edge expansions; the labeled
    // census k! r! s! / (N! (r-N)! (s-N)!) counts the assignments behind it.
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 4; ++s) {
            int g = 5, n = 1;
            GraphSum p = product(single(bare(g, n, r), Rational(1) / Rational(factorial(r))),
                                 single(bare(g, n, s), Rational(1) / Rational(factorial(s))));
            for (int k = std::max(r, s); k <= std::min(r + s, g); ++k) {
                int N = r + s - k;
                // Sum all coefficients of k-tail terms weighted by sign of the
                // edge expansion: each of the N edges contributes a factor
                // (-psi_bullet - psi_star), total weight 2^N with sign (-1)^N.
                Rational total;
                for (const auto& [graph, coeff] : p.terms())
                    if (graph.k == k) total += coeff;
                Rational expected =
                    Rational((N % 2 == 0) ? 1 : -1) * Rational(pow_int(2, N)) /
                    Rational(factorial(N) * factorial(r - N) * factorial(s - N));
                CHECK(total == expected);
            }
        }
}
