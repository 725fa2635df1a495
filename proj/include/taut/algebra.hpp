#pragma once

#include "taut/graph.hpp"
#include "taut/psi_polynomial.hpp"

#include <cstdint>

namespace taut {

/// Counts terms dropped during a product because the root vertex of the
/// would-be stratum is unstable in the ambient space.
struct ProductDiagnostics {
    long dropped_unstable = 0;
};

/// The k = 0 graph with trivial decorations: the multiplicative unit.
GraphSum unit_class(int g, int n);

/// Star-graph product per the (G,H)-structure algorithm: labeled tail
/// assignments are enumerated, common edges contribute the expanded
/// (-psi_bullet - psi_star) factor, decorations of the absorbed root
/// distribute onto the new tails, and everything merges canonically with an
/// overall 1/k! for the automorphisms of the underlying k-tail graph.
GraphSum product(const GraphSum& a, const GraphSum& b, ProductDiagnostics* diag = nullptr);

/// Pullback of lambda_j under the contraction map, as a sum of strata:
/// sum_{i=0}^{j} (1/i!) G^i_*(p_0^*(lambda_{j-i})).
GraphSum pullback_lambda(int g, int n, int j);

/// Pullback of a psi polynomial: psi classes are stable, so this is a sum of
/// k = 0 graphs carrying the leg exponents.
GraphSum pullback_psi_polynomial(const PsiPolynomial& F, int g);

/// Rewrite to normal form: (a) cancel Lambda(1)Lambda(-1) pairs on every
/// vertex, (b) expand remaining Lambda factors into lambda monomials,
/// (c) on tails substitute lambda_1 = psi_bullet and drop degree >= 2 tail
/// decorations (zero on the one-dimensional tail moduli).
GraphSum normalize(const GraphSum& x);

/// Full expansion of the pulled-back Mumford product Lambda(1)Lambda(-1),
/// normalized.
GraphSum mumford_lhs(int g, int n);

/// The boundary side of the pseudostable Mumford relation:
/// sum_i (1/i!) G^i_*(prod_j (psi_star_j - psi_bullet_j)), expanded.
GraphSum mumford_rhs(int g, int n);

/// Restriction to terms of codimension exactly c.
GraphSum codim_part(const GraphSum& x, int c);

/// Number of labeled (G,H)-structures on the k-tail star graph coming from
/// factors with r and s tails: k! r! s! / (N! (r-N)! (s-N)!) with N = r+s-k.
Integer structure_count_closed_form(int r, int s, int k);

/// Same count by direct enumeration of injection pairs covering all k slots.
std::int64_t structure_count_brute_force(int r, int s, int k);

}  // namespace taut
