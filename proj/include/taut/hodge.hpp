#pragma once

#include "taut/graph.hpp"
#include "taut/psi_polynomial.hpp"
#include "taut/rational.hpp"

#include <stdexcept>
#include <vector>

namespace taut {

/// Raised when a stable Hodge integral falls outside the registered
/// evaluator families (pure psi, lambda_g lambda_{g-1}, lambda_g^2, Mumford
/// combinations). No general Hodge evaluator is attempted.
struct UnsupportedHodgePart : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RootEvaluatorKind { PurePsi, FaberLgLgm1, LambdaTopSquare, MumfordCombination };

struct IntegrateStats {
    long terms_evaluated = 0;
    long dropped_inadmissible = 0;
};

/// Closed-form lambda_g lambda_{g-1} descendant integral (Faber formula):
/// (2g-3+n)! |B_{2g}| / (2^{2g-1} (2g)! prod (2d_j - 1)!!). Zero when the
/// dimension condition fails.
Rational faber_integral(int g, const std::vector<int>& d);

/// Stable integral of lambda_{li} lambda_{lj} psi^{e} over the (g, n) moduli,
/// dispatched by the lambda content; li or lj may be 0. Nonexistent moduli
/// give 0. Unregistered lambda patterns throw UnsupportedHodgePart.
Rational stable_hodge_integral(int g, int n, int li, int lj, const std::vector<int>& psi_exp);

/// Integral of a normalized GraphSum against a psi polynomial on the ambient
/// stable moduli: each term factors as root integral times 1/24 per tail
/// carrying exactly one psi_bullet (or lambda_1); other tails kill the term.
Rational integrate(const GraphSum& x, const PsiPolynomial& F, IntegrateStats* stats = nullptr);

/// Right side of the quadratic comparison:
/// sum_k 1/(24^k k!) Int_{(g-k, n+k)} lambda_{i-k} lambda_{j-k} F.
Rational qhi_rhs(int g, int n, int i, int j, const PsiPolynomial& F);

/// Left side computed through the graph pipeline: pull back both lambda
/// classes, multiply in the star-graph algebra, integrate.
Rational qhi_lhs_via_graphs(int g, int n, int i, int j, const PsiPolynomial& F);

/// Pseudostable integral of the codimension-2k Mumford part against
/// psi_1^{3g-2k+n-3}, evaluated through the graph pipeline.
Rational mumford_integral_family(int g, int n, int k);

/// The closed form (-1)^k / (24^g k! (g-k)!) the family evaluates to.
Rational mumford_family_closed_form(int g, int k);

/// Pseudostable Mumford-product integral against 1/prod(1 - psi_j), computed
/// as an alternating 1/24-weighted sum of pure psi integrals.
Rational mfint_full(int g, int n);

/// sum over {0<=r,s<=k, r+s>=k} of (-1)^{r+s-k} / ((r+s-k)! (k-s)! (k-r)!),
/// by direct enumeration. Equals 1/k!.
Rational lemma_sum(int k);

/// Pseudostable lambda_g lambda_{g-1} descendant integral in closed form:
/// 1/24^k-weighted sum of Faber values with d_j = 0 on the extra points.
Rational ps_faber(int g, int n, std::vector<int> d);

}  // namespace taut
