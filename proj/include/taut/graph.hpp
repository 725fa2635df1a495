#pragma once

#include "taut/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace taut {

enum class StabilityMode { Stable, Pseudostable };

/// Index validity: stable 2g-2+n > 0; pseudostable additionally g+n > 2
/// (excludes the (1,1) and (2,0) component types).
bool validate_indices(int g, int n, StabilityMode mode);

/// Decorations of the root vertex of a star graph. Lambda factors are kept
/// symbolic (the integer c stands for a factor Lambda_{g_root}(c)) until a
/// rewrite pass expands them.
struct RootDecoration {
    std::vector<int> leg_psi;     // psi exponents at the n legs
    std::vector<int> star_psi;    // psi exponents at the k root-side half-edges
    std::vector<int> lambda;      // sorted multiset of explicit lambda indices (>= 1)
    std::vector<int> big_lambda;  // sorted multiset of symbolic Lambda arguments

    friend auto operator<=>(const RootDecoration&, const RootDecoration&) = default;
};

/// Decorations of one elliptic-tail vertex.
struct TailDecoration {
    int bullet_psi = 0;           // exponent of the tail-side half-edge psi
    int lambda1 = 0;              // exponent of lambda_1 on the tail
    std::vector<int> big_lambda;  // sorted multiset of symbolic Lambda_1 arguments

    friend auto operator<=>(const TailDecoration&, const TailDecoration&) = default;
};

/// One star-graph stratum class: root vertex of genus g-k with n legs and k
/// elliptic tails. Tail slot j carries tails[j] together with root.star_psi[j];
/// canonical form sorts the slots jointly.
struct TailGraph {
    int g = 0;
    int n = 0;
    int k = 0;
    RootDecoration root;
    std::vector<TailDecoration> tails;

    int root_genus() const { return g - k; }

    friend auto operator<=>(const TailGraph&, const TailGraph&) = default;
};

/// Checks sizes, genus and root-vertex stability. Throws std::invalid_argument
/// on structural violations.
void check_structure(const TailGraph& graph);

/// Whether the root vertex of a k-tail stratum in ambient (g, n) is stable.
bool root_vertex_stable(int g, int n, int k);

TailGraph canonicalize(TailGraph graph);

/// Codimension of a single Lambda-free term: k + all psi exponents + lambda
/// degrees. Throws std::logic_error if symbolic Lambda factors remain.
int term_codim(const TailGraph& graph);

/// Finite formal sum of canonical TailGraphs with nonzero Rational
/// coefficients, all sharing ambient (g, n).
class GraphSum {
public:
    GraphSum(int g, int n) : g_(g), n_(n) {}

    int ambient_g() const { return g_; }
    int ambient_n() const { return n_; }
    const std::map<TailGraph, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Canonicalizes the graph and merges; zero results are erased.
    void add_term(const TailGraph& graph, const Rational& coeff);

    GraphSum& operator+=(const GraphSum& other);
    GraphSum& operator*=(const Rational& c);
    friend GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
    friend GraphSum operator*(GraphSum a, const Rational& c) { return a *= c; }
    friend GraphSum operator*(const Rational& c, GraphSum a) { return a *= c; }

    friend bool operator==(const GraphSum&, const GraphSum&) = default;

private:
    int g_;
    int n_;
    std::map<TailGraph, Rational> terms_;
};

GraphSum graphsum_add(const GraphSum& a, const GraphSum& b);
GraphSum graphsum_scale(const GraphSum& a, const Rational& c);

}  // namespace taut
