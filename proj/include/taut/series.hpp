#pragma once

#include "taut/graph.hpp"
#include "taut/rational.hpp"

#include <map>
#include <set>
#include <vector>

namespace taut {

/// Exponent bounds for a series in x, y, z, t_1 ... t_nt. Keys are exponent
/// tuples [i, j, g, mu_1, ..., mu_nt] of length 3 + nt.
struct SeriesBounds {
    int xmax = 1;
    int ymax = 1;
    int zmax = 3;
    int tmax = 6;
    int nt = 1;

    int key_size() const { return 3 + nt; }
    bool contains(const std::vector<int>& key) const;

    friend bool operator==(const SeriesBounds&, const SeriesBounds&) = default;
};

/// Multivariate power series truncated to per-variable exponent bounds, with
/// exact coefficients. Addition and multiplication drop out-of-bounds terms.
class TruncatedSeries {
public:
    explicit TruncatedSeries(SeriesBounds bounds) : bounds_(std::move(bounds)) {}

    const SeriesBounds& bounds() const { return bounds_; }
    const std::map<std::vector<int>, Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(const std::vector<int>& key) const;
    /// Merges into the cell; silently drops keys outside the bounds.
    void add_coefficient(const std::vector<int>& key, const Rational& value);

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    SeriesBounds bounds_;
    std::map<std::vector<int>, Rational> coeffs_;
};

/// skipped: cells whose evaluation fell outside the registered evaluator
/// families; they are omitted from the series, never silently zeroed.
/// nongeometric: cells whose exponents admit no marked-point configuration
/// (the dimension constraint forces n < 0, or a t-exponent sits at a point
/// past n); their direct coefficient is zero, but truncated products can
/// spill into them, so comparisons exclude them.
struct SeriesDiagnostics {
    std::set<std::vector<int>> skipped;
    std::set<std::vector<int>> nongeometric;
};

/// Generating function of quadratic Hodge integrals: the coefficient of
/// x^i y^j z^g t^mu is the integral of lambda_{g-i} lambda_{g-j} prod psi^mu
/// over the (g, n) moduli with n = |mu| + 3 - g - i - j. Pseudostable mode
/// evaluates through the 1/24-weighted comparison sum.
TruncatedSeries build_F(StabilityMode mode, const SeriesBounds& bounds,
                        SeriesDiagnostics* diag = nullptr);

/// sum_g z^g / (24^g g!) within the bounds.
TruncatedSeries exp_z_over_24(const SeriesBounds& bounds);

struct SeriesReport {
    long cells_compared = 0;
    std::vector<std::vector<int>> mismatches;

    bool match() const { return mismatches.empty(); }
};

/// Coefficientwise comparison over the union of supports, excluding the given
/// keys. Throws std::invalid_argument on bound mismatch.
SeriesReport series_equal_report(const TruncatedSeries& a, const TruncatedSeries& b,
                                 const std::set<std::vector<int>>& exclude = {});

}  // namespace taut
