#include "taut/series.hpp"

#include "taut/hodge.hpp"
#include "taut/psi_polynomial.hpp"
#include "taut/special_numbers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace taut {

bool SeriesBounds::contains(const std::vector<int>& key) const {
    if (static_cast<int>(key.size()) != key_size()) return false;
    if (key[0] < 0 || key[0] > xmax) return false;
    if (key[1] < 0 || key[1] > ymax) return false;
    if (key[2] < 0 || key[2] > zmax) return false;
    for (int m = 0; m < nt; ++m)
        if (key[3 + m] < 0 || key[3 + m] > tmax) return false;
    return true;
}

Rational TruncatedSeries::coefficient(const std::vector<int>& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_coefficient(const std::vector<int>& key, const Rational& value) {
    if (static_cast<int>(key.size()) != bounds_.key_size())
        throw std::invalid_argument("TruncatedSeries: key length mismatch");
    if (value.is_zero() || !bounds_.contains(key)) return;
    auto [it, inserted] = coeffs_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (bounds_ != other.bounds_)
        throw std::invalid_argument("TruncatedSeries: bounds mismatch in addition");
    for (const auto& [key, value] : other.coeffs_) add_coefficient(key, value);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.bounds_ != b.bounds_)
        throw std::invalid_argument("TruncatedSeries: bounds mismatch in multiplication");
    TruncatedSeries out(a.bounds_);
    for (const auto& [ka, va] : a.coeffs_)
        for (const auto& [kb, vb] : b.coeffs_) {
            std::vector<int> key(ka.size());
            for (std::size_t t = 0; t < key.size(); ++t) key[t] = ka[t] + kb[t];
            out.add_coefficient(key, va * vb);
        }
    return out;
}

namespace {

/// Number of marked points forced by the dimension constraint, or -1 when
/// the cell admits no configuration (n < 0 or a t-exponent past point n).
int derived_points(int i, int j, int g, const std::vector<int>& mu) {
    long total = std::accumulate(mu.begin(), mu.end(), 0L);
    long n_long = total + 3 - g - i - j;
    if (n_long < 0) return -1;
    for (std::size_t m = n_long; m < mu.size(); ++m)
        if (mu[m] != 0) return -1;
    return static_cast<int>(n_long);
}

/// Coefficient of one cell, or throws UnsupportedHodgePart. Undefined moduli
/// and negative lambda indices give zero.
Rational cell_value(StabilityMode mode, int i, int j, int g, const std::vector<int>& mu) {
    const int li = g - i, lj = g - j;
    if (li < 0 || lj < 0) return Rational(0);
    int n = derived_points(i, j, g, mu);
    if (n < 0) return Rational(0);
    if (!validate_indices(g, n, StabilityMode::Stable)) return Rational(0);
    std::vector<int> e(mu.begin(), mu.begin() + std::min<std::size_t>(n, mu.size()));
    e.resize(n, 0);
    if (mode == StabilityMode::Stable) return stable_hodge_integral(g, n, li, lj, e);
    return qhi_rhs(g, n, li, lj, PsiPolynomial::monomial(std::move(e)));
}

void enumerate_mu(const SeriesBounds& b, int pos, std::vector<int>& mu,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == b.nt) {
        emit(mu);
        return;
    }
    for (int v = 0; v <= b.tmax; ++v) {
        mu[pos] = v;
        enumerate_mu(b, pos + 1, mu, emit);
    }
}

}  // namespace

TruncatedSeries build_F(StabilityMode mode, const SeriesBounds& bounds, SeriesDiagnostics* diag) {
    TruncatedSeries out(bounds);
    std::vector<int> mu(bounds.nt, 0);
    for (int i = 0; i <= bounds.xmax; ++i)
        for (int j = 0; j <= bounds.ymax; ++j)
            for (int g = 0; g <= bounds.zmax; ++g)
                enumerate_mu(bounds, 0, mu, [&](const std::vector<int>& m) {
                    std::vector<int> key{i, j, g};
                    key.insert(key.end(), m.begin(), m.end());
                    if (diag && derived_points(i, j, g, m) < 0) {
                        diag->nongeometric.insert(key);
                        return;  // coefficient is zero by convention
                    }
                    try {
                        out.add_coefficient(key, cell_value(mode, i, j, g, m));
                    } catch (const UnsupportedHodgePart&) {
                        if (diag) diag->skipped.insert(std::move(key));
                    }
                });
    return out;
}

TruncatedSeries exp_z_over_24(const SeriesBounds& bounds) {
    TruncatedSeries out(bounds);
    for (int g = 0; g <= bounds.zmax; ++g) {
        std::vector<int> key(bounds.key_size(), 0);
        key[2] = g;
        out.add_coefficient(key, Rational(Integer(1), pow_int(24, g) * factorial(g)));
    }
    return out;
}

SeriesReport series_equal_report(const TruncatedSeries& a, const TruncatedSeries& b,
                                 const std::set<std::vector<int>>& exclude) {
    if (a.bounds() != b.bounds())
        throw std::invalid_argument("series_equal_report: bounds mismatch");
    std::set<std::vector<int>> keys;
    for (const auto& [k, v] : a.coefficients()) keys.insert(k);
    for (const auto& [k, v] : b.coefficients()) keys.insert(k);
    SeriesReport report;
    for (const auto& k : keys) {
        if (exclude.contains(k)) continue;
        ++report.cells_compared;
        if (a.coefficient(k) != b.coefficient(k)) report.mismatches.push_back(k);
    }
    return report;
}

}  // namespace taut
