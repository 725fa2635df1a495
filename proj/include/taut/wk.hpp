#pragma once

#include "taut/rational.hpp"

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace taut {

/// Canonical key for an intersection number <tau_{d_1} ... tau_{d_n}>_g:
/// exponents sorted descending.
struct TauIndex {
    int g = 0;
    std::vector<int> d;

    int n() const { return static_cast<int>(d.size()); }
    int dim() const { return 3 * g - 3 + n(); }
    bool stable() const;
    bool admissible() const;  // sum d_i == 3g - 3 + n

    static TauIndex make(int g, std::vector<int> d);

    friend auto operator<=>(const TauIndex&, const TauIndex&) = default;
};

/// Exact psi intersection numbers on stable moduli via the DVV form of the
/// Witten-Kontsevich theorem, with string/dilaton reductions and a shared
/// memo table.
class WkEngine {
public:
    Rational psi_intersection(const TauIndex& idx);
    Rational psi_intersection(int g, std::vector<int> d);

    /// <tau_0 X>_g as a sum of lower indices; input must contain a zero
    /// exponent and the reduced index must be stable.
    static std::vector<std::pair<TauIndex, Rational>> string_reduce(const TauIndex& idx);

    /// Integral of psi_1^{3g-2} over the one-pointed space: 1/(24^g g!).
    static Rational one_point_closed_form(int g);

    /// Maximum admitted 3g-3+n; larger requests throw.
    int dimension_cap() const { return dim_cap_; }
    void set_dimension_cap(int cap) { dim_cap_ = cap; }

    std::map<TauIndex, Rational> snapshot_cache() const;
    /// Inserts entries after revalidating stability and canonical form.
    void preload(const std::map<TauIndex, Rational>& entries);

private:
    Rational compute(const TauIndex& idx);

    mutable std::shared_mutex mutex_;
    std::map<TauIndex, Rational> cache_;
    int dim_cap_ = 80;
};

/// Process-wide engine shared by the Hodge evaluators.
WkEngine& wk_engine();

}  // namespace taut
