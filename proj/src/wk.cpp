#include "taut/wk.hpp"

#include "taut/special_numbers.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace taut {

bool TauIndex::stable() const { return 2 * g - 2 + n() > 0 && g >= 0; }

bool TauIndex::admissible() const {
    long sum = std::accumulate(d.begin(), d.end(), 0L);
    return sum == dim();
}

TauIndex TauIndex::make(int g, std::vector<int> d) {
    for (int e : d)
        if (e < 0) throw std::invalid_argument("TauIndex: negative exponent");
    std::sort(d.begin(), d.end(), std::greater<int>());
    return TauIndex{g, std::move(d)};
}

Rational WkEngine::one_point_closed_form(int g) {
    if (g < 1) throw std::domain_error("one_point_closed_form: need g >= 1");
    return Rational(Integer(1), pow_int(24, g) * factorial(g));
}

std::vector<std::pair<TauIndex, Rational>> WkEngine::string_reduce(const TauIndex& idx) {
    auto zero_it = std::find(idx.d.begin(), idx.d.end(), 0);
    if (zero_it == idx.d.end()) throw std::invalid_argument("string_reduce: no zero exponent");
    TauIndex target{idx.g, idx.d};
    target.d.erase(std::find(target.d.begin(), target.d.end(), 0));
    if (!target.stable()) throw std::invalid_argument("string_reduce: reduced index unstable");
    std::vector<std::pair<TauIndex, Rational>> out;
    for (std::size_t j = 0; j < target.d.size(); ++j) {
        if (target.d[j] < 1) continue;
        std::vector<int> e = target.d;
        e[j] -= 1;
        out.emplace_back(TauIndex::make(target.g, std::move(e)), Rational(1));
    }
    return out;
}

Rational WkEngine::psi_intersection(int g, std::vector<int> d) {
    return psi_intersection(TauIndex::make(g, std::move(d)));
}

Rational WkEngine::psi_intersection(const TauIndex& raw) {
    TauIndex idx = TauIndex::make(raw.g, raw.d);
    if (!idx.stable()) throw std::invalid_argument("psi_intersection: unstable index");
    if (idx.dim() > dim_cap_)
        throw std::length_error("psi_intersection: dimension cap exceeded");
    if (!idx.admissible()) return Rational(0);
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(idx);
        if (it != cache_.end()) return it->second;
    }
    Rational value = compute(idx);
    std::unique_lock lock(mutex_);
    cache_.emplace(idx, value);
    return value;
}

namespace {

/// Zero for unstable or inadmissible indices, used inside the recursion where
/// the sums range over splittings that may not correspond to moduli spaces.
Rational value_or_zero(WkEngine& eng, int g, std::vector<int> d) {
    TauIndex idx = TauIndex::make(g, std::move(d));
    if (!idx.stable()) return Rational(0);
    return eng.psi_intersection(idx);
}

}  // namespace

Rational WkEngine::compute(const TauIndex& idx) {
    const int g = idx.g;
    const int n = idx.n();

    if (g == 0 && n == 3) return Rational(1);          // point
    if (g == 1 && n == 1) return Rational(1, 24);      // <tau_1>_1

    // String equation when a zero exponent is present and the reduced space
    // exists.
    if (idx.d.back() == 0) {
        TauIndex reduced{g, std::vector<int>(idx.d.begin(), idx.d.end() - 1)};
        if (reduced.stable()) {
            Rational acc;
            for (const auto& [sub, c] : string_reduce(idx)) acc += c * psi_intersection(sub);
            return acc;
        }
    }

    // Dilaton equation for an exponent equal to 1.
    if (std::find(idx.d.begin(), idx.d.end(), 1) != idx.d.end()) {
        std::vector<int> rest = idx.d;
        rest.erase(std::find(rest.begin(), rest.end(), 1));
        TauIndex reduced = TauIndex::make(g, rest);
        if (reduced.stable()) {
            return Rational(2 * g - 2 + n - 1) * psi_intersection(reduced);
        }
    }

    // DVV recursion on the largest exponent.
    const int d1 = idx.d[0];
    std::vector<int> rest(idx.d.begin() + 1, idx.d.end());
    const int m = static_cast<int>(rest.size());

    Rational acc;
    for (int j = 0; j < m; ++j) {
        std::vector<int> e = rest;
        e.erase(e.begin() + j);
        e.push_back(d1 + rest[j] - 1);
        Rational coeff(double_factorial_odd(2 * d1 + 2 * rest[j] - 1),
                       double_factorial_odd(2 * rest[j] - 1));
        acc += coeff * value_or_zero(*this, g, std::move(e));
    }

    for (int a = 0; a <= d1 - 2; ++a) {
        int b = d1 - 2 - a;
        Rational coeff(double_factorial_odd(2 * a + 1) * double_factorial_odd(2 * b + 1));

        // Non-separating: genus drops by one.
        {
            std::vector<int> e = rest;
            e.push_back(a);
            e.push_back(b);
            acc += coeff * Rational(1, 2) * value_or_zero(*this, g - 1, std::move(e));
        }

        // Separating: ordered genus and marked-point splittings.
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<int> left{a}, right{b};
                for (int t = 0; t < m; ++t)
                    (mask & (1 << t) ? left : right).push_back(rest[t]);
                Rational lv = value_or_zero(*this, g1, std::move(left));
                if (lv.is_zero()) continue;
                Rational rv = value_or_zero(*this, g - g1, std::move(right));
                acc += coeff * Rational(1, 2) * lv * rv;
            }
        }
    }

    return acc / Rational(double_factorial_odd(2 * d1 + 1));
}

std::map<TauIndex, Rational> WkEngine::snapshot_cache() const {
    std::shared_lock lock(mutex_);
    return cache_;
}

void WkEngine::preload(const std::map<TauIndex, Rational>& entries) {
    for (const auto& [idx, value] : entries) {
        if (!idx.stable()) throw std::invalid_argument("preload: unstable cache entry");
        if (!std::is_sorted(idx.d.begin(), idx.d.end(), std::greater<int>()))
            throw std::invalid_argument("preload: non-canonical cache entry");
        for (int e : idx.d)
            if (e < 0) throw std::invalid_argument("preload: negative exponent in cache entry");
        if (!idx.admissible() && !value.is_zero())
            throw std::invalid_argument("preload: inadmissible entry with nonzero value");
    }
    std::unique_lock lock(mutex_);
    for (const auto& [idx, value] : entries) cache_.emplace(idx, value);
}

WkEngine& wk_engine() {
    static WkEngine engine;
    return engine;
}

}  // namespace taut
