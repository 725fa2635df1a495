#pragma once

#include "taut/rational.hpp"

#include <map>
#include <shared_mutex>

namespace taut {

Integer factorial(int n);

/// Odd double factorial m!! for odd m >= -1, with (-1)!! = 1.
Integer double_factorial_odd(int m);

Integer binomial(int n, int k);

Integer pow_int(const Integer& base, int e);

/// Bernoulli numbers B_{2m} via the defining recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0, memoized. Odd index -> domain error.
class BernoulliTable {
public:
    Rational get(int index);

private:
    std::map<int, Rational> cache_;
    std::shared_mutex mutex_;
};

Rational bernoulli(int even_index);

}  // namespace taut
