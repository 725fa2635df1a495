#include "taut/special_numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace taut {

Integer factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer double_factorial_odd(int m) {
    if (m < -1 || m % 2 == 0) throw std::domain_error("double_factorial_odd: argument must be odd and >= -1");
    Integer r = 1;
    for (int i = m; i >= 3; i -= 2) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Integer pow_int(const Integer& base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational BernoulliTable::get(int index) {
    if (index < 0 || index % 2 != 0) throw std::domain_error("bernoulli: index must be even and nonnegative");
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(index);
        if (it != cache_.end()) return it->second;
    }
    // B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, computing all even values up to
    // the request. Odd Bernoulli numbers beyond B_1 = -1/2 vanish.
    std::vector<Rational> b(index + 1);
    b[0] = Rational(1);
    if (index >= 1) b[1] = Rational(-1, 2);
    for (int n = 2; n <= index; ++n) {
        if (n % 2 == 1) continue;
        Rational acc;
        for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[k];
        b[n] = -acc / Rational(Integer(n + 1));
    }
    std::unique_lock lock(mutex_);
    for (int n = 0; n <= index; n += 2) cache_.emplace(n, b[n]);
    return b[index];
}

Rational bernoulli(int even_index) {
    static BernoulliTable table;
    return table.get(even_index);
}

}  // namespace taut
