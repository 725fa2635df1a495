#pragma once

#include "taut/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace taut {

/// Polynomial in psi_1 ... psi_n with Rational coefficients, stored as a
/// finitely supported map from exponent vectors (length n) to coefficients.
class PsiPolynomial {
public:
    explicit PsiPolynomial(int n) : n_(n) {}

    static PsiPolynomial one(int n) {
        PsiPolynomial p(n);
        p.add_monomial(std::vector<int>(n, 0), Rational(1));
        return p;
    }

    static PsiPolynomial monomial(std::vector<int> exponents, Rational coeff = Rational(1)) {
        PsiPolynomial p(static_cast<int>(exponents.size()));
        p.add_monomial(std::move(exponents), coeff);
        return p;
    }

    void add_monomial(std::vector<int> exponents, const Rational& coeff) {
        if (static_cast<int>(exponents.size()) != n_)
            throw std::invalid_argument("PsiPolynomial: exponent vector length mismatch");
        for (int e : exponents)
            if (e < 0) throw std::invalid_argument("PsiPolynomial: negative exponent");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int n() const { return n_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    friend bool operator==(const PsiPolynomial&, const PsiPolynomial&) = default;

private:
    int n_;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace taut
