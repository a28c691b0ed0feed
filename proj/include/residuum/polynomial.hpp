#pragma once

#include <utility>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum {

/// Univariate polynomial over Q(i), coefficients stored constant term first, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactComplex> coefficients);
    Polynomial(ExactComplex constant);  // NOLINT(google-explicit-constructor)

    /// z - root
    static Polynomial linear(const ExactComplex& root);
    static Polynomial monomial(const ExactComplex& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    ExactComplex coeff(int k) const;
    const ExactComplex& leading() const;
    const std::vector<ExactComplex>& coefficients() const { return c_; }

    ExactComplex operator()(const ExactComplex& z) const;
    Complex operator()(Complex z) const;

    Polynomial derivative() const;
    /// q(w) = p(w + shift)
    Polynomial shifted(const ExactComplex& shift) const;
    Polynomial monic() const;
    Polynomial conj() const;
    /// (z - root)^k
    static Polynomial linear_power(const ExactComplex& root, int k);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const ExactComplex& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim();
    std::vector<ExactComplex> c_;
};

/// Quotient and remainder of exact long division; throws DomainError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Roots of `p` in Q(i) with multiplicities, found numerically and certified exactly.
/// Throws DomainError if p does not split into linear factors over Q(i).
std::vector<std::pair<ExactComplex, int>> split_over_gaussian_rationals(const Polynomial& p);

/// Quotient of two polynomials; evaluated in floating point for path integrals.
struct RationalFunction {
    Polynomial numerator{ExactComplex(1)};
    Polynomial denominator{ExactComplex(1)};

    Complex operator()(Complex z) const { return numerator(z) / denominator(z); }
    /// g'/g
    Complex log_derivative(Complex z) const;
};

}  // namespace residuum
