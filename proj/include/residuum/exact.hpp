#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace residuum {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Element of Q(i) with arbitrary-precision rational parts, always canonical.
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational re, Rational im = 0);

    static ExactComplex i() { return ExactComplex(0, 1); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ExactComplex conj() const { return ExactComplex(re_, -im_); }
    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical text: `p/q`, `r/s i`, `p/q + r/s i`, `p/q - r/s i` (denominator 1 omitted).
    std::string str() const;

    /// Parses the exact literal grammar; decimal parts are converted exactly.
    static ExactComplex parse(std::string_view text);

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }
    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    /// Throws DomainError on division by zero.
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Lexicographic order on (re, im); used for canonical orderings only.
bool canonical_less(const ExactComplex& a, const ExactComplex& b);

struct CanonicalLess {
    bool operator()(const ExactComplex& a, const ExactComplex& b) const { return canonical_less(a, b); }
};

/// Parses a complex float literal (`a+bi`, `-2.5i`, `1/3 - i`, ...).
Complex parse_complex(std::string_view text);

/// Formats with the given number of significant digits, e.g. `0.3+1.1i`.
std::string format_complex(Complex z, int digits = 17);

/// Formats a real with the given number of significant digits.
std::string format_real(double x, int digits = 17);

/// Exact rational from a decimal or `p/q` token (no sign handling beyond a leading '-').
Rational parse_rational(std::string_view token);

}  // namespace residuum
