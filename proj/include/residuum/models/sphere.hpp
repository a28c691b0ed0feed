#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "residuum/exact.hpp"
#include "residuum/polynomial.hpp"

namespace residuum::models {

/// Point of the Riemann sphere: an exact finite value or the distinct tag infinity.
class SpherePoint {
public:
    SpherePoint(ExactComplex value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    static SpherePoint infinity() { return SpherePoint(); }

    bool is_infinity() const { return !value_.has_value(); }
    /// Throws DomainError at infinity.
    const ExactComplex& value() const;

    /// `inf` or the canonical exact literal.
    std::string str() const;
    /// Accepts `inf`, `infinity`, `oo` or an exact literal.
    static SpherePoint parse(std::string_view text);

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) { return a.value_ == b.value_; }
    friend bool operator!=(const SpherePoint& a, const SpherePoint& b) { return !(a == b); }
    /// Finite points in canonical order, infinity last.
    friend bool operator<(const SpherePoint& a, const SpherePoint& b);

private:
    SpherePoint() = default;
    std::optional<ExactComplex> value_;
};

/// f(z) dz with f = N / prod (z - p)^k over distinct finite poles p, always reduced:
/// N does not vanish at any listed pole.
class RationalForm {
public:
    /// The zero form.
    RationalForm() = default;
    /// Reduces N/D; the denominator must split over Q(i) (DomainError otherwise, or if D = 0).
    RationalForm(const Polynomial& numerator, const Polynomial& denominator);
    /// c dz / (z - p)^k (k >= 0).
    static RationalForm pole_term(const ExactComplex& c, const ExactComplex& p, int k);
    static RationalForm polynomial(const Polynomial& p) { return RationalForm(p, Polynomial(ExactComplex(1))); }

    bool is_zero() const { return numerator_.is_zero(); }
    const Polynomial& numerator() const { return numerator_; }
    /// Monic denominator, expanded.
    Polynomial denominator() const;
    /// Finite poles with their orders, canonically ordered.
    const std::vector<std::pair<ExactComplex, int>>& finite_poles() const { return poles_; }

    Complex operator()(Complex z) const;

    /// Order of the pole at `p` (0 when the form is holomorphic there).
    int pole_order(const SpherePoint& p) const;
    /// All poles, including infinity when present.
    std::vector<std::pair<SpherePoint, int>> poles() const;
    /// Laurent coefficient c_{-1}; at infinity in the chart w = 1/z.
    ExactComplex residue_at(const SpherePoint& p) const;

    RationalForm conj() const;
    RationalForm& operator+=(const RationalForm& o);
    RationalForm& operator-=(const RationalForm& o);
    friend RationalForm operator+(RationalForm a, const RationalForm& b) { return a += b; }
    friend RationalForm operator-(RationalForm a, const RationalForm& b) { return a -= b; }
    friend RationalForm operator*(const ExactComplex& s, const RationalForm& f);
    friend bool operator==(const RationalForm& a, const RationalForm& b) {
        return a.numerator_ == b.numerator_ && a.poles_ == b.poles_;
    }
    friend bool operator!=(const RationalForm& a, const RationalForm& b) { return !(a == b); }

    /// `P(z) / Q(z)` with comma-separated exact coefficients, constant term first.
    std::string str() const;

private:
    void reduce();
    Polynomial numerator_;
    std::vector<std::pair<ExactComplex, int>> poles_;
};

/// Residues at all poles (including infinity), with zero residues dropped.
std::vector<std::pair<SpherePoint, ExactComplex>> residue_divisor(const RationalForm& f);

/// Sum of all residues including infinity; zero for every rational form.
ExactComplex check_residue_theorem(const RationalForm& f);

/// dz/(z-p) - dz/(z-q), with the point at infinity handled in its chart.
RationalForm sphere_third_kind(const SpherePoint& p, const SpherePoint& q);

/// dz/(z-p)^l for finite p; -z^(l-2) dz at infinity. Requires l >= 2.
RationalForm sphere_second_kind(const SpherePoint& p, int l);

/// Sum a_i dz/(z - p_i) over finite p_i; a coefficient at infinity is absorbed.
/// Requires the coefficients to sum to exactly 0.
RationalForm sphere_prescribe_residues(const std::vector<std::pair<SpherePoint, ExactComplex>>& divisor);

struct KindDecomposition {
    RationalForm log_part;     // simple poles carrying the residues
    RationalForm second_kind;  // all residues zero
};

KindDecomposition decompose_kinds(const RationalForm& f);

/// True iff every pole has order <= k + 1.
bool pole_order_bound_check(const RationalForm& f, int k);

/// Exact rational antiderivative when all residues vanish, else nullopt. Returned as N/D.
std::optional<std::pair<Polynomial, Polynomial>> rational_antiderivative(const RationalForm& f);

}  // namespace residuum::models
