#pragma once

#include <variant>
#include <vector>

#include "residuum/models/sphere.hpp"
#include "residuum/models/torus.hpp"

namespace residuum::models {

/// r * zeta(z - p) dz
struct LogTerm {
    Complex pole;
    Complex coefficient;
};

/// c * wp^(order - 2)(z - p) dz, a pole of exact order `order` >= 2 with zero residue.
struct PoleTerm {
    Complex pole;
    int order;
    Complex coefficient;
};

/// c0 dz + sum r zeta(z - p) dz + sum c wp^(k-2)(z - p) dz on a torus. Poles are kept reduced to
/// the fundamental domain, and terms at the same pole and order are merged.
class EllipticForm {
public:
    /// Throws DomainError if the zeta coefficients do not sum to 0 (within 1e-12) or an order is < 2.
    EllipticForm(TorusHandle torus, Complex c0 = 0, std::vector<LogTerm> log_terms = {},
                 std::vector<PoleTerm> pole_terms = {});

    const TorusHandle& torus() const { return torus_; }
    Complex c0() const { return c0_; }
    const std::vector<LogTerm>& log_terms() const { return log_terms_; }
    const std::vector<PoleTerm>& pole_terms() const { return pole_terms_; }
    bool is_zero() const { return c0_ == 0.0 && log_terms_.empty() && pole_terms_.empty(); }

    /// Coefficient of dz at z.
    Complex operator()(Complex z) const;
    /// Residue at p (mod the lattice); 0 away from the poles.
    Complex residue_at(Complex p) const;
    int pole_order(Complex p) const;
    /// Distinct reduced poles in the order they first appear.
    std::vector<Complex> poles() const;

    EllipticForm& operator+=(const EllipticForm& o);
    friend EllipticForm operator+(EllipticForm a, const EllipticForm& b) { return a += b; }
    friend EllipticForm operator*(Complex s, const EllipticForm& f);

private:
    void normalize();
    TorusHandle torus_;
    Complex c0_;
    std::vector<LogTerm> log_terms_;
    std::vector<PoleTerm> pole_terms_;
};

/// Poles on the torus are identified when their lattice distance is below this.
inline constexpr double kPoleIdentityTolerance = 1e-9;

/// (zeta(z - p) - zeta(z - q)) dz
EllipticForm torus_third_kind(const TorusHandle& torus, Complex p, Complex q);
/// wp^(l-2)(z - p) dz, l >= 2
EllipticForm torus_second_kind(const TorusHandle& torus, Complex p, int l);
/// sum a_i zeta(z - p_i) dz; the coefficients must sum to 0 within 1e-12.
EllipticForm torus_prescribe_residues(const TorusHandle& torus, const std::vector<std::pair<Complex, Complex>>& divisor);
bool pole_order_bound_check(const EllipticForm& f, int k);

using MeromorphicForm = std::variant<RationalForm, EllipticForm>;

Complex evaluate(const MeromorphicForm& f, Complex z);
bool is_zero(const MeromorphicForm& f);
MeromorphicForm add(const MeromorphicForm& a, const MeromorphicForm& b);
MeromorphicForm scale(Complex s, const MeromorphicForm& f);
bool pole_order_bound_check(const MeromorphicForm& f, int k);

}  // namespace residuum::models
