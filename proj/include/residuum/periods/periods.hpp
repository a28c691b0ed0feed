#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residuum/periods/garden.hpp"

namespace residuum::periods {

using models::MeromorphicForm;

/// Default absolute threshold for "numerically zero" periods (RESIDUUM_TOL overrides it).
inline constexpr double kPeriodTolerance = 1e-8;
/// Agreement required between independent computations of the same residue, relative to
/// max(1, |value|).
inline constexpr double kResidueAgreement = 1e-9;

/// Period tolerance, honoring RESIDUUM_TOL when set to a positive number.
double period_tolerance();

/// Classical residue r = (1/2 pi i) * (contour integral); the only place the factor appears.
Complex residue_from_contour(Complex integral);
Complex contour_from_residue(Complex residue);

/// Integral of the form along the path; throws DomainError if the path comes within
/// `margin` of a pole (lattice translates included on the torus).
Complex contour_integral(const MeromorphicForm& form, const LoopPath& path, double margin = kDefaultMargin,
                         const QuadratureOptions& opts = {});

/// Smallest distance between the path and a pole of the form.
double pole_clearance(const MeromorphicForm& form, const LoopPath& path);

struct PeriodVector {
    std::vector<Complex> long_periods;   // b_1..b_m
    std::vector<Complex> short_periods;  // d_1..d_l
};

/// Throws DomainError if the form has a pole outside the garden's components.
void check_form_in_garden(const MeromorphicForm& form, const Garden& garden);

std::vector<Complex> long_period_vector(const MeromorphicForm& form, const Garden& garden);
/// Small-circle quadrature, checked against 2 pi i times the residue (exact on the sphere);
/// throws NumericalError if they disagree by more than 1e-9.
std::vector<Complex> short_period_vector(const MeromorphicForm& form, const Garden& garden);
PeriodVector period_vector(const MeromorphicForm& form, const Garden& garden);

/// Classical residue of the form at component j (exact value converted on the sphere).
Complex component_residue(const MeromorphicForm& form, const Garden& garden, int j);

struct Circle {
    Complex center;
    double radius;
};

/// Compares the integrals over two circles around the same component (within 1e-9).
/// Throws DomainError if a circle encloses another pole or misses the component.
bool well_defined_residue_check(const MeromorphicForm& form, const Garden& garden, int component, Circle a, Circle b);

/// Both period vectors vanish; on the sphere this is also confirmed by an exact antiderivative.
bool is_exact(const MeromorphicForm& form, const Garden& garden);

/// Residue targets per garden component, in component order.
/// Sphere: sum r_i dz/(z - p_i). Torus: sum r_i zeta(z - p_i) dz + alpha dz + beta wp(z - p_1) dz with
/// (alpha, beta) solving [[1, -eta1], [tau, -eta2]] (alpha, beta) = target - periods(zeta part).
MeromorphicForm prescribe_full(const std::vector<Complex>& target_long, const std::vector<Complex>& residues,
                               const Garden& garden);
/// Sphere only: exact residues.
models::RationalForm prescribe_full_exact(const std::vector<ExactComplex>& residues, const Garden& garden);

struct NormalizedForm {
    MeromorphicForm form;
    Complex mu;                     // the dz coefficient added
    std::optional<std::string> notice;
};

/// Adds mu dz so that both long periods become pure imaginary. On the sphere the form is
/// returned unchanged with a notice.
NormalizedForm normalize_pure_imaginary(const MeromorphicForm& form, const Garden& garden);

}  // namespace residuum::periods
