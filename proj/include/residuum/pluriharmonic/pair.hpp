#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "residuum/periods/periods.hpp"

namespace residuum::pluri {

using models::MeromorphicForm;
using periods::Garden;

/// conj(Psi): the coefficient of dzbar at z is conj(Psi(z)), so every integral is conj(integral of Psi).
struct AntiMeromorphicForm {
    MeromorphicForm conjugate_of;

    Complex operator()(Complex z) const { return std::conj(models::evaluate(conjugate_of, z)); }
    Complex integral(const LoopPath& path, double margin = periods::kDefaultMargin) const {
        return std::conj(periods::contour_integral(conjugate_of, path, margin));
    }
};

periods::PeriodVector period_vector(const AntiMeromorphicForm& f, const Garden& garden);

/// Psi with residues conj(r_j) and long periods -conj(b_j), returned as conj(Psi).
/// Throws DomainError when the residues of the form do not sum to zero.
AntiMeromorphicForm conjugate(const MeromorphicForm& form, const Garden& garden);

/// Closed meromorphic / anti-meromorphic forms whose period vectors negate each other.
class Pair {
public:
    /// Throws DomainError if some period component of phi + phi_hat exceeds the period tolerance.
    static Pair make(MeromorphicForm phi, AntiMeromorphicForm phi_hat, Garden garden);
    /// No invariant check (used to exhibit broken pairs).
    static Pair unchecked(MeromorphicForm phi, AntiMeromorphicForm phi_hat, Garden garden);
    /// phi together with its conjugate.
    static Pair from_form(const MeromorphicForm& phi, const Garden& garden);

    const MeromorphicForm& phi() const { return phi_; }
    const AntiMeromorphicForm& phi_hat() const { return phi_hat_; }
    const Garden& garden() const { return garden_; }

    /// max over components of |period(phi) + period(phi_hat)|
    double invariant_defect() const;
    /// Integral of phi + phi_hat along a path.
    Complex integral(const LoopPath& path) const;

private:
    Pair(MeromorphicForm phi, AntiMeromorphicForm phi_hat, Garden garden)
        : phi_(std::move(phi)), phi_hat_(std::move(phi_hat)), garden_(std::move(garden)) {}
    MeromorphicForm phi_;
    AntiMeromorphicForm phi_hat_;
    Garden garden_;
};

/// Straight segment with circular detours around poles near it. The detour radius around a pole is
/// min(0.1, a quarter of the smallest pole separation, half its distance to either endpoint).
/// Throws DomainError when an endpoint is within the pole margin.
LoopPath path_between(const Garden& garden, Complex from, Complex to);

/// h(z) = integral of phi + phi_hat from the garden basepoint (or along `path`). Complex in general;
/// real when the residues are real and the long periods pure imaginary.
Complex integrate_pair(const Pair& pair, Complex z, const std::optional<LoopPath>& path = std::nullopt);
/// Real value; throws DomainError if |Im h| exceeds the period tolerance.
double integrate_pair_real(const Pair& pair, Complex z, const std::optional<LoopPath>& path = std::nullopt);

struct AuditReport {
    double max_abs = 0;
    int loops = 0;
    std::vector<double> values;  // per loop, garden loops first, then small circles, then random loops
};

/// Loop integrals of phi + phi_hat over the garden loops, all small circles and n random loops
/// (random circles; on the torus also random closed lattice segments).
AuditReport well_definedness_audit(const Pair& pair, int n_random_loops, std::uint64_t seed = 0);

/// Fields with an evaluation rule.
struct PairField {
    Pair pair;
    Complex basepoint;
};

/// sum r_i log|z - p_i|^2 + constant on the sphere.
struct SphereLogField {
    std::vector<std::pair<ExactComplex, ExactComplex>> terms;  // (p_i, r_i)
    Complex constant = 0;
};

using PluriharmonicField = std::variant<PairField, SphereLogField>;

Complex field_value(const PluriharmonicField& field, Complex z);
/// Nearest singular point distance.
double field_pole_distance(const PluriharmonicField& field, Complex z);

struct LaplacianReport {
    double max_residual = 0;
    std::vector<double> residuals;
};

/// 5-point Laplacian |h(z+s)+h(z-s)+h(z+is)+h(z-is)-4h(z)| / s^2 at each sample. For pair fields the
/// differences are computed as short path integrals, so the basepoint value cancels exactly.
/// Throws DomainError if a sample is within 10 s of a pole.
LaplacianReport laplacian_check(const PluriharmonicField& field, const std::vector<Complex>& samples, double step);

/// Same garden required (DomainError otherwise); compares period vectors of phi within tolerance.
bool pairs_equivalent(const Pair& a, const Pair& b);

/// k + m with k the kernel dimension of the Chern map on the garden's point classes and m = b1.
int pluriharmonic_space_dim(const Garden& garden);

struct RankReport {
    int rank = 0;
    std::vector<double> singular_values;
    int rows = 0;
};

/// Rank of the stacked (long, short) period rows of a spanning family of constructed pairs
/// (third-kind pairs p_1 - p_j, plus dz and wp(z - p_1) dz on the torus, plus random combinations).
/// Kept singular values must exceed 1e-4 and discarded ones stay below 1e-8 (NumericalError otherwise).
RankReport period_matrix_rank(const Garden& garden, int extra_random = 2, std::uint64_t seed = 0);

/// (1,0)-part of dh: exact for log fields, the stored phi for pair fields. Sphere log fields yield
/// sum r_i dz / (z - p_i).
MeromorphicForm kappa(const PluriharmonicField& field);
/// Conjugate + pair, based at the garden basepoint.
PluriharmonicField kappa_inverse(const MeromorphicForm& form, const Garden& garden);

/// Portable uniform on [0, 1) from a 64-bit engine output.
double unit_uniform(std::uint64_t bits);

}  // namespace residuum::pluri
