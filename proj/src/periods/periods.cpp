#include "residuum/periods/periods.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "residuum/error.hpp"

namespace residuum::periods {

using models::EllipticForm;
using models::RationalForm;
using models::SpherePoint;

namespace {

const Complex kTwoPiI(0, 2 * std::numbers::pi);

std::pair<Complex, double> path_disk(const LoopPath& path) {
    Complex lo = path.start(), hi = lo;
    for (const auto& piece : path.pieces())
        for (int k = 0; k <= 32; ++k) {
            const Complex p = piece_point(piece, k / 32.0);
            lo = {std::min(lo.real(), p.real()), std::min(lo.imag(), p.imag())};
            hi = {std::max(hi.real(), p.real()), std::max(hi.imag(), p.imag())};
        }
    return {0.5 * (lo + hi), 0.5 * std::abs(hi - lo) + 1.0};
}

// Integer lattice class (a, b) of a loop closed on the torus.
std::pair<long, long> loop_class(const models::Torus& torus, const LoopPath& loop) {
    const auto [s, t] = torus.lattice_coordinates(loop.end() - loop.start());
    return {std::lround(s), std::lround(t)};
}

}  // namespace

double period_tolerance() {
    if (const char* env = std::getenv("RESIDUUM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0 && std::isfinite(v)) return v;
    }
    return kPeriodTolerance;
}

Complex residue_from_contour(Complex integral) { return integral / kTwoPiI; }
Complex contour_from_residue(Complex residue) { return residue * kTwoPiI; }

double pole_clearance(const MeromorphicForm& form, const LoopPath& path) {
    double d = std::numeric_limits<double>::infinity();
    if (const auto* r = std::get_if<RationalForm>(&form)) {
        for (const auto& [p, k] : r->finite_poles()) d = std::min(d, path.distance_to(p.to_complex()));
        return d;
    }
    const auto& e = std::get<EllipticForm>(form);
    const auto [center, radius] = path_disk(path);
    for (const auto& p : e.poles())
        for (const auto& w : e.torus()->translates_near(p, center, radius)) d = std::min(d, path.distance_to(w));
    return d;
}

Complex contour_integral(const MeromorphicForm& form, const LoopPath& path, double margin,
                         const QuadratureOptions& opts) {
    if (pole_clearance(form, path) < margin) throw DomainError("path comes within the pole margin");
    return integrate(path, [&](Complex z) { return models::evaluate(form, z); }, opts);
}

void check_form_in_garden(const MeromorphicForm& form, const Garden& garden) {
    if (const auto* r = std::get_if<RationalForm>(&form)) {
        if (garden.model() != Model::sphere) throw DomainError("rational form on a torus garden");
        for (const auto& [p, k] : r->poles())
            if (!garden.find_component(p)) throw DomainError("pole at " + p.str() + " is not a garden component");
        return;
    }
    const auto& e = std::get<EllipticForm>(form);
    if (garden.model() != Model::torus) throw DomainError("elliptic form on a sphere garden");
    if (e.torus()->tau() != garden.torus_handle()->tau()) throw DomainError("form and garden use different tori");
    for (const auto& p : e.poles())
        if (!garden.find_component(p))
            throw DomainError("pole at " + format_complex(p, 10) + " is not a garden component");
}

std::vector<Complex> long_period_vector(const MeromorphicForm& form, const Garden& garden) {
    check_form_in_garden(form, garden);
    std::vector<Complex> out;
    for (const auto& loop : garden.loops()) out.push_back(contour_integral(form, loop, garden.margin()));
    return out;
}

Complex component_residue(const MeromorphicForm& form, const Garden& garden, int j) {
    const auto& c = garden.components().at(static_cast<std::size_t>(j));
    if (const auto* r = std::get_if<RationalForm>(&form)) return r->residue_at(*c.sphere_point).to_complex();
    return std::get<EllipticForm>(form).residue_at(c.z);
}

std::vector<Complex> short_period_vector(const MeromorphicForm& form, const Garden& garden) {
    check_form_in_garden(form, garden);
    std::vector<Complex> out;
    for (int j = 0; j < garden.l(); ++j) {
        const Complex d = contour_integral(form, garden.small_circles()[static_cast<std::size_t>(j)], garden.margin());
        const Complex expected = contour_from_residue(component_residue(form, garden, j));
        if (std::abs(d - expected) > kResidueAgreement * std::max(1.0, std::abs(expected)))
            throw NumericalError("small-circle period of component " + garden.components()[static_cast<std::size_t>(j)].name +
                                 " disagrees with its residue by " + format_real(std::abs(d - expected), 3));
        out.push_back(d);
    }
    return out;
}

PeriodVector period_vector(const MeromorphicForm& form, const Garden& garden) {
    return {long_period_vector(form, garden), short_period_vector(form, garden)};
}

bool well_defined_residue_check(const MeromorphicForm& form, const Garden& garden, int component, Circle a, Circle b) {
    check_form_in_garden(form, garden);
    const auto& comp = garden.components().at(static_cast<std::size_t>(component));
    std::vector<Complex> poles;
    if (const auto* r = std::get_if<RationalForm>(&form)) {
        for (const auto& [p, k] : r->finite_poles()) poles.push_back(p.to_complex());
    } else {
        poles = std::get<EllipticForm>(form).poles();
    }
    auto integral = [&](const Circle& c) {
        if (!(c.radius > 0)) throw DomainError("circle radius must be positive");
        std::vector<Complex> inside;
        for (const auto& p : poles) {
            std::vector<Complex> candidates{p};
            if (garden.model() == Model::torus)
                candidates = garden.torus_handle()->translates_near(p, c.center, c.radius + 1.0);
            for (const auto& w : candidates) {
                const double d = std::abs(w - c.center);
                if (std::abs(d - c.radius) < garden.margin()) throw DomainError("circle passes within the pole margin");
                if (d < c.radius) inside.push_back(w);
            }
        }
        const bool at_inf = comp.at_infinity();
        if (at_inf) {
            if (inside.size() != poles.size()) throw DomainError("circle around infinity must enclose every finite pole");
            return contour_integral(form, LoopPath::circle(c.center, c.radius, false), garden.margin());
        }
        const bool has_target = std::abs(c.center - comp.z) < c.radius ||
                                (garden.model() == Model::torus &&
                                 std::any_of(inside.begin(), inside.end(), [&](Complex w) {
                                     return garden.torus_handle()->lattice_distance(w, comp.z) < models::kPoleIdentityTolerance;
                                 }));
        if (!has_target) throw DomainError("circle does not enclose the component");
        std::size_t others = 0;
        for (const auto& w : inside) {
            const double d = garden.model() == Model::torus ? garden.torus_handle()->lattice_distance(w, comp.z)
                                                            : std::abs(w - comp.z);
            if (d >= models::kPoleIdentityTolerance) ++others;
        }
        if (others > 0 || inside.size() > 1) throw DomainError("circle encloses a second pole");
        return contour_integral(form, LoopPath::circle(c.center, c.radius), garden.margin());
    };
    const Complex ia = integral(a);
    return std::abs(ia - integral(b)) < kResidueAgreement * std::max(1.0, std::abs(ia));
}

bool is_exact(const MeromorphicForm& form, const Garden& garden) {
    const auto periods = period_vector(form, garden);
    const double tol = period_tolerance();
    bool numeric_zero = true;
    for (const auto& v : periods.long_periods) numeric_zero = numeric_zero && std::abs(v) < tol;
    for (const auto& v : periods.short_periods) numeric_zero = numeric_zero && std::abs(v) < tol;
    if (const auto* r = std::get_if<RationalForm>(&form)) {
        const bool exact = models::rational_antiderivative(*r).has_value();
        if (exact && !numeric_zero) throw NumericalError("exact form with nonzero measured periods");
        return exact;
    }
    return numeric_zero;
}

RationalForm prescribe_full_exact(const std::vector<ExactComplex>& residues, const Garden& garden) {
    if (garden.model() != Model::sphere) throw DomainError("exact prescription is available on the sphere only");
    if (static_cast<int>(residues.size()) != garden.l())
        throw DomainError("expected one residue per garden component");
    std::vector<std::pair<SpherePoint, ExactComplex>> divisor;
    for (int j = 0; j < garden.l(); ++j)
        divisor.emplace_back(*garden.components()[static_cast<std::size_t>(j)].sphere_point,
                             residues[static_cast<std::size_t>(j)]);
    return models::sphere_prescribe_residues(divisor);
}

MeromorphicForm prescribe_full(const std::vector<Complex>& target_long, const std::vector<Complex>& residues,
                               const Garden& garden) {
    if (static_cast<int>(target_long.size()) != garden.m())
        throw DomainError("expected " + std::to_string(garden.m()) + " long-period targets");
    if (static_cast<int>(residues.size()) != garden.l())
        throw DomainError("expected one residue per garden component");
    Complex sum = 0;
    double scale = 1.0;
    for (const auto& r : residues) {
        sum += r;
        scale = std::max(scale, std::abs(r));
    }
    if (std::abs(sum) > 1e-12 * scale) throw DomainError("residues sum to " + format_complex(sum, 6) + ", not 0");

    if (garden.model() == Model::sphere) {
        std::vector<ExactComplex> exact;
        for (const auto& r : residues) exact.emplace_back(Rational(r.real()), Rational(r.imag()));
        // absorb the rounding-level defect so the sum is exactly zero
        if (!exact.empty()) {
            ExactComplex s;
            for (std::size_t j = 1; j < exact.size(); ++j) s += exact[j];
            exact.front() = -s;
        }
        return prescribe_full_exact(exact, garden);
    }

    const auto& torus = *garden.torus_handle();
    std::vector<std::pair<Complex, Complex>> divisor;
    for (int j = 0; j < garden.l(); ++j)
        divisor.emplace_back(garden.components()[static_cast<std::size_t>(j)].z, residues[static_cast<std::size_t>(j)]);
    EllipticForm base = models::torus_prescribe_residues(garden.torus_handle(), divisor);
    if (garden.l() == 0) {
        for (const auto& t : target_long)
            if (std::abs(t) > 0) throw DomainError("torus prescription of nonzero long periods needs a component");
        return base;
    }
    const auto measured = long_period_vector(base, garden);
    // periods of dz and wp(z - p1) dz along loop k of class (a, b): a + b tau and -(a eta1 + b eta2)
    Complex m[2][2];
    for (int k = 0; k < 2; ++k) {
        const auto [a, b] = loop_class(torus, garden.loops()[static_cast<std::size_t>(k)]);
        m[k][0] = static_cast<double>(a) + static_cast<double>(b) * torus.tau();
        m[k][1] = -(static_cast<double>(a) * torus.eta1() + static_cast<double>(b) * torus.eta2());
    }
    const Complex det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(det) < 1e-6) throw NumericalError("degenerate period system");
    const Complex t0 = target_long[0] - measured[0], t1 = target_long[1] - measured[1];
    const Complex alpha = (t0 * m[1][1] - m[0][1] * t1) / det;
    const Complex beta = (m[0][0] * t1 - m[1][0] * t0) / det;
    const Complex p1 = garden.components()[0].z;
    return base + EllipticForm(garden.torus_handle(), alpha, {}, {{p1, 2, beta}});
}

NormalizedForm normalize_pure_imaginary(const MeromorphicForm& form, const Garden& garden) {
    if (garden.model() == Model::sphere)
        return {form, 0, std::string("sphere model has no long periods; form returned unchanged")};
    const auto b = long_period_vector(form, garden);
    const auto& torus = *garden.torus_handle();
    Complex omega[2];
    for (int k = 0; k < 2; ++k) {
        const auto [a, c] = loop_class(torus, garden.loops()[static_cast<std::size_t>(k)]);
        omega[k] = static_cast<double>(a) + static_cast<double>(c) * torus.tau();
    }
    // Re(b_k + mu omega_k) = 0:  Re(mu) Re(omega_k) - Im(mu) Im(omega_k) = -Re(b_k)
    const double a11 = omega[0].real(), a12 = -omega[0].imag();
    const double a21 = omega[1].real(), a22 = -omega[1].imag();
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-12) throw NumericalError("degenerate normalization system");
    const double r1 = -b[0].real(), r2 = -b[1].real();
    const Complex mu((r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det);
    const auto& e = std::get<EllipticForm>(form);
    return {e + EllipticForm(garden.torus_handle(), mu), mu, std::nullopt};
}

}  // namespace residuum::periods
