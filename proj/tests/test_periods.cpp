#include <doctest.h>

#include "residuum/error.hpp"
#include "residuum/periods/periods.hpp"
#include "support.hpp"

using namespace residuum;
using namespace residuum::models;
using namespace residuum::periods;

namespace {

const Complex kTau(0.3, 1.1);
const Complex kP(0.2, 0.3), kQ(0.6, 0.5);

TorusHandle torus() {
    static const auto t = std::make_shared<const Torus>(kTau);
    return t;
}

Garden torus_garden() { return Garden::torus(torus(), {kP, kQ}); }

RationalForm inv(const ExactComplex& p, int k = 1) { return RationalForm::pole_term(1, p, k); }

}  // namespace

TEST_CASE("quadrature basics") {
    const auto rule = gauss_legendre(8);
    double w = 0;
    for (double x : rule.weights) w += x;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
    const auto circle = LoopPath::circle(0, 1);
    CHECK(circle.closed());
    CHECK(std::abs(integrate(circle, [](Complex z) { return 1.0 / z; }) - testkit::kTwoPiI) < 1e-12);
    CHECK(std::abs(integrate(circle, [](Complex z) { return 1.0 / (z * z); })) < 1e-12);
    const Complex z0(0.1, 0.2);
    CHECK(std::abs(integrate(LoopPath::segment(z0, z0 + 1.0), [](Complex) { return Complex(1); }) - 1.0) < 1e-12);
    CHECK(std::abs(circle.reversed().start() - circle.end()) < 1e-15);
}

TEST_CASE("contour integrals respect the pole margin") {
    const MeromorphicForm f = inv(0);
    CHECK(std::abs(contour_integral(f, LoopPath::circle(0, 1)) - testkit::kTwoPiI) < 1e-12);
    CHECK_THROWS_AS(contour_integral(f, LoopPath::segment(Complex(-1, 5e-4), Complex(1, 5e-4))), DomainError);
    CHECK(residue_from_contour(testkit::kTwoPiI) == Complex(1.0));
    CHECK(std::abs(contour_from_residue(1.0) - testkit::kTwoPiI) == 0.0);
}

TEST_CASE("sphere gardens") {
    const auto g = Garden::sphere({SpherePoint(0), SpherePoint(1), SpherePoint::infinity()});
    CHECK(g.m() == 0);
    CHECK(g.l() == 3);
    CHECK(g.small_circles().size() == 3);
    CHECK(g.distance_to_components(g.basepoint()) > 0.1);
    CHECK_THROWS_AS(Garden::sphere({SpherePoint(0), SpherePoint(0)}), DomainError);
    CHECK_THROWS_AS(Garden::sphere({SpherePoint(0)}, Complex(0, 0)), DomainError);
}

TEST_CASE("sphere periods") {
    const auto g = Garden::sphere({SpherePoint(0), SpherePoint(1)});
    const MeromorphicForm f = sphere_third_kind(SpherePoint(0), SpherePoint(1));
    const auto pv = period_vector(f, g);
    CHECK(pv.long_periods.empty());
    REQUIRE(pv.short_periods.size() == 2);
    CHECK(std::abs(pv.short_periods[0] - testkit::kTwoPiI) < 1e-9);
    CHECK(std::abs(pv.short_periods[1] + testkit::kTwoPiI) < 1e-9);
    const MeromorphicForm second = RationalForm(sphere_second_kind(SpherePoint(0), 3));
    for (auto d : short_period_vector(second, g)) CHECK(std::abs(d) < 1e-9);
    // a pole outside the garden is rejected
    CHECK_THROWS_AS(period_vector(MeromorphicForm(inv(2)), g), DomainError);
}

TEST_CASE("sphere garden with infinity") {
    const auto g = Garden::sphere({SpherePoint(0), SpherePoint::infinity()});
    const MeromorphicForm f = inv(0);
    const auto d = short_period_vector(f, g);
    CHECK(std::abs(d[0] - testkit::kTwoPiI) < 1e-9);
    CHECK(std::abs(d[1] + testkit::kTwoPiI) < 1e-9);
    CHECK(component_residue(f, g, 1) == Complex(-1.0));
}

TEST_CASE("torus garden loops") {
    const auto g = torus_garden();
    REQUIRE(g.m() == 2);
    CHECK(std::abs(g.loops()[0].end() - g.loops()[0].start() - 1.0) < 1e-15);
    CHECK(std::abs(g.loops()[1].end() - g.loops()[1].start() - kTau) < 1e-15);
    CHECK(g.clearance(g.loops()[0]) > 0.05);
    CHECK(g.clearance(g.loops()[1]) > 0.05);
    CHECK(g.small_circles().size() == 2);
    CHECK_THROWS_AS(Garden::torus(torus(), {kP, kP + 1.0}), DomainError);
}

TEST_CASE("torus long periods") {
    const auto g = torus_garden();
    const auto b = long_period_vector(MeromorphicForm(EllipticForm(torus(), 1.0)), g);
    CHECK(std::abs(b[0] - 1.0) < 1e-12);
    CHECK(std::abs(b[1] - kTau) < 1e-12);
    // wp drops by the quasi-periods; eta1 from theta functions, eta2 from Legendre
    const testkit::ThetaOracle oracle(kTau);
    const Complex eta1 = oracle.eta1();
    const Complex eta2 = eta1 * kTau - testkit::kTwoPiI;
    const auto w = long_period_vector(MeromorphicForm(torus_second_kind(torus(), kP, 2)), g);
    CHECK(std::abs(w[0] + eta1) < 1e-8);
    CHECK(std::abs(w[1] + eta2) < 1e-8);
}

TEST_CASE("torus short periods of the third kind") {
    const auto g = torus_garden();
    const auto d = short_period_vector(MeromorphicForm(torus_third_kind(torus(), kP, kQ)), g);
    CHECK(std::abs(d[0] - testkit::kTwoPiI) < 1e-9);
    CHECK(std::abs(d[1] + testkit::kTwoPiI) < 1e-9);
}

TEST_CASE("well-defined residues on different circles") {
    const auto gs = Garden::sphere({SpherePoint(0), SpherePoint::infinity()});
    const MeromorphicForm f = inv(0);
    CHECK(well_defined_residue_check(f, gs, 0, {0, 0.1}, {0, 0.4}));
    const auto g01 = Garden::sphere({SpherePoint(0), SpherePoint(1)});
    const MeromorphicForm e = sphere_third_kind(SpherePoint(0), SpherePoint(1));
    CHECK_THROWS_AS(well_defined_residue_check(e, g01, 0, {0, 0.1}, {0, 2.0}), DomainError);
    const auto gt = torus_garden();
    const MeromorphicForm z = torus_third_kind(torus(), kP, kQ);
    CHECK(well_defined_residue_check(z, gt, 0, {kP, 0.05}, {kP + Complex(0.02, -0.01), 0.15}));
}

TEST_CASE("exactness") {
    const auto gs = Garden::sphere({SpherePoint(0)});
    CHECK(is_exact(MeromorphicForm(inv(0, 2)), gs));
    const auto ginf = Garden::sphere({SpherePoint(0), SpherePoint::infinity()});
    CHECK_FALSE(is_exact(MeromorphicForm(inv(0)), ginf));
    const auto gt = torus_garden();
    CHECK_FALSE(is_exact(MeromorphicForm(torus_second_kind(torus(), kP, 2)), gt));
    // wp'(z - p) dz = d wp(z - p)
    CHECK(is_exact(MeromorphicForm(torus_second_kind(torus(), kP, 3)), gt));
}

TEST_CASE("full prescription on the torus") {
    const auto g = torus_garden();
    const std::vector<Complex> target{Complex(0.3, 1.0), Complex(-2.0, 0.5)};
    const auto f = prescribe_full(target, {1.0, -1.0}, g);
    const auto pv = period_vector(f, g);
    CHECK(std::abs(pv.long_periods[0] - target[0]) < 1e-8);
    CHECK(std::abs(pv.long_periods[1] - target[1]) < 1e-8);
    CHECK(std::abs(pv.short_periods[0] - testkit::kTwoPiI) < 1e-8);
    CHECK_THROWS_AS(prescribe_full({0, 0}, {1.0, 0.0}, g), DomainError);
    CHECK_THROWS_AS(prescribe_full({0}, {1.0, -1.0}, g), DomainError);
}

TEST_CASE("full prescription on the sphere") {
    const auto g = Garden::sphere({SpherePoint(0), SpherePoint::infinity()});
    const auto f = prescribe_full_exact({1, -1}, g);
    CHECK(f == inv(0));
    CHECK_THROWS_AS(prescribe_full_exact({1, 0}, g), DomainError);
    const auto approx = prescribe_full({}, {Complex(0.5, 0.25), Complex(-0.5, -0.25)}, g);
    CHECK(std::abs(component_residue(approx, g, 0) - Complex(0.5, 0.25)) < 1e-15);
}

TEST_CASE("pure-imaginary normalization") {
    const auto g = torus_garden();
    const auto n = normalize_pure_imaginary(torus_third_kind(torus(), kP, kQ), g);
    for (auto b : long_period_vector(n.form, g)) CHECK(std::abs(b.real()) < 1e-9);
    CHECK_FALSE(n.notice.has_value());
    const auto d = normalize_pure_imaginary(EllipticForm(torus(), 1.0), g);
    for (auto b : long_period_vector(d.form, g)) CHECK(std::abs(b.real()) < 1e-12);
    const auto gs = Garden::sphere({SpherePoint(0), SpherePoint(1)});
    const MeromorphicForm s = sphere_third_kind(SpherePoint(0), SpherePoint(1));
    const auto ns = normalize_pure_imaginary(s, gs);
    CHECK(ns.notice.has_value());
    CHECK(std::get<RationalForm>(ns.form) == std::get<RationalForm>(s));
}

TEST_CASE("period map is linear") {
    const auto g = torus_garden();
    const MeromorphicForm a = torus_third_kind(torus(), kP, kQ);
    const MeromorphicForm b = torus_second_kind(torus(), kQ, 2);
    const Complex alpha(0.7, -0.2), beta(-1.5, 0.4);
    const auto lhs = period_vector(add(scale(alpha, a), scale(beta, b)), g);
    const auto pa = period_vector(a, g), pb = period_vector(b, g);
    for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(lhs.long_periods[i] - alpha * pa.long_periods[i] - beta * pb.long_periods[i]) < 1e-9);
        CHECK(std::abs(lhs.short_periods[i] - alpha * pa.short_periods[i] - beta * pb.short_periods[i]) < 1e-9);
    }
}

TEST_CASE("tolerance override from the environment") {
    CHECK(period_tolerance() == kPeriodTolerance);
    setenv("RESIDUUM_TOL", "1e-6", 1);
    CHECK(period_tolerance() == 1e-6);
    setenv("RESIDUUM_TOL", "garbage", 1);
    CHECK(period_tolerance() == kPeriodTolerance);
    unsetenv("RESIDUUM_TOL");
}
