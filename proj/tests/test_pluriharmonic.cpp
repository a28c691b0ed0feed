#include <doctest.h>

#include "residuum/error.hpp"
#include "residuum/pluriharmonic/pair.hpp"
#include "support.hpp"

using namespace residuum;
using namespace residuum::models;
using namespace residuum::periods;
using namespace residuum::pluri;

namespace {

const Complex kTau(0.3, 1.1);
const Complex kP(0.2, 0.3), kQ(0.6, 0.5);

TorusHandle torus() {
    static const auto t = std::make_shared<const Torus>(kTau);
    return t;
}

Garden sphere01(Complex base = Complex(0.5, 0.7)) {
    return Garden::sphere({SpherePoint(0), SpherePoint(1)}, base);
}

MeromorphicForm third01() { return sphere_third_kind(SpherePoint(0), SpherePoint(1)); }

double log_field(Complex z) { return std::log(std::norm(z)) - std::log(std::norm(z - 1.0)); }

}  // namespace

TEST_CASE("conjugate on the sphere") {
    const auto g = sphere01();
    const auto hat = conjugate(third01(), g);
    const Complex z(0.3, -0.8);
    CHECK(std::abs(hat(z) - (1.0 / std::conj(z) - 1.0 / (std::conj(z) - 1.0))) < 1e-14);
    CHECK_THROWS_AS(conjugate(MeromorphicForm(RationalForm::pole_term(1, 0, 1)), g), DomainError);
}

TEST_CASE("pair invariant on both models") {
    const auto gs = sphere01();
    const auto ps = Pair::from_form(third01(), gs);
    CHECK(ps.invariant_defect() < 1e-8);
    const auto gt = Garden::torus(torus(), {kP, kQ});
    const auto pt = Pair::from_form(torus_third_kind(torus(), kP, kQ), gt);
    CHECK(pt.invariant_defect() < 1e-8);
    const auto a = periods::period_vector(pt.phi(), gt), b = period_vector(pt.phi_hat(), gt);
    for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(a.long_periods[i] + b.long_periods[i]) < 1e-8);
        CHECK(std::abs(a.short_periods[i] + b.short_periods[i]) < 1e-8);
    }
    CHECK_NOTHROW(Pair::make(third01(), AntiMeromorphicForm{third01()}, gs));  // real residues: conj(phi) works
    CHECK_THROWS_AS(Pair::make(third01(), AntiMeromorphicForm{scale(-1.0, third01())}, gs), DomainError);
}

TEST_CASE("sphere pair evaluates to the closed form") {
    const auto pair = Pair::from_form(third01(), sphere01());
    CHECK(integrate_pair_real(pair, 2.0) == doctest::Approx(std::log(4.0)).epsilon(1e-10));
    for (double y : {-3.0, -0.4, 0.2, 1.5, 6.0}) CHECK(std::abs(integrate_pair_real(pair, Complex(0.5, y))) < 1e-8);
    testkit::Rng rng(21);
    const double base = log_field(pair.garden().basepoint());
    for (int i = 0; i < 50; ++i) {
        const Complex z(rng.uniform(-3, 3), rng.uniform(-3, 3));
        if (pair.garden().distance_to_components(z) < 0.05) continue;
        CHECK(std::abs(integrate_pair_real(pair, z) - (log_field(z) - base)) < 1e-8);
    }
}

TEST_CASE("imaginary residues give a non-real h") {
    const MeromorphicForm f = scale(Complex(0, 1), third01());
    const auto pair = Pair::from_form(f, sphere01());
    CHECK_THROWS_AS(integrate_pair_real(pair, 2.0), DomainError);
    CHECK(std::abs(integrate_pair(pair, 2.0) - Complex(0, std::log(4.0))) < 1e-9);
}

TEST_CASE("path independence on the torus") {
    const auto g = Garden::torus(torus(), {kP, kQ});
    const auto n = normalize_pure_imaginary(torus_third_kind(torus(), kP, kQ), g);
    const auto pair = Pair::from_form(n.form, g);
    const Complex z(0.45, 0.15);
    const Complex b = g.basepoint();
    const Complex direct = integrate_pair(pair, z);
    // around the other side of p, and once around the torus
    const std::vector<Complex> around{b, kP + Complex(-0.15, -0.2), z};
    const std::vector<Complex> lap{b, b + 1.0, z};
    CHECK(std::abs(integrate_pair(pair, z, LoopPath::polyline(around)) - direct) < 1e-8);
    CHECK(std::abs(integrate_pair(pair, z, LoopPath::polyline(lap)) - direct) < 1e-8);
    CHECK(std::abs(integrate_pair(pair, z + kTau) - direct) < 1e-8);
    CHECK(std::abs(direct.imag()) < 1e-8);
    CHECK_THROWS_AS(integrate_pair(pair, z, LoopPath::segment(b + 0.1, z)), DomainError);
}

TEST_CASE("path construction detours poles") {
    const auto g = sphere01(Complex(-1, 0));
    const auto path = path_between(g, Complex(-1, 0), Complex(2, 0));
    CHECK(path.start() == Complex(-1, 0));
    CHECK(std::abs(path.end() - Complex(2, 0)) < 1e-14);
    CHECK(g.clearance(path) > 0.05);
    CHECK_THROWS_AS(path_between(g, Complex(-1, 0), Complex(1e-4, 0)), DomainError);
}

TEST_CASE("well-definedness audit") {
    const auto gs = sphere01();
    const auto good = well_definedness_audit(Pair::from_form(third01(), gs), 30, 0);
    CHECK(good.loops >= 32);
    CHECK(good.max_abs < 1e-8);
    const auto hat = conjugate(third01(), gs);
    const auto broken = Pair::unchecked(third01(), AntiMeromorphicForm{scale(2.0, hat.conjugate_of)}, gs);
    CHECK(well_definedness_audit(broken, 0).max_abs == doctest::Approx(2 * testkit::kPi).epsilon(1e-8));
    const auto zero = Pair::from_form(RationalForm(), gs);
    CHECK(well_definedness_audit(zero, 10).max_abs == 0.0);
    // deterministic for a fixed seed
    CHECK(well_definedness_audit(Pair::from_form(third01(), gs), 5, 7).values ==
          well_definedness_audit(Pair::from_form(third01(), gs), 5, 7).values);
}

TEST_CASE("harmonicity by finite differences") {
    const SphereLogField log{{{0, 1}, {1, -1}}, 0};
    const std::vector<Complex> samples{Complex(2, 1), Complex(-1.5, 0.5), Complex(0.8, 2)};
    const auto coarse = laplacian_check(log, samples, 0.02), fine = laplacian_check(log, samples, 0.01);
    for (std::size_t i = 0; i < samples.size(); ++i) CHECK(coarse.residuals[i] / fine.residuals[i] == doctest::Approx(4.0).epsilon(0.1));
    const SphereLogField constant{{}, 3.5};
    CHECK(laplacian_check(constant, samples, 0.01).max_residual < 1e-9);
    CHECK_THROWS_AS(laplacian_check(log, {Complex(0.05, 0)}, 0.01), DomainError);

    const auto g = Garden::torus(torus(), {kP, kQ});
    const PluriharmonicField tf = kappa_inverse(normalize_pure_imaginary(torus_third_kind(torus(), kP, kQ), g).form, g);
    const std::vector<Complex> ts{Complex(0.45, 0.15), Complex(0.8, 0.9), Complex(0.1, 0.8)};
    const auto tc = laplacian_check(tf, ts, 0.02), tfine = laplacian_check(tf, ts, 0.01);
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(tc.residuals[i] / tfine.residuals[i] == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("pair equivalence") {
    const auto g = sphere01();
    const auto a = Pair::from_form(third01(), g);
    CHECK(pairs_equivalent(a, a));
    // adding the exact pair d(1/z) + its conjugate
    const MeromorphicForm exact = RationalForm::pole_term(-1, 0, 2);
    const auto b = Pair::from_form(add(third01(), exact), g);
    CHECK(pairs_equivalent(a, b));
    CHECK(pairs_equivalent(b, a));
    const auto c = Pair::from_form(scale(2.0, third01()), g);
    CHECK_FALSE(pairs_equivalent(a, c));
    const auto other = Pair::from_form(third01(), Garden::sphere({SpherePoint(0), SpherePoint(1), SpherePoint(2)}));
    CHECK_THROWS_AS(pairs_equivalent(a, other), DomainError);
}

TEST_CASE("dimension of the pluriharmonic space") {
    CHECK(pluriharmonic_space_dim(Garden::sphere({SpherePoint(0), SpherePoint(1), SpherePoint::infinity()})) == 2);
    CHECK(pluriharmonic_space_dim(Garden::sphere({SpherePoint(0)})) == 0);
    const auto gt = Garden::torus(torus(), {kP, kQ});
    CHECK(pluriharmonic_space_dim(gt) == 3);
    const auto r = period_matrix_rank(gt);
    CHECK(r.rank == 3);
    CHECK(r.singular_values[2] > 1e-4);
}

TEST_CASE("kappa and its inverse") {
    const SphereLogField log{{{0, 1}, {1, -1}}, 0};
    const auto phi = kappa(log);
    CHECK(std::get<RationalForm>(phi) == std::get<RationalForm>(third01()));
    CHECK(is_zero(kappa(SphereLogField{{}, 2.0})));
    const auto g = Garden::torus(torus(), {kP, kQ});
    const MeromorphicForm f = torus_third_kind(torus(), kP, kQ);
    const auto back = kappa(kappa_inverse(f, g));
    const auto p1 = period_vector(f, g), p2 = period_vector(back, g);
    for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(p1.long_periods[i] - p2.long_periods[i]) < 1e-8);
        CHECK(std::abs(p1.short_periods[i] - p2.short_periods[i]) < 1e-8);
    }
    const auto field = kappa_inverse(third01(), sphere01());
    CHECK(std::abs(field_value(field, 2.0).real() - std::log(4.0)) < 1e-9);
}
