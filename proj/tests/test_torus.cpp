#include <doctest.h>

#include "residuum/error.hpp"
#include "residuum/models/elliptic.hpp"
#include "support.hpp"

using namespace residuum;
using namespace residuum::models;

namespace {

const Complex kTau(0.3, 1.1);
TorusHandle torus() {
    static const auto t = std::make_shared<const Torus>(kTau);
    return t;
}

}  // namespace

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(Torus(Complex(0.5, -1)), DomainError);
    CHECK_THROWS_AS(Torus(kTau, 0), DomainError);
    CHECK(torus()->legendre_defect() < 1e-10);
    const Torus square(Complex(0, 1));
    CHECK(std::abs(square.eta1() * square.tau() - square.eta2() - testkit::kTwoPiI) < 1e-10);
}

TEST_CASE("zeta and wp against the theta-function oracle") {
    const testkit::ThetaOracle oracle(kTau);
    CHECK(std::abs(torus()->eta1() - oracle.eta1()) < 1e-10);
    testkit::Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const Complex z(rng.uniform(-1.3, 1.3), rng.uniform(-1.3, 1.3));
        if (torus()->lattice_distance(z, 0) < 0.05) continue;
        // the oracle's z-window should stay small for the theta series
        const Complex zr = torus()->reduce(z) - Complex(0.5, 0) - 0.5 * kTau;
        CHECK(std::abs(torus()->zeta(zr) - oracle.zeta(zr)) < 1e-9 * std::max(1.0, std::abs(oracle.zeta(zr))));
        CHECK(std::abs(torus()->wp(z) - oracle.wp(z)) < 1e-9 * std::max(1.0, std::abs(oracle.wp(z))));
    }
}

TEST_CASE("oddness, periodicity and quasi-periodicity") {
    const Torus& t = *torus();
    testkit::Rng rng(5);
    for (int i = 0; i < 25; ++i) {
        const Complex z(rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (t.lattice_distance(z, 0) < 0.05) continue;
        CHECK(std::abs(t.zeta(-z) + t.zeta(z)) < 1e-10);
        CHECK(std::abs(t.wp(z + 1.0) - t.wp(z)) < 1e-10 * std::max(1.0, std::abs(t.wp(z))));
        CHECK(std::abs(t.wp(z + kTau) - t.wp(z)) < 1e-10 * std::max(1.0, std::abs(t.wp(z))));
        CHECK(std::abs(t.zeta(z + 1.0) - t.zeta(z) - t.eta1()) < 1e-10);
        CHECK(std::abs(t.zeta(z + kTau) - t.zeta(z) - t.eta2()) < 1e-10);
    }
}

TEST_CASE("derivatives by central differences") {
    const Torus& t = *torus();
    const Complex z(0.37, 0.41);
    const double h = 1e-4;
    auto d = [&](auto f) { return (f(z + h) - f(z - h)) / (2 * h); };
    CHECK(std::abs(d([&](Complex w) { return t.zeta(w); }) + t.wp(z)) < 1e-6);
    CHECK(std::abs(d([&](Complex w) { return t.wp(w); }) - t.wp_prime(z)) < 1e-5);
    CHECK(std::abs(d([&](Complex w) { return t.wp(w, 1); }) - t.wp(z, 2)) < 1e-4);
    // wp'' = 6 wp^2 - g2/2 differentiates to wp''' = 12 wp wp'
    CHECK(std::abs(t.wp(z, 3) - 12.0 * t.wp(z) * t.wp(z, 1)) < 1e-8 * std::abs(t.wp(z, 3)));
}

TEST_CASE("lattice points are rejected") {
    CHECK_THROWS_AS(torus()->zeta(Complex(1e-10, 0)), DomainError);
    CHECK_THROWS_AS(torus()->wp(1.0 + kTau), DomainError);
}

TEST_CASE("fundamental-domain reduction") {
    const Torus& t = *torus();
    const Complex z = Complex(2.7, -1.3);
    const Complex r = t.reduce(z);
    const auto [s, u] = t.lattice_coordinates(r);
    CHECK(s >= 0);
    CHECK(s < 1);
    CHECK(u >= 0);
    CHECK(u < 1);
    CHECK(t.lattice_distance(z, r) < 1e-12);
    CHECK(t.shortest_period() == doctest::Approx(1.0));
}

TEST_CASE("elliptic forms: ellipticity and merging") {
    CHECK_THROWS_AS(EllipticForm(torus(), 0, {{0.1, 1.0}}), DomainError);
    CHECK_THROWS_AS(EllipticForm(torus(), 0, {}, {{0.1, 1, 1.0}}), DomainError);
    const EllipticForm f(torus(), 0, {{Complex(0.2, 0.3), 1.0}, {Complex(1.2, 0.3), 1.0}, {Complex(0.6, 0.5), -2.0}});
    CHECK(f.log_terms().size() == 2);
    CHECK(f.residue_at(Complex(0.2, 0.3) + kTau) == Complex(2.0));
    CHECK(f.poles().size() == 2);
}

TEST_CASE("elliptic forms are doubly periodic") {
    const auto f = torus_third_kind(torus(), Complex(0.2, 0.3), Complex(0.7, 0.8)) +
                   Complex(0.5, -1) * torus_second_kind(torus(), Complex(0.4, 0.1), 3);
    testkit::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const Complex z(rng.uniform(0, 1), rng.uniform(0, 1));
        if (torus()->lattice_distance(z, Complex(0.2, 0.3)) < 0.05 || torus()->lattice_distance(z, Complex(0.7, 0.8)) < 0.05 ||
            torus()->lattice_distance(z, Complex(0.4, 0.1)) < 0.05)
            continue;
        CHECK(std::abs(f(z + 1.0) - f(z)) < 1e-9);
        CHECK(std::abs(f(z + kTau) - f(z)) < 1e-9);
    }
}

TEST_CASE("third and second kind residues by circle quadrature") {
    const Complex p(0.25, 0.35), qq(0.8, 0.6);
    const auto f = torus_third_kind(torus(), p, qq);
    auto ev = [&](Complex z) { return f(z); };
    CHECK(std::abs(testkit::circle_residue(ev, p, 0.1) - 1.0) < 1e-9);
    CHECK(std::abs(testkit::circle_residue(ev, qq, 0.1) + 1.0) < 1e-9);
    CHECK_THROWS_AS(torus_third_kind(torus(), p, p + 1.0), DomainError);
    for (int l : {2, 3, 4}) {
        const auto g = torus_second_kind(torus(), p, l);
        CHECK(g.pole_order(p) == l);
        CHECK(std::abs(testkit::circle_residue([&](Complex z) { return g(z); }, p, 0.1)) < 1e-9);
    }
    CHECK_THROWS_AS(torus_second_kind(torus(), p, 1), DomainError);
}

TEST_CASE("torus prescription and pole-order bound") {
    const auto f = torus_prescribe_residues(torus(), {{Complex(0.1, 0.1), 2.0}, {Complex(0.5, 0.5), -1.0}, {Complex(0.9, 0.2), -1.0}});
    CHECK(f.residue_at(Complex(0.5, 0.5)) == Complex(-1.0));
    CHECK_THROWS_AS(torus_prescribe_residues(torus(), {{Complex(0.1, 0.1), 1.0}}), DomainError);
    CHECK(pole_order_bound_check(f, 0));
    CHECK(pole_order_bound_check(torus_second_kind(torus(), 0.5, 2), 1));
    CHECK_FALSE(pole_order_bound_check(torus_second_kind(torus(), 0.5, 3), 1));
    CHECK(pole_order_bound_check(EllipticForm(torus(), 1.0), 0));
}

TEST_CASE("meromorphic form helpers") {
    const MeromorphicForm a = torus_third_kind(torus(), 0.2, 0.6);
    const MeromorphicForm b = EllipticForm(torus(), 2.0);
    const auto s = add(a, scale(Complex(0, 1), b));
    CHECK(std::abs(evaluate(s, Complex(0.4, 0.4)) - evaluate(a, Complex(0.4, 0.4)) - Complex(0, 2)) < 1e-12);
    CHECK(is_zero(add(a, scale(-1.0, a))));
    CHECK_THROWS_AS(add(a, MeromorphicForm(RationalForm())), DomainError);
}
