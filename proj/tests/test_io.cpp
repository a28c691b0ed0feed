#include <doctest.h>

#include "residuum/error.hpp"
#include "residuum/io/formats.hpp"
#include "support.hpp"

using namespace residuum;
using namespace residuum::io;
using namespace residuum::models;

namespace {

std::string data(const char* name) { return read_file(std::string(RESIDUUM_TEST_DATA) + "/" + name); }

int parse_line(std::string_view text, auto parser) {
    try {
        parser(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("logical lines drop comments and blanks") {
    const auto lines = logical_lines("# header\n\n  0,1  # edge\n\n1,2\n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].number == 3);
    CHECK(lines[0].text == "0,1");
    CHECK(lines[1].number == 5);
}

TEST_CASE("nerve files") {
    const auto full = parse_nerve(data("tetrahedron.txt"));
    CHECK(full.count(0) == 4);
    CHECK(full.count(2) == 4);
    CHECK(parse_nerve(data("triangle.txt")) == parse_nerve(data("triangle_maximal_only.txt"), true));
    CHECK(parse_line(data("malformed.txt"), [](auto t) { parse_nerve(t); }) == 2);
    CHECK_THROWS_AS(parse_nerve("0\n1\n0,1\n0,1\n"), ParseError);  // duplicate simplex
    CHECK_THROWS_AS(parse_nerve("0\n1\n2\n0,1,2\n"), ParseError);  // strict: missing edges
    CHECK_THROWS_AS(parse_nerve("0,2,1\n"), ParseError);
    CHECK_THROWS_AS(parse_nerve("0,1,2,3,4\n", true), ParseError);
    CHECK_THROWS_AS(read_file("/nonexistent/file"), ParseError);
}

TEST_CASE("cochain files") {
    const auto n = parse_nerve("maximal\n0,1,2\n");
    auto c = parse_cochain("degree 1\n0,1 : 1/2\n1,2 : -i\n", n);
    CHECK(c.degree() == 1);
    CHECK(c.at(n, {0, 1}) == ExactComplex::parse("1/2"));
    CHECK(c.at(n, {0, 2}).is_zero());
    CHECK(parse_line("degree 1\n0,1 : 1\n0,1,2 : 1\n", [&](auto t) { parse_cochain(t, n); }) == 3);
    CHECK_THROWS_AS(parse_cochain("0,1 : 1\n", n), ParseError);
}

TEST_CASE("divisor and hodge files") {
    const auto d = parse_divisor(data("sphere_div.txt"));
    CHECK(d.size() == 3);
    CHECK(d.total().is_zero());
    CHECK(parse_line("a : 1\nb 2\n", [](auto t) { parse_divisor(t); }) == 2);
    const auto h = parse_hodge(data("curve.hodge"));
    CHECK(h.b1 == 2);
    CHECK(h.d_omega0 == 1);
    CHECK(h.h01 == 1);
    CHECK_THROWS_AS(parse_hodge("b1 = 2\nh01 = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hodge("b1 = 2\nd_omega0 = x\nh01 = 1\n"), ParseError);
}

TEST_CASE("transition directives") {
    const auto pq = parse_transitions(data("sphere_pq.trans"));
    REQUIRE(pq.size() == 2);
    CHECK(pq[0].component == "p");
    CHECK_FALSE(pq[1].is_abstract());
    CHECK(chern::chern_cocycle(pq[1]) == chern::chern_cocycle(chern::sphere_point_transitions(SpherePoint(0), "x")));

    const auto concrete = parse_transitions(data("sphere_concrete.trans"));
    REQUIRE(concrete.size() == 1);
    const auto& cd = std::get<chern::ConcreteTransitions>(concrete[0].data);
    CHECK(cd.edges.size() == 6);
    CHECK(cd.triple_points.size() == 4);
    const cech::SecondCohomology h2(chern::sphere_cover_nerve());
    CHECK(h2.coordinates(chern::chern_cocycle(concrete[0])) == std::vector<ExactComplex>{1});

    const auto torus = parse_transitions(data("torus_abstract.trans"));
    REQUIRE(torus.size() == 1);
    CHECK(torus[0].is_abstract());
    CHECK(torus[0].nerve == cech::standard_good_nerve("torus"));

    const auto trivial = parse_transitions("nerve sphere\ncomponent w\ntrivial\n");
    CHECK(chern::chern_cocycle(trivial[0]).is_zero());

    const auto inline_nerve = parse_transitions("simplex 0,1,2\nsimplex 0,1,3\nsimplex 0,2,3\nsimplex 1,2,3\nmaximal\n"
                                                "component w\ntriangle 0,1,2 : 1\n");
    CHECK(inline_nerve[0].nerve == chern::sphere_cover_nerve());
}

TEST_CASE("transition errors carry line numbers") {
    auto line = [](std::string_view t) { return parse_line(t, [](auto s) { parse_transitions(s); }); };
    CHECK(line("nerve sphere\ntriangle 0,1,2 : 1\n") == 2);             // directive before a component
    CHECK(line("nerve sphere\ncomponent w\nwobble\n") == 3);
    CHECK(line("nerve klein\ncomponent w\ntrivial\n") == 1);
    CHECK(line("nerve torus\ncomponent w\npoint 0\n") == 2);  // block errors point at the component
    CHECK(line("nerve sphere\ncomponent w\ntriangle 0,1,2 : 1\npoint 0\n") == 2);
    CHECK(line("nerve sphere\ncomponent w\nedge 0,1 : g = 1 / 0 ; base = 1\n") == 3);
    CHECK(line("nerve sphere\ncomponent w\nedge 0,1 : g = 1/1 ; base = 1\n") == 3);  // separator needs spaces
    CHECK(line("nerve sphere\ncomponent w\npath 0,1 | 0,1,2 : 1\n") == 3);            // one point is not a path
    CHECK_THROWS_AS(parse_transitions("nerve sphere\ncomponent w\ntriangle 0,1,2 : 1/2\n"), DomainError);
    CHECK_THROWS_AS(parse_transitions(""), ParseError);
}

TEST_CASE("rational forms round trip") {
    testkit::Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        const auto f = testkit::random_rational_form(rng, 6);
        const auto back = parse_form(write_form(f));
        CHECK(std::get<RationalForm>(back) == f);
    }
    CHECK(std::get<RationalForm>(parse_form(data("sphere_form.txt"))).residue_at(SpherePoint(0)) == ExactComplex(1));
    CHECK(parse_line("1/0, -1, 1\n", [](auto t) { parse_form(t); }) == 1);
    CHECK_THROWS_AS(parse_form("1 / 0, 1\n1 / 1\n"), ParseError);
}

TEST_CASE("elliptic forms round trip") {
    const auto t = std::make_shared<const Torus>(Complex(0.3, 1.1));
    const EllipticForm f = torus_third_kind(t, Complex(0.2, 0.3), Complex(0.6, 0.5)) +
                           Complex(0.25, -1) * torus_second_kind(t, Complex(0.4, 0.1), 3) + EllipticForm(t, Complex(1, 2));
    const auto back = std::get<EllipticForm>(parse_form(write_form(f)));
    for (Complex z : {Complex(0.45, 0.15), Complex(0.8, 0.9), Complex(-0.3, 0.2)}) CHECK(std::abs(back(z) - f(z)) < 1e-12);
    CHECK(back.torus()->tau() == t->tau());
    CHECK_THROWS_AS(parse_form("model torus\ntau = 0.3+1.1i\n1 / 0, 1\n"), ParseError);
    const auto other = std::make_shared<const Torus>(Complex(0, 1));
    CHECK_THROWS_AS(parse_form(write_form(f), other), ParseError);
}

TEST_CASE("gardens round trip") {
    const auto gs = parse_garden(data("sphere.garden"));
    CHECK(gs.l() == 3);
    CHECK(parse_garden(write_garden(gs)) == gs);
    CHECK(parse_garden(write_garden(gs)).basepoint() == gs.basepoint());

    const auto gt = parse_garden(data("torus.garden"));
    CHECK(gt.m() == 2);
    const auto back = parse_garden(write_garden(gt));
    CHECK(back == gt);
    CHECK(std::abs(back.loops()[1].start() - gt.loops()[1].start()) < 1e-15);

    auto custom = gt;
    const Complex b(0.05, 0.8);
    custom.set_loops({LoopPath::segment(b, b + 1.0), LoopPath::segment(b, b + Complex(0.3, 1.1))});
    const auto cback = parse_garden(write_garden(custom));
    CHECK(std::abs(cback.loops()[0].start() - b) < 1e-15);
    CHECK(parse_line("model sphere\ncomponent 0\ncomponent x\n", [](auto t) { parse_garden(t); }) == 3);
    CHECK_THROWS_AS(parse_garden("model sphere\ncomponent 0\ncomponent 0\n"), DomainError);
}

TEST_CASE("pairs round trip and are re-validated") {
    const auto g = parse_garden(data("torus.garden"));
    const auto f = periods::normalize_pure_imaginary(torus_third_kind(g.torus_handle(), Complex(0.2, 0.3), Complex(0.6, 0.5)), g);
    const auto pair = pluri::Pair::from_form(f.form, g);
    const auto back = parse_pair(write_pair(pair));
    CHECK(back.garden() == g);
    CHECK(std::abs(pluri::integrate_pair(back, Complex(0.45, 0.15)) - pluri::integrate_pair(pair, Complex(0.45, 0.15))) < 1e-12);

    const auto gs = parse_garden(data("sphere.garden"));
    const auto sp = pluri::Pair::from_form(sphere_third_kind(SpherePoint(0), SpherePoint(1)), gs);
    std::string text = write_pair(sp);
    CHECK(pluri::pairs_equivalent(parse_pair(text), sp));
    // replacing psi by phi breaks the negation of short periods
    const auto psi = text.find("[psi]");
    REQUIRE(psi != std::string::npos);
    text = text.substr(0, psi) + "[psi]\n" + write_form(scale(-1.0, sp.phi()));
    CHECK_THROWS_AS(parse_pair(text), DomainError);
    CHECK_THROWS_AS(parse_pair("[phi]\n1 / 0, 1\n"), ParseError);
}

TEST_CASE("polynomials") {
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("1, 0, 1/2 i").degree() == 2);
    CHECK_THROWS_AS(parse_polynomial("1, , 2"), ParseError);
}
