#include <doctest.h>

#include "residuum/cech/cohomology.hpp"
#include "residuum/chern/chern.hpp"
#include "residuum/error.hpp"
#include "support.hpp"

using namespace residuum;
using namespace residuum::chern;
using models::SpherePoint;

namespace {

ExactComplex q(const char* s) { return ExactComplex::parse(s); }

// Pairing with the fundamental cycle d[0123] = [123] - [023] + [013] - [012] of the tetrahedron.
ExactComplex fundamental_pairing(const cech::Cochain& c) {
    const auto n = sphere_cover_nerve();
    const std::vector<std::pair<cech::Simplex, int>> cycle{{{1, 2, 3}, 1}, {{0, 2, 3}, -1}, {{0, 1, 3}, 1}, {{0, 1, 2}, -1}};
    ExactComplex s;
    for (const auto& [t, sign] : cycle) s += ExactComplex(sign) * c[static_cast<std::size_t>(*n.index_of(t))];
    return s;
}

TransitionData point(const char* p, const char* name) { return sphere_point_transitions(SpherePoint::parse(p), name); }

}  // namespace

TEST_CASE("divisor bookkeeping") {
    const CDivisor d({"a", "b"}, {q("1/2"), q("-1/2 + i")});
    CHECK(d.total() == q("i"));
    CHECK(d.index_of("b") == 1u);
    CHECK_FALSE(d.index_of("c").has_value());
    CHECK_THROWS_AS(CDivisor({"a", "a"}, {1, 2}), DomainError);
    CHECK_THROWS_AS(CDivisor({"a"}, {1, 2}), DomainError);
}

TEST_CASE("trivial transitions give the zero cocycle") {
    CHECK(chern_cocycle(sphere_trivial_transitions("w")).is_zero());
}

TEST_CASE("point divisors pair to one with the fundamental cycle") {
    for (const char* p : {"0", "1/3 + 1/5 i", "3", "-3 + 2i", "2 - 3i", "inf"}) {
        const auto c = chern_cocycle(point(p, "w"));
        const auto pairing = fundamental_pairing(c);
        CHECK((pairing == ExactComplex(1) || pairing == ExactComplex(-1)));
        // every point class is the same class, so orientation is uniform
        CHECK(pairing == fundamental_pairing(chern_cocycle(point("0", "w"))));
        const cech::SecondCohomology h(sphere_cover_nerve());
        CHECK(h.coordinates(c) == std::vector<ExactComplex>{1});
    }
}

TEST_CASE("points in cover overlaps are rejected") {
    // on the edge of the central triangle
    CHECK_THROWS_AS(point("0 - 1i", "w"), DomainError);
    CHECK_THROWS_AS(point("100", "w"), DomainError);
}

TEST_CASE("winding integers are stable under refinement") {
    const auto td = point("1/3 + 1/5 i", "w");
    CHECK(chern_cocycle(td, 64) == chern_cocycle(td, 128));
    for (const auto& v : chern_cocycle_raw(td, 64)) CHECK(std::abs(v - std::round(v.real())) < 1e-6);
}

TEST_CASE("abstract transitions are validated") {
    const auto n = cech::Nerve::validate({{0, 1, 2, 3}}, cech::Closure::maximal);
    cech::Cochain c(n, 2);
    c[0] = 1;
    CHECK_THROWS_AS(validate(TransitionData{n, "w", AbstractTransitions{c}}), DomainError);
    const auto s = sphere_cover_nerve();
    cech::Cochain half(s, 2);
    half[0] = q("1/2");
    CHECK_THROWS_AS(validate(TransitionData{s, "w", AbstractTransitions{half}}), DomainError);
    cech::Cochain ok(s, 2);
    ok[1] = 3;
    CHECK(chern_cocycle(TransitionData{s, "w", AbstractTransitions{ok}}) == ok);
}

TEST_CASE("concrete transitions violating the cocycle condition are rejected") {
    auto td = point("0", "w");
    auto& c = std::get<ConcreteTransitions>(td.data);
    c.edges[0].g.numerator = Polynomial(std::vector<ExactComplex>{2});
    CHECK_THROWS_AS(validate(td), DomainError);
    auto missing = point("0", "w");
    std::get<ConcreteTransitions>(missing.data).triple_points.clear();
    CHECK_THROWS_AS(validate(missing), DomainError);
}

TEST_CASE("double delta on the sphere") {
    const std::vector<TransitionData> tds{point("0", "p"), point("1/2 + 1/3 i", "q")};
    CHECK(double_delta(CDivisor(), {}).is_zero());
    CHECK(double_delta(CDivisor({"p", "q"}, {0, 0}), tds).is_zero());
    const auto single = double_delta(CDivisor({"p"}, {1}), tds);
    CHECK(single.coordinates == std::vector<ExactComplex>{1});
    CHECK_FALSE(single.witness.has_value());
    const auto diff = double_delta(CDivisor({"p", "q"}, {1, -1}), tds);
    CHECK(diff.is_zero());
    REQUIRE(diff.witness.has_value());
    CHECK(cech::coboundary(sphere_cover_nerve(), *diff.witness) == diff.cocycle);
    CHECK_THROWS_AS(double_delta(CDivisor({"r"}, {1}), tds), DomainError);
}

TEST_CASE("double delta is linear") {
    const std::vector<TransitionData> tds{point("0", "a"), point("3", "b"), point("inf", "c")};
    const CDivisor d1({"a", "b", "c"}, {q("1/2"), q("i"), 2});
    const CDivisor d2({"a", "b", "c"}, {q("-3"), q("1/7"), q("2 - i")});
    const ExactComplex alpha = q("2/3 + i"), beta = q("-5");
    std::vector<ExactComplex> mix;
    for (int i = 0; i < 3; ++i) mix.push_back(alpha * d1.coefficients()[i] + beta * d2.coefficients()[i]);
    const auto lhs = double_delta(CDivisor(d1.names(), mix), tds).coordinates;
    const auto c1 = double_delta(d1, tds).coordinates, c2 = double_delta(d2, tds).coordinates;
    CHECK(lhs[0] == alpha * c1[0] + beta * c2[0]);
}

TEST_CASE("nerve mismatch is rejected") {
    const auto torus_nerve = cech::standard_good_nerve("torus");
    const TransitionData t{torus_nerve, "t", AbstractTransitions{abstract_point_class(torus_nerve)}};
    CHECK_THROWS_AS(double_delta(CDivisor({"p", "t"}, {1, 1}), {point("0", "p"), t}), DomainError);
}

TEST_CASE("feasibility verdicts") {
    const std::vector<TransitionData> tds{point("0", "p"), point("1/2 + 1/3 i", "q")};
    const HodgeRecord curve{2, 1, 1, 1}, sphere{0, 0, 0, 1}, non_h{3, 1, 3, 0};
    CHECK(residue_feasible(CDivisor({"p"}, {1}), tds, sphere).verdict == Verdict::infeasible);
    CHECK(residue_feasible(CDivisor({"p", "q"}, {1, -1}), tds, sphere).verdict == Verdict::feasible);
    CHECK(residue_feasible(CDivisor({"p", "q"}, {1, -1}), tds, curve).verdict == Verdict::feasible);
    CHECK(residue_feasible(CDivisor({"p", "q"}, {1, -1}), tds, non_h).verdict == Verdict::inconclusive);
    CHECK(std::string(to_string(Verdict::inconclusive)) == "inconclusive");
}

TEST_CASE("property (H)") {
    CHECK(has_property_h({4, 2, 2, 0}));
    CHECK_FALSE(has_property_h({3, 1, 1, 0}));
    CHECK(has_property_h({2, 1, 1, 1}));
    CHECK(is_consistent({4, 2, 2, 0}));
    CHECK_FALSE(is_consistent({3, 1, 1, 0}));
    CHECK(is_consistent({3, 1, 3, 0}));
}

TEST_CASE("kernel dimension dichotomy") {
    CHECK(kernel_dimension(std::vector<TransitionData>{}) == 0);
    for (const char* tag : {"sphere", "torus"}) {
        const auto n = cech::standard_good_nerve(tag);
        const auto c = abstract_point_class(n);
        for (int l = 1; l <= 4; ++l) {
            CHECK(kernel_dimension(n, std::vector<cech::Cochain>(static_cast<std::size_t>(l), c)) == l - 1);
            CHECK(kernel_dimension(n, std::vector<cech::Cochain>(static_cast<std::size_t>(l), cech::Cochain(n, 2))) == l);
        }
    }
    // two independent classes on a disjoint union of two spheres
    const auto two = cech::Nerve::validate({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}},
                                           cech::Closure::maximal);
    cech::Cochain a(two, 2), b(two, 2);
    a.at(two, {0, 1, 2}) = 1;
    b.at(two, {4, 5, 6}) = 1;
    CHECK(kernel_dimension(two, {a, b}) == 0);
    CHECK(kernel_dimension(two, {a, b, a + b}) == 1);
    const std::vector<TransitionData> tds{point("0", "p"), point("3", "q"), sphere_trivial_transitions("r")};
    CHECK(kernel_dimension(tds) == 2);
}
