#include "residuum/chern/transition.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "residuum/cech/cohomology.hpp"
#include "residuum/error.hpp"

namespace residuum::chern {

CDivisor::CDivisor(std::vector<std::string> names, std::vector<ExactComplex> coefficients)
    : names_(std::move(names)), coefficients_(std::move(coefficients)) {
    if (names_.size() != coefficients_.size()) throw DomainError("divisor names and coefficients differ in length");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw DomainError("duplicate divisor component '" + n + "'");
}

ExactComplex CDivisor::total() const {
    ExactComplex s;
    for (const auto& a : coefficients_) s += a;
    return s;
}

std::optional<std::size_t> CDivisor::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

namespace {

std::string simplex_str(const cech::Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

bool is_integer(const ExactComplex& v) { return v.is_real() && v.re().get_den() == 1; }

const ConcreteEdge* find_edge(const ConcreteTransitions& c, const cech::Simplex& e) {
    for (const auto& rec : c.edges)
        if (rec.edge == e) return &rec;
    return nullptr;
}

}  // namespace

void validate(const TransitionData& td) {
    const auto& nerve = td.nerve;
    if (const auto* a = std::get_if<AbstractTransitions>(&td.data)) {
        if (a->integers.degree() != 2) throw DomainError("abstract transition data must be a 2-cochain");
        a->integers.check_belongs(nerve);
        for (const auto& v : a->integers.values())
            if (!is_integer(v)) throw DomainError("abstract transition data must be integers, got " + v.str());
        if (nerve.count(3) > 0 && !cech::coboundary(nerve, a->integers).is_zero())
            throw DomainError("supplied integers are not a 2-cocycle (coboundary is nonzero)");
        return;
    }
    const auto& c = std::get<ConcreteTransitions>(td.data);
    for (const auto& rec : c.edges)
        if (rec.edge.size() != 2 || !nerve.index_of(rec.edge))
            throw DomainError("transition record for " + simplex_str(rec.edge) + ", which is not an edge of the nerve");
    for (const auto& e : nerve.simplices(1)) {
        int n = 0;
        for (const auto& rec : c.edges) n += rec.edge == e ? 1 : 0;
        if (n != 1) throw DomainError("edge " + simplex_str(e) + " needs exactly one transition record");
    }
    for (const auto& t : nerve.simplices(2)) {
        const auto x = c.triple_points.find(t);
        if (x == c.triple_points.end()) throw DomainError("triangle " + simplex_str(t) + " has no triple point");
        const cech::Simplex ij{t[0], t[1]}, ik{t[0], t[2]}, jk{t[1], t[2]};
        for (const auto& e : {ij, ik, jk}) {
            const auto* rec = find_edge(c, e);
            const auto p = rec->paths.find(t);
            if (p == rec->paths.end())
                throw DomainError("edge " + simplex_str(e) + " has no path to triangle " + simplex_str(t));
            if (std::abs(p->second.start() - rec->base) > 1e-12 || std::abs(p->second.end() - x->second) > 1e-12)
                throw DomainError("path on edge " + simplex_str(e) + " must run from its base point to the triple point");
        }
        const auto& gij = find_edge(c, ij)->g;
        const auto& gik = find_edge(c, ik)->g;
        const auto& gjk = find_edge(c, jk)->g;
        // g_ij g_jk = g_ik, cross-multiplied
        const Polynomial lhs = gij.numerator * gjk.numerator * gik.denominator;
        const Polynomial rhs = gik.numerator * gij.denominator * gjk.denominator;
        if (lhs != rhs) throw DomainError("cocycle condition g_ij g_jk = g_ik fails on " + simplex_str(t));
        const Complex z = x->second;
        if (std::abs(gij(z) * gjk(z) - gik(z)) > 1e-9 * std::max(1.0, std::abs(gik(z))))
            throw DomainError("cocycle condition fails numerically at the triple point of " + simplex_str(t));
    }
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTriangleRadius = 2.0;
constexpr double kBand = 0.25;
constexpr double kFarRadius = 60.0;
constexpr double kFarAngle = 0.3;
constexpr double kMaxSectorRadius = 25.0;

double ray_angle(int k) { return kPi / 2 + 2 * kPi * ((k % 3 + 3) % 3) / 3.0; }
Complex vertex(int k) { return std::polar(kTriangleRadius, ray_angle(k)); }
int sector_label(int k) { return (k % 3 + 3) % 3 + 1; }

double wrap_angle(double a) {
    const double two_pi = 2 * kPi;
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
    return a;
}

double distance_to_ray(Complex p, double phi) {
    const double d = wrap_angle(std::arg(p) - phi);
    const double delta = std::min(d, 2 * kPi - d);
    return delta >= kPi / 2 ? std::abs(p) : std::abs(p) * std::sin(delta);
}

// Signed distance from p to the line of edge E_k, positive inside the triangle.
double inside_distance(Complex p, int k) {
    const Complex a = vertex(k), b = vertex(k + 1);
    return (std::conj(b - a) * (p - a)).imag() / std::abs(b - a);
}

// 0 for T, k+1 for sector S_k.
int home_set(const ExactComplex& point) {
    const Complex p = point.to_complex();
    bool in_triangle = true;
    for (int k = 0; k < 3; ++k) in_triangle = in_triangle && inside_distance(p, k) > kBand;
    if (in_triangle) return 0;
    if (std::abs(p) > 0 && std::abs(p) < kMaxSectorRadius) {
        for (int k = 0; k < 3; ++k) {
            const double alpha = wrap_angle(std::arg(p) - ray_angle(k));
            if (alpha <= 0 || alpha >= 2 * kPi / 3) continue;
            if (distance_to_ray(p, ray_angle(k)) > kBand && distance_to_ray(p, ray_angle(k + 1)) > kBand &&
                inside_distance(p, k) < -kBand)
                return sector_label(k);
        }
    }
    throw DomainError("point " + point.str() +
                      " lies in an overlap of the tetrahedral sphere cover (or beyond |z| = 25); "
                      "move it or use abstract transition data");
}

LoopPath far_arc(Complex from_on_circle_angle_point, double to_angle) {
    const double from = std::arg(from_on_circle_angle_point);
    double d = std::remainder(to_angle - from, 2 * kPi);
    return LoopPath({Arc{0, kFarRadius, from, from + d}});
}

// Shared geometry with f_i given per cover set.
TransitionData build_sphere_transitions(const std::vector<RationalFunction>& f, std::string component) {
    TransitionData td{sphere_cover_nerve(), std::move(component), ConcreteTransitions{}};
    auto& c = std::get<ConcreteTransitions>(td.data);
    const Complex far_point = std::polar(kFarRadius, kFarAngle);
    for (int k = 0; k < 3; ++k) {
        // T cap S_{k-1} cap S_k meets at v_k
        cech::Simplex t{0, sector_label(k - 1), sector_label(k)};
        std::sort(t.begin(), t.end());
        c.triple_points[t] = vertex(k);
    }
    c.triple_points[{1, 2, 3}] = far_point;

    auto g = [&](int i, int j) {
        return RationalFunction{f[static_cast<std::size_t>(i)].numerator * f[static_cast<std::size_t>(j)].denominator,
                                f[static_cast<std::size_t>(i)].denominator * f[static_cast<std::size_t>(j)].numerator};
    };
    auto triangle = [](int a, int b, int d) {
        cech::Simplex t{a, b, d};
        std::sort(t.begin(), t.end());
        return t;
    };
    for (int k = 0; k < 3; ++k) {
        // edge T - S_k, based at the midpoint of E_k; runs along E_k to v_k and v_{k+1}
        const int s = sector_label(k);
        ConcreteEdge e{{0, s}, g(0, s), 0.5 * (vertex(k) + vertex(k + 1)), {}};
        e.paths[triangle(0, sector_label(k - 1), s)] = LoopPath::segment(e.base, vertex(k));
        e.paths[triangle(0, s, sector_label(k + 1))] = LoopPath::segment(e.base, vertex(k + 1));
        c.edges.push_back(std::move(e));
    }
    for (int k = 0; k < 3; ++k) {
        // edge S_{k-1} - S_k around the ray through v_k
        int a = sector_label(k - 1), b = sector_label(k);
        if (a > b) std::swap(a, b);
        ConcreteEdge e{{a, b}, g(a, b), 1.5 * vertex(k), {}};
        e.paths[triangle(0, a, b)] = LoopPath::segment(e.base, vertex(k));
        const Complex out = std::polar(kFarRadius, ray_angle(k));
        LoopPath to_far = LoopPath::segment(e.base, out).then(far_arc(out, kFarAngle));
        // snap the arc end exactly onto the stored triple point
        auto pieces = to_far.pieces();
        pieces.push_back(Segment{to_far.end(), far_point});
        e.paths[{1, 2, 3}] = LoopPath(std::move(pieces));
        c.edges.push_back(std::move(e));
    }
    std::sort(c.edges.begin(), c.edges.end(), [](const auto& x, const auto& y) { return x.edge < y.edge; });
    validate(td);
    return td;
}

RationalFunction constant_one() { return RationalFunction{}; }

}  // namespace

cech::Nerve sphere_cover_nerve() { return cech::standard_good_nerve("sphere"); }

TransitionData sphere_point_transitions(const models::SpherePoint& p, std::string component) {
    std::vector<RationalFunction> f(4, constant_one());
    const Polynomial z = Polynomial::monomial(ExactComplex(1), 1);
    if (p.is_infinity()) {
        for (int s = 1; s <= 3; ++s) f[static_cast<std::size_t>(s)] = RationalFunction{Polynomial(ExactComplex(1)), z};
    } else {
        const int home = home_set(p.value());
        if (home == 0) f[0] = RationalFunction{Polynomial::linear(p.value()), Polynomial(ExactComplex(1))};
        else f[static_cast<std::size_t>(home)] = RationalFunction{Polynomial::linear(p.value()), z};
    }
    return build_sphere_transitions(f, std::move(component));
}

TransitionData sphere_trivial_transitions(std::string component) {
    return build_sphere_transitions(std::vector<RationalFunction>(4, constant_one()), std::move(component));
}

cech::Cochain abstract_point_class(const cech::Nerve& nerve) {
    const cech::SecondCohomology h(nerve);
    if (h.dimension() != 1) throw DomainError("point class needs a nerve with one-dimensional H^2");
    const auto& z = h.cycles().front();
    cech::Cochain c(nerve, 2);
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!z[i].is_zero()) {
            c[i] = ExactComplex(1) / z[i];
            break;
        }
    return c;
}

}  // namespace residuum::chern
