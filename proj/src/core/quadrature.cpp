#include "residuum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "residuum/error.hpp"

namespace residuum {

namespace {

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = rule.weights[static_cast<std::size_t>(i)];
    }
    return rule;
}

Complex integrate_piece(const PathPiece& piece, const Integrand& f, const GaussLegendreRule& rule, int panels) {
    Complex sum = 0;
    const double h = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = p * h;
        Complex panel = 0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double t = a + 0.5 * h * (rule.nodes[k] + 1.0);
            panel += rule.weights[k] * f(piece_point(piece, t)) * piece_velocity(piece, t);
        }
        sum += 0.5 * h * panel;
    }
    return sum;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(n));
    return *slot;
}

Complex piece_point(const PathPiece& p, double t) {
    if (const auto* s = std::get_if<Segment>(&p)) return s->from + t * (s->to - s->from);
    const auto& a = std::get<Arc>(p);
    // whole turns end exactly where they started
    if (t == 1.0 && std::abs(std::remainder(a.theta_to - a.theta_from, 2 * std::numbers::pi)) < 1e-12)
        return a.center + std::polar(a.radius, a.theta_from);
    const double th = a.theta_from + t * (a.theta_to - a.theta_from);
    return a.center + std::polar(a.radius, th);
}

Complex piece_velocity(const PathPiece& p, double t) {
    if (const auto* s = std::get_if<Segment>(&p)) return s->to - s->from;
    const auto& a = std::get<Arc>(p);
    const double dth = a.theta_to - a.theta_from;
    const double th = a.theta_from + t * dth;
    return Complex(0, 1) * std::polar(a.radius, th) * dth;
}

double piece_length(const PathPiece& p) {
    if (const auto* s = std::get_if<Segment>(&p)) return std::abs(s->to - s->from);
    const auto& a = std::get<Arc>(p);
    return a.radius * std::abs(a.theta_to - a.theta_from);
}

double distance_to_piece(const PathPiece& p, Complex z) {
    if (const auto* s = std::get_if<Segment>(&p)) {
        const Complex d = s->to - s->from;
        const double len2 = std::norm(d);
        double t = len2 == 0 ? 0.0 : ((z - s->from) * std::conj(d)).real() / len2;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(z - (s->from + t * d));
    }
    const auto& a = std::get<Arc>(p);
    const Complex rel = z - a.center;
    const double lo = std::min(a.theta_from, a.theta_to), hi = std::max(a.theta_from, a.theta_to);
    if (std::abs(rel) > 0) {
        // does the ray through z hit the arc's angular range?
        const double ang = std::arg(rel);
        const double two_pi = 2 * std::numbers::pi;
        double k = std::ceil((lo - ang) / two_pi);
        if (ang + k * two_pi <= hi) return std::abs(std::abs(rel) - a.radius);
    }
    return std::min(std::abs(z - piece_point(p, 0.0)), std::abs(z - piece_point(p, 1.0)));
}

LoopPath LoopPath::circle(Complex center, double radius, bool counterclockwise) {
    const double two_pi = 2 * std::numbers::pi;
    return LoopPath({Arc{center, radius, 0.0, counterclockwise ? two_pi : -two_pi}});
}

LoopPath LoopPath::polyline(std::span<const Complex> points) {
    std::vector<PathPiece> pieces;
    for (std::size_t i = 1; i < points.size(); ++i) pieces.emplace_back(Segment{points[i - 1], points[i]});
    return LoopPath(std::move(pieces));
}

LoopPath LoopPath::segment(Complex from, Complex to) { return LoopPath({Segment{from, to}}); }

Complex LoopPath::start() const {
    if (pieces_.empty()) throw DomainError("empty path");
    return piece_point(pieces_.front(), 0.0);
}

Complex LoopPath::end() const {
    if (pieces_.empty()) throw DomainError("empty path");
    return piece_point(pieces_.back(), 1.0);
}

bool LoopPath::closed(double tol) const { return !pieces_.empty() && std::abs(end() - start()) <= tol; }

double LoopPath::length() const {
    double l = 0;
    for (const auto& p : pieces_) l += piece_length(p);
    return l;
}

double LoopPath::distance_to(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& p : pieces_) d = std::min(d, distance_to_piece(p, z));
    return d;
}

LoopPath LoopPath::reversed() const {
    std::vector<PathPiece> out;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
        if (const auto* s = std::get_if<Segment>(&*it)) out.emplace_back(Segment{s->to, s->from});
        else {
            const auto& a = std::get<Arc>(*it);
            out.emplace_back(Arc{a.center, a.radius, a.theta_to, a.theta_from});
        }
    }
    return LoopPath(std::move(out));
}

LoopPath LoopPath::translated(Complex shift) const {
    std::vector<PathPiece> out;
    for (const auto& p : pieces_) {
        if (const auto* s = std::get_if<Segment>(&p)) out.emplace_back(Segment{s->from + shift, s->to + shift});
        else {
            auto a = std::get<Arc>(p);
            a.center += shift;
            out.emplace_back(a);
        }
    }
    return LoopPath(std::move(out));
}

LoopPath LoopPath::then(const LoopPath& next) const {
    std::vector<PathPiece> out = pieces_;
    out.insert(out.end(), next.pieces_.begin(), next.pieces_.end());
    return LoopPath(std::move(out));
}

Complex integrate(const LoopPath& path, const Integrand& f, const QuadratureOptions& opts) {
    const GaussLegendreRule& rule = gauss_legendre(opts.panel_nodes);
    Complex total = 0;
    for (const auto& piece : path.pieces()) {
        int panels = 1;
        Complex prev = integrate_piece(piece, f, rule, panels);
        for (;;) {
            panels *= 2;
            if (panels * opts.panel_nodes > opts.max_nodes)
                throw NumericalError("contour quadrature did not converge within " + std::to_string(opts.max_nodes) +
                                     " nodes");
            const Complex next = integrate_piece(piece, f, rule, panels);
            const bool ok = std::abs(next - prev) < opts.tolerance * std::max(1.0, std::abs(next));
            if (!std::isfinite(std::abs(next))) throw NumericalError("non-finite integrand on contour");
            prev = next;
            if (ok) break;
        }
        total += prev;
    }
    return total;
}

Complex integrate_fixed(const LoopPath& path, const Integrand& f, int nodes, int panels) {
    const GaussLegendreRule& rule = gauss_legendre(nodes);
    Complex total = 0;
    for (const auto& piece : path.pieces()) total += integrate_piece(piece, f, rule, panels);
    return total;
}

}  // namespace residuum
