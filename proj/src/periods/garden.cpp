#include "residuum/periods/garden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "residuum/error.hpp"

namespace residuum::periods {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Disk containing the path, from dense samples plus slack.
std::pair<Complex, double> bounding_disk(const LoopPath& path) {
    std::vector<Complex> pts;
    for (const auto& piece : path.pieces())
        for (int k = 0; k <= 32; ++k) pts.push_back(piece_point(piece, k / 32.0));
    Complex lo = pts.front(), hi = pts.front();
    for (const auto& p : pts) {
        lo = {std::min(lo.real(), p.real()), std::min(lo.imag(), p.imag())};
        hi = {std::max(hi.real(), p.real()), std::max(hi.imag(), p.imag())};
    }
    const Complex c = 0.5 * (lo + hi);
    return {c, 0.5 * std::abs(hi - lo) + 0.5};
}

}  // namespace

Garden Garden::sphere(std::vector<models::SpherePoint> points, std::optional<Complex> basepoint) {
    Garden g;
    g.model_ = Model::sphere;
    for (auto& p : points) {
        if (g.find_component(p)) throw DomainError("duplicate garden component " + p.str());
        Component c{p.str(), p, p.is_infinity() ? Complex(0) : p.value().to_complex()};
        g.components_.push_back(std::move(c));
    }
    g.build_circles();
    if (basepoint) {
        g.set_basepoint(*basepoint);
    } else {
        double extent = 1.0;
        for (const auto& c : g.components_)
            if (!c.at_infinity()) extent = std::max(extent, std::abs(c.z) + 1.0);
        Complex best = 0;
        double best_score = -1;
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j) {
                const Complex z(-extent + 2 * extent * i / 40.0, -extent + 2 * extent * j / 40.0);
                const double score = std::min(g.distance_to_components(z), 1.0) - 1e-3 * std::abs(z);
                if (score > best_score) {
                    best_score = score;
                    best = z;
                }
            }
        g.basepoint_ = best;
    }
    return g;
}

Garden Garden::torus(models::TorusHandle torus, std::vector<Complex> points, std::optional<Complex> loop_base) {
    if (!torus) throw DomainError("torus garden without a torus");
    Garden g;
    g.model_ = Model::torus;
    g.torus_ = std::move(torus);
    for (const auto& p : points) {
        const Complex r = g.torus_->reduce(p);
        if (g.find_component(r)) throw DomainError("duplicate garden component " + format_complex(r, 6));
        g.components_.push_back({format_complex(r, 17), std::nullopt, r});
    }
    g.build_circles();
    const Complex tau = g.torus_->tau();
    Complex z0;
    if (loop_base) {
        z0 = *loop_base;
    } else {
        double best = -1;
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j) {
                const Complex cand = (i + 0.5) / 24.0 + (j + 0.5) / 24.0 * tau;
                const double c = std::min(g.clearance(LoopPath::segment(cand, cand + 1.0)),
                                          g.clearance(LoopPath::segment(cand, cand + tau)));
                if (c > best + 1e-12) {
                    best = c;
                    z0 = cand;
                }
            }
    }
    g.set_loops({LoopPath::segment(z0, z0 + 1.0), LoopPath::segment(z0, z0 + tau)});
    g.set_basepoint(z0);
    return g;
}

void Garden::build_circles() {
    circles_.clear();
    double outer = 0;
    for (const auto& c : components_)
        if (!c.at_infinity()) outer = std::max(outer, std::abs(c.z));
    for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto& c = components_[j];
        if (c.at_infinity()) {
            circles_.push_back(LoopPath::circle(0, 2 * outer + 1, false));
            continue;
        }
        double d = kInf;
        for (std::size_t k = 0; k < components_.size(); ++k) {
            if (k == j || components_[k].at_infinity()) continue;
            d = std::min(d, model_ == Model::torus ? torus_->lattice_distance(c.z, components_[k].z)
                                                   : std::abs(c.z - components_[k].z));
        }
        if (model_ == Model::torus) d = std::min(d, torus_->shortest_period());
        const double r = std::isfinite(d) ? 0.5 * d : 0.5;
        circles_.push_back(LoopPath::circle(c.z, std::min(r, 1.0)));
    }
}

void Garden::set_loops(std::vector<LoopPath> loops) {
    for (const auto& loop : loops) {
        if (loop.pieces().empty()) throw DomainError("empty loop");
        const Complex gap = loop.end() - loop.start();
        if (model_ == Model::sphere) {
            if (std::abs(gap) > 1e-12) throw DomainError("loop is not closed");
        } else {
            const auto [s, t] = torus_->lattice_coordinates(gap);
            if (std::abs(s - std::round(s)) > 1e-9 || std::abs(t - std::round(t)) > 1e-9)
                throw DomainError("loop does not close on the torus");
        }
        if (clearance(loop) < margin_) throw DomainError("loop passes within the pole margin");
    }
    loops_ = std::move(loops);
}

void Garden::set_basepoint(Complex p) {
    if (distance_to_components(p) < margin_) throw DomainError("basepoint lies within the pole margin");
    basepoint_ = p;
}

std::optional<int> Garden::find_component(Complex p) const {
    for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto& c = components_[j];
        if (c.at_infinity()) continue;
        const double d = model_ == Model::torus ? torus_->lattice_distance(c.z, p) : std::abs(c.z - p);
        if (d < models::kPoleIdentityTolerance) return static_cast<int>(j);
    }
    return std::nullopt;
}

std::optional<int> Garden::find_component(const models::SpherePoint& p) const {
    for (std::size_t j = 0; j < components_.size(); ++j)
        if (components_[j].sphere_point && *components_[j].sphere_point == p) return static_cast<int>(j);
    return std::nullopt;
}

double Garden::distance_to_components(Complex z) const {
    double d = kInf;
    for (const auto& c : components_) {
        if (c.at_infinity()) continue;
        d = std::min(d, model_ == Model::torus ? torus_->lattice_distance(z, c.z) : std::abs(z - c.z));
    }
    return d;
}

double Garden::clearance(const LoopPath& path) const {
    double d = kInf;
    if (model_ == Model::sphere) {
        for (const auto& c : components_)
            if (!c.at_infinity()) d = std::min(d, path.distance_to(c.z));
        return d;
    }
    const auto [center, radius] = bounding_disk(path);
    for (const auto& c : components_)
        for (const auto& w : torus_->translates_near(c.z, center, radius + 1.0)) d = std::min(d, path.distance_to(w));
    return d;
}

bool operator==(const Garden& a, const Garden& b) {
    if (a.model_ != b.model_ || a.components_.size() != b.components_.size()) return false;
    if (a.model_ == Model::torus && (a.torus_->tau() != b.torus_->tau() || a.torus_->cutoff() != b.torus_->cutoff()))
        return false;
    for (std::size_t j = 0; j < a.components_.size(); ++j) {
        const auto& x = a.components_[j];
        const auto& y = b.components_[j];
        if (x.sphere_point != y.sphere_point) return false;
        if (!x.sphere_point && std::abs(x.z - y.z) > models::kPoleIdentityTolerance) return false;
    }
    return true;
}

}  // namespace residuum::periods
