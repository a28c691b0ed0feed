#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule (cached per n, thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

struct Segment {
    Complex from;
    Complex to;
};

/// Circular arc center + radius * exp(i theta), theta running from `theta_from` to `theta_to`.
struct Arc {
    Complex center;
    double radius;
    double theta_from;
    double theta_to;
};

using PathPiece = std::variant<Segment, Arc>;

Complex piece_point(const PathPiece& p, double t);       // t in [0, 1]
Complex piece_velocity(const PathPiece& p, double t);    // d/dt
double piece_length(const PathPiece& p);
double distance_to_piece(const PathPiece& p, Complex z);

/// Piecewise smooth path. Constructed paths close exactly (start and end computed from the same data).
class LoopPath {
public:
    LoopPath() = default;
    explicit LoopPath(std::vector<PathPiece> pieces) : pieces_(std::move(pieces)) {}

    static LoopPath circle(Complex center, double radius, bool counterclockwise = true);
    static LoopPath polyline(std::span<const Complex> points);
    static LoopPath segment(Complex from, Complex to);

    const std::vector<PathPiece>& pieces() const { return pieces_; }
    Complex start() const;
    Complex end() const;
    bool closed(double tol = 0.0) const;
    double length() const;
    double distance_to(Complex z) const;
    LoopPath reversed() const;
    LoopPath translated(Complex shift) const;
    /// This path followed by `next`.
    LoopPath then(const LoopPath& next) const;

private:
    std::vector<PathPiece> pieces_;
};

using Integrand = std::function<Complex(Complex)>;

struct QuadratureOptions {
    int panel_nodes = 16;        // nodes per Gauss-Legendre panel
    int max_nodes = 1 << 14;     // cap per path piece
    double tolerance = 1e-10;    // successive doubling difference (scaled by max(1, |I|))
};

/// Integral of f(z) dz along the path by composite Gauss-Legendre, doubling the panel count per
/// piece until successive estimates agree. Throws NumericalError if the cap is reached.
Complex integrate(const LoopPath& path, const Integrand& f, const QuadratureOptions& opts = {});

/// Fixed composite rule: one `nodes`-point panel per piece, refined into `panels` equal panels.
Complex integrate_fixed(const LoopPath& path, const Integrand& f, int nodes, int panels = 1);

}  // namespace residuum
