#include "residuum/models/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "residuum/error.hpp"

namespace residuum::models {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDerivative = 16;
const Complex kI(0, 1);

Complex stable_cot(Complex w) {
    if (w.imag() >= 0) {
        const Complex t = std::exp(2.0 * kI * w);
        return kI * (t + 1.0) / (t - 1.0);
    }
    const Complex s = std::exp(-2.0 * kI * w);
    return kI * (1.0 + s) / (1.0 - s);
}

Complex stable_csc2(Complex w) {
    const Complex t = w.imag() >= 0 ? std::exp(2.0 * kI * w) : std::exp(-2.0 * kI * w);
    return -4.0 * t / ((t - 1.0) * (t - 1.0));
}

Complex eval_real_poly(const std::vector<double>& c, Complex x) {
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

Torus::Torus(Complex tau, int cutoff) : tau_(tau), cutoff_(cutoff) {
    if (!(tau.imag() > 0)) throw DomainError("torus needs Im tau > 0");
    if (cutoff < 1) throw DomainError("lattice cutoff must be >= 1");

    cot_polys_.push_back({0.0, 1.0});
    for (int j = 0; j < kMaxDerivative + 1; ++j) {
        const auto& p = cot_polys_.back();
        // derivative of P in c, times -(1 + c^2)
        std::vector<double> d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
        for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
        std::vector<double> next(d.size() + 2, 0.0);
        for (std::size_t k = 0; k < d.size(); ++k) {
            next[k] -= d[k];
            next[k + 2] -= d[k];
        }
        cot_polys_.push_back(std::move(next));
    }

    g2_ = kPi * kPi / 3.0;
    for (int n = 1; n <= cutoff_; ++n) g2_ += 2.0 * kPi * kPi * stable_csc2(kPi * static_cast<double>(n) * tau_);
    eta1_ = g2_;

    // eta2 is measured, not assumed, so that the Legendre relation is a genuine check.
    const Complex z1 = 0.23 - 0.41 * tau_, z2 = -0.17 - 0.36 * tau_;
    const Complex m1 = zeta_series(z1 + tau_) - zeta_series(z1);
    const Complex m2 = zeta_series(z2 + tau_) - zeta_series(z2);
    eta2_ = 0.5 * (m1 + m2);
    legendre_defect_ = std::max(std::abs(eta1_ * tau_ - eta2_ - 2.0 * kPi * kI), std::abs(m1 - m2));
    if (!(legendre_defect_ < 1e-10))
        throw NumericalError("Legendre relation check failed (defect " + format_real(legendre_defect_, 3) +
                             "); increase the lattice cutoff");
}

double Torus::tail_bound() const { return std::exp(-2.0 * kPi * cutoff_ * tau_.imag()); }

Complex Torus::cot_row_sum(Complex z, int j) const {
    if (j > kMaxDerivative) throw DomainError("Weierstrass derivative order too large");
    const auto& poly = cot_polys_[static_cast<std::size_t>(j)];
    Complex sum = 0;
    // pair rows n and -n so the +-i limits cancel before accumulation
    sum += eval_real_poly(poly, stable_cot(kPi * z));
    for (int n = 1; n <= cutoff_; ++n) {
        const Complex shift = static_cast<double>(n) * tau_;
        sum += eval_real_poly(poly, stable_cot(kPi * (z - shift))) + eval_real_poly(poly, stable_cot(kPi * (z + shift)));
    }
    return std::pow(kPi, j + 1) * sum;
}

Complex Torus::zeta_series(Complex z) const { return cot_row_sum(z, 0) + g2_ * z; }

std::pair<double, double> Torus::lattice_coordinates(Complex z) const {
    const double t = z.imag() / tau_.imag();
    return {z.real() - t * tau_.real(), t};
}

Complex Torus::centered(Complex z, long& a, long& b) const {
    const auto [s, t] = lattice_coordinates(z);
    b = std::lround(t);
    a = std::lround(s);
    return z - static_cast<double>(a) - static_cast<double>(b) * tau_;
}

Complex Torus::reduce(Complex z) const {
    auto [s, t] = lattice_coordinates(z);
    s -= std::floor(s);
    t -= std::floor(t);
    if (s >= 1.0) s = 0.0;
    if (t >= 1.0) t = 0.0;
    return s + t * tau_;
}

double Torus::lattice_distance(Complex z, Complex p) const {
    long a = 0, b = 0;
    const Complex d = centered(z - p, a, b);
    double best = std::abs(d);
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) best = std::min(best, std::abs(d - static_cast<double>(i) - static_cast<double>(j) * tau_));
    return best;
}

std::vector<Complex> Torus::translates_near(Complex p, Complex center, double radius) const {
    std::vector<Complex> out;
    const auto [s0, t0] = lattice_coordinates(center - p);
    const double tspan = radius / tau_.imag() + 1.0;
    const double sspan = radius + std::abs(tau_.real()) * tspan + 1.0;
    for (long b = static_cast<long>(std::floor(t0 - tspan)); b <= static_cast<long>(std::ceil(t0 + tspan)); ++b)
        for (long a = static_cast<long>(std::floor(s0 - sspan)); a <= static_cast<long>(std::ceil(s0 + sspan)); ++a) {
            const Complex w = p + static_cast<double>(a) + static_cast<double>(b) * tau_;
            if (std::abs(w - center) <= radius) out.push_back(w);
        }
    return out;
}

double Torus::shortest_period() const {
    double best = std::numeric_limits<double>::infinity();
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (a || b) best = std::min(best, std::abs(static_cast<double>(a) + static_cast<double>(b) * tau_));
    return best;
}

Complex Torus::zeta(Complex z) const {
    long a = 0, b = 0;
    const Complex w = centered(z, a, b);
    if (lattice_distance(w, 0) < 1e-8) throw DomainError("zeta evaluated within 1e-8 of a lattice point");
    return zeta_series(w) + static_cast<double>(a) * eta1_ + static_cast<double>(b) * eta2_;
}

Complex Torus::wp(Complex z, int k) const {
    if (k < 0) throw DomainError("negative derivative order");
    long a = 0, b = 0;
    const Complex w = centered(z, a, b);
    if (lattice_distance(w, 0) < 1e-8) throw DomainError("wp evaluated within 1e-8 of a lattice point");
    Complex v = -cot_row_sum(w, k + 1);
    if (k == 0) v -= g2_;
    return v;
}

}  // namespace residuum::models
