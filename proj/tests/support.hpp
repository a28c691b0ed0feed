#pragma once

// Shared helpers for the test suites: seeded generators and independent numerical oracles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "residuum/models/elliptic.hpp"
#include "residuum/pluriharmonic/pair.hpp"

namespace testkit {

using residuum::Complex;
using residuum::ExactComplex;
using residuum::Polynomial;
using residuum::Rational;

inline constexpr double kPi = std::numbers::pi;
inline const Complex kTwoPiI(0, 2 * std::numbers::pi);

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform() { return residuum::pluri::unit_uniform(engine()); }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int integer(int lo, int hi) { return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1)); }
    // small Gaussian rational with denominators up to `den`
    ExactComplex gaussian_rational(int num = 6, int den = 4) {
        Rational re(integer(-num, num), integer(1, den));
        Rational im(integer(-num, num), integer(1, den));
        re.canonicalize();
        im.canonicalize();
        return ExactComplex(re, im);
    }
};

// Random reduced-or-not rational form f dz with total degree (numerator + denominator) <= max_degree.
inline residuum::models::RationalForm random_rational_form(Rng& rng, int max_degree = 8) {
    const int den_degree = rng.integer(0, max_degree / 2 + 1);
    Polynomial den(ExactComplex(1));
    int used = 0;
    while (used < den_degree) {
        const int k = std::min(rng.integer(1, 3), den_degree - used);
        den = den * Polynomial::linear_power(rng.gaussian_rational(), k);
        used += k;
    }
    const int num_degree = rng.integer(0, max_degree - den_degree);
    std::vector<ExactComplex> c;
    for (int i = 0; i <= num_degree; ++i) c.push_back(rng.gaussian_rational(9, 5));
    if (c.back().is_zero()) c.back() = ExactComplex(1);
    return residuum::models::RationalForm(Polynomial(c), den);
}

// Residue by the trapezoid rule on a circle (spectrally accurate for analytic integrands).
template <class F>
Complex circle_residue(F&& f, Complex center, double radius, int n = 512) {
    Complex sum = 0;
    for (int k = 0; k < n; ++k) {
        const Complex w = std::polar(1.0, 2 * kPi * k / n);
        sum += f(center + radius * w) * radius * w;
    }
    return sum / static_cast<double>(n);
}

// Weierstrass zeta for the lattice Z + tau Z through the Jacobi theta function theta_1.
struct ThetaOracle {
    Complex tau;
    Complex q;
    explicit ThetaOracle(Complex t) : tau(t), q(std::exp(Complex(0, kPi) * t)) {}

    // d^k/dv^k theta_1(v)
    Complex theta1(Complex v, int k) const {
        Complex s = 0;
        for (int n = 0; n < 40; ++n) {
            const double m = 2 * n + 1;
            const Complex qn = std::pow(q, (n + 0.5) * (n + 0.5));
            Complex trig;
            switch (k % 4) {
                case 0: trig = std::sin(m * v); break;
                case 1: trig = std::cos(m * v); break;
                case 2: trig = -std::sin(m * v); break;
                default: trig = -std::cos(m * v); break;
            }
            s += (n % 2 ? -1.0 : 1.0) * qn * std::pow(m, k) * trig;
        }
        return 2.0 * s;
    }
    Complex eta1() const { return -kPi * kPi * theta1(0, 3) / (3.0 * theta1(0, 1)); }
    Complex zeta(Complex z) const {
        const Complex v = kPi * z;
        return eta1() * z + kPi * theta1(v, 1) / theta1(v, 0);
    }
    Complex wp(Complex z) const {
        const Complex v = kPi * z;
        const Complex t = theta1(v, 0), t1 = theta1(v, 1), t2 = theta1(v, 2);
        return -eta1() - kPi * kPi * (t2 * t - t1 * t1) / (t * t);
    }
};

// Rank of a small dense real matrix by Gaussian elimination with partial pivoting.
inline int float_rank(std::vector<std::vector<double>> a, double tol = 1e-9) {
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int best = rank;
        for (int r = rank; r < rows; ++r)
            if (std::abs(a[r][c]) > std::abs(a[best][c])) best = r;
        if (std::abs(a[best][c]) < tol) continue;
        std::swap(a[best], a[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank) {
                const double f = a[r][c] / a[rank][c];
                for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
            }
        ++rank;
    }
    return rank;
}

}  // namespace testkit
