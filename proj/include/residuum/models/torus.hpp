#pragma once

#include <memory>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum::models {

/// Complex torus C/(Z + tau Z) with Weierstrass functions evaluated by row-summed
/// (Eisenstein-ordered) lattice sums: each horizontal row m + n tau is summed in closed form
/// through cot, rows are truncated at |n| <= cutoff. The neglected tail is of size
/// exp(-2 pi cutoff Im tau).
class Torus {
public:
    /// Throws DomainError if Im tau <= 0 or cutoff < 1, NumericalError if the Legendre
    /// relation eta1 tau - eta2 = 2 pi i misses 1e-10.
    explicit Torus(Complex tau, int cutoff = 30);

    Complex tau() const { return tau_; }
    int cutoff() const { return cutoff_; }
    /// zeta(z + 1) - zeta(z)
    Complex eta1() const { return eta1_; }
    /// zeta(z + tau) - zeta(z)
    Complex eta2() const { return eta2_; }
    /// |eta1 tau - eta2 - 2 pi i| measured at construction.
    double legendre_defect() const { return legendre_defect_; }
    /// exp(-2 pi cutoff Im tau)
    double tail_bound() const;

    /// Weierstrass zeta (quasi-periodic). Throws DomainError within 1e-8 of a lattice point.
    Complex zeta(Complex z) const;
    /// Weierstrass p and its derivatives p^(k), k >= 0.
    Complex wp(Complex z, int k = 0) const;
    Complex wp_prime(Complex z) const { return wp(z, 1); }
    /// Raw truncated series for zeta at z without reducing to the fundamental domain.
    Complex zeta_series(Complex z) const;

    /// Lattice coordinates (s, t) with z = s + t tau.
    std::pair<double, double> lattice_coordinates(Complex z) const;
    /// Representative s + t tau with 0 <= s, t < 1.
    Complex reduce(Complex z) const;
    /// Distance from z to the nearest point of p + lattice.
    double lattice_distance(Complex z, Complex p) const;
    /// Translates p + a + b tau meeting the disk |w - center| <= radius.
    std::vector<Complex> translates_near(Complex p, Complex center, double radius) const;
    /// Shortest nonzero lattice vector length.
    double shortest_period() const;

private:
    // Sum over rows of pi^(j+1) P_j(cot(pi(z - n tau))), P_0 = c, P_{j+1} = -(1 + c^2) P_j'.
    Complex cot_row_sum(Complex z, int j) const;
    // z = centered + a + b tau with |s|, |t| <= 1/2.
    Complex centered(Complex z, long& a, long& b) const;

    Complex tau_;
    int cutoff_;
    Complex g2_;  // Eisenstein-ordered sum of omega^-2; equals eta1
    Complex eta1_;
    Complex eta2_;
    double legendre_defect_ = 0;
    std::vector<std::vector<double>> cot_polys_;  // P_j coefficients
};

using TorusHandle = std::shared_ptr<const Torus>;

}  // namespace residuum::models
