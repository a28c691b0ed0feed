#pragma once

#include <vector>

#include "residuum/cech/nerve.hpp"
#include "residuum/exact.hpp"
#include "residuum/exact_matrix.hpp"

namespace residuum::cech {

/// Exact Q(i)-valued cochain on the k-simplices of a nerve, stored densely in the nerve's
/// canonical simplex order.
class Cochain {
public:
    Cochain() = default;
    /// Zero cochain of the given degree.
    Cochain(const Nerve& nerve, int degree);
    Cochain(const Nerve& nerve, int degree, std::vector<ExactComplex> values);

    int degree() const { return degree_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<ExactComplex>& values() const { return values_; }
    const ExactComplex& operator[](std::size_t i) const { return values_[i]; }
    ExactComplex& operator[](std::size_t i) { return values_[i]; }
    /// Value on a simplex; throws DomainError if the nerve has no such simplex.
    ExactComplex& at(const Nerve& nerve, const Simplex& s);

    bool is_zero() const;
    /// Throws DomainError unless the cochain has the shape of a degree-k cochain on `nerve`.
    void check_belongs(const Nerve& nerve) const;

    Cochain& operator+=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator*(const ExactComplex& s, Cochain c);
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.values_ == b.values_;
    }

private:
    int degree_ = 0;
    std::vector<ExactComplex> values_;
};

/// (d s)_{i1..ik+2} = sum_s (-1)^{s-1} s_{i1 .. omit i_s .. ik+2}; requires degree <= 2.
Cochain coboundary(const Nerve& nerve, const Cochain& c);

/// Matrix of the coboundary d^k : C^k -> C^{k+1} (rows indexed by (k+1)-simplices).
ExactMatrix coboundary_matrix(const Nerve& nerve, int k);

}  // namespace residuum::cech
