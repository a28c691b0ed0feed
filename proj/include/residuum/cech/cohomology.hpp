#pragma once

#include <optional>
#include <vector>

#include "residuum/cech/cochain.hpp"
#include "residuum/cech/nerve.hpp"

namespace residuum::cech {

/// h^0..h^max_degree of the constant-coefficient Cech complex, by exact ranks.
/// h^k = dim ker d^k - dim im d^{k-1}. Requires max_degree <= 2.
std::vector<int> cohomology_dims(const Nerve& nerve, int max_degree);

/// H^2(nerve, C) made concrete: a basis of H_2 (cycles modulo boundaries) in which classes
/// are read off by the Kronecker pairing, plus exact coboundary witnesses.
class SecondCohomology {
public:
    explicit SecondCohomology(Nerve nerve);

    const Nerve& nerve() const { return nerve_; }
    int dimension() const { return static_cast<int>(cycles_.size()); }
    /// 2-cycles representing a basis of H_2; each normalized so its first nonzero entry is 1.
    const std::vector<std::vector<ExactComplex>>& cycles() const { return cycles_; }

    bool is_cocycle(const Cochain& c) const;
    /// Pairings <c, z_j> with the basis cycles. Throws DomainError if c is not a 2-cocycle.
    std::vector<ExactComplex> coordinates(const Cochain& c) const;
    /// A 1-cochain b with d b = c, or nullopt if the class of c is nonzero.
    std::optional<Cochain> coboundary_witness(const Cochain& c) const;

private:
    Nerve nerve_;
    ExactMatrix d1_;
    ExactMatrix d2_;
    std::vector<std::vector<ExactComplex>> cycles_;
};

}  // namespace residuum::cech
