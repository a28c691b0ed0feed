#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "residuum/cech/cochain.hpp"
#include "residuum/cech/nerve.hpp"
#include "residuum/models/sphere.hpp"
#include "residuum/polynomial.hpp"
#include "residuum/quadrature.hpp"

namespace residuum::chern {

/// Formal sum sum a_i W_i of named components.
class CDivisor {
public:
    CDivisor() = default;
    /// Throws DomainError on duplicate names or a length mismatch.
    CDivisor(std::vector<std::string> names, std::vector<ExactComplex> coefficients);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<ExactComplex>& coefficients() const { return coefficients_; }
    std::size_t size() const { return names_.size(); }
    ExactComplex total() const;
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<ExactComplex> coefficients_;
};

/// Integer 2-cocycle supplied directly.
struct AbstractTransitions {
    cech::Cochain integers;
};

/// g_ij on the overlap U_i cap U_j together with the branch base point a_ij and, for every triangle
/// containing the edge, a path inside U_ij from a_ij to that triangle's triple point.
struct ConcreteEdge {
    cech::Simplex edge;
    RationalFunction g;
    Complex base;
    std::map<cech::Simplex, LoopPath> paths;
};

struct ConcreteTransitions {
    std::vector<ConcreteEdge> edges;
    std::map<cech::Simplex, Complex> triple_points;
};

struct TransitionData {
    cech::Nerve nerve;
    std::string component;
    std::variant<AbstractTransitions, ConcreteTransitions> data;

    bool is_abstract() const { return std::holds_alternative<AbstractTransitions>(data); }
};

/// Structural validation: every edge has a record, every triangle a triple point and paths that
/// start at the base point and end at the triple point; abstract values are integers with vanishing
/// coboundary; concrete g's satisfy g_ij g_jk = g_ik exactly and at the triple points.
/// Throws DomainError.
void validate(const TransitionData& td);

/// Tetrahedral good cover of the sphere: T (triangle with vertices 2 e^{i(pi/2 + 2 pi k/3)}) and three
/// sectors S_k beyond its edges, all sectors sharing a neighbourhood of infinity.
cech::Nerve sphere_cover_nerve();

/// Concrete transitions g_ij = f_i / f_j for the point divisor p on the tetrahedral cover. The point
/// must lie inside one cover set away from all overlaps; DomainError otherwise.
TransitionData sphere_point_transitions(const models::SpherePoint& p, std::string component);

/// g_ij = 1 on the tetrahedral cover.
TransitionData sphere_trivial_transitions(std::string component);

/// Integer 2-cocycle representing the positive generator of H^2 on a nerve whose H^2 is
/// one-dimensional (indicator of one triangle, signed so its coordinate is +1).
cech::Cochain abstract_point_class(const cech::Nerve& nerve);

}  // namespace residuum::chern
