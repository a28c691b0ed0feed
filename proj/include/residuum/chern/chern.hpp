#pragma once

#include <optional>
#include <vector>

#include "residuum/cech/cohomology.hpp"
#include "residuum/chern/transition.hpp"

namespace residuum::chern {

inline constexpr int kWindingNodes = 64;
inline constexpr double kWindingResidual = 0.25;

/// n_ijk = (1/2 pi i)(log g_ij - log g_ik + log g_jk) at the triple point, each log continued from
/// its base point along the stored path (Gauss-Legendre with `nodes` nodes per segment).
/// Throws NumericalError when a value is 0.25 or more from the nearest integer.
cech::Cochain chern_cocycle(const TransitionData& td, int nodes = kWindingNodes);

/// Unrounded values (1/2 pi i)(...) per 2-simplex, for diagnostics.
std::vector<Complex> chern_cocycle_raw(const TransitionData& td, int nodes = kWindingNodes);

struct ChernClass {
    cech::Cochain cocycle;                     // sum a_i c_i
    std::vector<ExactComplex> coordinates;     // pairings with the H_2 basis
    std::optional<cech::Cochain> witness;      // b with d b = cocycle when the class is zero

    bool is_zero() const;
};

/// Class of sum a_i c_1(W_i) in H^2(nerve, C). One transition datum per divisor component
/// (matched by name); all on one nerve (DomainError otherwise).
ChernClass double_delta(const CDivisor& divisor, const std::vector<TransitionData>& transitions);

struct HodgeRecord {
    int b1 = 0;
    int d_omega0 = 0;
    int h01 = 0;
    int h2_betti = 0;
};

/// b1 == d_omega0 + h01
bool has_property_h(const HodgeRecord& r);
/// b1 <= d_omega0 + h01 and all entries nonnegative.
bool is_consistent(const HodgeRecord& r);

enum class Verdict { feasible, infeasible, inconclusive };

const char* to_string(Verdict v);

struct Feasibility {
    Verdict verdict;
    ChernClass chern_class;
};

/// Nonzero class: infeasible. Zero class with Property (H): feasible. Otherwise inconclusive.
Feasibility residue_feasible(const CDivisor& divisor, const std::vector<TransitionData>& transitions,
                             const HodgeRecord& hodge);

/// dim {a : sum a_i [c_i] = 0 in H^2}.
int kernel_dimension(const std::vector<TransitionData>& transitions);
/// Same, from cocycles on one nerve.
int kernel_dimension(const cech::Nerve& nerve, const std::vector<cech::Cochain>& cocycles);

}  // namespace residuum::chern
