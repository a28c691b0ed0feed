#pragma once

#include <optional>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum {

/// Dense row-major matrix over Q(i). Sizes here are tiny (nerve incidence matrices), so dense
/// Gaussian elimination is fine.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    ExactComplex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    const ExactComplex& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

    ExactMatrix transpose() const;
    std::vector<ExactComplex> apply(const std::vector<ExactComplex>& x) const;

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static ExactMatrix from_columns(const std::vector<std::vector<ExactComplex>>& columns, int rows);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ExactComplex> a_;
};

struct RowEchelon {
    ExactMatrix reduced;       // reduced row echelon form
    std::vector<int> pivots;   // pivot column per nonzero row
};

RowEchelon row_reduce(ExactMatrix m);
int rank(const ExactMatrix& m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<ExactComplex>> nullspace(const ExactMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<ExactComplex>> solve(const ExactMatrix& m, const std::vector<ExactComplex>& b);

}  // namespace residuum
