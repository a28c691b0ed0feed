#include "residuum/exact_matrix.hpp"

#include <utility>

#include "residuum/error.hpp"

namespace residuum {

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<ExactComplex> ExactMatrix::apply(const std::vector<ExactComplex>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DomainError("matrix/vector size mismatch");
    std::vector<ExactComplex> y(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const ExactComplex& a = (*this)(r, c);
            if (!a.is_zero() && !x[static_cast<std::size_t>(c)].is_zero()) y[static_cast<std::size_t>(r)] += a * x[static_cast<std::size_t>(c)];
        }
    return y;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<ExactComplex>>& columns, int rows) {
    ExactMatrix m(rows, static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (static_cast<int>(columns[c].size()) != rows) throw DomainError("column length mismatch");
        for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = columns[c][static_cast<std::size_t>(r)];
    }
    return m;
}

RowEchelon row_reduce(ExactMatrix m) {
    RowEchelon out;
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int found = -1;
        for (int r = pivot_row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                found = r;
                break;
            }
        if (found < 0) continue;
        if (found != pivot_row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
        const ExactComplex inv = ExactComplex(1) / m(pivot_row, col);
        for (int c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col).is_zero()) continue;
            const ExactComplex f = m(r, col);
            for (int c = col; c < m.cols(); ++c)
                if (!m(pivot_row, c).is_zero()) m(r, c) -= f * m(pivot_row, c);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const ExactMatrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<std::vector<ExactComplex>> nullspace(const ExactMatrix& m) {
    const RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<ExactComplex>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<ExactComplex> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free)] = ExactComplex(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[static_cast<std::size_t>(e.pivots[r])] = -e.reduced(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<ExactComplex>> solve(const ExactMatrix& m, const std::vector<ExactComplex>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DomainError("right-hand side size mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[static_cast<std::size_t>(r)];
    }
    const RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    std::vector<ExactComplex> x(static_cast<std::size_t>(m.cols()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[static_cast<std::size_t>(e.pivots[r])] = e.reduced(static_cast<int>(r), m.cols());
    return x;
}

}  // namespace residuum
