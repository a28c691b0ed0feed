#include "residuum/cech/cohomology.hpp"

#include "residuum/error.hpp"

namespace residuum::cech {

std::vector<int> cohomology_dims(const Nerve& nerve, int max_degree) {
    if (max_degree < 0 || max_degree > 2) throw DomainError("cohomology is computed for degrees 0..2");
    // ranks[k] = rank of d^k : C^k -> C^{k+1}
    std::vector<int> ranks;
    for (int k = 0; k <= max_degree; ++k) {
        const int rows = nerve.count(k + 1);
        ranks.push_back(rows == 0 ? 0 : rank(coboundary_matrix(nerve, k)));
    }
    std::vector<int> dims;
    for (int k = 0; k <= max_degree; ++k) {
        const int kernel = nerve.count(k) - ranks[static_cast<std::size_t>(k)];
        const int image = k == 0 ? 0 : ranks[static_cast<std::size_t>(k - 1)];
        dims.push_back(kernel - image);
    }
    return dims;
}

SecondCohomology::SecondCohomology(Nerve nerve)
    : nerve_(std::move(nerve)), d1_(coboundary_matrix(nerve_, 1)), d2_(coboundary_matrix(nerve_, 2)) {
    const int n2 = nerve_.count(2);
    // Boundary maps are transposes of coboundaries: cycles = ker d1^T, boundaries = im d2^T.
    const auto z2 = nullspace(d1_.transpose());
    std::vector<std::vector<ExactComplex>> spanning;
    if (nerve_.count(3) > 0) {
        const ExactMatrix b = d2_.transpose();
        for (int c = 0; c < b.cols(); ++c) {
            std::vector<ExactComplex> col(static_cast<std::size_t>(n2));
            for (int r = 0; r < n2; ++r) col[static_cast<std::size_t>(r)] = b(r, c);
            spanning.push_back(std::move(col));
        }
    }
    int current = spanning.empty() ? 0 : rank(ExactMatrix::from_columns(spanning, n2));
    for (auto z : z2) {
        spanning.push_back(z);
        const int r = rank(ExactMatrix::from_columns(spanning, n2));
        if (r == current) {
            spanning.pop_back();
            continue;
        }
        current = r;
        for (const auto& v : z)
            if (!v.is_zero()) {
                const ExactComplex inv = ExactComplex(1) / v;
                for (auto& w : z) w *= inv;
                break;
            }
        cycles_.push_back(std::move(z));
    }
}

bool SecondCohomology::is_cocycle(const Cochain& c) const {
    if (c.degree() != 2) return false;
    c.check_belongs(nerve_);
    if (nerve_.count(3) == 0) return true;
    return coboundary(nerve_, c).is_zero();
}

std::vector<ExactComplex> SecondCohomology::coordinates(const Cochain& c) const {
    if (!is_cocycle(c)) throw DomainError("cochain is not a 2-cocycle");
    std::vector<ExactComplex> out;
    for (const auto& z : cycles_) {
        ExactComplex acc;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (!z[i].is_zero() && !c[i].is_zero()) acc += z[i] * c[i];
        out.push_back(acc);
    }
    return out;
}

std::optional<Cochain> SecondCohomology::coboundary_witness(const Cochain& c) const {
    if (!is_cocycle(c)) throw DomainError("cochain is not a 2-cocycle");
    if (nerve_.count(1) == 0) {
        if (c.is_zero()) return Cochain(nerve_, 1);
        return std::nullopt;
    }
    auto x = solve(d1_, c.values());
    if (!x) return std::nullopt;
    return Cochain(nerve_, 1, std::move(*x));
}

}  // namespace residuum::cech
