#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace residuum::cech {

/// Strictly ascending vertex tuple.
using Simplex = std::vector<int>;

inline constexpr int kMaxSimplexDegree = 3;

enum class Closure {
    strict,   // every face must be listed
    maximal,  // input lists maximal simplices; faces are generated
};

/// Nerve of a finite good cover: vertices are cover sets, k-simplices are nonempty (k+1)-fold
/// intersections. Immutable after validation; simplices of each degree are lexicographically sorted.
class Nerve {
public:
    /// Validates raw simplex lists. `vertex_count` of nullopt means "largest index + 1".
    static Nerve validate(const std::vector<Simplex>& raw, Closure closure,
                          std::optional<int> vertex_count = std::nullopt,
                          std::vector<std::string> labels = {});

    int vertex_count() const { return vertex_count_; }
    /// Number of k-simplices (0 for k outside 0..3).
    int count(int k) const;
    const std::vector<Simplex>& simplices(int k) const;
    std::optional<int> index_of(const Simplex& s) const;
    /// Highest k with a k-simplex.
    int dimension() const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const Nerve& a, const Nerve& b) {
        return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
    }
    friend bool operator!=(const Nerve& a, const Nerve& b) { return !(a == b); }

private:
    int vertex_count_ = 0;
    std::array<std::vector<Simplex>, kMaxSimplexDegree + 1> simplices_;
    std::array<std::map<Simplex, int>, kMaxSimplexDegree + 1> index_;
    std::vector<std::string> labels_;
};

/// Faces obtained by deleting one vertex, in the order s = 1..k+1 of the alternating sum.
std::vector<Simplex> facets(const Simplex& s);

/// Number of connected components of the 1-skeleton.
int connected_components(const Nerve& nerve);

/// Nerves of standard good covers: "sphere" (tetrahedron boundary) and "torus" (3x3 grid).
Nerve standard_good_nerve(std::string_view model_tag);

}  // namespace residuum::cech
