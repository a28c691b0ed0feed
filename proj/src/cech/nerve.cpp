#include "residuum/cech/nerve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "residuum/error.hpp"

namespace residuum::cech {

namespace {

std::string show(const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

void add_all_faces(const Simplex& s, std::array<std::set<Simplex>, kMaxSimplexDegree + 1>& into) {
    const int n = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        Simplex face;
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) face.push_back(s[static_cast<std::size_t>(b)]);
        into[face.size() - 1].insert(face);
    }
}

}  // namespace

std::vector<Simplex> facets(const Simplex& s) {
    std::vector<Simplex> out;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != drop) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

Nerve Nerve::validate(const std::vector<Simplex>& raw, Closure closure, std::optional<int> vertex_count,
                      std::vector<std::string> labels) {
    int max_index = -1;
    for (const Simplex& s : raw) {
        if (s.empty()) throw DomainError("empty simplex");
        if (s.size() > kMaxSimplexDegree + 1)
            throw DomainError("simplex (" + show(s) + ") exceeds degree " + std::to_string(kMaxSimplexDegree));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0) throw DomainError("vertex index out of range in (" + show(s) + ")");
            if (i > 0 && s[i] <= s[i - 1]) throw DomainError("non-ascending tuple (" + show(s) + ")");
            max_index = std::max(max_index, s[i]);
        }
    }
    const int count = vertex_count.value_or(max_index + 1);
    if (count <= 0) throw DomainError("nerve needs at least one vertex");
    if (max_index >= count)
        throw DomainError("vertex index " + std::to_string(max_index) + " out of range (vertex count " +
                          std::to_string(count) + ")");

    std::array<std::set<Simplex>, kMaxSimplexDegree + 1> given;
    for (const Simplex& s : raw)
        if (!given[s.size() - 1].insert(s).second && closure == Closure::strict)
            throw DomainError("duplicate simplex (" + show(s) + ")");

    std::array<std::set<Simplex>, kMaxSimplexDegree + 1> closed;
    for (const Simplex& s : raw) add_all_faces(s, closed);
    if (closure == Closure::maximal) {
        for (int v = 0; v < count; ++v) closed[0].insert(Simplex{v});
    } else {
        for (int k = 0; k <= kMaxSimplexDegree; ++k)
            for (const Simplex& s : closed[static_cast<std::size_t>(k)])
                if (!given[static_cast<std::size_t>(k)].count(s)) throw DomainError("missing face (" + show(s) + ")");
        for (int v = 0; v < count; ++v)
            if (!given[0].count(Simplex{v})) throw DomainError("missing face (" + std::to_string(v) + ")");
    }

    Nerve n;
    n.vertex_count_ = count;
    for (int k = 0; k <= kMaxSimplexDegree; ++k) {
        auto& list = n.simplices_[static_cast<std::size_t>(k)];
        list.assign(closed[static_cast<std::size_t>(k)].begin(), closed[static_cast<std::size_t>(k)].end());
        for (std::size_t i = 0; i < list.size(); ++i) n.index_[static_cast<std::size_t>(k)][list[i]] = static_cast<int>(i);
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != count)
        throw DomainError("label count does not match vertex count");
    n.labels_ = std::move(labels);
    return n;
}

int Nerve::count(int k) const {
    if (k < 0 || k > kMaxSimplexDegree) return 0;
    return static_cast<int>(simplices_[static_cast<std::size_t>(k)].size());
}

const std::vector<Simplex>& Nerve::simplices(int k) const {
    static const std::vector<Simplex> empty;
    if (k < 0 || k > kMaxSimplexDegree) return empty;
    return simplices_[static_cast<std::size_t>(k)];
}

std::optional<int> Nerve::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > kMaxSimplexDegree + 1) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    const auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

int Nerve::dimension() const {
    for (int k = kMaxSimplexDegree; k >= 0; --k)
        if (count(k) > 0) return k;
    return -1;
}

int connected_components(const Nerve& nerve) {
    std::vector<int> parent(static_cast<std::size_t>(nerve.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    int components = nerve.vertex_count();
    for (const Simplex& e : nerve.simplices(1)) {
        const int a = find(e[0]), b = find(e[1]);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

Nerve standard_good_nerve(std::string_view model_tag) {
    if (model_tag == "sphere") {
        // Face-cover of the tetrahedral subdivision of S^2: four sets, every triple meets at a vertex.
        return Nerve::validate({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, Closure::maximal, 4,
                               {"T", "S0", "S1", "S2"});
    }
    if (model_tag == "torus") {
        // Open stars of the 3x3 grid triangulation of R^2 / Z^2.
        std::vector<Simplex> triangles;
        auto v = [](int i, int j) { return ((i % 3 + 3) % 3) * 3 + ((j % 3 + 3) % 3); };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Simplex a{v(i, j), v(i + 1, j), v(i + 1, j + 1)};
                Simplex b{v(i, j), v(i, j + 1), v(i + 1, j + 1)};
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                triangles.push_back(a);
                triangles.push_back(b);
            }
        return Nerve::validate(triangles, Closure::maximal, 9);
    }
    throw DomainError("unknown model tag '" + std::string(model_tag) + "'");
}

}  // namespace residuum::cech
