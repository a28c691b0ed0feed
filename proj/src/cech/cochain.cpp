#include "residuum/cech/cochain.hpp"

#include "residuum/error.hpp"

namespace residuum::cech {

Cochain::Cochain(const Nerve& nerve, int degree)
    : degree_(degree), values_(static_cast<std::size_t>(nerve.count(degree))) {
    if (degree < 0 || degree > kMaxSimplexDegree) throw DomainError("cochain degree out of range");
}

Cochain::Cochain(const Nerve& nerve, int degree, std::vector<ExactComplex> values)
    : degree_(degree), values_(std::move(values)) {
    if (degree < 0 || degree > kMaxSimplexDegree) throw DomainError("cochain degree out of range");
    check_belongs(nerve);
}

ExactComplex& Cochain::at(const Nerve& nerve, const Simplex& s) {
    const auto idx = nerve.index_of(s);
    if (!idx || static_cast<int>(s.size()) != degree_ + 1)
        throw DomainError("simplex is not a " + std::to_string(degree_) + "-simplex of the nerve");
    return values_[static_cast<std::size_t>(*idx)];
}

bool Cochain::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

void Cochain::check_belongs(const Nerve& nerve) const {
    if (static_cast<int>(values_.size()) != nerve.count(degree_))
        throw DomainError("cochain does not belong to the nerve (degree " + std::to_string(degree_) + ")");
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.degree_ != degree_ || o.values_.size() != values_.size()) throw DomainError("cochain shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

Cochain operator*(const ExactComplex& s, Cochain c) {
    for (auto& v : c.values_) v *= s;
    return c;
}

Cochain coboundary(const Nerve& nerve, const Cochain& c) {
    if (c.degree() > 2) throw DomainError("coboundary is defined here for degree <= 2");
    c.check_belongs(nerve);
    const int k = c.degree();
    Cochain out(nerve, k + 1);
    const auto& targets = nerve.simplices(k + 1);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        ExactComplex acc;
        const auto faces = facets(targets[t]);
        for (std::size_t s = 0; s < faces.size(); ++s) {
            const ExactComplex& v = c[static_cast<std::size_t>(*nerve.index_of(faces[s]))];
            if (s % 2 == 0) acc += v;
            else acc -= v;
        }
        out[t] = acc;
    }
    return out;
}

ExactMatrix coboundary_matrix(const Nerve& nerve, int k) {
    ExactMatrix m(nerve.count(k + 1), nerve.count(k));
    const auto& targets = nerve.simplices(k + 1);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto faces = facets(targets[t]);
        for (std::size_t s = 0; s < faces.size(); ++s)
            m(static_cast<int>(t), *nerve.index_of(faces[s])) = ExactComplex(s % 2 == 0 ? 1 : -1);
    }
    return m;
}

}  // namespace residuum::cech
