#include "residuum/models/sphere.hpp"

#include <algorithm>
#include <map>

#include "residuum/error.hpp"

namespace residuum::models {

const ExactComplex& SpherePoint::value() const {
    if (!value_) throw DomainError("the point at infinity has no finite value");
    return *value_;
}

std::string SpherePoint::str() const { return value_ ? value_->str() : "inf"; }

SpherePoint SpherePoint::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text == "inf" || text == "infinity" || text == "oo" || text == "∞") return infinity();
    return SpherePoint(ExactComplex::parse(text));
}

bool operator<(const SpherePoint& a, const SpherePoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return canonical_less(*a.value_, *b.value_);
}

namespace {

// Power series coefficients of num(w)/den(w) up to w^order (den(0) != 0).
std::vector<ExactComplex> series_quotient(const Polynomial& num, const Polynomial& den, int order) {
    std::vector<ExactComplex> out(static_cast<std::size_t>(order) + 1);
    const ExactComplex d0_inv = ExactComplex(1) / den.coeff(0);
    for (int n = 0; n <= order; ++n) {
        ExactComplex acc = num.coeff(n);
        for (int j = 1; j <= n; ++j) acc -= den.coeff(j) * out[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = acc * d0_inv;
    }
    return out;
}

Polynomial product_of_poles(const std::vector<std::pair<ExactComplex, int>>& poles, std::size_t skip = SIZE_MAX) {
    Polynomial out(ExactComplex(1));
    for (std::size_t i = 0; i < poles.size(); ++i)
        if (i != skip) out = out * Polynomial::linear_power(poles[i].first, poles[i].second);
    return out;
}

// Principal part coefficients c_j of (z-p)^-j, j = 1..k, for the pole at index idx.
std::vector<ExactComplex> principal_part(const Polynomial& numerator,
                                         const std::vector<std::pair<ExactComplex, int>>& poles, std::size_t idx) {
    const auto& [p, k] = poles[idx];
    const Polynomial others = product_of_poles(poles, idx);
    const auto series = series_quotient(numerator.shifted(p), others.shifted(p), k - 1);
    std::vector<ExactComplex> c(static_cast<std::size_t>(k) + 1);
    for (int j = 1; j <= k; ++j) c[static_cast<std::size_t>(j)] = series[static_cast<std::size_t>(k - j)];
    return c;
}

}  // namespace

RationalForm::RationalForm(const Polynomial& numerator, const Polynomial& denominator) {
    if (denominator.is_zero()) throw DomainError("rational form with zero denominator");
    const ExactComplex lead = denominator.leading();
    numerator_ = (ExactComplex(1) / lead) * numerator;
    if (!numerator_.is_zero()) {
        poles_ = split_over_gaussian_rationals(denominator);
        std::sort(poles_.begin(), poles_.end(),
                  [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    }
    reduce();
}

RationalForm RationalForm::pole_term(const ExactComplex& c, const ExactComplex& p, int k) {
    if (k < 0) throw DomainError("negative pole order");
    RationalForm f;
    f.numerator_ = Polynomial(c);
    if (k > 0 && !c.is_zero()) f.poles_.emplace_back(p, k);
    return f;
}

void RationalForm::reduce() {
    if (numerator_.is_zero()) {
        poles_.clear();
        return;
    }
    std::vector<std::pair<ExactComplex, int>> kept;
    for (auto [p, k] : poles_) {
        while (k > 0 && numerator_(p).is_zero()) {
            numerator_ = divmod(numerator_, Polynomial::linear(p)).first;
            --k;
        }
        if (k > 0) kept.emplace_back(p, k);
    }
    poles_ = std::move(kept);
}

Polynomial RationalForm::denominator() const { return product_of_poles(poles_); }

Complex RationalForm::operator()(Complex z) const {
    Complex d = 1;
    for (const auto& [p, k] : poles_) {
        const Complex f = z - p.to_complex();
        for (int j = 0; j < k; ++j) d *= f;
    }
    return numerator_(z) / d;
}

int RationalForm::pole_order(const SpherePoint& p) const {
    if (is_zero()) return 0;
    if (p.is_infinity()) {
        int den = 0;
        for (const auto& e : poles_) den += e.second;
        const int d = numerator_.degree() - den;
        return std::max(0, d + 2);
    }
    for (const auto& [q, k] : poles_)
        if (q == p.value()) return k;
    return 0;
}

std::vector<std::pair<SpherePoint, int>> RationalForm::poles() const {
    std::vector<std::pair<SpherePoint, int>> out;
    for (const auto& [p, k] : poles_) out.emplace_back(SpherePoint(p), k);
    if (const int k = pole_order(SpherePoint::infinity()); k > 0) out.emplace_back(SpherePoint::infinity(), k);
    return out;
}

ExactComplex RationalForm::residue_at(const SpherePoint& p) const {
    if (is_zero()) return {};
    if (p.is_infinity()) {
        // f = q + R/D with D monic; R/D = R_{deg D - 1}/z + O(z^-2), and res_inf = -[z^-1] f.
        const Polynomial d = denominator();
        if (d.degree() <= 0) return {};
        const Polynomial r = divmod(numerator_, d).second;
        return -r.coeff(d.degree() - 1);
    }
    for (std::size_t i = 0; i < poles_.size(); ++i)
        if (poles_[i].first == p.value()) return principal_part(numerator_, poles_, i)[1];
    return {};
}

RationalForm RationalForm::conj() const {
    RationalForm f;
    f.numerator_ = numerator_.conj();
    for (const auto& [p, k] : poles_) f.poles_.emplace_back(p.conj(), k);
    std::sort(f.poles_.begin(), f.poles_.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return f;
}

RationalForm& RationalForm::operator+=(const RationalForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::map<ExactComplex, int, CanonicalLess> lcm;
    for (const auto& [p, k] : poles_) lcm[p] = k;
    for (const auto& [p, k] : o.poles_) lcm[p] = std::max(lcm[p], k);
    auto cofactor = [&](const std::vector<std::pair<ExactComplex, int>>& own) {
        Polynomial c(ExactComplex(1));
        for (const auto& [p, k] : lcm) {
            int have = 0;
            for (const auto& e : own)
                if (e.first == p) have = e.second;
            c = c * Polynomial::linear_power(p, k - have);
        }
        return c;
    };
    numerator_ = numerator_ * cofactor(poles_) + o.numerator_ * cofactor(o.poles_);
    poles_.assign(lcm.begin(), lcm.end());
    reduce();
    return *this;
}

RationalForm& RationalForm::operator-=(const RationalForm& o) { return *this += ExactComplex(-1) * o; }

RationalForm operator*(const ExactComplex& s, const RationalForm& f) {
    if (s.is_zero()) return {};
    RationalForm out = f;
    out.numerator_ = s * f.numerator_;
    return out;
}

namespace {

std::string coefficient_list(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (k) out += ", ";
        out += p.coefficients()[k].str();
    }
    return out;
}

}  // namespace

std::string RationalForm::str() const { return coefficient_list(numerator_) + " / " + coefficient_list(denominator()); }

std::vector<std::pair<SpherePoint, ExactComplex>> residue_divisor(const RationalForm& f) {
    std::vector<std::pair<SpherePoint, ExactComplex>> out;
    for (const auto& [p, k] : f.poles()) {
        ExactComplex r = f.residue_at(p);
        if (!r.is_zero()) out.emplace_back(p, std::move(r));
    }
    return out;
}

ExactComplex check_residue_theorem(const RationalForm& f) {
    ExactComplex sum;
    for (const auto& [p, k] : f.poles()) sum += f.residue_at(p);
    return sum;
}

RationalForm sphere_third_kind(const SpherePoint& p, const SpherePoint& q) {
    if (p == q) throw DomainError("third-kind form needs two distinct points");
    RationalForm f;
    if (!p.is_infinity()) f += RationalForm::pole_term(ExactComplex(1), p.value(), 1);
    if (!q.is_infinity()) f -= RationalForm::pole_term(ExactComplex(1), q.value(), 1);
    return f;
}

RationalForm sphere_second_kind(const SpherePoint& p, int l) {
    if (l < 2) throw DomainError("second-kind form needs pole order l >= 2");
    if (p.is_infinity()) return RationalForm::polynomial(Polynomial::monomial(ExactComplex(-1), l - 2));
    return RationalForm::pole_term(ExactComplex(1), p.value(), l);
}

RationalForm sphere_prescribe_residues(const std::vector<std::pair<SpherePoint, ExactComplex>>& divisor) {
    ExactComplex sum;
    for (const auto& e : divisor) sum += e.second;
    if (!sum.is_zero()) throw DomainError("residues sum to " + sum.str() + ", not 0");
    RationalForm f;
    for (const auto& [p, a] : divisor)
        if (!p.is_infinity()) f += RationalForm::pole_term(a, p.value(), 1);
    return f;
}

KindDecomposition decompose_kinds(const RationalForm& f) {
    KindDecomposition out;
    for (const auto& [p, k] : f.finite_poles()) out.log_part += RationalForm::pole_term(f.residue_at(p), p, 1);
    out.second_kind = f - out.log_part;
    return out;
}

bool pole_order_bound_check(const RationalForm& f, int k) {
    for (const auto& [p, order] : f.poles())
        if (order > k + 1) return false;
    return true;
}

std::optional<std::pair<Polynomial, Polynomial>> rational_antiderivative(const RationalForm& f) {
    for (const auto& [p, k] : f.poles())
        if (!f.residue_at(p).is_zero()) return std::nullopt;
    const Polynomial d = f.denominator();
    const Polynomial q = divmod(f.numerator(), d).first;
    std::vector<ExactComplex> integral(static_cast<std::size_t>(q.degree() + 2));
    for (int j = 0; j <= q.degree(); ++j)
        integral[static_cast<std::size_t>(j + 1)] = q.coeff(j) / ExactComplex(static_cast<long>(j + 1));
    RationalForm result = RationalForm::polynomial(Polynomial(std::move(integral)));
    const auto& poles = f.finite_poles();
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const auto c = principal_part(f.numerator(), poles, i);
        for (int j = 2; j <= poles[i].second; ++j)
            result += RationalForm::pole_term(-c[static_cast<std::size_t>(j)] / ExactComplex(static_cast<long>(j - 1)),
                                              poles[i].first, j - 1);
    }
    return std::make_pair(result.numerator(), result.denominator());
}

}  // namespace residuum::models
