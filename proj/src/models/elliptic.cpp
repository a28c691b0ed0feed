#include "residuum/models/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "residuum/error.hpp"

namespace residuum::models {

EllipticForm::EllipticForm(TorusHandle torus, Complex c0, std::vector<LogTerm> log_terms,
                           std::vector<PoleTerm> pole_terms)
    : torus_(std::move(torus)), c0_(c0), log_terms_(std::move(log_terms)), pole_terms_(std::move(pole_terms)) {
    if (!torus_) throw DomainError("elliptic form without a torus");
    for (const auto& t : pole_terms_)
        if (t.order < 2) throw DomainError("wp-type terms need pole order >= 2");
    normalize();
    Complex sum = 0;
    double scale = 1.0;
    for (const auto& t : log_terms_) {
        sum += t.coefficient;
        scale = std::max(scale, std::abs(t.coefficient));
    }
    if (std::abs(sum) > 1e-12 * scale)
        throw DomainError("zeta coefficients sum to " + format_complex(sum, 6) + "; the form would not be elliptic");
}

void EllipticForm::normalize() {
    std::vector<LogTerm> logs;
    for (auto t : log_terms_) {
        t.pole = torus_->reduce(t.pole);
        auto it = std::find_if(logs.begin(), logs.end(), [&](const LogTerm& e) {
            return torus_->lattice_distance(e.pole, t.pole) < kPoleIdentityTolerance;
        });
        if (it == logs.end()) logs.push_back(t);
        else it->coefficient += t.coefficient;
    }
    std::erase_if(logs, [](const LogTerm& t) { return t.coefficient == 0.0; });
    log_terms_ = std::move(logs);

    std::vector<PoleTerm> poles;
    for (auto t : pole_terms_) {
        t.pole = torus_->reduce(t.pole);
        auto it = std::find_if(poles.begin(), poles.end(), [&](const PoleTerm& e) {
            return e.order == t.order && torus_->lattice_distance(e.pole, t.pole) < kPoleIdentityTolerance;
        });
        if (it == poles.end()) poles.push_back(t);
        else it->coefficient += t.coefficient;
    }
    std::erase_if(poles, [](const PoleTerm& t) { return t.coefficient == 0.0; });
    pole_terms_ = std::move(poles);
}

Complex EllipticForm::operator()(Complex z) const {
    Complex v = c0_;
    for (const auto& t : log_terms_) v += t.coefficient * torus_->zeta(z - t.pole);
    for (const auto& t : pole_terms_) v += t.coefficient * torus_->wp(z - t.pole, t.order - 2);
    return v;
}

Complex EllipticForm::residue_at(Complex p) const {
    Complex r = 0;
    for (const auto& t : log_terms_)
        if (torus_->lattice_distance(t.pole, p) < kPoleIdentityTolerance) r += t.coefficient;
    return r;
}

int EllipticForm::pole_order(Complex p) const {
    int k = 0;
    for (const auto& t : log_terms_)
        if (torus_->lattice_distance(t.pole, p) < kPoleIdentityTolerance) k = std::max(k, 1);
    for (const auto& t : pole_terms_)
        if (torus_->lattice_distance(t.pole, p) < kPoleIdentityTolerance) k = std::max(k, t.order);
    return k;
}

std::vector<Complex> EllipticForm::poles() const {
    std::vector<Complex> out;
    auto add = [&](Complex p) {
        for (const auto& q : out)
            if (torus_->lattice_distance(p, q) < kPoleIdentityTolerance) return;
        out.push_back(p);
    };
    for (const auto& t : log_terms_) add(t.pole);
    for (const auto& t : pole_terms_) add(t.pole);
    return out;
}

namespace {

bool same_torus(const TorusHandle& a, const TorusHandle& b) {
    return a == b || (a->tau() == b->tau() && a->cutoff() == b->cutoff());
}

}  // namespace

EllipticForm& EllipticForm::operator+=(const EllipticForm& o) {
    if (!same_torus(torus_, o.torus_)) throw DomainError("adding forms on different tori");
    c0_ += o.c0_;
    log_terms_.insert(log_terms_.end(), o.log_terms_.begin(), o.log_terms_.end());
    pole_terms_.insert(pole_terms_.end(), o.pole_terms_.begin(), o.pole_terms_.end());
    normalize();
    return *this;
}

EllipticForm operator*(Complex s, const EllipticForm& f) {
    EllipticForm out = f;
    out.c0_ *= s;
    for (auto& t : out.log_terms_) t.coefficient *= s;
    for (auto& t : out.pole_terms_) t.coefficient *= s;
    out.normalize();
    return out;
}

EllipticForm torus_third_kind(const TorusHandle& torus, Complex p, Complex q) {
    if (torus->lattice_distance(p, q) < kPoleIdentityTolerance) throw DomainError("third-kind form needs p != q");
    return EllipticForm(torus, 0, {{p, 1.0}, {q, -1.0}});
}

EllipticForm torus_second_kind(const TorusHandle& torus, Complex p, int l) {
    if (l < 2) throw DomainError("second-kind form needs pole order l >= 2");
    return EllipticForm(torus, 0, {}, {{p, l, 1.0}});
}

EllipticForm torus_prescribe_residues(const TorusHandle& torus, const std::vector<std::pair<Complex, Complex>>& divisor) {
    std::vector<LogTerm> terms;
    Complex sum = 0;
    double scale = 1.0;
    for (const auto& [p, a] : divisor) {
        terms.push_back({p, a});
        sum += a;
        scale = std::max(scale, std::abs(a));
    }
    if (std::abs(sum) > 1e-12 * scale)
        throw DomainError("residues sum to " + format_complex(sum, 6) + ", not 0");
    // absorb the rounding-level defect into the first term so the form is exactly elliptic
    if (!terms.empty()) terms.front().coefficient -= sum;
    return EllipticForm(torus, 0, std::move(terms));
}

bool pole_order_bound_check(const EllipticForm& f, int k) {
    for (const auto& p : f.poles())
        if (f.pole_order(p) > k + 1) return false;
    return true;
}

Complex evaluate(const MeromorphicForm& f, Complex z) {
    return std::visit([&](const auto& g) -> Complex { return g(z); }, f);
}

bool is_zero(const MeromorphicForm& f) {
    return std::visit([](const auto& g) { return g.is_zero(); }, f);
}

MeromorphicForm add(const MeromorphicForm& a, const MeromorphicForm& b) {
    if (a.index() != b.index()) throw DomainError("adding forms from different models");
    if (const auto* r = std::get_if<RationalForm>(&a)) return *r + std::get<RationalForm>(b);
    return std::get<EllipticForm>(a) + std::get<EllipticForm>(b);
}

MeromorphicForm scale(Complex s, const MeromorphicForm& f) {
    if (const auto* r = std::get_if<RationalForm>(&f))
        return ExactComplex(Rational(s.real()), Rational(s.imag())) * *r;  // doubles are exact rationals
    return s * std::get<EllipticForm>(f);
}

bool pole_order_bound_check(const MeromorphicForm& f, int k) {
    return std::visit([&](const auto& g) { return pole_order_bound_check(g, k); }, f);
}

}  // namespace residuum::models
