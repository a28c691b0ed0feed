#include "residuum/polynomial.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "residuum/error.hpp"

namespace residuum {

Polynomial::Polynomial(std::vector<ExactComplex> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(ExactComplex constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial Polynomial::linear(const ExactComplex& root) { return Polynomial({-root, ExactComplex(1)}); }

Polynomial Polynomial::monomial(const ExactComplex& c, int degree) {
    std::vector<ExactComplex> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_power(const ExactComplex& root, int k) {
    Polynomial out(ExactComplex(1));
    const Polynomial f = linear(root);
    for (int j = 0; j < k; ++j) out = out * f;
    return out;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactComplex Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return {};
    return c_[static_cast<std::size_t>(k)];
}

const ExactComplex& Polynomial::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

ExactComplex Polynomial::operator()(const ExactComplex& z) const {
    ExactComplex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<ExactComplex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * ExactComplex(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const ExactComplex& shift) const {
    // Horner in the polynomial ring: p(w + s) = (...((a_n)(w+s) + a_{n-1})(w+s) + ...)
    const Polynomial step({shift, ExactComplex(1)});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + Polynomial(*it);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return {};
    const ExactComplex inv = ExactComplex(1) / leading();
    return inv * *this;
}

Polynomial Polynomial::conj() const {
    std::vector<ExactComplex> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.conj());
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactComplex> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const ExactComplex& s, const Polynomial& p) {
    std::vector<ExactComplex> v = p.c_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<ExactComplex> rem = a.coefficients();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {Polynomial(), a};
    std::vector<ExactComplex> quo(static_cast<std::size_t>(da - db) + 1);
    const ExactComplex lead_inv = ExactComplex(1) / b.leading();
    for (int k = da - db; k >= 0; --k) {
        const ExactComplex q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

mpz_class lcm_of_denominators(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    return l;
}

std::vector<Complex> numeric_roots(const Polynomial& monic_poly) {
    const int n = monic_poly.degree();
    std::vector<Complex> roots;
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-monic_poly.coeff(0).to_complex());
        return roots;
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
    for (int k = 0; k < n; ++k) companion(k, n - 1) = -monic_poly.coeff(k).to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue solve failed");
    const Polynomial deriv = monic_poly.derivative();
    for (int k = 0; k < n; ++k) {
        Complex z = solver.eigenvalues()(k);
        for (int it = 0; it < 8; ++it) {  // Newton polish on the square-free polynomial
            const Complex d = deriv(z);
            if (std::abs(d) == 0) break;
            const Complex step = monic_poly(z) / d;
            z -= step;
            if (std::abs(step) <= 1e-17 * (1 + std::abs(z))) break;
        }
        roots.push_back(z);
    }
    return roots;
}

mpz_class round_to_mpz(double x) {
    mpz_class r;
    mpz_set_d(r.get_mpz_t(), std::floor(x + 0.5));
    return r;
}

}  // namespace

std::vector<std::pair<ExactComplex, int>> split_over_gaussian_rationals(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<ExactComplex, int>> out;
    if (p.degree() == 0) return out;

    const Polynomial squarefree = divmod(p, gcd(p, p.derivative())).first.monic();
    // For an integral polynomial with leading coefficient L, every root a/b in Q(i) has b | L,
    // so L * root is a Gaussian integer.
    const mpz_class scale = lcm_of_denominators(squarefree);
    const Polynomial integral = ExactComplex(Rational(scale)) * squarefree;
    const ExactComplex lead = integral.leading();  // = scale, real integer
    const Complex lead_d = lead.to_complex();

    Polynomial remaining = p;
    for (const Complex& r : numeric_roots(squarefree)) {
        const Complex w = lead_d * r;
        const ExactComplex candidate =
            ExactComplex(Rational(round_to_mpz(w.real())), Rational(round_to_mpz(w.imag()))) / lead;
        if (!squarefree(candidate).is_zero())
            throw DomainError("polynomial does not split into linear factors over Q(i)");
        int mult = 0;
        for (;;) {
            auto [q, rem] = divmod(remaining, Polynomial::linear(candidate));
            if (!rem.is_zero()) break;
            remaining = std::move(q);
            ++mult;
        }
        if (mult == 0) throw DomainError("repeated numeric root while factoring over Q(i)");
        out.emplace_back(candidate, mult);
    }
    if (remaining.degree() != 0) throw DomainError("polynomial does not split into linear factors over Q(i)");
    return out;
}

Complex RationalFunction::log_derivative(Complex z) const {
    const Complex n = numerator(z), d = denominator(z);
    return numerator.derivative()(z) / n - denominator.derivative()(z) / d;
}

}  // namespace residuum
