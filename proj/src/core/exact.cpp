#include "residuum/exact.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "residuum/error.hpp"

namespace residuum {

ExactComplex::ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    const Rational n = o.norm();
    if (n == 0) throw DomainError("division by zero in Q(i)");
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string ExactComplex::str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag;
    const Rational mag = abs(im_);
    if (mag != 1) imag = mag.get_str() + " ";
    imag += "i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
    return re_.get_str() + (im_ < 0 ? " - " : " + ") + imag;
}

bool canonical_less(const ExactComplex& a, const ExactComplex& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

namespace {

struct Term {
    bool negative = false;
    std::string number;  // empty means 1
    bool imaginary = false;
};

// Splits `a + b i`-style text into signed terms. Whitespace and a `*` before `i` are ignored.
std::vector<Term> split_terms(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s.push_back(c);
    if (s.empty()) throw ParseError("empty complex literal");

    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        Term t;
        bool have_sign = false;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') t.negative = !t.negative;
            have_sign = true;
            ++pos;
        }
        if (!terms.empty() && !have_sign) throw ParseError("missing operator in complex literal '" + s + "'");
        const std::size_t start = pos;
        while (pos < s.size()) {
            const char c = s[pos];
            const bool exp_sign = (c == '+' || c == '-') && pos > start && (s[pos - 1] == 'e' || s[pos - 1] == 'E');
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == 'e' || c == 'E' ||
                exp_sign) {
                ++pos;
            } else {
                break;
            }
        }
        t.number = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == 'i') {
            t.imaginary = true;
            ++pos;
        }
        if (t.number.empty() && !t.imaginary) throw ParseError("bad complex literal '" + s + "'");
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    std::string s(token);
    if (s.empty()) return Rational(1);
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    }
    Rational value;
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string p = s.substr(0, slash);
        const std::string q = s.substr(slash + 1);
        auto digits = [](const std::string& d) {
            if (d.empty()) return false;
            for (char c : d)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        if (!digits(p) || !digits(q)) throw ParseError("bad rational '" + std::string(token) + "'");
        mpz_class num(p), den(q);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
        value = Rational(num, den);
        value.canonicalize();
    } else {
        // decimal with optional exponent, converted exactly
        std::string mantissa = s;
        long exponent = 0;
        const auto e = s.find_first_of("eE");
        if (e != std::string::npos) {
            mantissa = s.substr(0, e);
            const std::string ex = s.substr(e + 1);
            try {
                std::size_t used = 0;
                exponent = std::stol(ex, &used);
                if (used != ex.size()) throw ParseError("bad exponent");
            } catch (const std::exception&) {
                throw ParseError("bad number '" + std::string(token) + "'");
            }
        }
        std::string digits;
        long frac = 0;
        bool seen_dot = false;
        for (char c : mantissa) {
            if (c == '.') {
                if (seen_dot) throw ParseError("bad number '" + std::string(token) + "'");
                seen_dot = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                if (seen_dot) ++frac;
            } else {
                throw ParseError("bad number '" + std::string(token) + "'");
            }
        }
        if (digits.empty()) throw ParseError("bad number '" + std::string(token) + "'");
        exponent -= frac;
        mpz_class num(digits);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        value = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

ExactComplex ExactComplex::parse(std::string_view text) {
    Rational re = 0, im = 0;
    for (const Term& t : split_terms(text)) {
        Rational v = parse_rational(t.number);
        if (t.negative) v = -v;
        (t.imaginary ? im : re) += v;
    }
    return ExactComplex(re, im);
}

Complex parse_complex(std::string_view text) {
    double re = 0, im = 0;
    for (const Term& t : split_terms(text)) {
        double v = 1.0;
        if (!t.number.empty()) {
            if (t.number.find('/') != std::string::npos) {
                v = parse_rational(t.number).get_d();
            } else {
                std::size_t used = 0;
                try {
                    v = std::stod(t.number, &used);
                } catch (const std::exception&) {
                    throw ParseError("bad number '" + t.number + "'");
                }
                if (used != t.number.size()) throw ParseError("bad number '" + t.number + "'");
            }
        }
        if (t.negative) v = -v;
        (t.imaginary ? im : re) += v;
    }
    return {re, im};
}

std::string format_real(double x, int digits) {
    if (x == 0) x = 0;  // drop negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string format_complex(Complex z, int digits) {
    const double im = z.imag() == 0 ? 0.0 : z.imag();
    std::string out = format_real(z.real(), digits);
    if (im == 0) return out;
    out += im < 0 ? "-" : "+";
    out += format_real(im < 0 ? -im : im, digits) + "i";
    return out;
}

}  // namespace residuum
