#include "triality/exact.hpp"

#include <limits>

namespace triality {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::domain_error("integer out of range: " + to_string());
    return n.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², with ω² = −1 − ω
    Rational bd = b_ * o.b_;
    Rational a = a_ * o.a_ - bd;
    Rational b = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Eisenstein Eisenstein::inverse() const {
    if (is_zero()) throw std::domain_error("Eisenstein division by zero");
    Rational n = norm();
    Eisenstein c = conj();
    return {c.a_ / n, c.b_ / n};
}

std::string Eisenstein::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out;
    if (!a_.is_zero()) out = a_.to_string() + (b_.sign() > 0 ? "+" : "");
    if (b_ == Rational(1)) out += "ω";
    else if (b_ == Rational(-1)) out += "-ω";
    else out += b_.to_string() + "ω";
    return out;
}

Eisenstein eis_mul(const Eisenstein& x, const Eisenstein& y) { return x * y; }

Eisenstein eis_div(const Eisenstein& x, const Eisenstein& y) { return x / y; }

Eisenstein pow(const Eisenstein& base, unsigned exponent) {
    Eisenstein r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace triality
