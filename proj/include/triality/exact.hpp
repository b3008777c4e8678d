#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace triality {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Exact conversion; throws std::domain_error when not an integer or out of range.
    std::int64_t to_int64() const;

    std::string to_string() const { return value_.get_str(); }
    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

private:
    mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);

/// Element a + bω of ℚ(ω), ω a primitive cube root of unity (ω² = −1 − ω).
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(Rational a) : a_(std::move(a)) {}
    Eisenstein(long a) : a_(a) {}
    Eisenstein(int a) : a_(a) {}
    Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Eisenstein omega() { return {0, 1}; }
    static Eisenstein omega_squared() { return {-1, -1}; }

    const Rational& real_part() const { return a_; }   // coefficient of 1
    const Rational& omega_part() const { return b_; }  // coefficient of ω

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// The Galois conjugate a + bω² = (a − b) − bω.
    Eisenstein conj() const { return {a_ - b_, -b_}; }
    /// Field norm a² − ab + b², equal to x·conj(x).
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    Eisenstein inverse() const;

    std::string to_string() const;

    Eisenstein operator-() const { return {-a_, -b_}; }
    Eisenstein& operator+=(const Eisenstein& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Eisenstein& operator-=(const Eisenstein& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Eisenstein& operator*=(const Eisenstein& o);
    Eisenstein& operator/=(const Eisenstein& o) { return *this *= o.inverse(); }

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
    friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
    friend Eisenstein operator/(Eisenstein x, const Eisenstein& y) { return x /= y; }

    friend bool operator==(const Eisenstein&, const Eisenstein&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << x.to_string(); }

private:
    Rational a_;
    Rational b_;
};

Eisenstein eis_mul(const Eisenstein& x, const Eisenstein& y);
/// Throws std::domain_error when y is zero.
Eisenstein eis_div(const Eisenstein& x, const Eisenstein& y);
Eisenstein pow(const Eisenstein& base, unsigned exponent);

}  // namespace triality
