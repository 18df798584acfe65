#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace isobound {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper over GMP's mpq_class; every constructor
// canonicalizes, every operation preserves canonical form.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpz_class& n) : q_(n) {}

    // Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
    // malformed input or zero denominator.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const;
    // Throws std::domain_error on zero.
    Rational inverse() const;
    // Integer exponent, negative allowed for nonzero base.
    Rational pow(long e) const;

    static Rational pow2(long k);
    static Rational pow10(long k);

    // Largest integer <= value (floor) and smallest >= value (ceil).
    mpz_class floor() const;
    mpz_class ceil() const;

    // For nonzero value: the unique e with 2^e <= |value| < 2^{e+1}.
    // Throws std::domain_error on zero.
    long binade() const;

    // Canonical "p/q" form, denominator always printed ("3/1", "-1/42").
    std::string to_string() const;
    // Truncated scientific approximation with sig_digits significant digits,
    // e.g. "2.68435456e+346". Display only; never feeds back into arithmetic.
    std::string to_decimal(int sig_digits) const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace isobound
