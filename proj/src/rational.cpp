#include "isobound/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace isobound {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    const Rational base = e < 0 ? inverse() : *this;
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                                  : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    Rational r;
    r.q_ = mpq_class(n, d);  // powers of a canonical fraction stay coprime
    return r;
}

Rational Rational::pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) return Rational(p);
    return Rational(mpz_class(1), p);
}

Rational Rational::pow10(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) return Rational(p);
    return Rational(mpz_class(1), p);
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

long Rational::binade() const {
    if (is_zero()) throw std::domain_error("Rational: binade of zero");
    const mpz_class a = ::abs(num());
    const mpz_class& b = den();
    // bit-length difference lands within 1 of the true exponent; fix up by
    // comparing against the binade boundaries exactly.
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    auto less_than_pow2 = [&](long k) {
        // |x| < 2^k  <=>  a < b * 2^k
        mpz_class lhs = a, rhs = b;
        if (k >= 0) rhs <<= k; else lhs <<= -k;
        return lhs < rhs;
    };
    while (less_than_pow2(e)) --e;
    while (!less_than_pow2(e + 1)) ++e;
    return e;
}

std::string Rational::to_string() const {
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_decimal(int sig_digits) const {
    if (sig_digits < 1) throw std::invalid_argument("Rational: need >= 1 digit");
    if (is_zero()) return "0";
    const Rational a = abs();
    // decimal exponent E with 10^E <= |x| < 10^{E+1}
    long e10 = static_cast<long>(static_cast<double>(binade()) * 0.30102999566398
    );
    while (a >= pow10(e10 + 1)) ++e10;
    while (a < pow10(e10)) --e10;
    const Rational scaled = a * pow10(static_cast<long>(sig_digits) - 1 - e10);
    std::string digits = scaled.floor().get_str();
    std::string out = sign() < 0 ? "-" : "";
    out += digits.substr(0, 1);
    if (sig_digits > 1) out += "." + digits.substr(1);
    out += "e";
    out += (e10 < 0) ? "-" : "+";
    const long ae = e10 < 0 ? -e10 : e10;
    if (ae < 10) out += "0";
    out += std::to_string(ae);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace isobound
