#include "isobound/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace isobound {

Precision::Precision(int b) : bits(b) {
    if (b < 8 || b > (1 << 20))
        throw std::invalid_argument("Precision: bits out of range [8, 2^20]");
}

const char* to_string(Order o) {
    switch (o) {
        case Order::Less: return "LESS";
        case Order::Greater: return "GREATER";
        default: return "UNKNOWN";
    }
}

Enclosure::Enclosure(Rational lo, Rational hi, std::string label)
    : lo_(std::move(lo)), hi_(std::move(hi)), label_(std::move(label)) {
    if (hi_ < lo_) throw std::invalid_argument("Enclosure: hi < lo");
}

Enclosure operator-(const Enclosure& a) {
    return Enclosure(-a.hi(), -a.lo(), a.label());
}

Enclosure add(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo() + b.lo(), a.hi() + b.hi());
}

Enclosure sub(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo() - b.hi(), a.hi() - b.lo());
}

Enclosure mul(const Enclosure& a, const Enclosure& b) {
    const Rational p1 = a.lo() * b.lo();
    const Rational p2 = a.lo() * b.hi();
    const Rational p3 = a.hi() * b.lo();
    const Rational p4 = a.hi() * b.hi();
    return Enclosure(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

Enclosure div(const Enclosure& a, const Enclosure& b) {
    if (b.contains(Rational(0)))
        throw std::domain_error("Enclosure: division by interval containing zero");
    return mul(a, Enclosure(b.hi().inverse(), b.lo().inverse()));
}

Enclosure scale(const Rational& c, const Enclosure& a) {
    if (c.sign() >= 0) return Enclosure(c * a.lo(), c * a.hi());
    return Enclosure(c * a.hi(), c * a.lo());
}

Enclosure pow_int(const Enclosure& a, long k) {
    if (k < 0) throw std::invalid_argument("Enclosure: pow_int needs k >= 0");
    if (k == 0) return Enclosure(Rational(1));
    const Rational pl = a.lo().pow(k), ph = a.hi().pow(k);
    if (a.lo().sign() >= 0) return Enclosure(pl, ph);
    if (a.hi().sign() <= 0)
        return k % 2 == 0 ? Enclosure(ph, pl) : Enclosure(pl, ph);
    // straddles zero
    if (k % 2 == 1) return Enclosure(pl, ph);
    return Enclosure(Rational(0), std::max(pl, ph));
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
    return Enclosure(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

namespace {

// Shared grid selection: step 2^-s with s = bits - 1 - binade(x), so that
// |x| / 2^-s is in [2^{bits-1}, 2^bits). Powers of two sit on every grid,
// which keeps the rounding monotone across binade boundaries.
long dyadic_shift(const Rational& x, int bits) {
    return static_cast<long>(bits) - 1 - x.binade();
}

Rational from_scaled(const mpz_class& m, long s) {
    if (s >= 0) {
        mpz_class den = 1;
        den <<= s;
        return Rational(m, den);
    }
    mpz_class num = m;
    num <<= -s;
    return Rational(num);
}

}  // namespace

Rational round_down_dyadic(const Rational& x, int bits) {
    if (bits < 1) throw std::invalid_argument("round_down_dyadic: bits < 1");
    if (x.is_zero()) return x;
    const long s = dyadic_shift(x, bits);
    const Rational scaled = x * Rational::pow2(s);
    return from_scaled(scaled.floor(), s);
}

Rational round_up_dyadic(const Rational& x, int bits) {
    if (bits < 1) throw std::invalid_argument("round_up_dyadic: bits < 1");
    if (x.is_zero()) return x;
    const long s = dyadic_shift(x, bits);
    const Rational scaled = x * Rational::pow2(s);
    return from_scaled(scaled.ceil(), s);
}

Enclosure round_outward(const Enclosure& a, Precision p) {
    return Enclosure(round_down_dyadic(a.lo(), p.bits),
                     round_up_dyadic(a.hi(), p.bits), a.label());
}

Order certified_compare(const Enclosure& a, const Enclosure& b) {
    if (a.hi() < b.lo()) return Order::Less;
    if (a.lo() > b.hi()) return Order::Greater;
    return Order::Unknown;
}

Resolution resolve_order(const EnclosureFn& lhs, const EnclosureFn& rhs,
                         int start_bits, int cap_bits) {
    int bits = std::max(start_bits, 8);
    while (true) {
        const Precision p(bits);
        const Order o = certified_compare(lhs(p), rhs(p));
        if (o != Order::Unknown) return {o, bits};
        if (bits >= cap_bits) return {Order::Unknown, bits};
        bits = std::min(bits * 2, cap_bits);
    }
}

}  // namespace isobound
