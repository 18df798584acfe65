#include "isobound/transcendental.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace isobound {

namespace {

// atanh(u) = sum u^(2j+1)/(2j+1) for 0 < u < 1. All terms positive; the tail
// after the last added term is at most next_term / (1 - u^2). Adding one more
// term always shrinks the bracket, so deeper truncations nest.
Enclosure atanh_bracket(const Rational& u, const Rational& target) {
    const Rational u2 = u * u;
    const Rational geom = (Rational(1) - u2).inverse();
    Rational sum(0);
    Rational upow = u;  // u^(2j+1)
    long j = 0;
    while (true) {
        sum += upow / Rational(2 * j + 1);
        const Rational next = upow * u2 / Rational(2 * j + 3);
        const Rational rem = next * geom;
        if (rem <= target) return Enclosure(sum, sum + rem);
        upow *= u2;
        ++j;
    }
}

// atan(u) = sum (-1)^j u^(2j+1)/(2j+1) for 0 < u <= 1/2. Terms decrease, so
// partial sums alternate around the limit; stopping after a subtracted term
// gives [S, S + next]. Consecutive brackets are the classic nested ladder.
Enclosure atan_bracket(const Rational& u, const Rational& target) {
    const Rational u2 = u * u;
    Rational sum = u;
    Rational upow = u;
    long j = 0;
    while (true) {
        upow *= u2;
        ++j;
        const Rational term = upow / Rational(2 * j + 1);
        if (j % 2 == 1) {
            sum -= term;
            const Rational next = upow * u2 / Rational(2 * j + 3);
            if (next <= target) return Enclosure(sum, sum + next);
        } else {
            sum += term;
        }
    }
}

int bit_length(long k) {
    if (k < 0) k = -k;
    int n = 0;
    while (k > 0) {
        k >>= 1;
        ++n;
    }
    return n;
}

Enclosure log2_raw(int series_bits) {
    const Rational target = Rational::pow2(-(series_bits + 4));
    return scale(Rational(2), atanh_bracket(Rational(1, 3), target));
}

std::mutex cache_mutex;

Enclosure cached(std::map<int, Enclosure>& cache, int key,
                 Enclosure (*make)(int)) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make(key)).first;
    return it->second;
}

Enclosure log2_at(int series_bits) {
    static std::map<int, Enclosure> cache;
    return cached(cache, series_bits, &log2_raw);
}

Enclosure pi_raw(int bits) {
    const Rational target = Rational::pow2(-(bits + 8));
    const Enclosure a5 = atan_bracket(Rational(1, 5), target);
    const Enclosure a239 = atan_bracket(Rational(1, 239), target);
    Enclosure raw = sub(scale(Rational(16), a5), scale(Rational(4), a239));
    raw.set_label("pi");
    return round_outward(raw, Precision(bits + 6));
}

Enclosure pi_at(int bits) {
    static std::map<int, Enclosure> cache;
    return cached(cache, bits, &pi_raw);
}

}  // namespace

Enclosure enclose_log(const Rational& x, Precision p) {
    if (x.sign() <= 0) throw std::domain_error("enclose_log: argument <= 0");
    const std::string label = "log(" + x.to_string() + ")";
    if (x == Rational(1)) return Enclosure(Rational(0), Rational(0), label);

    // reduce to y = x / 2^k in [3/4, 3/2)
    long k = x.binade();
    Rational y = x * Rational::pow2(-k);
    if (y >= Rational(3, 2)) {
        ++k;
        y *= Rational(1, 2);
    }

    Enclosure acc(Rational(0));
    const Rational t = (y - Rational(1)) / (y + Rational(1));
    if (!t.is_zero()) {
        const Rational target = Rational::pow2(-(p.bits + 8));
        const Enclosure a = atanh_bracket(t.abs(), target);
        acc = t.sign() > 0 ? scale(Rational(2), a) : scale(Rational(-2), a);
    }
    if (k != 0) {
        const Enclosure l2 = log2_at(p.bits + 8 + bit_length(k));
        acc = add(acc, scale(Rational(k), l2));
    }
    acc.set_label(label);
    return round_outward(acc, Precision(p.bits + 6));
}

Enclosure enclose_log2(Precision p) {
    Enclosure e = round_outward(log2_at(p.bits + 8), Precision(p.bits + 6));
    e.set_label("log(2)");
    return e;
}

Enclosure enclose_pi(Precision p) { return pi_at(p.bits); }

Enclosure enclose_exp(const Rational& x, Precision p) {
    const std::string label = "exp(" + x.to_string() + ")";
    if (x.is_zero()) return Enclosure(Rational(1), Rational(1), label);

    // scale |x| down to s in (0, 1/2]
    Rational s = x.abs();
    long m = 0;
    while (s > Rational(1, 2)) {
        s *= Rational(1, 2);
        ++m;
    }

    // Taylor sum of exp(s); term ratio s/(j+1) <= s, so the tail after the
    // last term is at most next / (1 - s) and deeper truncations nest.
    const Rational target = Rational::pow2(-(p.bits + 8 + 2 * m));
    const Rational geom = (Rational(1) - s).inverse();
    Rational sum(1);
    Rational term(1);
    long j = 0;
    Enclosure acc(Rational(0));
    while (true) {
        term *= s / Rational(j + 1);
        ++j;
        sum += term;
        const Rational next = term * s / Rational(j + 1);
        const Rational rem = next * geom;
        if (rem <= target) {
            acc = Enclosure(sum, sum + rem);
            break;
        }
    }

    for (long i = 1; i <= m; ++i) {
        acc = Enclosure(acc.lo() * acc.lo(), acc.hi() * acc.hi());
        acc = round_outward(acc, Precision(p.bits + 10 + 2 * static_cast<int>(m - i)));
    }
    if (x.sign() < 0) acc = Enclosure(acc.hi().inverse(), acc.lo().inverse());
    acc.set_label(label);
    return round_outward(acc, Precision(p.bits + 6));
}

Enclosure enclose_sqrt(const Rational& x, Precision p) {
    if (x.sign() < 0) throw std::domain_error("enclose_sqrt: argument < 0");
    const std::string label = "sqrt(" + x.to_string() + ")";
    if (x.is_zero()) return Enclosure(Rational(0), Rational(0), label);

    const long w = p.bits + 4;
    mpz_class n = x.num() * x.den();
    n <<= 2 * w;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    mpz_class den = x.den();
    den <<= w;
    if (r * r == n) {
        // x is the square of a rational; the enclosure collapses to a point
        // (independent of the working precision, so nesting is unaffected).
        const Rational exact(r, den);
        return Enclosure(exact, exact, label);
    }
    const Rational lo(r, den), hi(r + 1, den);
    if (lo * lo > x || hi * hi < x)
        throw std::logic_error("enclose_sqrt: bracket check failed");
    Enclosure acc(lo, hi, label);
    return round_outward(acc, Precision(p.bits + 6));
}

Enclosure enclose_pow_three_halves(const Rational& x, Precision p) {
    Enclosure e = enclose_sqrt(x.pow(3), p);
    e.set_label("pow(" + x.to_string() + ", 3/2)");
    return e;
}

Enclosure log_of(const Enclosure& x, Precision p) {
    if (x.lo().sign() <= 0)
        throw std::domain_error("log_of: interval not strictly positive");
    if (x.is_point()) return enclose_log(x.lo(), p);
    return Enclosure(enclose_log(x.lo(), p).lo(), enclose_log(x.hi(), p).hi());
}

Enclosure exp_of(const Enclosure& x, Precision p) {
    if (x.is_point()) return enclose_exp(x.lo(), p);
    return Enclosure(enclose_exp(x.lo(), p).lo(), enclose_exp(x.hi(), p).hi());
}

Enclosure sqrt_of(const Enclosure& x, Precision p) {
    if (x.lo().sign() < 0)
        throw std::domain_error("sqrt_of: interval has negative part");
    if (x.is_point()) return enclose_sqrt(x.lo(), p);
    return Enclosure(enclose_sqrt(x.lo(), p).lo(), enclose_sqrt(x.hi(), p).hi());
}

Enclosure pow_three_halves_of(const Enclosure& x, Precision p) {
    if (x.lo().sign() < 0)
        throw std::domain_error("pow_three_halves_of: interval has negative part");
    if (x.is_point()) return enclose_pow_three_halves(x.lo(), p);
    return Enclosure(enclose_pow_three_halves(x.lo(), p).lo(),
                     enclose_pow_three_halves(x.hi(), p).hi());
}

}  // namespace isobound
