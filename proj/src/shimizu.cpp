#include "isobound/shimizu.hpp"

#include "isobound/transcendental.hpp"

#include <sstream>
#include <stdexcept>

namespace isobound {

namespace {

void require_norms(const std::vector<long>& norms, const char* what) {
    for (long q : norms)
        if (q < 2)
            throw std::invalid_argument(std::string(what) +
                                        ": prime-ideal norms must be >= 2");
}

}  // namespace

void validate(const FieldData& f) {
    if (f.degree_n < 1)
        throw std::invalid_argument("FieldData: degree n must be >= 1");
    if (f.abs_discriminant < 1)
        throw std::invalid_argument("FieldData: |discriminant| must be >= 1");
    if (f.degree_n >= 2 && f.abs_discriminant < 2)
        throw std::invalid_argument(
            "FieldData: a field of degree >= 2 has |discriminant| >= 2");
    if (f.zeta2 && f.zeta2->lo() < Rational(1))
        throw std::invalid_argument("FieldData: zeta_F(2) enclosure must have lo >= 1");
    require_norms(f.prime_norms, "FieldData");
    require_norms(f.ramified_norms, "FieldData");
}

const char* to_string(Consistency c) {
    switch (c) {
        case Consistency::Consistent: return "CONSISTENT";
        case Consistency::Inconsistent: return "INCONSISTENT";
        case Consistency::Unknown: return "UNKNOWN";
    }
    return "?";
}

Enclosure zeta2_enclosure(long n, const std::vector<long>& prime_norms, long B,
                          Precision p) {
    if (n < 1) throw std::invalid_argument("zeta2_enclosure: degree n must be >= 1");
    if (B < 2) throw std::invalid_argument("zeta2_enclosure: tail cutoff B must be >= 2");
    if (prime_norms.empty())
        throw std::invalid_argument(
            "zeta2_enclosure: empty prime-norm list (no Euler factors to multiply)");
    require_norms(prime_norms, "zeta2_enclosure");

    Rational truncated(1);
    for (long q : prime_norms) {
        const Rational q2 = Rational(q) * Rational(q);
        truncated = truncated * (q2 / (q2 - Rational(1)));
    }
    const Enclosure tail = enclose_exp(Rational(2 * n, B), Precision(p.bits + 4));
    const Rational hi = round_up_dyadic(truncated * tail.hi(), p.bits);
    return Enclosure(truncated, hi, "zeta2");
}

Enclosure covolume(const FieldData& f, Precision p) {
    validate(f);
    if (!f.zeta2)
        throw std::invalid_argument(
            "covolume: FieldData carries no zeta2 enclosure; build one with zeta2_enclosure");

    Rational ramified_product(1);
    for (long q : f.ramified_norms) ramified_product = ramified_product * Rational(q - 1);

    const Precision guard(p.bits + 16);
    const Enclosure droot = enclose_pow_three_halves(Rational(f.abs_discriminant), guard);
    const Enclosure denominator =
        pow_int(scale(Rational(2), enclose_pi(guard)), 2 * f.degree_n);
    const Enclosure numerator =
        scale(Rational(4) * ramified_product, mul(droot, *f.zeta2));
    Enclosure out = round_outward(div(numerator, denominator), p);
    out.set_label("covolume");
    return out;
}

Enclosure odlyzko_floor(long n, Precision p) {
    if (n < 1) throw std::invalid_argument("odlyzko_floor: degree n must be >= 1");
    const Enclosure expm70 = enclose_exp(Rational(-70), Precision(p.bits + 8));
    Enclosure out = round_outward(scale(Rational(50).pow(n), expm70), p);
    out.set_label("odlyzko-floor");
    return out;
}

InequalityReport odlyzko_constant_check(long n_max, Precision p) {
    if (n_max < 1)
        throw std::invalid_argument("odlyzko_constant_check: n_max must be >= 1");
    InequalityReport report;
    report.all_certified = true;

    {
        const Resolution r = resolve_order(
            [](Precision q) {
                return div(enclose_pow_three_halves(Rational(50), q),
                           pow_int(scale(Rational(2), enclose_pi(q)), 2));
            },
            [](Precision) { return Enclosure(Rational(1)); }, p.bits);
        report.items.push_back({"monotonicity factor 50^(3/2)/(2pi)^2 > 1",
                                r.order == Order::Greater, r.bits_used});
    }

    const Rational floor = Rational::pow10(-46);
    for (long n = 1; n <= n_max; ++n) {
        const Resolution r = resolve_order(
            [n](Precision q) {
                const Enclosure base =
                    scale(Rational(50).pow(n), enclose_exp(Rational(-70), q));
                return div(scale(Rational(4), pow_three_halves_of(base, q)),
                           pow_int(scale(Rational(2), enclose_pi(q)), 2 * n));
            },
            [&floor](Precision) { return Enclosure(floor); }, p.bits);
        std::ostringstream label;
        label << "4(50^" << n << " e^-70)^(3/2)/(2pi)^(2*" << n << ") > 10^-46";
        report.items.push_back({label.str(), r.order == Order::Greater, r.bits_used});
    }

    for (const InequalityItem& item : report.items)
        report.all_certified = report.all_certified && item.certified;
    return report;
}

Consistency shimizu_consistency(const FieldData& f,
                                const ShimizuConsistencyInput& c, Precision p) {
    if (c.d1 < 1 || c.d2 < 1)
        throw std::invalid_argument("shimizu_consistency: indices d1, d2 must be >= 1");
    if (c.abs_e_x.sign() <= 0)
        throw std::invalid_argument("shimizu_consistency: |e(X)| must be positive");

    const Enclosure lhs = scale(Rational(c.d2), covolume(f, p));
    const Rational rhs = Rational(c.d1) * c.abs_e_x;
    if (rhs < lhs.lo() || rhs > lhs.hi()) return Consistency::Inconsistent;
    const Rational one(1);
    const Rational tolerance =
        Rational::pow2(-(p.bits / 4)) * (rhs > one ? rhs : one);
    return lhs.width() <= tolerance ? Consistency::Consistent
                                    : Consistency::Unknown;
}

}  // namespace isobound
