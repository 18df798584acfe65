#include "isobound/bounds.hpp"

#include "isobound/transcendental.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace isobound {

namespace {

long checked_long(const Rational& x, const char* what) {
    if (!x.is_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    if (!x.num().fits_slong_p())
        throw std::invalid_argument(std::string(what) + " is out of range");
    return x.num().get_si();
}

// Negative integral Euler characteristic -> |e| as (Rational, long).
std::pair<Rational, long> hyperbolic_abs(const Rational& e, const char* who) {
    if (!e.is_integer())
        throw std::invalid_argument(std::string(who) +
                                    ": Euler characteristic of a curve must be an integer");
    if (e.sign() >= 0)
        throw std::invalid_argument(std::string(who) +
                                    ": not hyperbolic (Euler characteristic must be negative)");
    Rational a = e.abs();
    long al = checked_long(a, who);
    return {std::move(a), al};
}

void require_nonneg_genus(long g, const char* who) {
    if (g < 0) throw std::invalid_argument(std::string(who) + ": genus must be nonnegative");
}

void require_positive_degree(long d, const char* what) {
    if (d < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

bool holds_exact(const Rational& lhs, StepRel rel, const Rational& rhs) {
    switch (rel) {
        case StepRel::Le: return lhs <= rhs;
        case StepRel::Lt: return lhs < rhs;
        case StepRel::Eq: return lhs == rhs;
    }
    return false;
}

// Accumulates certificate steps; exact comparisons are decided immediately,
// enclosure comparisons refine by doubling precision up to the cap.
class ChainBuilder {
public:
    explicit ChainBuilder(CaseDiscriminator branch, Precision p)
        : start_bits_(p.bits) {
        cert_.branch = branch;
    }

    void input(std::string key, Rational value) {
        cert_.inputs.emplace_back(std::move(key), std::move(value));
    }

    void exact(std::string label, Rational lhs, StepRel rel, Rational rhs,
               std::string ref) {
        const bool ok = holds_exact(lhs, rel, rhs);
        cert_.steps.push_back(CertStep{std::move(label), std::move(lhs), rel,
                                       std::move(rhs), std::move(ref), ok, 0});
        all_ = all_ && ok;
    }

    // lhs is a transcendental quantity; certify lhs rel rhs by shrinking the
    // enclosure until its upper endpoint clears rhs.
    void certified(std::string label, const EnclosureFn& lhs, StepRel rel,
                   Rational rhs, std::string ref) {
        int bits = start_bits_;
        for (;;) {
            Enclosure e = lhs(Precision(bits));
            const bool ok =
                rel == StepRel::Lt ? e.hi() < rhs : e.hi() <= rhs;
            if (ok || bits >= kRefineCapBits) {
                cert_.steps.push_back(
                    CertStep{std::move(label), std::move(e), rel,
                             std::move(rhs), std::move(ref), ok, bits});
                all_ = all_ && ok;
                return;
            }
            bits = std::min(bits * 2, kRefineCapBits);
        }
    }

    BoundCertificate finish(Rational final_bound) {
        cert_.final_bound = std::move(final_bound);
        cert_.verified = all_;
        return std::move(cert_);
    }

private:
    BoundCertificate cert_;
    int start_bits_;
    bool all_ = true;
};

struct CurveData {
    long g = 0;
    Rational e;
    Rational abs_e;
    long abs_e_long = 0;
    Rational punctures;  // r = 2 - 2g - e
};

CurveData consistent_curve(long g, const Rational& e, const char* who) {
    require_nonneg_genus(g, who);
    auto [a, al] = hyperbolic_abs(e, who);
    CurveData c;
    c.g = g;
    c.e = e;
    c.abs_e = std::move(a);
    c.abs_e_long = al;
    c.punctures = Rational(2) - Rational(2 * g) - e;
    if (c.punctures.sign() < 0)
        throw std::invalid_argument(
            std::string(who) +
            ": genus and Euler characteristic need a nonnegative puncture count");
    if (Rational(g) > c.abs_e)
        throw std::invalid_argument(std::string(who) +
                                    ": genus exceeds |Euler characteristic|");
    return c;
}

std::string fmt_pow2(long k) {
    std::ostringstream os;
    os << "2^" << k;
    return os.str();
}

}  // namespace

HeightBound::HeightBound(Enclosure v, std::vector<std::string> prov)
    : value(std::move(v)), provenance(std::move(prov)) {
    if (provenance.empty())
        throw std::invalid_argument("HeightBound: provenance must be non-empty");
}

const char* to_string(CaseDiscriminator c) {
    switch (c) {
        case CaseDiscriminator::NonArithmetic: return "NON_ARITHMETIC";
        case CaseDiscriminator::ArithmeticAffine: return "ARITHMETIC_AFFINE";
        case CaseDiscriminator::ArithmeticProjective: return "ARITHMETIC_PROJECTIVE";
    }
    return "?";
}

CaseDiscriminator case_from_string(const std::string& s) {
    if (s == "NON_ARITHMETIC") return CaseDiscriminator::NonArithmetic;
    if (s == "ARITHMETIC_AFFINE") return CaseDiscriminator::ArithmeticAffine;
    if (s == "ARITHMETIC_PROJECTIVE") return CaseDiscriminator::ArithmeticProjective;
    throw std::invalid_argument("unknown case discriminator: " + s);
}

const char* to_string(StepRel rel) {
    switch (rel) {
        case StepRel::Le: return "<=";
        case StepRel::Lt: return "<";
        case StepRel::Eq: return "==";
    }
    return "?";
}

StepRel rel_from_string(const std::string& s) {
    if (s == "<=") return StepRel::Le;
    if (s == "<") return StepRel::Lt;
    if (s == "==") return StepRel::Eq;
    throw std::invalid_argument("unknown step relation: " + s);
}

IsogenyDegreeBounds isogeny_degree_bound_nonarithmetic(const Rational& e_x,
                                                       const Rational& e_y) {
    if (e_x.sign() >= 0 || e_y.sign() >= 0)
        throw std::invalid_argument(
            "isogeny_degree_bound_nonarithmetic: both Euler characteristics must be negative");
    return {Rational(42) * e_y.abs(), Rational(42) * e_x.abs()};
}

AffineCoverBounds arithmetic_affine_cover_bounds(long g_x, const Rational& e_x) {
    require_nonneg_genus(g_x, "arithmetic_affine_cover_bounds");
    if (e_x.sign() >= 0)
        throw std::invalid_argument(
            "arithmetic_affine_cover_bounds: Euler characteristic must be negative");
    return {Rational::pow10(46) * Rational::pow2(2 * g_x + 3) * e_x.abs(),
            Rational::pow2(2 * g_x + 2)};
}

IsogenyDegreeBounds arithmetic_projective_isogeny_bounds(long g_x, long g_y) {
    if (g_x < 2 || g_y < 2)
        throw std::invalid_argument(
            "arithmetic_projective_isogeny_bounds: both genera must be at least 2");
    const Rational common = Rational::pow10(48) * Rational::pow2(2 * g_x + 2 * g_y);
    return {common * Rational(2 * g_y - 2), common * Rational(2 * g_x - 2)};
}

HeightBound dfs_height_bound(const HeightBound& h_x, long g_x, long deg_f,
                             Precision p) {
    require_nonneg_genus(g_x, "dfs_height_bound");
    require_positive_degree(deg_f, "dfs_height_bound: deg_f");
    std::vector<std::string> prov = h_x.provenance;
    prov.push_back("de-franchis-severi");
    if (g_x == 0) return HeightBound(h_x.value, std::move(prov));

    const Precision guard(p.bits + 8);
    const Enclosure arg = scale(Rational(2) * Rational(deg_f), enclose_pi(guard));
    const Enclosure term = scale(Rational(g_x), log_of(arg, guard));
    Enclosure out = round_outward(add(h_x.value, term), p);
    out.set_label("height-bound");
    return HeightBound(std::move(out), std::move(prov));
}

HeightBound dfs_height_bound_sharp(const HeightBound& h_x, long g_x, long g_y,
                                   long deg_f, Precision p) {
    require_nonneg_genus(g_x, "dfs_height_bound_sharp");
    require_nonneg_genus(g_y, "dfs_height_bound_sharp");
    if (g_y > g_x)
        throw std::invalid_argument(
            "dfs_height_bound_sharp: a finite morphism cannot raise genus (g_Y <= g_X required)");
    require_positive_degree(deg_f, "dfs_height_bound_sharp: deg_f");
    std::vector<std::string> prov = h_x.provenance;
    prov.push_back("de-franchis-severi-sharp");
    const bool log2pi_term = g_x > g_y;
    const bool degree_term = g_y > 0 && deg_f > 1;
    if (!log2pi_term && !degree_term) return HeightBound(h_x.value, std::move(prov));

    const Precision guard(p.bits + 8);
    Enclosure acc = h_x.value;
    if (log2pi_term) {
        const Enclosure ln2pi = log_of(scale(Rational(2), enclose_pi(guard)), guard);
        acc = add(acc, scale(Rational(g_x - g_y, 2), ln2pi));
    }
    if (degree_term)
        acc = add(acc, scale(Rational(g_y), enclose_log(Rational(deg_f), guard)));
    Enclosure out = round_outward(acc, p);
    out.set_label("height-bound");
    return HeightBound(std::move(out), std::move(prov));
}

Rational belyi_height_bound(long deg_b) {
    require_positive_degree(deg_b, "belyi_height_bound: deg_B");
    return Rational::pow10(9) * Rational(deg_b).pow(6);
}

HeightBound height_bound_from_belyi(long deg_b) {
    return HeightBound(Enclosure(Rational(0), belyi_height_bound(deg_b), "height-bound"),
                       {"belyi-degree-height"});
}

Rational belyi_pullback_bound(const Rational& deg_b_x, const Rational& deg_pi) {
    if (!deg_b_x.is_integer() || !deg_pi.is_integer() || deg_b_x.sign() < 1 ||
        deg_pi.sign() < 1)
        throw std::invalid_argument("belyi_pullback_bound: degrees must be positive integers");
    return deg_pi * deg_b_x;
}

Rational affine_arithmetic_height_bound(const Rational& e_x) {
    auto [a, al] = hyperbolic_abs(e_x, "affine_arithmetic_height_bound");
    return Rational::pow10(300) * Rational::pow2(14 * al) * a.pow(6);
}

Rational main_theorem_bound(const Rational& e_x, const Rational& e_y,
                            long deg_b_x) {
    auto [ax, axl] = hyperbolic_abs(e_x, "main_theorem_bound: e_X");
    auto [ay, ayl] = hyperbolic_abs(e_y, "main_theorem_bound: e_Y");
    require_positive_degree(deg_b_x, "main_theorem_bound: deg_B_X");
    return Rational::pow10(338) * Rational::pow2(14 * axl + 14 * ayl) *
           (ax * ay * Rational(deg_b_x)).pow(6);
}

namespace {

EnclosureFn two_pi_fn() {
    return [](Precision q) { return scale(Rational(2), enclose_pi(q)); };
}

EnclosureFn log_fn(Rational arg) {
    return [arg = std::move(arg)](Precision q) { return enclose_log(arg, q); };
}

BoundCertificate replay_non_arithmetic(const CurveData& X, const CurveData& Y,
                                       long deg_b, Precision p) {
    ChainBuilder b(CaseDiscriminator::NonArithmetic, p);
    b.input("g_X", Rational(X.g));
    b.input("g_Y", Rational(Y.g));
    b.input("e_X", X.e);
    b.input("e_Y", Y.e);
    b.input("deg_B_X", Rational(deg_b));

    const Rational px = Rational(42) * Y.abs_e;   // bound on deg(pi_X)
    const Rational py = Rational(42) * X.abs_e;   // bound on deg(pi_Y)
    const Rational dbar = px * Rational(deg_b);   // bound on deg_B of the correspondence
    const Rational log_arg = Rational(10) * py;
    const Rational height =
        Rational::pow10(9) * dbar.pow(6) + dbar * log_arg;
    const Rational statement = main_theorem_bound(X.e, Y.e, deg_b);

    b.exact("g_X <= |e_X|", Rational(X.g), StepRel::Le, X.abs_e,
            "hyperbolic-genus-bound");
    b.exact("g_Y <= |e_Y|", Rational(Y.g), StepRel::Le, Y.abs_e,
            "hyperbolic-genus-bound");
    b.exact("deg_B bound 42|e_Y|deg_B_X on the correspondence", dbar, StepRel::Eq,
            dbar, "belyi-pullback");
    b.certified("2pi < 10", two_pi_fn(), StepRel::Lt, Rational(10),
                "two-pi-lt-ten");
    b.certified("log(10*42|e_X|) < 10*42|e_X|", log_fn(log_arg), StepRel::Lt,
                log_arg, "log-below-argument");
    b.exact("height <= 10^9 dbar^6 + dbar*10*42|e_X|", height, StepRel::Eq,
            height, "belyi-degree-height");
    b.exact("2^23 <= 10^8", Rational::pow2(23), StepRel::Le, Rational::pow10(8),
            "two23-le-ten8");
    b.exact("assembled height <= statement bound", height, StepRel::Le,
            statement, "statement-form");
    return b.finish(statement);
}

BoundCertificate replay_arithmetic_projective(const CurveData& X,
                                              const CurveData& Y, long deg_b,
                                              Precision p) {
    if (X.punctures.sign() != 0 || Y.punctures.sign() != 0)
        throw std::invalid_argument(
            "replay_theorem_certificate: projective branch requires e = 2 - 2g on both curves");
    // g >= 2 on both sides is forced by e < 0 and r = 0.
    ChainBuilder b(CaseDiscriminator::ArithmeticProjective, p);
    b.input("g_X", Rational(X.g));
    b.input("g_Y", Rational(Y.g));
    b.input("e_X", X.e);
    b.input("e_Y", Y.e);
    b.input("deg_B_X", Rational(deg_b));

    const IsogenyDegreeBounds iso = arithmetic_projective_isogeny_bounds(X.g, Y.g);
    const Rational m = Rational::pow2(2 * X.g + 2 * Y.g) * Rational(2 * X.g - 2);
    const Rational dbar = iso.bound_pi_x * Rational(deg_b);
    const Rational dtil = Rational::pow10(48) *
                          Rational::pow2(2 * X.abs_e_long + 2 * Y.abs_e_long) *
                          Y.abs_e * Rational(deg_b);
    const Rational log_arg = Rational::pow10(49) * m;  // 10 * bound(deg pi_Y)
    const Rational collected = Rational::pow10(50) * m * dtil.pow(6);
    const Rational euler_form =
        Rational::pow10(50) *
        Rational::pow2(2 * X.abs_e_long + 2 * Y.abs_e_long) * X.abs_e *
        dtil.pow(6);
    const Rational proof_final =
        Rational::pow10(338) *
        Rational::pow2(14 * X.abs_e_long + 14 * Y.abs_e_long) * X.abs_e *
        Y.abs_e.pow(6) * Rational(deg_b).pow(6);
    const Rational statement = main_theorem_bound(X.e, Y.e, deg_b);

    b.exact("g_X <= |e_X|", Rational(X.g), StepRel::Le, X.abs_e,
            "hyperbolic-genus-bound");
    b.exact("g_Y <= |e_Y|", Rational(Y.g), StepRel::Le, Y.abs_e,
            "hyperbolic-genus-bound");
    b.exact("42|e_Y| <= projective bound on deg(pi_X)", Rational(42) * Y.abs_e,
            StepRel::Le, iso.bound_pi_x, "affine-arithmetic-bounds-dominate");
    b.exact("42|e_X| <= projective bound on deg(pi_Y)", Rational(42) * X.abs_e,
            StepRel::Le, iso.bound_pi_y, "affine-arithmetic-bounds-dominate");
    b.exact("pullback deg_B bound <= euler-form bound", dbar, StepRel::Le, dtil,
            "belyi-pullback");
    b.certified("2pi < 10", two_pi_fn(), StepRel::Lt, Rational(10),
                "two-pi-lt-ten");
    b.certified("log(10^49 M) < 10^49 M", log_fn(log_arg), StepRel::Lt, log_arg,
                "log-below-argument");
    b.exact("10^9 dtil^6 + 10^49 M dtil^6 <= 10^50 M dtil^6",
            Rational::pow10(9) * dtil.pow(6) + log_arg * dtil.pow(6),
            StepRel::Le, collected, "constant-collection");
    b.exact("10^50 M dtil^6 <= euler-characteristic form", collected,
            StepRel::Le, euler_form, "genus-to-euler");
    b.exact("euler form == 10^338 2^(14|e_X|+14|e_Y|) |e_X| |e_Y|^6 deg_B^6",
            euler_form, StepRel::Eq, proof_final, "constant-collection");
    b.exact("2^23 <= 10^8", Rational::pow2(23), StepRel::Le, Rational::pow10(8),
            "two23-le-ten8");
    b.exact("proof bound <= statement bound", proof_final, StepRel::Le,
            statement, "statement-form");
    return b.finish(statement);
}

BoundCertificate replay_arithmetic_affine(const CurveData& X, Precision p) {
    if (X.punctures.sign() <= 0)
        throw std::invalid_argument(
            "replay_theorem_certificate: affine branch requires at least one puncture on X");
    ChainBuilder b(CaseDiscriminator::ArithmeticAffine, p);
    b.input("g_X", Rational(X.g));
    b.input("e_X", X.e);

    const AffineCoverBounds cov = arithmetic_affine_cover_bounds(X.g, X.e);
    const Rational power = Rational::pow2(2 * X.g + 5);
    const Rational height =
        Rational::pow10(9) * cov.belyi_degree_bound.pow(6) +
        cov.belyi_degree_bound * power;
    const Rational absorbed =
        Rational::pow10(9) * power * cov.belyi_degree_bound.pow(6);
    const Rational collected = Rational::pow10(285) *
                               Rational::pow2(14 * X.g + 23) * X.abs_e.pow(6);
    const Rational euler_form = Rational::pow10(285) *
                                Rational::pow2(14 * X.abs_e_long + 23) *
                                X.abs_e.pow(6);
    const Rational statement = affine_arithmetic_height_bound(X.e);

    b.exact("g_X <= |e_X|", Rational(X.g), StepRel::Le, X.abs_e,
            "hyperbolic-genus-bound");
    b.certified("log(2pi*" + fmt_pow2(2 * X.g + 2) + ") <= " + fmt_pow2(2 * X.g + 5),
                [g = X.g](Precision q) {
                    const Enclosure arg =
                        scale(Rational::pow2(2 * g + 3), enclose_pi(q));
                    return log_of(arg, q);
                },
                StepRel::Le, power, "log-two-pi-power");
    b.exact("height <= 10^9 B1^6 + B1*" + fmt_pow2(2 * X.g + 5), height,
            StepRel::Eq, height, "belyi-degree-height");
    b.exact("absorb linear term into the power", height, StepRel::Le, absorbed,
            "power-absorption");
    b.exact("collected == 10^285 2^(14g+23) |e|^6", absorbed, StepRel::Eq,
            collected, "constant-collection");
    b.exact("genus to euler characteristic", collected, StepRel::Le, euler_form,
            "genus-to-euler");
    b.exact("2^23 <= 10^8", Rational::pow2(23), StepRel::Le, Rational::pow10(8),
            "two23-le-ten8");
    b.exact("proof bound <= statement bound", euler_form, StepRel::Le, statement,
            "statement-form");
    return b.finish(statement);
}

}  // namespace

BoundCertificate replay_theorem_certificate(CaseDiscriminator branch, long g_x,
                                            long g_y, const Rational& e_x,
                                            const Rational& e_y, long deg_b_x,
                                            Precision p) {
    require_positive_degree(deg_b_x, "replay_theorem_certificate: deg_B_X");
    const CurveData X = consistent_curve(g_x, e_x, "replay_theorem_certificate: X");
    if (branch == CaseDiscriminator::ArithmeticAffine)
        return replay_arithmetic_affine(X, p);
    const CurveData Y = consistent_curve(g_y, e_y, "replay_theorem_certificate: Y");
    if (branch == CaseDiscriminator::NonArithmetic)
        return replay_non_arithmetic(X, Y, deg_b_x, p);
    return replay_arithmetic_projective(X, Y, deg_b_x, p);
}

bool verify_certificate_steps(const BoundCertificate& cert) {
    bool all = true;
    for (const CertStep& s : cert.steps) {
        bool ok = false;
        if (std::holds_alternative<Rational>(s.lhs) &&
            std::holds_alternative<Rational>(s.rhs)) {
            ok = holds_exact(std::get<Rational>(s.lhs), s.rel,
                             std::get<Rational>(s.rhs));
        } else {
            // Compare conservative endpoints: an enclosure clears an upper
            // bound through its hi endpoint and supports a lower bound
            // through its lo endpoint.
            const auto upper = [](const StepValue& v) {
                return std::holds_alternative<Rational>(v)
                           ? std::get<Rational>(v)
                           : std::get<Enclosure>(v).hi();
            };
            const auto lower = [](const StepValue& v) {
                return std::holds_alternative<Rational>(v)
                           ? std::get<Rational>(v)
                           : std::get<Enclosure>(v).lo();
            };
            switch (s.rel) {
                case StepRel::Le: ok = upper(s.lhs) <= lower(s.rhs); break;
                case StepRel::Lt: ok = upper(s.lhs) < lower(s.rhs); break;
                case StepRel::Eq:
                    ok = upper(s.lhs) == lower(s.rhs) &&
                         lower(s.lhs) == upper(s.rhs);
                    break;
            }
        }
        if (ok != s.certified) return false;
        all = all && ok;
    }
    return all && cert.verified;
}

InequalityReport verify_proof_inequalities(long g_min, long g_max, Precision p) {
    if (g_min < 0 || g_max < g_min)
        throw std::invalid_argument(
            "verify_proof_inequalities: need 0 <= g_min <= g_max");
    InequalityReport report;
    report.all_certified = true;

    const auto certify_upper = [&](std::string label, const EnclosureFn& fn,
                                   const Rational& rhs) {
        int bits = p.bits;
        for (;;) {
            const Enclosure e = fn(Precision(bits));
            if (e.hi() <= rhs || bits >= kRefineCapBits) {
                report.items.push_back({std::move(label), e.hi() <= rhs, bits});
                return;
            }
            bits = std::min(bits * 2, kRefineCapBits);
        }
    };

    for (long g = g_min; g <= g_max; ++g) {
        std::ostringstream label;
        label << "log(2pi*" << fmt_pow2(2 * g + 2) << ") <= " << fmt_pow2(2 * g + 5);
        certify_upper(label.str(),
                      [g](Precision q) {
                          return log_of(scale(Rational::pow2(2 * g + 3),
                                              enclose_pi(q)),
                                        q);
                      },
                      Rational::pow2(2 * g + 5));
    }

    {
        const Resolution r = resolve_order(
            [](Precision q) { return enclose_pow_three_halves(Rational(50), q); },
            [](Precision q) { return pow_int(scale(Rational(2), enclose_pi(q)), 2); },
            p.bits);
        report.items.push_back(
            {"50^(3/2) > (2pi)^2", r.order == Order::Greater, r.bits_used});
    }

    const Rational floor = Rational::pow10(-46);
    for (long n = g_min; n <= g_max; ++n) {
        const Resolution r = resolve_order(
            [n](Precision q) {
                const Enclosure base =
                    scale(Rational(50).pow(n), enclose_exp(Rational(-70), q));
                Enclosure v = scale(Rational(4), pow_three_halves_of(base, q));
                if (n > 0)
                    v = div(v, pow_int(scale(Rational(2), enclose_pi(q)), 2 * n));
                return v;
            },
            [&floor](Precision) { return Enclosure(floor); }, p.bits);
        std::ostringstream label;
        label << "4(50^" << n << " e^-70)^(3/2)/(2pi)^(2*" << n << ") > 10^-46";
        report.items.push_back(
            {label.str(), r.order == Order::Greater, r.bits_used});
    }

    for (const InequalityItem& item : report.items)
        report.all_certified = report.all_certified && item.certified;
    return report;
}

}  // namespace isobound
