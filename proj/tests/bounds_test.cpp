#include "isobound/bounds.hpp"

#include <doctest.h>

#include "isobound/transcendental.hpp"

using namespace isobound;

namespace {

// 40 frozen significant digits of ln(2pi), 2*ln(2pi) and 1 + ln(4pi); the
// true values lie in [D, D + 10^(e10-39)).
Enclosure frozen40(const char* digits, long e10) {
    const mpz_class d(digits);
    const Rational ulp = Rational::pow10(e10 - 39);
    const Rational D = Rational(d) * ulp;
    return Enclosure(D, D + ulp);
}

const Enclosure kLn2Pi = frozen40("1837877066409345483560659472811235279722", 0);
const Enclosure kTwoLn2Pi = frozen40("3675754132818690967121318945622470559445", 0);
const Enclosure kOnePlusLn4Pi = frozen40("3531024246969290792977891594269411847798", 0);

HeightBound zero_height() {
    return HeightBound(Enclosure(Rational(0)), {"test-seed"});
}

}  // namespace

TEST_CASE("non-arithmetic isogeny degree bounds") {
    const IsogenyDegreeBounds b = isogeny_degree_bound_nonarithmetic(Rational(-1), Rational(-1));
    CHECK(b.bound_pi_x == Rational(42));
    CHECK(b.bound_pi_y == Rational(42));
    const IsogenyDegreeBounds c = isogeny_degree_bound_nonarithmetic(Rational(-3), Rational(-1));
    CHECK(c.bound_pi_x == Rational(42));
    CHECK(c.bound_pi_y == Rational(126));
    const IsogenyDegreeBounds d =
        isogeny_degree_bound_nonarithmetic(Rational(-1, 42), Rational(-1, 6));
    CHECK(d.bound_pi_x == Rational(7));
    CHECK(d.bound_pi_y == Rational(1));
    CHECK_THROWS_AS(isogeny_degree_bound_nonarithmetic(Rational(0), Rational(-1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(isogeny_degree_bound_nonarithmetic(Rational(-1), Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("arithmetic affine cover bounds") {
    const AffineCoverBounds a = arithmetic_affine_cover_bounds(0, Rational(-1));
    CHECK(a.belyi_degree_bound == Rational(8) * Rational::pow10(46));
    CHECK(a.cover_degree_bound == Rational(4));
    const AffineCoverBounds b = arithmetic_affine_cover_bounds(1, Rational(-1));
    CHECK(b.belyi_degree_bound == Rational(32) * Rational::pow10(46));
    CHECK(b.cover_degree_bound == Rational(16));
    CHECK_THROWS_AS(arithmetic_affine_cover_bounds(0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_affine_cover_bounds(-1, Rational(-1)), std::invalid_argument);
}

TEST_CASE("arithmetic projective isogeny bounds") {
    const IsogenyDegreeBounds a = arithmetic_projective_isogeny_bounds(2, 2);
    CHECK(a.bound_pi_x == Rational(512) * Rational::pow10(48));
    CHECK(a.bound_pi_y == Rational(512) * Rational::pow10(48));
    const IsogenyDegreeBounds b = arithmetic_projective_isogeny_bounds(2, 3);
    CHECK(b.bound_pi_x == Rational(4) * Rational::pow10(48) * Rational::pow2(10));
    CHECK(b.bound_pi_y == Rational(2) * Rational::pow10(48) * Rational::pow2(10));
    CHECK_THROWS_AS(arithmetic_projective_isogeny_bounds(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_projective_isogeny_bounds(2, 0), std::invalid_argument);
}

TEST_CASE("height transfer along a finite map") {
    // genus zero: the log term vanishes exactly
    const HeightBound g0 = dfs_height_bound(zero_height(), 0, 17);
    CHECK(g0.value.is_point());
    CHECK(g0.value.lo() == Rational(0));
    CHECK(g0.provenance.size() == 2);

    // the 40-digit brackets are ~1e-39 wide, so evaluate at 384 bits
    const HeightBound g2 = dfs_height_bound(zero_height(), 2, 1, Precision(384));
    CHECK(kTwoLn2Pi.contains(g2.value));
    // the default precision still brackets the same value
    CHECK(!(dfs_height_bound(zero_height(), 2, 1).value.hi() < kTwoLn2Pi.lo()));

    const HeightBound mixed = dfs_height_bound(
        HeightBound(Enclosure(Rational(1)), {"seed"}), 1, 2, Precision(384));
    CHECK(kOnePlusLn4Pi.contains(mixed.value));

    CHECK_THROWS_AS(dfs_height_bound(zero_height(), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(dfs_height_bound(zero_height(), -1, 1), std::invalid_argument);
}

TEST_CASE("height transfer enclosures nest with precision") {
    const HeightBound coarse = dfs_height_bound(zero_height(), 3, 7, Precision(128));
    const HeightBound fine = dfs_height_bound(zero_height(), 3, 7, Precision(512));
    CHECK(coarse.value.contains(fine.value));
    CHECK(coarse.value.width() > fine.value.width());
}

TEST_CASE("sharp height transfer and dominance over the plain form") {
    const HeightBound equal_genus = dfs_height_bound_sharp(zero_height(), 2, 2, 1);
    CHECK(equal_genus.value.contains(Rational(0)));

    const HeightBound drop = dfs_height_bound_sharp(zero_height(), 2, 0, 1, Precision(384));
    CHECK(kLn2Pi.contains(drop.value));

    for (long gx = 0; gx <= 5; ++gx)
        for (long gy = 0; gy <= gx; ++gy)
            for (long d : {1L, 2L, 7L, 100L}) {
                const HeightBound sharp = dfs_height_bound_sharp(zero_height(), gx, gy, d);
                const HeightBound plain = dfs_height_bound(zero_height(), gx, d);
                CHECK(sharp.value.hi() <= plain.value.hi());
            }

    CHECK_THROWS_AS(dfs_height_bound_sharp(zero_height(), 1, 2, 1), std::invalid_argument);
}

TEST_CASE("belyi-degree height bound and pullback") {
    CHECK(belyi_height_bound(1) == Rational::pow10(9));
    CHECK(belyi_height_bound(2) == Rational(64) * Rational::pow10(9));
    CHECK(belyi_height_bound(10) == Rational::pow10(15));
    CHECK_THROWS_AS(belyi_height_bound(0), std::invalid_argument);

    // a height bound from a Belyi degree is the one-sided interval [0, 10^9 d^6]
    const HeightBound h = height_bound_from_belyi(2);
    CHECK(h.value.lo() == Rational(0));
    CHECK(h.value.hi() == Rational(64) * Rational::pow10(9));
    CHECK(!h.provenance.empty());

    CHECK(belyi_pullback_bound(Rational(5), Rational(1)) == Rational(5));
    CHECK(belyi_pullback_bound(Rational(3), Rational(42)) == Rational(126));
    CHECK(belyi_pullback_bound(Rational(1), Rational(1)) == Rational(1));
    CHECK_THROWS_AS(belyi_pullback_bound(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("closed-form affine and headline bounds") {
    CHECK(affine_arithmetic_height_bound(Rational(-1)) ==
          Rational::pow10(300) * Rational::pow2(14));
    CHECK(affine_arithmetic_height_bound(Rational(-2)) ==
          Rational::pow10(300) * Rational::pow2(28) * Rational(64));
    CHECK_THROWS_AS(affine_arithmetic_height_bound(Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(affine_arithmetic_height_bound(Rational(1)), std::invalid_argument);

    CHECK(main_theorem_bound(Rational(-1), Rational(-1), 1) ==
          Rational::pow10(338) * Rational::pow2(28));
    CHECK(main_theorem_bound(Rational(-1), Rational(-2), 3) ==
          Rational::pow10(338) * Rational::pow2(42) * Rational(6).pow(6));
    CHECK_THROWS_AS(main_theorem_bound(Rational(-1), Rational(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(main_theorem_bound(Rational(-1), Rational(-1), 0), std::invalid_argument);
    CHECK_THROWS_AS(main_theorem_bound(Rational(-1, 2), Rational(-1), 1), std::invalid_argument);
}

TEST_CASE("headline bound is strictly monotone in each argument") {
    for (long ax = 1; ax <= 6; ++ax)
        for (long ay = 1; ay <= 6; ++ay)
            for (long d = 1; d <= 4; ++d) {
                const Rational base = main_theorem_bound(Rational(-ax), Rational(-ay), d);
                CHECK(base < main_theorem_bound(Rational(-ax - 1), Rational(-ay), d));
                CHECK(base < main_theorem_bound(Rational(-ax), Rational(-ay - 1), d));
                CHECK(base < main_theorem_bound(Rational(-ax), Rational(-ay), d + 1));
            }
}

TEST_CASE("projective bounds dominate the non-arithmetic ones") {
    for (long gx = 2; gx <= 50; ++gx)
        for (long gy = 2; gy <= 50; ++gy) {
            const Rational ex(2 - 2 * gx), ey(2 - 2 * gy);
            const IsogenyDegreeBounds small = isogeny_degree_bound_nonarithmetic(ex, ey);
            const IsogenyDegreeBounds big = arithmetic_projective_isogeny_bounds(gx, gy);
            CHECK(small.bound_pi_x <= big.bound_pi_x);
            CHECK(small.bound_pi_y <= big.bound_pi_y);
        }
}

TEST_CASE("non-arithmetic certificate replay at minimal inputs") {
    const BoundCertificate cert = replay_theorem_certificate(
        CaseDiscriminator::NonArithmetic, 0, 0, Rational(-1), Rational(-1), 1);
    CHECK(cert.verified);
    CHECK(cert.branch == CaseDiscriminator::NonArithmetic);
    REQUIRE(cert.steps.size() == 8);
    CHECK(cert.final_bound == Rational::pow10(338) * Rational::pow2(28));
    CHECK(cert.final_bound <= main_theorem_bound(Rational(-1), Rational(-1), 1));
    // frozen hand-replay: 10^9 * 42^6 + 42 * 420
    const Rational height(mpz_class("5489031744000017640"));
    bool found_height = false;
    for (const CertStep& s : cert.steps) {
        CHECK(s.certified);
        if (s.ref == "belyi-degree-height") {
            found_height = true;
            CHECK(std::get<Rational>(s.lhs) == height);
        }
        if (s.ref == "two23-le-ten8") {
            CHECK(std::get<Rational>(s.lhs) == Rational::pow2(23));
            CHECK(std::get<Rational>(s.rhs) == Rational::pow10(8));
        }
    }
    CHECK(found_height);
    CHECK(verify_certificate_steps(cert));
}

TEST_CASE("affine certificate replay") {
    const BoundCertificate cert = replay_theorem_certificate(
        CaseDiscriminator::ArithmeticAffine, 0, 0, Rational(-1), Rational(-1), 1);
    CHECK(cert.verified);
    CHECK(cert.final_bound == Rational::pow10(300) * Rational::pow2(14));
    CHECK(cert.final_bound == affine_arithmetic_height_bound(Rational(-1)));
    CHECK(verify_certificate_steps(cert));
    // genus 3, e = -5 (one puncture)
    const BoundCertificate c2 = replay_theorem_certificate(
        CaseDiscriminator::ArithmeticAffine, 3, 0, Rational(-5), Rational(-1), 1);
    CHECK(c2.verified);
    CHECK(c2.final_bound == affine_arithmetic_height_bound(Rational(-5)));
}

TEST_CASE("projective certificate replay") {
    const BoundCertificate cert = replay_theorem_certificate(
        CaseDiscriminator::ArithmeticProjective, 2, 2, Rational(-2), Rational(-2), 1);
    CHECK(cert.verified);
    REQUIRE(cert.steps.size() == 12);
    CHECK(cert.final_bound == main_theorem_bound(Rational(-2), Rational(-2), 1));
    CHECK(verify_certificate_steps(cert));
}

TEST_CASE("certificate replay rejects inconsistent inputs") {
    // genus must satisfy g <= |e|
    CHECK_THROWS_AS(replay_theorem_certificate(CaseDiscriminator::NonArithmetic, 3,
                                               0, Rational(-2), Rational(-1), 1),
                    std::invalid_argument);
    // e must be a negative integer with e = 2 - 2g - r, r >= 0
    CHECK_THROWS_AS(replay_theorem_certificate(CaseDiscriminator::NonArithmetic, 2,
                                               0, Rational(-1), Rational(-1), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(replay_theorem_certificate(CaseDiscriminator::NonArithmetic, 0,
                                               0, Rational(-1, 2), Rational(-1), 1),
                    std::invalid_argument);
    // projective branch needs r = 0 on both curves: e = 2 - 2g exactly
    CHECK_THROWS_AS(replay_theorem_certificate(CaseDiscriminator::ArithmeticProjective,
                                               2, 2, Rational(-3), Rational(-2), 1),
                    std::invalid_argument);
    // affine branch needs at least one puncture
    CHECK_THROWS_AS(replay_theorem_certificate(CaseDiscriminator::ArithmeticAffine,
                                               2, 0, Rational(-2), Rational(-1), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(replay_theorem_certificate(CaseDiscriminator::NonArithmetic, 0,
                                               0, Rational(-1), Rational(-1), 0),
                    std::invalid_argument);
}

TEST_CASE("certificate verification rejects tampering") {
    BoundCertificate cert = replay_theorem_certificate(
        CaseDiscriminator::NonArithmetic, 0, 0, Rational(-1), Rational(-1), 1);
    REQUIRE(verify_certificate_steps(cert));

    BoundCertificate bad_value = cert;
    bad_value.steps[7].rhs = Rational(1);  // final bound no longer dominates
    CHECK_FALSE(verify_certificate_steps(bad_value));

    BoundCertificate bad_flag = cert;
    bad_flag.steps[0].certified = false;  // inconsistent with a holding step
    CHECK_FALSE(verify_certificate_steps(bad_flag));

    BoundCertificate bad_verdict = cert;
    bad_verdict.verified = false;
    CHECK_FALSE(verify_certificate_steps(bad_verdict));
}

TEST_CASE("replayed bounds never exceed the closed form on a grid") {
    for (long gx = 2; gx <= 6; ++gx)
        for (long gy = 2; gy <= 6; ++gy)
            for (long d : {1L, 5L}) {
                const Rational ex(2 - 2 * gx), ey(2 - 2 * gy);
                const BoundCertificate non = replay_theorem_certificate(
                    CaseDiscriminator::NonArithmetic, gx, gy, ex, ey, d);
                CHECK(non.verified);
                CHECK(non.final_bound <= main_theorem_bound(ex, ey, d));
                const BoundCertificate proj = replay_theorem_certificate(
                    CaseDiscriminator::ArithmeticProjective, gx, gy, ex, ey, d);
                CHECK(proj.verified);
                CHECK(proj.final_bound <= main_theorem_bound(ex, ey, d));
            }
}

TEST_CASE("scaffolding inequalities certify over a small genus range") {
    const InequalityReport r = verify_proof_inequalities(0, 5);
    CHECK(r.all_certified);
    // 6 log-vs-power items + 1 monotonicity factor + 6 tail items
    CHECK(r.items.size() == 13);
    for (const InequalityItem& it : r.items) {
        CHECK(it.certified);
        CHECK(it.bits_used <= 256);
    }
    bool found_factor = false, found_g0 = false;
    for (const InequalityItem& it : r.items) {
        if (it.label.find("50^(3/2)") != std::string::npos) found_factor = true;
        if (it.label.find("2^5") != std::string::npos) found_g0 = true;
    }
    CHECK(found_factor);
    CHECK(found_g0);
    CHECK_THROWS_AS(verify_proof_inequalities(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_proof_inequalities(3, 2), std::invalid_argument);
}
