#include "isobound/serialize.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace isobound;

#ifndef ISOBOUND_FIXTURE_DIR
#error "ISOBOUND_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace {

Json load(const std::string& name) {
    std::ifstream in(std::string(ISOBOUND_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    return Json::parse(in);
}

}  // namespace

TEST_CASE("rationals round-trip through canonical strings") {
    for (const Rational& x : {Rational(0), Rational(-7, 3), Rational::pow10(50),
                              Rational(1, 42), Rational(mpz_class("5489031744000017640"))}) {
        const Json j = to_json(x);
        CHECK(j.is_string());
        CHECK(rational_from_json(j) == x);
    }
    CHECK(to_json(Rational(-7, 3)).get<std::string>() == "-7/3");
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json(3.5)), std::invalid_argument);
}

TEST_CASE("enclosures round-trip with exact endpoints") {
    const Enclosure e(Rational(-1, 3), Rational(22, 7));
    const Json j = to_json(e);
    CHECK(j.contains("lo"));
    CHECK(j.contains("hi"));
    const Enclosure back = enclosure_from_json(j);
    CHECK(back.lo() == e.lo());
    CHECK(back.hi() == e.hi());
    CHECK_THROWS_AS(enclosure_from_json(Json{{"lo", "2/1"}, {"hi", "1/1"}}),
                    std::invalid_argument);
}

TEST_CASE("orbifold signatures round-trip") {
    const OrbifoldSignature s(1, 2, {2, 3, 7});
    const Json j = to_json(s);
    CHECK(j["g"] == 1);
    CHECK(j["r"] == 2);
    CHECK(j["cones"].size() == 3);
    CHECK(signature_from_json(j) == s);
}

TEST_CASE("minimum certificate serializes its trace") {
    const MinimumCertificate cert = min_abs_euler_hyperbolic();
    const Json j = to_json(cert);
    CHECK(rational_from_json(j["minimum"]) == Rational(1, 42));
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(signature_from_json(j["witnesses"][0]) == OrbifoldSignature(0, 0, {2, 3, 7}));
    CHECK(j["trace"].is_array());
    CHECK(!j["trace"].empty());
    for (const Json& st : j["trace"]) {
        CHECK(st.contains("key"));
        CHECK(st.contains("kind"));
        CHECK(st.contains("bound"));
    }
}

TEST_CASE("census serializes as one JSON object per line") {
    const Census c = enumerate_dessins(2);
    const std::string text = census_to_json_lines(c);
    std::istringstream lines(text);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        REQUIRE(!line.empty());
        const Json j = Json::parse(line);  // every line parses standalone
        if (count == 0) {
            CHECK(j["tool"].is_string());
            CHECK(j["version"].is_string());
            CHECK(j["degree"] == 2);
            CHECK(j["entries"] == 3);
        } else {
            CHECK(j["d"] == 2);
            CHECK(j.contains("s0"));
            CHECK(j.contains("s1"));
            CHECK(j.contains("genus"));
            CHECK(j.contains("passport"));
            CHECK(j.contains("aut"));
        }
        ++count;
    }
    CHECK(count == 4);  // header + three classes

    const Json tree = census_to_json(c);
    CHECK(tree["header"]["degree"] == 2);
    CHECK(tree["entries"].size() == 3);
}

TEST_CASE("bound certificates survive a serialization round-trip") {
    const BoundCertificate cert = replay_theorem_certificate(
        CaseDiscriminator::ArithmeticProjective, 2, 3, Rational(-2), Rational(-4), 2);
    REQUIRE(cert.verified);
    const Json j = to_json(cert);
    CHECK(j["case"] == "ARITHMETIC_PROJECTIVE");
    CHECK(j["verified"] == true);
    CHECK(j["steps"].is_array());
    for (const Json& s : j["steps"]) {
        CHECK(s.contains("label"));
        CHECK(s.contains("lhs"));
        CHECK(s.contains("rel"));
        CHECK(s.contains("rhs"));
        CHECK(s.contains("ref"));
        CHECK(s.contains("certified"));
    }
    const BoundCertificate back = certificate_from_json(j);
    CHECK(back.branch == cert.branch);
    CHECK(back.final_bound == cert.final_bound);
    CHECK(back.verified == cert.verified);
    REQUIRE(back.steps.size() == cert.steps.size());
    // soundness: the parsed certificate re-verifies from its values alone
    CHECK(verify_certificate_steps(back));
    // and the round-trip is the identity on the JSON rendering
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("tampered certificate JSON fails re-verification") {
    const BoundCertificate cert = replay_theorem_certificate(
        CaseDiscriminator::NonArithmetic, 0, 0, Rational(-1), Rational(-1), 1);
    Json j = to_json(cert);
    j["steps"].back()["rhs"] = "1/1";  // shrink the final statement bound
    const BoundCertificate bad = certificate_from_json(j);
    CHECK_FALSE(verify_certificate_steps(bad));
}

TEST_CASE("inequality reports serialize item-by-item") {
    const InequalityReport r = verify_proof_inequalities(0, 2);
    const Json j = to_json(r);
    CHECK(j["all_certified"] == true);
    REQUIRE(j["items"].size() == r.items.size());
    CHECK(j["items"][0].contains("label"));
    CHECK(j["items"][0].contains("certified"));
    CHECK(j["items"][0].contains("bits"));
}

TEST_CASE("field data loads from the bundled fixtures") {
    const FieldData q = field_from_json(load("field_q.json"));
    CHECK_NOTHROW(validate(q));
    CHECK(q.degree_n == 1);
    CHECK(q.abs_discriminant == 1);
    REQUIRE(q.zeta2.has_value());
    // the fixture freezes a tight zeta(2) enclosure
    CHECK(q.zeta2->width() < Rational::pow10(-40));
    const Enclosure vol = covolume(q);
    CHECK(vol.contains(Rational(1, 6)));

    const FieldData d5 = field_from_json(load("field_disc5.json"));
    CHECK_NOTHROW(validate(d5));
    CHECK(d5.degree_n == 2);
    CHECK(d5.abs_discriminant == 5);
    CHECK(!d5.zeta2.has_value());
    CHECK(d5.tail_cutoff == 100);
    CHECK(d5.ramified_norms.empty() == false);
    // derive zeta from the tabulated norms, then take the covolume
    FieldData with_zeta = d5;
    with_zeta.zeta2 = zeta2_enclosure(d5.degree_n, d5.prime_norms, d5.tail_cutoff);
    const Enclosure v5 = covolume(with_zeta);
    CHECK(v5.lo().sign() > 0);
    CHECK(v5.lo() > Rational(7, 10));
    CHECK(v5.hi() < Rational(9, 10));
}

TEST_CASE("field data round-trips through JSON") {
    FieldData f;
    f.degree_n = 2;
    f.abs_discriminant = 5;
    f.zeta2 = Enclosure(Rational(193, 180), Rational(7, 6));
    f.prime_norms = {4, 5, 9};
    f.tail_cutoff = 3;
    f.ramified_norms = {4, 9};
    const Json j = to_json(f);
    const FieldData back = field_from_json(j);
    CHECK(back.degree_n == f.degree_n);
    CHECK(back.abs_discriminant == f.abs_discriminant);
    REQUIRE(back.zeta2.has_value());
    CHECK(back.zeta2->lo() == f.zeta2->lo());
    CHECK(back.prime_norms == f.prime_norms);
    CHECK(back.tail_cutoff == f.tail_cutoff);
    CHECK(back.ramified_norms == f.ramified_norms);
    CHECK(to_json(back).dump() == j.dump());
}
