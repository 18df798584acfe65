#pragma once

#include "isobound/enclosure.hpp"
#include "isobound/report.hpp"

#include <string>
#include <variant>
#include <vector>

namespace isobound {

// A height bound carried as a certified enclosure together with a provenance
// trail naming the inequalities that produced it.  Provenance is never empty.
struct HeightBound {
    Enclosure value;
    std::vector<std::string> provenance;

    HeightBound(Enclosure v, std::vector<std::string> prov);
};

// Degree bounds for the two isogeny projections of a correspondence.
struct IsogenyDegreeBounds {
    Rational bound_pi_x;
    Rational bound_pi_y;
};

// Degree bounds for the affine arithmetic case: a bound on the degree of a
// Belyi map for the cover, and a bound on the covering degree itself.
struct AffineCoverBounds {
    Rational belyi_degree_bound;
    Rational cover_degree_bound;
};

// Which branch of the trichotomy a certificate replays.
enum class CaseDiscriminator {
    NonArithmetic,
    ArithmeticAffine,
    ArithmeticProjective,
};

const char* to_string(CaseDiscriminator c);
CaseDiscriminator case_from_string(const std::string& s);

// ---- certificates -------------------------------------------------------

enum class StepRel { Le, Lt, Eq };

const char* to_string(StepRel rel);
StepRel rel_from_string(const std::string& s);

// A step value is either an exact rational or a certified enclosure (used
// when a transcendental quantity appears on one side of an inequality).
using StepValue = std::variant<Rational, Enclosure>;

struct CertStep {
    std::string label;   // what is being compared
    StepValue lhs;
    StepRel rel;
    StepValue rhs;
    std::string ref;     // which inequality of the argument this instantiates
    bool certified = false;
    int bits_used = 0;   // 0 for purely exact comparisons
};

struct BoundCertificate {
    CaseDiscriminator branch = CaseDiscriminator::NonArithmetic;
    std::vector<std::pair<std::string, Rational>> inputs;
    std::vector<CertStep> steps;
    Rational final_bound;
    bool verified = false;  // conjunction of step certifications
};

// ---- degree bounds ------------------------------------------------------

// Isogeny degree bounds in the non-arithmetic case: each projection of the
// correspondence has degree at most 42 times the opposite curve's |euler|.
// Requires both Euler characteristics to be negative.
IsogenyDegreeBounds isogeny_degree_bound_nonarithmetic(const Rational& e_x,
                                                       const Rational& e_y);

// Arithmetic affine case: the cover admits a Belyi map of degree at most
// 10^46 * 2^(2g+3) * |e| and the covering degree is at most 2^(2g+2).
// Requires g >= 0 and e < 0.
AffineCoverBounds arithmetic_affine_cover_bounds(long g_x, const Rational& e_x);

// Arithmetic projective case: both projection degrees are bounded by
// 10^48 * 2^(2gX+2gY) * (2g-2) with the genus of the *other* curve.
// Requires both genera >= 2.
IsogenyDegreeBounds arithmetic_projective_isogeny_bounds(long g_x, long g_y);

// ---- height bounds ------------------------------------------------------

// de Franchis--Severi style height transfer along a degree-d map from a
// curve of genus g: adds g * log(2*pi*d) to the height.  Exact when g = 0.
HeightBound dfs_height_bound(const HeightBound& h_x, long g_x, long deg_f,
                             Precision p = Precision(kDefaultBits));

// Sharper transfer: h(Y) <= h(X) + (gX - gY)/2 * log(2*pi) + gY * log(d).
// Requires gX >= gY >= 0 and d >= 1.
HeightBound dfs_height_bound_sharp(const HeightBound& h_x, long g_x, long g_y,
                                   long deg_f,
                                   Precision p = Precision(kDefaultBits));

// Height of a curve admitting a Belyi map of degree d: at most 10^9 * d^6.
Rational belyi_height_bound(long deg_b);
HeightBound height_bound_from_belyi(long deg_b);

// A Belyi map of degree b on the base pulls back to one of degree d*b on a
// degree-d cover.
Rational belyi_pullback_bound(const Rational& deg_b_x, const Rational& deg_pi);

// Closed-form height bound in the affine arithmetic case:
// 10^300 * 2^(14|e|) * |e|^6.  Requires e a negative integer.
Rational affine_arithmetic_height_bound(const Rational& e_x);

// The headline bound: 10^338 * 2^(14|eX| + 14|eY|) * (|eX| |eY| degB)^6.
// Requires negative integer Euler characteristics and degB >= 1.
Rational main_theorem_bound(const Rational& e_x, const Rational& e_y,
                            long deg_b_x);

// ---- certificate replay -------------------------------------------------

// Replays the inequality chain that proves the headline bound for the given
// branch at the given inputs, certifying every step.  The affine branch
// ignores g_y/e_y/deg_b_x and certifies the closed-form affine bound; the
// other two branches end at the headline bound.
BoundCertificate replay_theorem_certificate(CaseDiscriminator branch, long g_x,
                                            long g_y, const Rational& e_x,
                                            const Rational& e_y, long deg_b_x,
                                            Precision p = Precision(kDefaultBits));

// Re-checks every step of a certificate from its recorded values alone
// (exact comparisons on rationals, endpoint comparisons on enclosures).
// Returns true iff all steps hold and `verified` is consistent with them.
bool verify_certificate_steps(const BoundCertificate& cert);

// Certifies the scaffolding inequalities used by the argument for every
// genus in [g_min, g_max]:
//   - log(2*pi*2^(2g+2)) < 2^(2g+5) for each g,
//   - 50^(3/2) > (2*pi)^2,
//   - 4*(50^n e^-70)^(3/2) / (2*pi)^(2n) > 10^-46 for each n in the range
//     (n >= 0; the n = 0 case is the empty product).
InequalityReport verify_proof_inequalities(long g_min, long g_max,
                                           Precision p = Precision(kDefaultBits));

}  // namespace isobound
