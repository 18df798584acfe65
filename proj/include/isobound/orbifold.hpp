#pragma once

#include "isobound/rational.hpp"

#include <string>
#include <vector>

namespace isobound {

// Smooth projective curve of genus g with r points removed.
struct CurveSignature {
    int genus = 0;
    int punctures = 0;
    bool operator==(const CurveSignature&) const = default;
};

// Orbifold signature (g; r; {i_1 <= ... <= i_c}), cone orders >= 2.
struct OrbifoldSignature {
    int genus = 0;
    int punctures = 0;
    std::vector<long> cones;

    OrbifoldSignature() = default;
    // Validates g >= 0, r >= 0, every cone order >= 2; sorts the orders.
    OrbifoldSignature(int g, int r, std::vector<long> cone_orders);
    bool operator==(const OrbifoldSignature&) const = default;
};

// 2 - 2g - r. Throws std::invalid_argument for negative g or r.
Rational curve_euler(const CurveSignature& s);

// 2 - 2g - r - sum (i-1)/i over cone orders.
Rational orbifold_euler(const OrbifoldSignature& s);

bool is_hyperbolic(const CurveSignature& s);
bool is_hyperbolic(const OrbifoldSignature& s);

// Euler characteristic of an unramified degree-d cover; degree >= 1.
Rational etale_cover_euler(const Rational& base_euler, long degree);

// True iff both signatures are hyperbolic and
// |curve_euler(top)| = degree * |orbifold_euler(base)|.
bool riemann_hurwitz_cover_check(const CurveSignature& top, long degree,
                                 const OrbifoldSignature& base);

// One case of the exhaustive split behind the minimum search. Strata are
// indexed by t = 2g - 2 + r and the cone count c; |euler| = t + c - sum 1/i.
//  - "searched": finite branch-and-bound over cone tuples, exact minimum and
//    the complete witness list;
//  - "analytic": every member exceeds `bound` because each cone contributes
//    at least 1/2 (or t alone already reaches it);
//  - "empty": the stratum has no hyperbolic signatures.
struct Stratum {
    std::string key;
    std::string kind;  // "searched" | "analytic" | "empty"
    Rational bound;    // exact min (searched) or lower bound (analytic)
    std::vector<OrbifoldSignature> witnesses;
    long nodes = 0;    // search tree nodes, searched strata only
    std::string note;
};

struct MinimumCertificate {
    Rational minimum;
    std::vector<OrbifoldSignature> witnesses;
    std::vector<Stratum> trace;
};

// Exact minimum of |orbifold_euler| over all hyperbolic orbifold signatures,
// with the full case split recorded in the trace.
MinimumCertificate min_abs_euler_hyperbolic();

}  // namespace isobound
