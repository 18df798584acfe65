#pragma once

#include "isobound/enclosure.hpp"
#include "isobound/report.hpp"

#include <optional>
#include <vector>

namespace isobound {

// Number-field invariants taken as *input data* (the toolkit does not compute
// discriminants, prime splitting, or zeta values from a field presentation).
//
// prime_norms/tail_cutoff carry the raw data for zeta2_enclosure: prime-ideal
// norms for every prime ideal lying over a rational prime <= tail_cutoff.
// Note that such a norm can exceed the cutoff (inert primes have norm p^n),
// so "complete up to B" means complete over the rational primes below B, not
// that every listed norm is <= B.
struct FieldData {
    long degree_n = 1;                 // n = [F:Q]
    long abs_discriminant = 1;         // d_F
    std::optional<Enclosure> zeta2;    // enclosure of zeta_F(2), if known
    std::vector<long> prime_norms;     // raw Euler-factor data (see above)
    long tail_cutoff = 0;              // B for the zeta tail majorant
    std::vector<long> ramified_norms;  // N(p) for primes dividing the algebra discriminant
};

// Throws std::invalid_argument when the invariants fail: n >= 1, d_F >= 1,
// d_F >= 2 once n >= 2 (no unramified extensions of Q), zeta2.lo >= 1,
// all listed norms >= 2.
void validate(const FieldData& f);

// Index data for the consistency check: d_1, d_2 are the two group indices
// and abs_e_x the claimed |e(X)| (a positive exact rational).
struct ShimizuConsistencyInput {
    long d1 = 1;
    long d2 = 1;
    Rational abs_e_x;
};

enum class Consistency { Consistent, Inconsistent, Unknown };
const char* to_string(Consistency c);

// Encloses zeta_F(2) from a truncated Euler product: returns
// [T, T * exp(2n/B)] with T = prod (1 - q^-2)^-1 over the given norms.
// The tail majorant uses that each rational prime p > B contributes at most
// (1 - p^-2)^-n (at most n primes above p, each of norm >= p) together with
// -ln(1-x) <= 2x for x <= 1/2.  The enclosure contains the true value only
// under the completeness precondition documented on FieldData::prime_norms.
// The lower endpoint T is exact; only the upper endpoint is rounded.
Enclosure zeta2_enclosure(long n, const std::vector<long>& prime_norms, long B,
                          Precision p = Precision(kDefaultBits));

// Covolume of the unit-group lattice attached to the field data:
//   4 * d_F^(3/2) * zeta_F(2) * prod (N(p) - 1) / (2*pi)^(2n).
// Requires a zeta2 enclosure; errors instruct the caller to run
// zeta2_enclosure first.
Enclosure covolume(const FieldData& f, Precision p = Precision(kDefaultBits));

// Odlyzko's totally-real discriminant floor 50^n * e^-70.
Enclosure odlyzko_floor(long n, Precision p = Precision(kDefaultBits));

// Certifies 4*(50^n e^-70)^(3/2) / (2*pi)^(2n) > 10^-46 for every
// n in [1, n_max], plus the monotonicity factor 50^(3/2)/(2*pi)^2 > 1
// that lets the n = 1 base case propagate; n_max + 1 items in total.
InequalityReport odlyzko_constant_check(long n_max,
                                        Precision p = Precision(kDefaultBits));

// Checks the lattice identity d_2 * covolume(f) = d_1 * |e(X)|:
//   INCONSISTENT when the exact right side lies outside the certified
//     enclosure of the left side (they are certifiably different reals);
//   CONSISTENT when the right side lies inside and the enclosure is tight,
//     width <= 2^(-bits/4) * max(1, d_1*|e(X)|);
//   UNKNOWN otherwise (the enclosure is too wide to certify either way).
Consistency shimizu_consistency(const FieldData& f,
                                const ShimizuConsistencyInput& c,
                                Precision p = Precision(kDefaultBits));

}  // namespace isobound
