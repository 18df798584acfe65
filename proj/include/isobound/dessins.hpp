#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace isobound {

// A dessin is a pair of permutations acting on {1..d}: sigma0 cycles are the
// black vertices, sigma1 cycles the white ones, and the face permutation is
// determined by sigma_inf = (sigma0 . sigma1)^(-1), composing right-to-left
// (sigma1 acts first). Permutations are stored as 1-based image arrays.
struct Dessin {
    int degree = 0;
    std::vector<int> sigma0, sigma1;

    // Validates both arrays are permutations of 1..degree.
    static Dessin make(int degree, std::vector<int> s0, std::vector<int> s1);
    std::vector<int> sigma_inf() const;
    bool operator==(const Dessin&) const = default;
};

// Cycle types of (sigma0, sigma1, sigma_inf), each a descending partition of
// the degree.
struct Passport {
    std::vector<long> type0, type1, type_inf;
    bool operator==(const Passport&) const = default;
};

// True iff the group generated by sigma0, sigma1 acts transitively on 1..d.
bool is_transitive(const Dessin& d);

// Genus from cycle counts: 2 - 2g = c0 + c1 + c_inf - d. Requires a
// transitive dessin (throws std::domain_error otherwise).
int genus_of(const Dessin& d);

Passport passport_of(const Dessin& d);

// Representative of the simultaneous-conjugacy class: the pair of image
// arrays that is lexicographically minimal (sigma0 compared first) over all
// relabelings of the points. Computed by moving sigma0 onto the minimal
// arrangement of its cycle type and then minimizing sigma1 over the
// centralizer of that arrangement.
Dessin canonicalize(const Dessin& d);

// Order of the simultaneous centralizer of (sigma0, sigma1) in S_d.
long automorphism_count(const Dessin& d);

struct CensusEntry {
    Dessin dessin;  // canonical form
    int genus = 0;
    Passport passport;
    long aut = 0;
};

struct Census {
    int degree = 0;
    int cap = 0;
    std::vector<CensusEntry> entries;  // sorted by canonical (sigma0, sigma1)
};

inline constexpr int kDefaultDegreeCap = 8;
// Hard ceiling: the enumeration walks all d! permutation ranks per cycle
// type, so degrees past 12 are out of reach by construction.
inline constexpr int kMaxDegree = 12;

// All transitive pairs up to simultaneous conjugacy, one census entry per
// class. jobs >= 1 splits the work by cycle type of sigma0; the output is
// sorted and does not depend on jobs. Throws std::invalid_argument when
// degree < 1 or degree > cap (the cap guards against accidental huge runs
// and must be raised explicitly).
Census enumerate_dessins(int degree, int jobs = 1, int cap = kDefaultDegreeCap);

// Recomputes every entry's cycle counts and checks the Euler relation
// 2 - 2*genus = c0 + c1 + c_inf - d.
bool census_euler_check(const Census& c);

// Number of labeled transitive pairs, via the orbit-of-point-one recurrence
// t(n) = (n!)^2 - sum_{k<n} C(n-1,k-1) t(k) ((n-k)!)^2. The census must
// satisfy sum over entries of d!/aut = t(d).
mpz_class transitive_pair_count(int degree);

}  // namespace isobound
