#pragma once

#include "isobound/enclosure.hpp"

namespace isobound {

// Certified enclosures of transcendental values, computed from exact rational
// series with explicit tail majorants and dyadic outward rounding. All
// producers guarantee containment, width <= 2^(2-bits) * max(1, |value|), and
// nesting: for p1 < p2 (same argument) the p2 enclosure lies inside the p1
// one. Nesting holds because truncation depths, scaling exponents and
// rounding grids are all monotone in the precision while the underlying
// series brackets shrink monotonically.

// Natural log of a positive rational. Argument is range-reduced to
// [3/4, 3/2) by powers of two, the residue handled by the atanh series
// log(y) = 2 atanh((y-1)/(y+1)). Throws std::domain_error for x <= 0.
Enclosure enclose_log(const Rational& x, Precision p);

// log 2 = 2 atanh(1/3).
Enclosure enclose_log2(Precision p);

// pi = 16 atan(1/5) - 4 atan(1/239), alternating partial-sum brackets.
Enclosure enclose_pi(Precision p);

// exp(x) for rational x: scale to |x|/2^m <= 1/2, Taylor sum with geometric
// remainder, then m interval squarings; negative x via exp(-y) = 1/exp(y).
Enclosure enclose_exp(const Rational& x, Precision p);

// sqrt(x) for x >= 0 by integer square-root bracketing: with N = num*den and
// w guard bits, floor(sqrt(N*4^w)) / (den*2^w) brackets sqrt from below and
// the next grid point from above; both squares are checked explicitly.
Enclosure enclose_sqrt(const Rational& x, Precision p);

// x^(3/2) = sqrt(x^3) for x >= 0.
Enclosure enclose_pow_three_halves(const Rational& x, Precision p);

// Monotone extensions to interval arguments (endpoint images hulled).
Enclosure log_of(const Enclosure& x, Precision p);    // requires x.lo > 0
Enclosure exp_of(const Enclosure& x, Precision p);
Enclosure sqrt_of(const Enclosure& x, Precision p);   // requires x.lo >= 0
Enclosure pow_three_halves_of(const Enclosure& x, Precision p);

}  // namespace isobound
