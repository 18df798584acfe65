#pragma once

#include "isobound/rational.hpp"

#include <functional>
#include <string>

namespace isobound {

// Working precision for enclosure computations, in significant bits.
struct Precision {
    int bits;
    explicit Precision(int b);  // throws std::invalid_argument outside [8, 2^20]
};

// Default working precision and the refinement ceiling used by every
// verification routine: comparisons retry with doubled precision until
// decided or the cap is hit.
inline constexpr int kDefaultBits = 128;
inline constexpr int kRefineCapBits = 4096;

enum class Order { Less, Greater, Unknown };

const char* to_string(Order o);

// Closed interval [lo, hi] of rationals, certifying lo <= value <= hi for the
// real number it encloses. Plain value type; arithmetic is exact unless an
// explicit rounding step is requested.
class Enclosure {
public:
    explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
    Enclosure(Rational lo, Rational hi, std::string label = "");

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) * Rational(1, 2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Enclosure& inner) const {
        return lo_ <= inner.lo() && inner.hi() <= hi_;
    }

private:
    Rational lo_, hi_;
    std::string label_;
};

Enclosure operator-(const Enclosure& a);
Enclosure add(const Enclosure& a, const Enclosure& b);
Enclosure sub(const Enclosure& a, const Enclosure& b);
Enclosure mul(const Enclosure& a, const Enclosure& b);
// Throws std::domain_error when b contains zero.
Enclosure div(const Enclosure& a, const Enclosure& b);
Enclosure scale(const Rational& c, const Enclosure& a);
// k >= 0; monotone-aware sign handling (even powers of straddling intervals
// clamp the lower endpoint at zero).
Enclosure pow_int(const Enclosure& a, long k);
// Smallest interval containing both.
Enclosure hull(const Enclosure& a, const Enclosure& b);

// Largest dyadic m/2^s <= x (respectively smallest >= x) where the grid step
// is chosen from x's exact binade so the result keeps about `bits`
// significant bits. Monotone in x and refines as bits grows, which is what
// makes enclosure nesting across precisions work.
Rational round_down_dyadic(const Rational& x, int bits);
Rational round_up_dyadic(const Rational& x, int bits);
Enclosure round_outward(const Enclosure& a, Precision p);

// Less    iff a.hi < b.lo
// Greater iff a.lo > b.hi
// Unknown otherwise (overlap).
Order certified_compare(const Enclosure& a, const Enclosure& b);

// Result of an auto-refined comparison: the order reached and the precision
// at which it was decided (cap_bits when it stayed Unknown).
struct Resolution {
    Order order;
    int bits_used;
};

using EnclosureFn = std::function<Enclosure(Precision)>;

// Evaluates both sides at start_bits and doubles the precision until
// certified_compare decides or cap_bits is exceeded.
Resolution resolve_order(const EnclosureFn& lhs, const EnclosureFn& rhs,
                         int start_bits = kDefaultBits,
                         int cap_bits = kRefineCapBits);

}  // namespace isobound
