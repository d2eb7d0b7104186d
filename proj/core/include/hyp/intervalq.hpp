#ifndef HYP_INTERVALQ_HPP
#define HYP_INTERVALQ_HPP

#include <algorithm>

#include "hyp/error.hpp"
#include "hyp/rational.hpp"
#include "hyp/unipoly.hpp"

namespace hyp {

// Closed rational interval for certified sign evaluation. Operations return
// enclosures; repeated multiplication is used for powers, which is sound
// (possibly loose for even powers straddling zero).
struct IntervalQ {
    Rational lo, hi;

    IntervalQ() : lo(0), hi(0) {}
    IntervalQ(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw InternalInconsistency("interval with lo > hi");
    }
    static IntervalQ point(const Rational& a) { return IntervalQ(a, a); }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    // Sign if determined, 0 if the interval straddles or touches zero.
    int determined_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    IntervalQ operator+(const IntervalQ& o) const { return IntervalQ(lo + o.lo, hi + o.hi); }
    IntervalQ operator-(const IntervalQ& o) const { return IntervalQ(lo - o.hi, hi - o.lo); }
    IntervalQ operator-() const { return IntervalQ(-hi, -lo); }

    IntervalQ operator*(const IntervalQ& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return IntervalQ(std::min(std::min(a, b), std::min(c, d)),
                         std::max(std::max(a, b), std::max(c, d)));
    }
    IntervalQ operator*(const Rational& s) const {
        return s >= 0 ? IntervalQ(lo * s, hi * s) : IntervalQ(hi * s, lo * s);
    }

    // Reciprocal; caller must ensure the interval excludes zero.
    IntervalQ reciprocal() const {
        if (contains_zero()) throw InternalInconsistency("reciprocal of interval containing zero");
        return IntervalQ(Rational(1) / hi, Rational(1) / lo);
    }
    IntervalQ operator/(const IntervalQ& o) const { return *this * o.reciprocal(); }
};

// Horner evaluation of p over x.
inline IntervalQ interval_eval(const UniPoly& p, const IntervalQ& x) {
    IntervalQ acc = IntervalQ::point(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + IntervalQ::point(*it);
    return acc;
}

} // namespace hyp

#endif
