#ifndef HYP_REALROOTS_HPP
#define HYP_REALROOTS_HPP

#include <optional>
#include <vector>

#include "hyp/intervalq.hpp"
#include "hyp/rational.hpp"
#include "hyp/unipoly.hpp"

namespace hyp {

// Interval of the real line for root counting. A missing endpoint means the
// interval is unbounded on that side; openness flags apply to finite ends.
struct Interval {
    std::optional<Rational> lo, hi;
    bool lo_open = true;
    bool hi_open = true;

    Interval() = default; // whole line
    static Interval whole() { return Interval(); }
    static Interval open(const Rational& a, const Rational& b);
    static Interval closed(const Rational& a, const Rational& b);
    static Interval left_of(const Rational& b, bool open = true);   // (-inf, b) or (-inf, b]
    static Interval right_of(const Rational& a, bool open = true);  // (a, inf) or [a, inf)
};

// Signed remainder chain of a square-free polynomial: starts with u, u',
// each further entry the negated pseudo-remainder of the preceding pair,
// stripped to primitive integer coefficients with signs preserved.
struct SturmChain {
    std::vector<UniPoly> polys;

    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
};

SturmChain sturm_chain(const UniPoly& square_free);

// u / gcd(u, u'): primitive with positive leading coefficient, same distinct
// roots as u, all simple.
UniPoly squarefree_part(const UniPoly& u);

// g_0 = u, g_{k+1} = gcd(g_k, g_k'), until constant. A root has multiplicity
// m in u exactly when it is a root of g_{m-1} but not of g_m.
std::vector<UniPoly> repeated_gcd_chain(const UniPoly& u);

// 1 + max_i |a_i| / |a_d|: every real root lies strictly inside (-bound, bound).
Rational cauchy_root_bound(const UniPoly& u);

// Number of distinct real roots of u in I. Exact; endpoints that happen to
// be roots are handled by the zero-skipping variation count plus an exact
// endpoint membership test.
int count_real_roots(const UniPoly& u, const Interval& I = Interval::whole());

bool is_real_rooted(const UniPoly& u);

// True iff every root of u is strictly positive. Throws when u is not
// real-rooted (callers must establish that first).
bool all_roots_positive(const UniPoly& u);

struct IsolatedRoot {
    Rational lo, hi;      // open isolating interval; endpoints are not roots
    int sign_left = 0;    // sign of the square-free part at lo
    int sign_right = 0;   // sign at hi
    int multiplicity = 1; // multiplicity of the root in u
    std::optional<Rational> exact; // set when the root is a known rational
};

inline const Rational& default_isolation_width() {
    static const Rational w = make_rational(1, 1L << 32);
    return w;
}

// Disjoint rational isolating intervals of width <= width, one per distinct
// real root, sorted ascending.
std::vector<IsolatedRoot> isolate_roots(const UniPoly& u, const Rational& width);
std::vector<IsolatedRoot> isolate_roots(const UniPoly& u);

// An algebraic real number: the unique root of `sf` in (lo, hi). Supports
// exact sign determination of polynomial expressions at the number.
struct AlgebraicReal {
    UniPoly sf; // square-free, one root in the interval
    Rational lo, hi;
    int sign_lo = 0; // sign of sf at lo (nonzero)
    std::optional<Rational> exact;

    static AlgebraicReal from_isolated(const UniPoly& square_free, const IsolatedRoot& r);
    static AlgebraicReal from_rational(const Rational& value);

    IntervalQ enclosure() const;
    // One bisection step; no-op once the root is known exactly.
    void refine();
    void refine_below(const Rational& target_width);
};

// Exact sign of p at the algebraic number (refines the enclosure as needed;
// zero is detected exactly through a gcd with the defining polynomial).
int sign_at(const UniPoly& p, AlgebraicReal& alpha);

} // namespace hyp

#endif
