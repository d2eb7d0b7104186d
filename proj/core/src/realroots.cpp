#include "hyp/realroots.hpp"

#include <algorithm>
#include <deque>

#include "hyp/error.hpp"

namespace hyp {

Interval Interval::open(const Rational& a, const Rational& b) {
    if (a >= b) throw Error("bad_interval", "interval endpoints must satisfy lo < hi");
    Interval i;
    i.lo = a;
    i.hi = b;
    return i;
}

Interval Interval::closed(const Rational& a, const Rational& b) {
    Interval i = open(a, b);
    i.lo_open = false;
    i.hi_open = false;
    return i;
}

Interval Interval::left_of(const Rational& b, bool open) {
    Interval i;
    i.hi = b;
    i.hi_open = open;
    return i;
}

Interval Interval::right_of(const Rational& a, bool open) {
    Interval i;
    i.lo = a;
    i.lo_open = open;
    return i;
}

namespace {

// Pseudo-remainder with a positive multiplier |lc(g)|^(deg f - deg g + 1),
// so the remainder keeps the sign of the exact rational remainder.
UniPoly pseudo_remainder_pos(const UniPoly& f, const UniPoly& g) {
    const int df = f.degree(), dg = g.degree();
    Rational m = rational_abs(g.leading());
    Rational scale = 1;
    for (int k = 0; k < df - dg + 1; ++k) scale *= m;
    return (f * scale).divmod(g).second;
}

int sign_at_neg_inf(const UniPoly& p) {
    int s = sign_of(p.leading());
    return p.degree() % 2 == 0 ? s : -s;
}

int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

SturmChain sturm_chain(const UniPoly& square_free) {
    if (square_free.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
    SturmChain chain;
    chain.polys.push_back(square_free.primitive_signed());
    if (square_free.degree() == 0) return chain;
    UniPoly d = square_free.derivative().primitive_signed();
    chain.polys.push_back(d);
    while (!chain.polys.back().is_zero() && chain.polys.back().degree() > 0) {
        const UniPoly& a = chain.polys[chain.polys.size() - 2];
        const UniPoly& b = chain.polys.back();
        UniPoly r = pseudo_remainder_pos(a, b);
        if (r.is_zero()) break;
        chain.polys.push_back((-r).primitive_signed());
    }
    return chain;
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(p.is_zero() ? 0 : sign_of(p(x)));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(p.is_zero() ? 0 : sign_of(p.leading()));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(p.is_zero() ? 0 : sign_at_neg_inf(p));
    return count_variations(signs);
}

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
    if (u.degree() == 0) return UniPoly::constant(1);
    UniPoly g = gcd(u, u.derivative());
    if (g.degree() == 0) return u.primitive_positive();
    return u.divide_exact(g).primitive_positive();
}

std::vector<UniPoly> repeated_gcd_chain(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("gcd chain of the zero polynomial");
    std::vector<UniPoly> chain;
    chain.push_back(u.primitive_positive());
    while (chain.back().degree() > 0) {
        chain.push_back(gcd(chain.back(), chain.back().derivative()));
    }
    return chain;
}

Rational cauchy_root_bound(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("Cauchy bound of the zero polynomial");
    Rational m = 0;
    const Rational lead = rational_abs(u.leading());
    for (int k = 0; k < u.degree(); ++k) {
        Rational q = rational_abs(u.coeff(k)) / lead;
        if (q > m) m = q;
    }
    return 1 + m;
}

namespace {

struct CountContext {
    UniPoly sf;
    SturmChain chain;
};

CountContext make_count_context(const UniPoly& u) {
    CountContext ctx;
    ctx.sf = squarefree_part(u);
    ctx.chain = sturm_chain(ctx.sf);
    return ctx;
}

// Distinct roots in (a, b] with infinite endpoints allowed. The variation
// count skips zero entries, which makes root endpoints safe.
int count_half_open(const CountContext& ctx, const std::optional<Rational>& a,
                    const std::optional<Rational>& b) {
    int va = a ? ctx.chain.variations_at(*a) : ctx.chain.variations_at_neg_inf();
    int vb = b ? ctx.chain.variations_at(*b) : ctx.chain.variations_at_pos_inf();
    return va - vb;
}

int count_in(const CountContext& ctx, const Interval& I) {
    if (I.lo && I.hi && *I.lo >= *I.hi) throw Error("bad_interval", "interval with lo >= hi");
    if (ctx.sf.degree() == 0) return 0;
    int n = count_half_open(ctx, I.lo, I.hi);
    if (I.hi && I.hi_open && ctx.sf(*I.hi) == 0) --n; // (a, b] counted b
    if (I.lo && !I.lo_open && ctx.sf(*I.lo) == 0) ++n;
    return n;
}

} // namespace

int count_real_roots(const UniPoly& u, const Interval& I) {
    if (u.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
    return count_in(make_count_context(u), I);
}

bool is_real_rooted(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("is_real_rooted on the zero polynomial");
    if (u.degree() == 0) return true; // vacuous: no roots required
    CountContext ctx = make_count_context(u);
    return count_in(ctx, Interval::whole()) == ctx.sf.degree();
}

bool all_roots_positive(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("all_roots_positive on the zero polynomial");
    if (u.degree() == 0) return true;
    CountContext ctx = make_count_context(u);
    if (count_in(ctx, Interval::whole()) != ctx.sf.degree())
        throw Error("not_real_rooted", "all_roots_positive requires a real-rooted polynomial");
    if (ctx.sf(Rational(0)) == 0) return false;
    return count_in(ctx, Interval::left_of(Rational(0))) == 0;
}

namespace {

struct Segment {
    Rational lo, hi; // endpoints never roots of sf
    int count;
};

// Shrinks a symmetric interval around an exact root m until it isolates the
// root, has non-root endpoints, and is no wider than `width`.
IsolatedRoot box_exact_root(const CountContext& ctx, const Rational& m, Rational delta,
                            const Rational& width) {
    for (;;) {
        bool ok = ctx.sf(m - delta) != 0 && ctx.sf(m + delta) != 0 && 2 * delta <= width;
        if (ok) {
            Interval window = Interval::open(m - delta, m + delta);
            if (count_in(ctx, window) == 1) {
                IsolatedRoot r;
                r.lo = m - delta;
                r.hi = m + delta;
                r.sign_left = sign_of(ctx.sf(r.lo));
                r.sign_right = sign_of(ctx.sf(r.hi));
                r.exact = m;
                return r;
            }
        }
        delta /= 2;
    }
}

} // namespace

std::vector<IsolatedRoot> isolate_roots(const UniPoly& u, const Rational& width) {
    if (u.is_zero()) throw ZeroPolynomial("isolate_roots on the zero polynomial");
    if (width <= 0) throw Error("bad_width", "isolation width must be positive");
    std::vector<IsolatedRoot> out;
    if (u.degree() == 0) return out;
    CountContext ctx = make_count_context(u);
    const Rational bound = cauchy_root_bound(ctx.sf);

    std::deque<Segment> work;
    {
        Segment s{-bound, bound, 0};
        s.count = count_in(ctx, Interval::open(s.lo, s.hi));
        if (s.count > 0) work.push_back(s);
    }
    while (!work.empty()) {
        Segment s = work.front();
        work.pop_front();
        if (s.count == 1 && s.hi - s.lo <= width) {
            IsolatedRoot r;
            r.lo = s.lo;
            r.hi = s.hi;
            r.sign_left = sign_of(ctx.sf(s.lo));
            r.sign_right = sign_of(ctx.sf(s.hi));
            out.push_back(r);
            continue;
        }
        Rational m = (s.lo + s.hi) / 2;
        if (ctx.sf(m) == 0) {
            Rational delta = (s.hi - s.lo) / 8;
            if (delta > width / 2) delta = width / 2;
            IsolatedRoot r = box_exact_root(ctx, m, delta, width);
            Segment left{s.lo, r.lo, 0};
            left.count = count_in(ctx, Interval::open(left.lo, left.hi));
            Segment right{r.hi, s.hi, 0};
            right.count = count_in(ctx, Interval::open(right.lo, right.hi));
            out.push_back(r);
            if (left.count > 0) work.push_back(left);
            if (right.count > 0) work.push_back(right);
        } else {
            Segment left{s.lo, m, 0};
            left.count = count_in(ctx, Interval::open(left.lo, left.hi));
            Segment right{m, s.hi, s.count - left.count};
            if (left.count > 0) work.push_back(left);
            if (right.count > 0) work.push_back(right);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });

    // multiplicity m <=> root of gcd-chain entry m-1 but not of entry m
    std::vector<UniPoly> chain = repeated_gcd_chain(u);
    for (auto& r : out) {
        r.multiplicity = 0;
        Interval window = Interval::open(r.lo, r.hi);
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (chain[k].degree() == 0 || count_real_roots(chain[k], window) == 0) break;
            r.multiplicity = static_cast<int>(k) + 1;
        }
        if (r.multiplicity == 0)
            throw InternalInconsistency("isolated root lost during multiplicity computation");
    }
    return out;
}

std::vector<IsolatedRoot> isolate_roots(const UniPoly& u) {
    return isolate_roots(u, default_isolation_width());
}

AlgebraicReal AlgebraicReal::from_isolated(const UniPoly& square_free, const IsolatedRoot& r) {
    AlgebraicReal a;
    a.sf = square_free;
    a.lo = r.lo;
    a.hi = r.hi;
    a.sign_lo = r.sign_left;
    a.exact = r.exact;
    return a;
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& value) {
    AlgebraicReal a;
    a.sf = UniPoly({-value, Rational(1)});
    a.lo = value - 1;
    a.hi = value + 1;
    a.sign_lo = -1;
    a.exact = value;
    return a;
}

IntervalQ AlgebraicReal::enclosure() const {
    if (exact) return IntervalQ::point(*exact);
    return IntervalQ(lo, hi);
}

void AlgebraicReal::refine() {
    if (exact) return;
    Rational m = (lo + hi) / 2;
    Rational vm = sf(m);
    if (vm == 0) {
        exact = m;
        lo = m;
        hi = m;
        return;
    }
    if (sign_of(vm) == sign_lo) {
        lo = m;
    } else {
        hi = m;
    }
}

void AlgebraicReal::refine_below(const Rational& target_width) {
    while (!exact && hi - lo > target_width) refine();
}

int sign_at(const UniPoly& p, AlgebraicReal& alpha) {
    if (p.is_zero()) return 0;
    if (alpha.exact) return sign_of(p(*alpha.exact));
    UniPoly g = gcd(alpha.sf, p);
    if (g.degree() > 0 && count_real_roots(g, Interval::open(alpha.lo, alpha.hi)) == 1) return 0;
    for (int depth = 0; depth < 256; ++depth) {
        IntervalQ v = interval_eval(p, alpha.enclosure());
        int s = v.determined_sign();
        if (s != 0) return s;
        if (v.lo == 0 && v.hi == 0) return 0;
        alpha.refine();
        if (alpha.exact) return sign_of(p(*alpha.exact));
    }
    throw UnresolvableSign("sign_at: refinement cap reached");
}

} // namespace hyp
