#include "hyp/planecurve.hpp"

#include <algorithm>
#include <functional>

#include "hyp/error.hpp"
#include "hyp/rng.hpp"

namespace hyp {

namespace {

constexpr int kRefineCap = 64;

struct LineGeom {
    PointQ e0, v;
    UniPoly u;  // C(t*e0 + v)
    UniPoly sf; // square-free part
    std::array<UniPoly, 3> pcoord; // P_i(t) = e0_i*t + v_i
    std::array<UniPoly, 3> gcoord; // G_i(t) = (dC/dx_i)(P(t))
    int deg = 0;
};

// A partial derivative may vanish identically, which restrict_line rejects
// as non-homogeneous input; map that case to the zero restriction.
UniPoly restrict_partial(const MultiPoly& dC, const PointQ& e0, const PointQ& v) {
    if (dC.is_zero()) return UniPoly();
    return restrict_line(dC, e0, v);
}

LineGeom build_line(const MultiPoly& C, const PointQ& e0, const PointQ& v) {
    LineGeom g;
    g.e0 = e0;
    g.v = v;
    g.u = restrict_line(C, e0, v);
    if (g.u.is_zero()) throw InternalInconsistency("line restriction vanished with h(e0) != 0");
    g.sf = squarefree_part(g.u);
    g.deg = homogeneous_degree(C);
    for (int i = 0; i < 3; ++i) {
        g.pcoord[i] = UniPoly({v[i], e0[i]});
        g.gcoord[i] = restrict_partial(C.derivative(i), e0, v);
    }
    return g;
}

bool singular_at(const LineGeom& geom, const AlgebraicReal& root_const) {
    UniPoly g = geom.sf;
    for (int i = 0; i < 3; ++i) {
        if (g.degree() == 0) return false;
        if (geom.gcoord[i].is_zero()) continue;
        g = gcd(g, geom.gcoord[i]);
    }
    if (g.degree() == 0) return false;
    if (root_const.exact) return g(*root_const.exact) == 0;
    return count_real_roots(g, Interval::open(root_const.lo, root_const.hi)) == 1;
}

int chart_of(const LineGeom& geom, AlgebraicReal& root) {
    // largest |coordinate| of the sweep center, falling back to any
    // coordinate that is certified nonzero at the point
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (rational_abs(geom.e0[i]) > rational_abs(geom.e0[best])) best = i;
    if (sign_at(geom.pcoord[best], root) != 0) return best;
    for (int i = 0; i < 3; ++i)
        if (i != best && sign_at(geom.pcoord[i], root) != 0) return i;
    throw InternalInconsistency("curve point with all homogeneous coordinates zero");
}

Box2 locus_box(const LineGeom& geom, AlgebraicReal& root, int chart) {
    for (int depth = 0; depth <= kRefineCap; ++depth) {
        IntervalQ den = interval_eval(geom.pcoord[chart], root.enclosure());
        if (!den.contains_zero()) {
            int ia = chart == 0 ? 1 : 0;
            int ib = chart == 2 ? 1 : 2;
            Box2 box;
            box.chart = chart;
            box.x = interval_eval(geom.pcoord[ia], root.enclosure()) / den;
            box.y = interval_eval(geom.pcoord[ib], root.enclosure()) / den;
            return box;
        }
        root.refine();
    }
    throw UnresolvableSign("locus box: chart denominator would not separate from zero");
}

CurvePoint make_curve_point(const LineGeom& geom, const IsolatedRoot& r, int theta, int branch) {
    CurvePoint p;
    p.theta_index = theta;
    p.branch = branch;
    p.multiplicity = r.multiplicity;
    p.center = geom.e0;
    p.dir = geom.v;
    p.line_sf = geom.sf;
    p.root_lo = r.exact ? *r.exact : r.lo;
    p.root_hi = r.exact ? *r.exact : r.hi;
    p.root_exact = r.exact;

    AlgebraicReal root = p.root();
    int chart = chart_of(geom, root);
    p.locus = locus_box(geom, root, chart);

    if (singular_at(geom, root)) {
        p.smooth = false;
        return p;
    }
    // certified smooth; also refine until the gradient box excludes zero
    for (int depth = 0; depth <= kRefineCap; ++depth) {
        for (int i = 0; i < 3; ++i) {
            if (geom.gcoord[i].is_zero()) continue;
            if (interval_eval(geom.gcoord[i], root.enclosure()).determined_sign() != 0) {
                p.smooth = true;
                // keep the refined enclosure
                p.root_lo = root.lo;
                p.root_hi = root.hi;
                p.root_exact = root.exact;
                p.locus = locus_box(geom, root, chart);
                return p;
            }
        }
        root.refine();
    }
    p.smooth = false; // not certified within the refinement cap
    return p;
}

LineGeom geom_of_point(const MultiPoly& C, const CurvePoint& p) {
    return build_line(C, p.center, p.dir);
}

void require_ternary(const MultiPoly& C) {
    if (C.nvars() != 3) throw DimensionMismatch("plane-curve operations require nvars = 3");
}

// ---------------------------------------------------------------------
// bivariate sign evaluation (polynomials in two isolated algebraic reals)

MultiPoly promote(const UniPoly& p, int var) {
    MultiPoly out(2);
    for (int k = 0; k < static_cast<int>(p.coeffs().size()); ++k) {
        if (p.coeff(k) == 0) continue;
        Exponents e(2, 0);
        e[var] = k;
        out.add_term(e, p.coeff(k));
    }
    return out;
}

UniPoly substitute_var(const MultiPoly& p, int var, const Rational& val) {
    std::vector<Rational> acc;
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        for (int k = 0; k < e[var]; ++k) coeff *= val;
        int deg_other = e[1 - var];
        if (static_cast<int>(acc.size()) <= deg_other) acc.resize(deg_other + 1, Rational(0));
        acc[deg_other] += coeff;
    }
    return UniPoly(std::move(acc));
}

IntervalQ interval_eval2(const MultiPoly& p, const IntervalQ& x, const IntervalQ& y) {
    IntervalQ acc = IntervalQ::point(0);
    for (const auto& [e, c] : p.terms()) {
        IntervalQ term = IntervalQ::point(c);
        for (int k = 0; k < e[0]; ++k) term = term * x;
        for (int k = 0; k < e[1]; ++k) term = term * y;
        acc = acc + term;
    }
    return acc;
}

int sign_at_pair(const MultiPoly& p, AlgebraicReal& a, AlgebraicReal& b) {
    if (p.is_zero()) return 0;
    if (a.exact) {
        UniPoly q = substitute_var(p, 0, *a.exact);
        return sign_at(q, b);
    }
    if (b.exact) {
        UniPoly q = substitute_var(p, 1, *b.exact);
        return sign_at(q, a);
    }
    for (int depth = 0; depth <= kRefineCap; ++depth) {
        IntervalQ v = interval_eval2(p, a.enclosure(), b.enclosure());
        int s = v.determined_sign();
        if (s != 0) return s;
        if (a.hi - a.lo >= b.hi - b.lo) a.refine(); else b.refine();
        if (a.exact || b.exact) return sign_at_pair(p, a, b);
    }
    throw UnresolvableSign("sign_at_pair: refinement cap reached");
}

// ---------------------------------------------------------------------
// projection coordinates on a screen line

// Two fixed rational points spanning the line ker<l,.>, via cross products
// with standard basis vectors.
std::pair<PointQ, PointQ> span_of_line(const PointQ& l) {
    auto cross = [](const PointQ& a, const PointQ& b) {
        return PointQ{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                      a[0] * b[1] - a[1] * b[0]};
    };
    std::vector<PointQ> candidates;
    for (int k = 0; k < 3; ++k) {
        PointQ std_k(3, Rational(0));
        std_k[k] = 1;
        PointQ q = cross(l, std_k);
        if (!is_zero(q)) candidates.push_back(q);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (!collinear(candidates[i], candidates[j]))
                return {candidates[i], candidates[j]};
    throw InternalInconsistency("degenerate screen line");
}

Rational det3(const PointQ& a, const PointQ& b, const PointQ& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Linear forms A, B with (A:B) a projective coordinate on the screen line;
// the projection of x from e is y(x) = <l,x>e - <l,e>x and A(x) = m0(y(x)),
// B(x) = m1(y(x)) for the dual pair m0, m1 of (q0, q1).
struct ScreenForms {
    PointQ a_vec, b_vec;
};

ScreenForms screen_forms(const PointQ& l, const PointQ& e) {
    auto [q0, q1] = span_of_line(l);
    Rational le = dot(l, e);
    ScreenForms f;
    f.a_vec = PointQ(3);
    f.b_vec = PointQ(3);
    for (int i = 0; i < 3; ++i) {
        PointQ std_i(3, Rational(0));
        std_i[i] = 1;
        PointQ y = sub(scale(l[i], e), scale(le, std_i)); // y(std_i)
        f.a_vec[i] = det3(y, q1, l);
        f.b_vec[i] = det3(q0, y, l);
    }
    return f;
}

UniPoly dot_polys(const PointQ& form, const std::array<UniPoly, 3>& comps) {
    UniPoly acc;
    for (int i = 0; i < 3; ++i) acc = acc + comps[i] * form[i];
    return acc;
}

UniPoly dot_poly_poly(const std::array<UniPoly, 3>& a, const std::array<UniPoly, 3>& b) {
    UniPoly acc;
    for (int i = 0; i < 3; ++i) acc = acc + a[i] * b[i];
    return acc;
}

std::array<UniPoly, 3> rotated_gradient(const LineGeom& geom, int chart) {
    int ia = chart == 0 ? 1 : 0;
    int ib = chart == 2 ? 1 : 2;
    std::array<UniPoly, 3> w;
    w[ia] = -geom.gcoord[ib];
    w[ib] = geom.gcoord[ia];
    w[chart] = UniPoly();
    return w;
}

// Exact orientation sign at a point of the line geometry; allows p on the
// screen (needed when the screen is the tangent at the point itself).
int orientation_sign_impl(const LineGeom& geom, AlgebraicReal& root, int chart,
                          const ScreenForms& forms, int tau_choice) {
    std::array<UniPoly, 3> w = rotated_gradient(geom, chart);
    UniPoly ap = dot_polys(forms.a_vec, geom.pcoord);
    UniPoly bp = dot_polys(forms.b_vec, geom.pcoord);
    UniPoly aw = dot_polys(forms.a_vec, w);
    UniPoly bw = dot_polys(forms.b_vec, w);
    UniPoly d = ap * bw - aw * bp;
    int sd = sign_at(d, root);
    if (sd == 0)
        throw RamifiedConfiguration("projection center lies on the tangent at the point");
    int spj = sign_at(geom.pcoord[chart], root);
    return tau_choice * sd * (geom.deg % 2 == 1 ? spj : 1);
}

} // namespace

AlgebraicReal CurvePoint::root() const {
    AlgebraicReal a;
    a.sf = line_sf;
    a.lo = root_lo;
    a.hi = root_hi;
    a.sign_lo = root_exact ? 0 : sign_of(line_sf(root_lo));
    a.exact = root_exact;
    return a;
}

Line2 Line2::from_coeffs(const PointQ& raw) {
    if (raw.size() != 3 || is_zero(raw))
        throw Error("bad_line", "a projective line needs 3 coefficients, not all zero");
    // clear denominators, then normalize to a primitive integer vector
    BigInt den_lcm = 1;
    for (const auto& c : raw) den_lcm = lcm(den_lcm, c.get_den());
    PointQ ints(3);
    for (int i = 0; i < 3; ++i) ints[i] = raw[i] * Rational(den_lcm);
    Line2 l;
    l.coeffs = canonical_direction(ints);
    return l;
}

std::vector<CurvePoint> line_points(const MultiPoly& C, const PointQ& e0, const PointQ& dir,
                                    int theta_index) {
    require_ternary(C);
    if (evaluate(C, e0) == 0)
        throw NotApplicable("sweep center lies on the curve");
    LineGeom geom = build_line(C, e0, dir);
    if (!is_real_rooted(geom.u))
        throw InvalidDirection("line restriction is not real-rooted: the center is not a "
                               "hyperbolicity direction",
                               point_to_string(dir));
    std::vector<CurvePoint> pts;
    auto roots = isolate_roots(geom.u);
    for (std::size_t b = 0; b < roots.size(); ++b)
        pts.push_back(make_curve_point(geom, roots[b], theta_index, static_cast<int>(b)));
    return pts;
}

std::vector<CurvePoint> sample_real_points(const MultiPoly& C, const PointQ& e0, int n_angles) {
    require_ternary(C);
    if (n_angles < 1) throw Error("bad_angles", "n_angles must be >= 1");
    if (evaluate(C, e0) == 0) throw NotApplicable("sweep center lies on the curve");

    // two standard basis vectors completing e0 to a basis
    PointQ w1, w2;
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i) {
        for (int j = i + 1; j < 3 && !found; ++j) {
            PointQ a(3, Rational(0)), b(3, Rational(0));
            a[i] = 1;
            b[j] = 1;
            if (rank({e0, a, b}) == 3) {
                w1 = a;
                w2 = b;
                found = true;
            }
        }
    }
    if (!found) throw InternalInconsistency("no coordinate pair completes the sweep center");

    // half-turn of directions in two charts of the pencil, ordered by angle
    std::vector<PointQ> dirs;
    const int m1 = (n_angles + 1) / 2;
    const int m2 = n_angles - m1;
    for (int k = 0; k < m1; ++k) {
        Rational s = make_rational(k, m1);
        dirs.push_back(add(scale(1 - s * s, w1), scale(2 * s, w2)));
    }
    for (int k = m2; k >= 1; --k) {
        Rational s = make_rational(k, m2);
        dirs.push_back(add(scale(s * s - 1, w1), scale(2 * s, w2)));
    }

    std::vector<CurvePoint> pts;
    for (std::size_t theta = 0; theta < dirs.size(); ++theta) {
        auto line = line_points(C, e0, dirs[theta], static_cast<int>(theta));
        pts.insert(pts.end(), line.begin(), line.end());
    }
    return pts;
}

std::vector<int> oval_labels(const MultiPoly& C, const std::vector<CurvePoint>& pts, int n_angles) {
    const int d = homogeneous_degree(C);
    std::vector<int> parent(pts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::vector<std::vector<int>> by_theta(n_angles);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].theta_index >= 0 && pts[i].theta_index < n_angles)
            by_theta[pts[i].theta_index].push_back(static_cast<int>(i));
    }
    for (auto& col : by_theta)
        std::sort(col.begin(), col.end(),
                  [&](int a, int b) { return pts[a].branch < pts[b].branch; });

    auto full = [&](int t) { return static_cast<int>(by_theta[t].size()) == d; };
    for (int t = 0; t + 1 < n_angles; ++t) {
        if (!full(t) || !full(t + 1)) continue;
        for (int b = 0; b < d; ++b) unite(by_theta[t][b], by_theta[t + 1][b]);
    }
    // the sweep closes onto the first line with reversed parameter
    if (n_angles >= 2 && full(n_angles - 1) && full(0)) {
        for (int b = 0; b < d; ++b) unite(by_theta[n_angles - 1][b], by_theta[0][d - 1 - b]);
    }

    std::vector<int> labels(pts.size(), -1);
    std::vector<int> order;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = std::find(order.begin(), order.end(), r);
        if (it == order.end()) {
            order.push_back(r);
            labels[i] = static_cast<int>(order.size()) - 1;
        } else {
            labels[i] = static_cast<int>(it - order.begin());
        }
    }
    return labels;
}

bool point_is_singular(const MultiPoly& C, const CurvePoint& p) {
    require_ternary(C);
    LineGeom geom = geom_of_point(C, p);
    AlgebraicReal root = p.root();
    return singular_at(geom, root);
}

Line2 tangent_line(const MultiPoly& C, const CurvePoint& p) {
    require_ternary(C);
    LineGeom geom = geom_of_point(C, p);
    AlgebraicReal root = p.root();
    if (singular_at(geom, root))
        throw SingularPoint("gradient vanishes at the point; tangent line undefined");
    if (!p.root_exact)
        throw UnresolvableSign("tangent coefficients are irrational at this point; "
                               "use tangent_side for incidence tests");
    PointQ grad(3);
    for (int i = 0; i < 3; ++i)
        grad[i] = geom.gcoord[i].is_zero() ? Rational(0) : geom.gcoord[i](*p.root_exact);
    return Line2::from_coeffs(grad);
}

int tangent_side(const MultiPoly& C, const CurvePoint& p, const PointQ& x) {
    require_ternary(C);
    if (x.size() != 3) throw DimensionMismatch("tangent_side expects a 3-coordinate point");
    LineGeom geom = geom_of_point(C, p);
    AlgebraicReal root = p.root();
    if (singular_at(geom, root))
        throw SingularPoint("gradient vanishes at the point; tangent side undefined");
    UniPoly d = dot_polys(x, geom.gcoord);
    return sign_at(d, root);
}

int orientation_sign(const MultiPoly& C, const CurvePoint& p, const PointQ& e, const Line2& L,
                     int tau_choice) {
    require_ternary(C);
    if (tau_choice != 1 && tau_choice != -1)
        throw Error("bad_tau", "tau_choice must be +1 or -1");
    if (!p.smooth) throw SingularPoint("orientation_sign requires a certified-smooth point");
    if (dot(L.coeffs, e) == 0)
        throw Error("precondition", "projection center lies on the screen line");

    LineGeom geom = geom_of_point(C, p);
    AlgebraicReal root = p.root();
    UniPoly on_line = dot_polys(L.coeffs, geom.pcoord);
    if (sign_at(on_line, root) == 0)
        throw Error("precondition", "curve point lies on the screen line");
    ScreenForms forms = screen_forms(L.coeffs, e);
    return orientation_sign_impl(geom, root, p.locus.chart, forms, tau_choice);
}

ConsistencyReport orientation_consistency(const MultiPoly& C, const PointQ& e1, const PointQ& e2,
                                          int n_points, std::uint64_t seed) {
    require_ternary(C);
    if (n_points < 1) throw Error("bad_points", "n_points must be >= 1");
    const int d = homogeneous_degree(C);
    const int n_angles = n_points / std::max(d, 1) + 3;
    std::vector<CurvePoint> pts = sample_real_points(C, e1, n_angles);

    ConsistencyReport report;
    // a screen line missing both projection centers
    for (std::uint64_t attempt = 0;; ++attempt) {
        CounterRng rng(seed, 0x11a + attempt);
        PointQ l(3);
        for (int i = 0; i < 3; ++i) l[i] = Rational(rng.uniform_int(-9, 9));
        if (is_zero(l)) continue;
        if (dot(l, e1) == 0 || dot(l, e2) == 0) continue;
        report.screen = Line2::from_coeffs(l);
        break;
    }

    for (const auto& p : pts) {
        if (static_cast<int>(report.samples.size()) >= n_points) break;
        if (!p.smooth) {
            ++report.skipped;
            continue;
        }
        LineGeom geom = geom_of_point(C, p);
        AlgebraicReal root = p.root();
        UniPoly on_line = dot_polys(report.screen.coeffs, geom.pcoord);
        if (sign_at(on_line, root) == 0) {
            ++report.skipped;
            continue;
        }
        try {
            int s1 = orientation_sign(C, p, e1, report.screen, +1);
            int s2 = orientation_sign(C, p, e2, report.screen, +1);
            if (orientation_sign(C, p, e1, report.screen, -1) != -s1 ||
                orientation_sign(C, p, e2, report.screen, -1) != -s2)
                throw InternalInconsistency("orientation sign is not odd in tau_choice");
            OrientationSample s;
            s.point = p;
            s.sign1 = s1;
            s.sign2 = s2;
            s.product = s1 * s2;
            report.samples.push_back(std::move(s));
            ++report.certified_smooth;
        } catch (const RamifiedConfiguration&) {
            ++report.skipped;
        } catch (const UnresolvableSign&) {
            ++report.skipped;
        }
    }
    if (report.samples.empty())
        throw Error("insufficient_smooth_samples",
                    "no certified-smooth usable points among the sweep samples");

    report.verdict = "constant";
    for (std::size_t i = 1; i < report.samples.size(); ++i) {
        if (report.samples[i].product != report.samples[0].product) {
            report.verdict = "non_constant";
            report.witnesses.push_back(static_cast<int>(i));
        }
    }
    return report;
}

void tangent_check_line(const MultiPoly& C, const PointQ& e, const PointQ& v, int line_index,
                        TangentAvoidanceReport& report) {
    require_ternary(C);
    LineGeom geom = build_line(C, e, v);
    if (!is_real_rooted(geom.u))
        throw InvalidDirection("tangent check: line restriction not real-rooted",
                               point_to_string(v));
    auto roots = isolate_roots(geom.u);
    for (const auto& r : roots) {
        if (r.multiplicity < 2) continue;
        MultipleRootFinding f;
        f.line_index = line_index;
        f.dir = v;
        f.root_lo = r.lo;
        f.root_hi = r.hi;
        f.root_exact = r.exact;
        f.multiplicity = r.multiplicity;
        AlgebraicReal root = AlgebraicReal::from_isolated(geom.sf, r);
        f.attribution = singular_at(geom, root) ? "certified_singular" : "certified_smooth";
        if (f.attribution == "certified_smooth") report.pass = false;
        report.findings.push_back(std::move(f));
    }
    ++report.lines_checked;
}

TangentAvoidanceReport tangent_avoidance_check(const MultiPoly& C, const PointQ& e, int lines,
                                               std::uint64_t seed) {
    require_ternary(C);
    if (lines < 1) throw Error("bad_lines", "line count must be >= 1");
    TangentAvoidanceReport report;
    for (int k = 0; k < lines; ++k) {
        CounterRng rng(seed, static_cast<std::uint64_t>(k));
        PointQ v(3);
        do {
            for (int i = 0; i < 3; ++i) v[i] = Rational(rng.uniform_int(-10, 10));
        } while (is_zero(v) || collinear(v, e));
        tangent_check_line(C, e, v, k, report);
    }
    return report;
}

// ---------------------------------------------------------------------
// the obstruction walkthrough

namespace {

std::vector<double> approx_point(const std::array<UniPoly, 3>& pcoord, AlgebraicReal& root) {
    root.refine_below(make_rational(1, 1L << 24));
    std::vector<double> out(3);
    for (int i = 0; i < 3; ++i) {
        IntervalQ v = interval_eval(pcoord[i], root.enclosure());
        out[i] = to_double(v.midpoint());
    }
    return out;
}

struct ScreenFormPolys {
    std::array<UniPoly, 3> a_vec, b_vec; // coefficient entries as polynomials in t1
};

// screen_forms with the tangent at p1 as the (algebraic) screen line:
// l(t1) = G(t1), q0/q1 via cross products with two coordinate vectors.
ScreenFormPolys screen_form_polys(const LineGeom& geom1, int skip_index, const PointQ& e) {
    int i0 = skip_index == 0 ? 1 : 0;
    int i1 = skip_index == 2 ? 1 : 2;
    auto cross_std = [&](int k) {
        // l x std_k as polynomials in t1
        std::array<UniPoly, 3> q;
        const auto& l = geom1.gcoord;
        // (l x e_k)_i = sum eps_{i k' i'}; expand explicitly
        if (k == 0) { q[0] = UniPoly(); q[1] = l[2]; q[2] = -l[1]; }
        if (k == 1) { q[0] = -l[2]; q[1] = UniPoly(); q[2] = l[0]; }
        if (k == 2) { q[0] = l[1]; q[1] = -l[0]; q[2] = UniPoly(); }
        return q;
    };
    auto q0 = cross_std(i0);
    auto q1 = cross_std(i1);

    auto det3p = [](const std::array<UniPoly, 3>& a, const std::array<UniPoly, 3>& b,
                    const std::array<UniPoly, 3>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };

    const auto& l = geom1.gcoord;
    UniPoly le; // <l, e>(t1)
    for (int i = 0; i < 3; ++i) le = le + l[i] * e[i];

    ScreenFormPolys f;
    for (int i = 0; i < 3; ++i) {
        // y(std_i) = l_i * e - <l,e> * std_i, as polynomial vector in t1
        std::array<UniPoly, 3> y;
        for (int r = 0; r < 3; ++r) {
            y[r] = l[i] * e[r];
            if (r == i) y[r] = y[r] - le;
        }
        f.a_vec[i] = det3p(y, q1, l);
        f.b_vec[i] = det3p(q0, y, l);
    }
    return f;
}

MultiPoly dot_mixed(const std::array<UniPoly, 3>& forms_t1, const std::array<UniPoly, 3>& comps_t2) {
    MultiPoly acc(2);
    for (int i = 0; i < 3; ++i) {
        if (forms_t1[i].is_zero() || comps_t2[i].is_zero()) continue;
        acc = acc + promote(forms_t1[i], 0) * promote(comps_t2[i], 1);
    }
    return acc;
}

} // namespace

WalkthroughReport demonstrate_obstruction(const MultiPoly& C, const PointQ& e1, const PointQ& e2,
                                          std::uint64_t seed) {
    require_ternary(C);
    const int d = homogeneous_degree(C);
    WalkthroughReport report;

    if (same_component(C, e1, e2)) {
        report.outcome = "same_component";
        report.notes = "e1 and e2 lie in the same cone; nothing to demonstrate";
        return report;
    }
    if (same_component(C, e1, negate(e2))) {
        report.outcome = "same_pair";
        report.notes = "e2 is in the negation of the cone of e1: projectively the same region";
        return report;
    }

    const int attempts = 12;
    std::string last_failure;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        try {
            CounterRng rng(seed, 0x0b5 + static_cast<std::uint64_t>(attempt));

            // p1: extreme root of a line through e1 (a smooth boundary point
            // of the cone of e1)
            PointQ w1(3);
            do {
                for (int i = 0; i < 3; ++i) w1[i] = Rational(rng.uniform_int(-10, 10));
            } while (is_zero(w1) || collinear(w1, e1));
            LineGeom geom1 = build_line(C, e1, w1);
            if (!is_real_rooted(geom1.u))
                throw InvalidDirection("walkthrough: e1 not hyperbolic", point_to_string(w1));
            auto roots1 = isolate_roots(geom1.u);
            if (roots1.empty()) { last_failure = "no boundary point on sweep line"; continue; }
            IsolatedRoot r1 = roots1.back();
            if (r1.multiplicity > 1) { last_failure = "extreme root not simple"; continue; }
            AlgebraicReal t1 = AlgebraicReal::from_isolated(geom1.sf, r1);
            if (singular_at(geom1, t1)) { last_failure = "boundary point singular"; continue; }

            // G: line through e1 meeting the cone of e2, transversal and
            // smooth everywhere
            PointQ vg = e2;
            bool g_ok = false;
            for (int g_try = 0; g_try < 16 && !g_ok; ++g_try) {
                LineGeom geomg = build_line(C, e1, vg);
                if (is_real_rooted(geomg.u) && count_real_roots(geomg.u) == d) {
                    auto rootsg = isolate_roots(geomg.u);
                    bool all_smooth = true;
                    for (const auto& r : rootsg) {
                        AlgebraicReal a = AlgebraicReal::from_isolated(geomg.sf, r);
                        if (singular_at(geomg, a)) { all_smooth = false; break; }
                    }
                    if (all_smooth) { g_ok = true; break; }
                }
                // nudge within the cone of e2
                PointQ delta(3);
                for (int i = 0; i < 3; ++i)
                    delta[i] = make_rational(rng.uniform_int(-2, 2), 16);
                PointQ cand = add(e2, delta);
                if (!is_zero(cand) && !collinear(cand, e1) && evaluate(C, cand) != 0 &&
                    in_cone(C, e2, cand))
                    vg = cand;
            }
            if (!g_ok) { last_failure = "no transversal line through e1 into the cone of e2"; continue; }

            LineGeom geomg = build_line(C, e1, vg);
            auto rootsg = isolate_roots(geomg.u);
            // p2: smallest positive root along t -> t*e1 + vg (vg inside the
            // cone of e2, reached at t = 0)
            const UniPoly t_poly({Rational(0), Rational(1)});
            IsolatedRoot* r2 = nullptr;
            for (auto& r : rootsg) {
                AlgebraicReal a = AlgebraicReal::from_isolated(geomg.sf, r);
                if (sign_at(t_poly, a) > 0) { r2 = &r; break; }
            }
            if (!r2) { last_failure = "cone of e2 unbounded along G"; continue; }
            AlgebraicReal t2 = AlgebraicReal::from_isolated(geomg.sf, *r2);

            // tangent at p2 separates e1 from e2
            UniPoly t2_at_e1 = dot_polys(e1, geomg.gcoord);
            UniPoly t2_at_e2 = dot_polys(e2, geomg.gcoord);
            int se1 = sign_at(t2_at_e1, t2);
            int se2 = sign_at(t2_at_e2, t2);
            if (se1 == 0 || se2 == 0) { last_failure = "degenerate tangent incidence at p2"; continue; }
            report.t2_separates = (se1 * se2 < 0);

            // orientation signs with the tangent at p1 as the screen
            int k_nonzero = -1;
            for (int k = 0; k < 3; ++k) {
                if (!geom1.gcoord[k].is_zero() && sign_at(geom1.gcoord[k], t1) != 0) {
                    k_nonzero = k;
                    break;
                }
            }
            if (k_nonzero < 0) { last_failure = "vanishing gradient at p1"; continue; }

            int chart1 = chart_of(geom1, t1);
            int chart2 = chart_of(geomg, t2);

            auto sigma_p1 = [&](const PointQ& e) {
                ScreenFormPolys f = screen_form_polys(geom1, k_nonzero, e);
                std::array<UniPoly, 3> w = rotated_gradient(geom1, chart1);
                UniPoly ap = dot_poly_poly(f.a_vec, geom1.pcoord);
                UniPoly bp = dot_poly_poly(f.b_vec, geom1.pcoord);
                UniPoly aw = dot_poly_poly(f.a_vec, w);
                UniPoly bw = dot_poly_poly(f.b_vec, w);
                UniPoly dd = ap * bw - aw * bp;
                int sd = sign_at(dd, t1);
                if (sd == 0) throw RamifiedConfiguration("center on tangent at p1");
                int spj = sign_at(geom1.pcoord[chart1], t1);
                return sd * (d % 2 == 1 ? spj : 1);
            };
            auto sigma_p2 = [&](const PointQ& e) {
                ScreenFormPolys f = screen_form_polys(geom1, k_nonzero, e);
                std::array<UniPoly, 3> w2 = rotated_gradient(geomg, chart2);
                MultiPoly ap = dot_mixed(f.a_vec, geomg.pcoord);
                MultiPoly bp = dot_mixed(f.b_vec, geomg.pcoord);
                MultiPoly aw = dot_mixed(f.a_vec, w2);
                MultiPoly bw = dot_mixed(f.b_vec, w2);
                MultiPoly dd = ap * bw - aw * bp;
                int sd = sign_at_pair(dd, t1, t2);
                if (sd == 0) throw RamifiedConfiguration("center on tangent at p2");
                int spj = sign_at(geomg.pcoord[chart2], t2);
                return sd * (d % 2 == 1 ? spj : 1);
            };

            report.sigma_p1_e1 = sigma_p1(e1);
            report.sigma_p1_e2 = sigma_p1(e2);
            report.sigma_p2_e1 = sigma_p2(e1);
            report.sigma_p2_e2 = sigma_p2(e2);

            report.same_orientation_at_p1 = (report.sigma_p1_e1 == report.sigma_p1_e2);
            report.opposite_orientation_at_p2 = (report.sigma_p2_e1 != report.sigma_p2_e2);

            report.outcome = "completed";
            report.sweep_dir = w1;
            report.g_dir = vg;
            report.p1_approx = approx_point(geom1.pcoord, t1);
            report.p2_approx = approx_point(geomg.pcoord, t2);
            if (!report.t2_separates)
                report.failed_expectation = "tangent_at_p2_separates_e1_from_e2";
            else if (!report.same_orientation_at_p1)
                report.failed_expectation = "same_orientation_at_p1";
            else if (!report.opposite_orientation_at_p2)
                report.failed_expectation = "opposite_orientation_at_p2";
            return report;
        } catch (const UnresolvableSign&) {
            last_failure = "sign refinement cap";
            continue;
        } catch (const RamifiedConfiguration&) {
            last_failure = "ramified configuration";
            continue;
        }
    }
    throw ConstructionFailure("walkthrough construction failed after retries: " + last_failure);
}

} // namespace hyp
