#ifndef HYP_PLANECURVE_HPP
#define HYP_PLANECURVE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp/hyperbolicity.hpp"
#include "hyp/intervalq.hpp"
#include "hyp/multipoly.hpp"
#include "hyp/realroots.hpp"

namespace hyp {

// Isolating box for the affine coordinates of a curve point, in the chart
// where coordinate `chart` equals 1.
struct Box2 {
    IntervalQ x, y;
    int chart = 2;
};

// A real point of a plane curve, produced as a root of a line restriction.
// The point is P(t*) where P(t) = t*center + dir and t* is the unique root
// of line_sf in (root_lo, root_hi).
struct CurvePoint {
    int theta_index = 0;
    int branch = 0;
    Box2 locus;
    bool smooth = false;
    int multiplicity = 1;

    PointQ center, dir;
    UniPoly line_sf;
    Rational root_lo, root_hi;
    std::optional<Rational> root_exact;

    AlgebraicReal root() const;
};

// Projective line a*x1 + b*x2 + c*x3 = 0 with canonical primitive integer
// coefficients, first nonzero positive.
struct Line2 {
    PointQ coeffs;
    static Line2 from_coeffs(const PointQ& raw);
};

struct OrientationSample {
    CurvePoint point;
    int sign1 = 0;
    int sign2 = 0;
    int product = 0; // sign1*sign2; independent of the tangent-direction choice
};

struct ConsistencyReport {
    std::string verdict; // "constant" | "non_constant"
    std::vector<OrientationSample> samples;
    int certified_smooth = 0;
    int skipped = 0;
    Line2 screen;
    std::vector<int> witnesses; // indices whose product differs from samples[0]

    bool constant() const { return verdict == "constant"; }
};

struct MultipleRootFinding {
    int line_index = -1;
    PointQ dir;
    Rational root_lo, root_hi;
    std::optional<Rational> root_exact;
    int multiplicity = 1;
    std::string attribution; // "certified_singular" | "certified_smooth" | "inconclusive"
};

struct TangentAvoidanceReport {
    bool pass = true;
    int lines_checked = 0;
    int inconclusive = 0;
    std::vector<MultipleRootFinding> findings;
};

// Record of the two-cone obstruction construction: a smooth boundary point
// p1 of the cone of e1 with tangent T1 as the projection screen, a
// transversal line through e1 into the cone of e2 with boundary point p2,
// and the four projection-induced orientation signs.
struct WalkthroughReport {
    std::string outcome; // "same_component" | "same_pair" | "completed"
    PointQ sweep_dir;    // direction whose extreme root is p1
    PointQ g_dir;        // direction of the line G through e1 and the cone of e2
    std::vector<double> p1_approx, p2_approx; // affine-free homogeneous decimals
    int sigma_p1_e1 = 0, sigma_p1_e2 = 0;
    int sigma_p2_e1 = 0, sigma_p2_e2 = 0;
    bool t2_separates = false;           // tangent at p2 separates e1 from e2
    bool same_orientation_at_p1 = false;
    bool opposite_orientation_at_p2 = false;
    std::string failed_expectation; // empty when the full pattern is exhibited
    std::string notes;
};

// Sweeps the pencil of lines through e0 with n_angles rational directions
// and isolates every intersection with the curve. Throws InvalidDirection as
// soon as a sweep line has a non-real root (certifying e0 is not a
// hyperbolicity direction of C).
std::vector<CurvePoint> sample_real_points(const MultiPoly& C, const PointQ& e0, int n_angles);

// Points of C on the single line t -> t*e0 + dir, sorted by root.
std::vector<CurvePoint> line_points(const MultiPoly& C, const PointQ& e0, const PointQ& dir,
                                    int theta_index = 0);

// Connectivity classes of the sweep graph (branch k at consecutive full
// angles joined, with the reversed wrap at the end of the half-turn); labels
// are indices into 0..#ovals-1 parallel to `pts`.
std::vector<int> oval_labels(const MultiPoly& C, const std::vector<CurvePoint>& pts, int n_angles);

// Exact singularity test: the gradient vanishes at the point iff the gcd of
// the line restriction with all three pulled-back partials has the point's
// root.
bool point_is_singular(const MultiPoly& C, const CurvePoint& p);

// Tangent line at a smooth point with exactly-known rational coordinates.
// Throws SingularPoint at singular points, UnresolvableSign when the point
// is irrational (tangent coefficients leave Q; use tangent_side instead).
Line2 tangent_line(const MultiPoly& C, const CurvePoint& p);

// Sign of <grad C(p), x>: 0 exactly when x lies on the tangent line at p.
int tangent_side(const MultiPoly& C, const CurvePoint& p, const PointQ& x);

// Sign of the derivative of the L-coordinate of the projection from e along
// the tangent direction at p (the 90-degree rotation of the gradient in the
// chart, times tau_choice). Exact.
int orientation_sign(const MultiPoly& C, const CurvePoint& p, const PointQ& e, const Line2& L,
                     int tau_choice);

// Compares the orientations induced by projection from e1 and from e2 at
// sampled smooth points; verdict "constant" iff the product sign is the
// same everywhere.
ConsistencyReport orientation_consistency(const MultiPoly& C, const PointQ& e1, const PointQ& e2,
                                          int n_points, std::uint64_t seed);

// Samples lines through e and certifies that every multiple root lies at a
// singular point of the curve.
TangentAvoidanceReport tangent_avoidance_check(const MultiPoly& C, const PointQ& e, int lines,
                                               std::uint64_t seed);

// Single-line variant for directed checks; appends to the report.
void tangent_check_line(const MultiPoly& C, const PointQ& e, const PointQ& v, int line_index,
                        TangentAvoidanceReport& report);

WalkthroughReport demonstrate_obstruction(const MultiPoly& C, const PointQ& e1, const PointQ& e2,
                                          std::uint64_t seed);

} // namespace hyp

#endif
