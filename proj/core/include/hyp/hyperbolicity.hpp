#ifndef HYP_HYPERBOLICITY_HPP
#define HYP_HYPERBOLICITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp/multipoly.hpp"
#include "hyp/point.hpp"

namespace hyp {

enum class VerdictKind { CertifiedNot, ProbablyHyperbolic, CertifiedHyperbolic };

// Outcome of a hyperbolicity test. "Not hyperbolic" is always certified by a
// witness direction whose line restriction fails to be real-rooted;
// "hyperbolic" is certified only on the exact paths (two variables, or
// degree two), and otherwise probabilistic.
struct HypVerdict {
    VerdictKind kind;
    std::optional<PointQ> witness; // CertifiedNot only
    int trials = 0;                // ProbablyHyperbolic only
    std::string method;            // CertifiedHyperbolic only
    std::string notes;

    bool accepted_hyperbolic() const { return kind != VerdictKind::CertifiedNot; }
};

std::string verdict_kind_name(VerdictKind k);

struct Component {
    PointQ representative;
    std::vector<int> members; // indices into ComponentReport::hyperbolic_samples
};

struct ComponentReport {
    int sample_count = 0;
    std::vector<PointQ> hyperbolic_samples;
    std::vector<Component> components;
    std::vector<int> pair_map; // component i pairs with component pair_map[i] under negation
    int pairs = 0;
    std::string status = "ok"; // or "not_found_at_this_resolution"

    bool found() const { return !components.empty(); }
    // Index of the component whose cone contains x, or -1.
    int component_of(const MultiPoly& h, const PointQ& x) const;
};

// Randomized hyperbolicity test with exact dispatch for nvars = 2 and
// degree 2. Requires h homogeneous and h(e) != 0 (NotApplicable otherwise).
HypVerdict check_hyperbolic(const MultiPoly& h, const PointQ& e, int trials, std::uint64_t seed);

// Exact test for binary forms: every direction decomposes over {e, w}, so a
// single line restriction decides hyperbolicity.
HypVerdict check_hyperbolic_exact_bivariate(const MultiPoly& h, const PointQ& e);

// Exact test for quadratics via congruence diagonalization: after
// normalizing so that q(e) > 0, hyperbolic iff the inertia has exactly one
// positive entry.
HypVerdict check_hyperbolic_quadratic(const MultiPoly& h, const PointQ& e);

// Membership in the open cone of e: all roots of t -> h(te - x) positive.
// Throws InvalidDirection when the restriction is not real-rooted (e was not
// a hyperbolicity direction after all).
bool in_cone(const MultiPoly& h, const PointQ& e, const PointQ& x);

// in_cone(h,e1,e2), asserted symmetric against in_cone(h,e2,e1).
bool same_component(const MultiPoly& h, const PointQ& e1, const PointQ& e2);

// Samples primitive integer directions (both signs), filters by
// check_hyperbolic, clusters by exact cone membership, and pairs components
// under negation.
ComponentReport count_components(const MultiPoly& h, int sphere_samples, std::uint64_t seed,
                                 int trials_per_sample);

} // namespace hyp

#endif
