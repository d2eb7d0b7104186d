#ifndef HYP_SECTIONS_HPP
#define HYP_SECTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyp/hyperbolicity.hpp"
#include "hyp/multipoly.hpp"
#include "hyp/point.hpp"

namespace hyp {

enum class Irreducibility { DeclaredTrue, DeclaredFalse, Unknown };

std::string irreducibility_name(Irreducibility f);

// Exact basis of a plane through two cone representatives; a and b are the
// designated representatives when built by random_plane_through.
struct PlaneBasis {
    PointQ a, b, c;
};

struct SectionReport {
    ComponentReport components;
    // section coordinates of the ambient representatives are (1,0,0), (0,1,0)
    bool image_a_hyperbolic = false;
    bool image_b_hyperbolic = false;
    int component_of_a = -1;
    int component_of_b = -1;
};

struct TheoremVerdict {
    std::string poly_id;
    Irreducibility irreducible_flag = Irreducibility::Unknown;
    int ambient_pairs = 0;
    std::string ambient_status = "ok";
    std::vector<SectionReport> section_reports;
    std::string verdict; // "consistent_with_theorem" | "violation_candidate" | "not_applicable"
    std::string notes;
    ComponentReport ambient;
};

// Plane through e1 and e2 completed by a random small integer vector,
// resampled until the section passes a repeated-factor screen on a random
// test line.
PlaneBasis random_plane_through(const MultiPoly& h, const PointQ& e1, const PointQ& e2,
                                std::uint64_t seed);

// Component count of the ternary restriction, with the images of the two
// designated representatives located in the section's components.
SectionReport section_component_count(const MultiPoly& h, const PlaneBasis& basis,
                                      int sphere_samples, std::uint64_t seed);

// Empirical check of the one-pair statement: counts ambient components; on
// finding two or more pairs with a declared-irreducible polynomial in more
// than two variables, re-certifies representatives and attaches three plane
// sections for review.
TheoremVerdict verify_unique_pair(const MultiPoly& h, Irreducibility irreducible_flag,
                                  int sphere_samples, std::uint64_t seed);

} // namespace hyp

#endif
