#include "hyp/sections.hpp"

#include "hyp/error.hpp"
#include "hyp/realroots.hpp"
#include "hyp/rng.hpp"

namespace hyp {

std::string irreducibility_name(Irreducibility f) {
    switch (f) {
        case Irreducibility::DeclaredTrue: return "declared_true";
        case Irreducibility::DeclaredFalse: return "declared_false";
        case Irreducibility::Unknown: return "unknown";
    }
    return "?";
}

namespace {

PointQ sample_int_vector(CounterRng& rng, int n, long lo, long hi) {
    PointQ v(n);
    for (int i = 0; i < n; ++i) v[i] = Rational(rng.uniform_int(lo, hi));
    return v;
}

// The restriction to a random test line must be square-free; a repeated
// factor of the section would force repeated roots on every line.
bool repeated_factor_screen(const MultiPoly& g, std::uint64_t seed) {
    const int d = homogeneous_degree(g);
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        CounterRng rng(seed, 0x5ec + attempt);
        PointQ alpha = sample_int_vector(rng, 3, -7, 7);
        PointQ beta = sample_int_vector(rng, 3, -7, 7);
        if (is_zero(alpha) || is_zero(beta) || collinear(alpha, beta)) continue;
        if (evaluate(g, alpha) == 0) continue; // need full-degree restriction
        UniPoly u = restrict_line(g, alpha, beta);
        if (u.degree() != d) continue;
        return squarefree_part(u).degree() == d;
    }
    return false; // no usable test line found
}

} // namespace

PlaneBasis random_plane_through(const MultiPoly& h, const PointQ& e1, const PointQ& e2,
                                std::uint64_t seed) {
    if (collinear(e1, e2))
        throw Error("precondition", "plane representatives must be linearly independent");
    const int n = h.nvars();
    for (int attempt = 0; attempt < 16; ++attempt) {
        CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
        PointQ c = sample_int_vector(rng, n, -5, 5);
        if (is_zero(c) || rank({e1, e2, c}) < 3) continue;
        MultiPoly g(3);
        try {
            g = restrict_plane(h, e1, e2, c);
        } catch (const DegenerateSectionFamily&) {
            continue;
        }
        if (!repeated_factor_screen(g, seed ^ (0x9e3779b97f4a7c15ULL * (attempt + 1)))) continue;
        return PlaneBasis{e1, e2, c};
    }
    throw DegenerateSectionFamily("no admissible plane found within the retry budget");
}

SectionReport section_component_count(const MultiPoly& h, const PlaneBasis& basis,
                                      int sphere_samples, std::uint64_t seed) {
    MultiPoly g = restrict_plane(h, basis.a, basis.b, basis.c);
    SectionReport report;
    report.components = count_components(g, sphere_samples, seed, 64);

    const PointQ img_a{Rational(1), Rational(0), Rational(0)};
    const PointQ img_b{Rational(0), Rational(1), Rational(0)};
    report.image_a_hyperbolic =
        check_hyperbolic(g, img_a, 64, seed ^ 0xa5a5a5a5ULL).accepted_hyperbolic();
    report.image_b_hyperbolic =
        check_hyperbolic(g, img_b, 64, seed ^ 0x5a5a5a5aULL).accepted_hyperbolic();
    if (report.components.found()) {
        if (report.image_a_hyperbolic)
            report.component_of_a = report.components.component_of(g, img_a);
        if (report.image_b_hyperbolic)
            report.component_of_b = report.components.component_of(g, img_b);
    }
    return report;
}

TheoremVerdict verify_unique_pair(const MultiPoly& h, Irreducibility irreducible_flag,
                                  int sphere_samples, std::uint64_t seed) {
    homogeneous_degree(h);
    TheoremVerdict verdict;
    verdict.irreducible_flag = irreducible_flag;
    verdict.ambient = count_components(h, sphere_samples, seed, 64);
    verdict.ambient_status = verdict.ambient.status;
    verdict.ambient_pairs = verdict.ambient.pairs;

    if (!verdict.ambient.found()) {
        verdict.verdict = "not_applicable";
        verdict.notes = "no hyperbolicity direction found at this resolution; "
                        "this is not a certificate of non-hyperbolicity";
        return verdict;
    }
    if (verdict.ambient_pairs <= 1) {
        verdict.verdict = "consistent_with_theorem";
        return verdict;
    }
    if (irreducible_flag != Irreducibility::DeclaredTrue) {
        verdict.verdict = "not_applicable";
        verdict.notes = "several pairs found, but the polynomial is not declared irreducible";
        return verdict;
    }
    if (h.nvars() <= 2) {
        verdict.verdict = "not_applicable";
        verdict.notes = "the one-pair statement applies to more than two variables";
        return verdict;
    }

    // representatives of two distinct pairs, re-certified in both directions
    const auto& comps = verdict.ambient.components;
    const auto& pair_map = verdict.ambient.pair_map;
    int first = 0;
    int second = -1;
    for (std::size_t j = 1; j < comps.size(); ++j) {
        if (static_cast<int>(j) != pair_map[first]) {
            second = static_cast<int>(j);
            break;
        }
    }
    if (second < 0) throw InternalInconsistency("two pairs reported but not found");
    const PointQ& r1 = comps[first].representative;
    const PointQ& r2 = comps[second].representative;
    if (same_component(h, r1, r2) || same_component(h, r1, negate(r2)))
        throw InternalInconsistency("pair representatives are not projectively distinct");

    for (int s = 0; s < 3; ++s) {
        std::uint64_t plane_seed = seed ^ (0xc0ffee11ULL * (s + 1));
        PlaneBasis basis = random_plane_through(h, r1, r2, plane_seed);
        verdict.section_reports.push_back(
            section_component_count(h, basis, sphere_samples, plane_seed));
    }
    verdict.verdict = "violation_candidate";
    verdict.notes = "flagged for review: either the irreducibility declaration or the "
                    "component clustering is wrong";
    return verdict;
}

} // namespace hyp
