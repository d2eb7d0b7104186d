#include "hypcli/report.hpp"

namespace hypcli {

using hyp::Rational;

OrderedJson rational_json(const Rational& r) {
    OrderedJson j;
    j["q"] = hyp::to_string(r);
    j["dec"] = hyp::to_double(r);
    return j;
}

OrderedJson point_json(const hyp::PointQ& p) {
    OrderedJson q = OrderedJson::array();
    OrderedJson dec = OrderedJson::array();
    for (const auto& c : p) {
        q.push_back(hyp::to_string(c));
        dec.push_back(hyp::to_double(c));
    }
    OrderedJson j;
    j["q"] = std::move(q);
    j["dec"] = std::move(dec);
    return j;
}

OrderedJson interval_json(const Rational& lo, const Rational& hi) {
    OrderedJson j;
    j["lo"] = rational_json(lo);
    j["hi"] = rational_json(hi);
    return j;
}

OrderedJson to_json(const hyp::HypVerdict& v) {
    OrderedJson j;
    j["kind"] = hyp::verdict_kind_name(v.kind);
    switch (v.kind) {
        case hyp::VerdictKind::CertifiedNot:
            j["witness"] = point_json(*v.witness);
            break;
        case hyp::VerdictKind::ProbablyHyperbolic:
            j["trials"] = v.trials;
            break;
        case hyp::VerdictKind::CertifiedHyperbolic:
            j["method"] = v.method;
            break;
    }
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

OrderedJson to_json(const hyp::ComponentReport& r) {
    OrderedJson j;
    j["status"] = r.status;
    j["sample_count"] = r.sample_count;
    j["hyperbolic_sample_count"] = r.hyperbolic_samples.size();
    OrderedJson comps = OrderedJson::array();
    for (const auto& c : r.components) {
        OrderedJson cj;
        cj["representative"] = point_json(c.representative);
        cj["member_count"] = c.members.size();
        cj["members"] = c.members;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    j["component_count"] = r.components.size();
    j["pair_map"] = r.pair_map;
    j["pairs"] = r.pairs;
    OrderedJson samples = OrderedJson::array();
    for (const auto& s : r.hyperbolic_samples) samples.push_back(point_json(s));
    j["hyperbolic_samples"] = std::move(samples);
    return j;
}

OrderedJson to_json(const hyp::Line2& l) {
    OrderedJson j;
    j["coeffs"] = point_json(l.coeffs);
    return j;
}

OrderedJson to_json(const hyp::CurvePoint& p) {
    OrderedJson j;
    j["theta_index"] = p.theta_index;
    j["branch"] = p.branch;
    j["chart"] = p.locus.chart;
    j["box_x"] = interval_json(p.locus.x.lo, p.locus.x.hi);
    j["box_y"] = interval_json(p.locus.y.lo, p.locus.y.hi);
    j["smooth"] = p.smooth;
    j["multiplicity"] = p.multiplicity;
    j["root"] = interval_json(p.root_lo, p.root_hi);
    if (p.root_exact) j["root_exact"] = rational_json(*p.root_exact);
    return j;
}

OrderedJson to_json(const hyp::OrientationSample& s) {
    OrderedJson j;
    j["point"] = to_json(s.point);
    j["sign1"] = s.sign1;
    j["sign2"] = s.sign2;
    j["product"] = s.product;
    return j;
}

OrderedJson to_json(const hyp::ConsistencyReport& r) {
    OrderedJson j;
    j["verdict"] = r.verdict;
    j["certified_smooth"] = r.certified_smooth;
    j["skipped"] = r.skipped;
    j["screen"] = to_json(r.screen);
    j["witnesses"] = r.witnesses;
    OrderedJson samples = OrderedJson::array();
    for (const auto& s : r.samples) samples.push_back(to_json(s));
    j["samples"] = std::move(samples);
    return j;
}

OrderedJson to_json(const hyp::TangentAvoidanceReport& r) {
    OrderedJson j;
    j["pass"] = r.pass;
    j["lines_checked"] = r.lines_checked;
    j["inconclusive"] = r.inconclusive;
    OrderedJson findings = OrderedJson::array();
    for (const auto& f : r.findings) {
        OrderedJson fj;
        fj["line_index"] = f.line_index;
        fj["direction"] = point_json(f.dir);
        fj["root"] = interval_json(f.root_lo, f.root_hi);
        if (f.root_exact) fj["root_exact"] = rational_json(*f.root_exact);
        fj["multiplicity"] = f.multiplicity;
        fj["attribution"] = f.attribution;
        findings.push_back(std::move(fj));
    }
    j["findings"] = std::move(findings);
    return j;
}

OrderedJson to_json(const hyp::WalkthroughReport& r) {
    OrderedJson j;
    j["outcome"] = r.outcome;
    if (r.outcome == "completed") {
        j["sweep_dir"] = point_json(r.sweep_dir);
        j["g_dir"] = point_json(r.g_dir);
        j["p1_approx"] = r.p1_approx;
        j["p2_approx"] = r.p2_approx;
        j["sigma_p1_e1"] = r.sigma_p1_e1;
        j["sigma_p1_e2"] = r.sigma_p1_e2;
        j["sigma_p2_e1"] = r.sigma_p2_e1;
        j["sigma_p2_e2"] = r.sigma_p2_e2;
        j["t2_separates"] = r.t2_separates;
        j["same_orientation_at_p1"] = r.same_orientation_at_p1;
        j["opposite_orientation_at_p2"] = r.opposite_orientation_at_p2;
        j["failed_expectation"] = r.failed_expectation;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

OrderedJson to_json(const hyp::SectionReport& r) {
    OrderedJson j;
    j["components"] = to_json(r.components);
    j["image_a_hyperbolic"] = r.image_a_hyperbolic;
    j["image_b_hyperbolic"] = r.image_b_hyperbolic;
    j["component_of_a"] = r.component_of_a;
    j["component_of_b"] = r.component_of_b;
    return j;
}

OrderedJson to_json(const hyp::TheoremVerdict& v) {
    OrderedJson j;
    j["poly_id"] = v.poly_id;
    j["irreducible_flag"] = hyp::irreducibility_name(v.irreducible_flag);
    j["ambient_status"] = v.ambient_status;
    j["ambient_pairs"] = v.ambient_pairs;
    j["verdict"] = v.verdict;
    if (!v.notes.empty()) j["notes"] = v.notes;
    j["ambient"] = to_json(v.ambient);
    OrderedJson sections = OrderedJson::array();
    for (const auto& s : v.section_reports) sections.push_back(to_json(s));
    j["section_reports"] = std::move(sections);
    return j;
}

OrderedJson make_report(const std::string& command, OrderedJson params, std::uint64_t seed,
                        OrderedJson result, double elapsed_seconds) {
    OrderedJson j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["seed"] = seed;
    j["result"] = std::move(result);
    j["version"] = kToolkitVersion;
    OrderedJson timings;
    timings["elapsed_seconds"] = elapsed_seconds;
    j["timings"] = std::move(timings);
    return j;
}

} // namespace hypcli
