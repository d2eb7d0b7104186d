#ifndef HYPCLI_REPORT_HPP
#define HYPCLI_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hyp/hyperbolicity.hpp"
#include "hyp/planecurve.hpp"
#include "hyp/sections.hpp"

namespace hypcli {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

// Every rational in a report carries the exact value and a readable decimal.
OrderedJson rational_json(const hyp::Rational& r);
OrderedJson point_json(const hyp::PointQ& p);
OrderedJson interval_json(const hyp::Rational& lo, const hyp::Rational& hi);

OrderedJson to_json(const hyp::HypVerdict& v);
OrderedJson to_json(const hyp::ComponentReport& r);
OrderedJson to_json(const hyp::Line2& l);
OrderedJson to_json(const hyp::CurvePoint& p);
OrderedJson to_json(const hyp::OrientationSample& s);
OrderedJson to_json(const hyp::ConsistencyReport& r);
OrderedJson to_json(const hyp::TangentAvoidanceReport& r);
OrderedJson to_json(const hyp::WalkthroughReport& r);
OrderedJson to_json(const hyp::SectionReport& r);
OrderedJson to_json(const hyp::TheoremVerdict& v);

// Top-level report envelope with the stable field order
// command, params, seed, result, version, timings.
OrderedJson make_report(const std::string& command, OrderedJson params, std::uint64_t seed,
                        OrderedJson result, double elapsed_seconds);

} // namespace hypcli

#endif
