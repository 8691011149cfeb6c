#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tightcalc/branched_surface.hpp"
#include "tightcalc/farey.hpp"
#include "tightcalc/multicurve.hpp"
#include "tightcalc/seifert.hpp"

// JSON documents read and written by the command line tool. Integers that
// fit in 64 bits are emitted as numbers and anything larger as a decimal
// string; slopes and rationals are always "p/q" strings.

namespace tightcalc::io {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json surface_to_json(const branched::BranchedSurface& surface);
/// Throws ParseError on malformed documents; performs no validation.
branched::BranchedSurface surface_from_json(const Json& j);

Json weights_to_json(const branched::WeightFunction& w);
branched::WeightFunction weights_from_json(const Json& j);

Json report_to_json(const seifert::AnalysisReport& report);
seifert::AnalysisReport report_from_json(const Json& j);

Json multicurve_to_json(const multicurve::MulticurveCoordinates& m);
multicurve::MulticurveCoordinates multicurve_from_json(const Json& j);

Json path_to_json(const farey::FareyPath& path);
farey::FareyPath path_from_json(const Json& j);

}  // namespace tightcalc::io
