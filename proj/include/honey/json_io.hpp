#pragma once

#include <string>

#include "honey/breaking.hpp"
#include "honey/honeycomb.hpp"
#include "honey/lift.hpp"
#include "honey/moebius.hpp"

namespace honey {

// Honeycombs serialize as {"n": int, "a": {"i:j": ["x","y","z"], ...},
// "b": {...}} with coordinates as exact rational strings; Moebius honeycombs
// add "delta" (a plain integer when integral, otherwise a rational string).
// Readers validate the result and throw InputError on malformed documents,
// so a parsed honeycomb is always usable. Writing then reading is exact.
std::string gl_to_json(const GLHoneycomb& h);
GLHoneycomb gl_from_json(const std::string& text);

std::string mh_to_json(const MoebiusHoneycomb& h);
MoebiusHoneycomb mh_from_json(const std::string& text);

// True when the document carries a "delta" key and so describes a Moebius
// honeycomb rather than a triangular one.
bool json_is_moebius(const std::string& text);

// Reports for the pipeline subcommands. Output only; the honeycomb fields
// inside use the schema above.
std::string lift_report_json(const LargestLift& lift);
std::string integralize_report_json(const IntegralizeResult& res);
std::string saturation_report_json(const SaturationResult& res);

}  // namespace honey
