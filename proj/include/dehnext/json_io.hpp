#pragma once

// JSON encodings of the library types. Complex numbers are [re, im] and
// matrices are row-major arrays of four complex numbers.

#include "dehnext/fatpoly.hpp"
#include "dehnext/filling_solver.hpp"
#include "dehnext/normal_form.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace dehnext::io {

using json = nlohmann::json;

json to_json(Complex<double> z);
Complex<double> complex_from_json(const json& j);

json to_json(const Isometryd& g);
Isometryd isometry_from_json(const json& j);

json to_json(const Pointd& p);
Pointd point_from_json(const json& j);

json to_json(const BoundaryPointd& b);
BoundaryPointd boundary_from_json(const json& j);

json to_json(const Horoballd& h);

json to_json(const Slope& s);
Slope slope_from_json(const json& j);
json to_json(const SlopeTuple& z);
SlopeTuple slope_tuple_from_json(const json& j);

json to_json(const MarkedPresentation& p);
MarkedPresentation presentation_from_json(const json& j);

json to_json(const PresentationMap& m);
json to_json(const DehnExtension& e);

json to_json(const Representation& r, const json& presentation_ref);
Representation representation_from_json(const json& j);

json to_json(const ResidualReport& r);

json to_json(const AmalgamWord& w);
AmalgamWord amalgam_from_json(const json& j);
json to_json(const NormalFormResult& r);

json to_json(const HolonomyState& s);
json to_json(const SequenceEntry& e);
json to_json(const Axis& a);

json to_json(const StabilityVerdict& v, const std::vector<std::string>& names);

json to_json(const Polygon& p);
json to_json(const InscribedPolygon& p);
json to_json(const ObstructionResult& r);
json to_json(const FatnessReport& r);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

/// FNV-1a over the compact dump of `j` (object keys are sorted).
std::uint64_t fnv1a(const std::string& bytes);
std::string config_hash(const json& j);

}  // namespace dehnext::io
