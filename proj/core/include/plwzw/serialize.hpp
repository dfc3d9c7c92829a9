#pragma once

#include "plwzw/lie.hpp"
#include "plwzw/loop.hpp"
#include "plwzw/phase.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace plwzw {

using json = nlohmann::json;

/// Row-major array of rows of [re, im] pairs.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

/// { "n", "m_min", "m_max", "coeff": [ per-mode matrix ] }
json loop_to_json(const FourierLoop& f);
FourierLoop loop_from_json(const json& j);

/// { "k": loop, "a": [reals] }
json phase_point_to_json(const PhasePointKA& p);
PhasePointKA phase_point_from_json(const json& j);

/// { "ktilde": loop, "atilde": [reals] }
json dual_point_to_json(const PhasePointDual& q);
PhasePointDual dual_point_from_json(const json& j);

/// Representation dump: Cartan matrices and step generators of positive roots.
json rep_to_json(const AlgebraRep& rep);

/// Reads and parses a JSON file; throws IoError on failure.
json read_json_file(const std::string& path);
/// Writes j with 2-space indentation and a trailing newline; throws IoError on failure.
void write_json_file(const std::string& path, const json& j);

} // namespace plwzw
