#pragma once

#include <string>

#include "momentpoly/model.hpp"

namespace momentpoly {

inline constexpr int kModelSchemaVersion = 1;

// Byte-deterministic JSON: fixed key order, two-space indent, trailing
// newline. Every rational is an exact "a/b" string; floats never appear, so
// parse_model(serialize_model(m)) == m holds bit for bit.
std::string serialize_model(const HamiltonianModel& m);

// Structural checks only: shape, types, readable rationals, known schema
// version. Semantic checks stay in validate_model. Throws ParseError, or
// UnsupportedRank when a named root system family has a rank outside 1..3.
HamiltonianModel parse_model(const std::string& text);

// File wrappers. An unreadable path throws ParseError naming it; an
// unwritable one InvalidInput.
HamiltonianModel load_model(const std::string& path);
void save_model(const HamiltonianModel& m, const std::string& path);

// Point list files {"points": [["a","b"], ...]}, the polytope exchange format
// between subcommands (cut output, weyl-hull and classify input, render
// overlays). Same rational-string rules as models.
std::string serialize_points(const std::vector<Vec>& pts);
std::vector<Vec> parse_points(const std::string& text);

} // namespace momentpoly
