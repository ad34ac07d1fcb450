#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/invariants.hpp"

// JSON interchange: one file = one complex.
//
// {"name": str,
//  "generators": [{"id": str, "alexander": int, "maslov": int,
//                  "position": [i, j]  (optional)}],
//  "differential": [{"from": str, "to": str, "u_power": uint}],
//  "allow_non_knot": bool (optional, default false)}
//
// When a generator carries "position", "alexander" may be omitted (it is
// j - i), and a term between two positioned generators may omit "u_power"
// (it is the i-displacement), so figures can be transcribed verbatim.

namespace cfk {

struct ParsedComplex {
  CfkComplex complex;
  bool allow_non_knot = false;
  std::vector<std::string> warnings;  // e.g. duplicate terms reduced mod 2
};

/// Throws ParseError on malformed JSON or schema violations.
ParsedComplex parse_complex(const std::string& json_text);
ParsedComplex parse_complex_file(const std::filesystem::path& path);

std::string serialize_complex(const CfkComplex& c, bool allow_non_knot = false);
void write_complex_file(const std::filesystem::path& path, const CfkComplex& c,
                        bool allow_non_knot = false);

std::string profile_to_tsv(const InvariantProfile& p);
std::string profile_to_json(const InvariantProfile& p);
/// Inverse of profile_to_json; throws ParseError.
InvariantProfile parse_profile_json(const std::string& json_text);

}  // namespace cfk
