#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "nervekit/bisset.hpp"
#include "nervekit/category.hpp"
#include "nervekit/report.hpp"

namespace nervekit {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, missing fields, wrong table shapes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Encoding. Field order is fixed so that dumps are canonical.
//
//   sset:      {"dim", "cells", "face", "degen"}; face[n][i] and degen[n][i]
//              are index arrays, face[0] and degen[dim] are empty.
//   category:  {"objects", "dim", "hom": {"x,y": sset}, "comp": {"x,y,z":
//              [table per level]}, "id": {"x": vertex}}; a level table lists
//              g o f at g * |hom(x,y)_n| + f.
//   relative:  category plus "sub": {"x,y": [[level, cell], ...]}.
//   bisset:    {"dims": [P, Q], "cells", "hface", "hdegen", "vface",
//              "vdegen"} indexed [p][q][i], plus "marked": [[1, q, cell], ...]
//              for a marked bisimplicial set.

Json to_json(const SSet& x);
Json to_json(const SimplicialCategory& c);
Json to_json(const RelativeSimplicialCategory& r);
Json to_json(const BisimplicialSet& x);
Json to_json(const MarkedBisimplicialSet& m);
Json to_json(const CheckResult& r);

// Decoding checks shapes (ParseError) but not invariants.
SSet sset_from_json(const Json& j);
SimplicialCategory category_from_json(const Json& j);
RelativeSimplicialCategory relative_from_json(const Json& j);
BisimplicialSet bisset_from_json(const Json& j);
MarkedBisimplicialSet marked_bisset_from_json(const Json& j);

/// Compact dump with a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Any of the file kinds above, told apart by their fields.
using Loaded = std::variant<SSet, SimplicialCategory, RelativeSimplicialCategory, BisimplicialSet,
                            MarkedBisimplicialSet>;
std::string kind_name(const Loaded& v);

/// Decodes without validating.
Loaded decode(const Json& j);
/// Reads, decodes and validates; throws ParseError or ValidationError.
Loaded load(const std::string& path);
ValidationReport validate_loaded(const Loaded& v);
Json to_json(const Loaded& v);
void save(const std::string& path, const Loaded& v);

/// FNV-1a 64 of the bytes, as 16 hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace nervekit
