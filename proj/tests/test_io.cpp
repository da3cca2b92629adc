#include <filesystem>

#include "doctest.h"
#include "nervekit/examples.hpp"
#include "nervekit/io.hpp"
#include "nervekit/nerves.hpp"

using namespace nervekit;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> fixtures(bool defects) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(NERVEKIT_FIXTURES)) {
    const std::string name = e.path().filename().string();
    if (e.path().extension() == ".json" && (name.rfind("defect_", 0) == 0) == defects) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string fixture(const std::string& name) { return std::string(NERVEKIT_FIXTURES) + "/" + name; }

ValidationReport rejection(const std::string& name) {
  try {
    load(fixture(name));
  } catch (const ValidationError& e) {
    return e.report();
  }
  return {};
}

bool names(const ValidationReport& r, const std::string& rule, const std::string& witness) {
  for (const auto& v : r.violations)
    if (v.rule == rule && v.witness.find(witness) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("clean fixtures load and round-trip byte for byte") {
  const auto files = fixtures(false);
  CHECK(files.size() == 7);
  for (const auto& f : files) {
    INFO(f.string());
    const Loaded v = load(f.string());
    CHECK(dump(to_json(v)) == read_file(f.string()));
  }
}

TEST_CASE("planted defects are rejected with a witness") {
  CHECK(fixtures(true).size() == 4);
  CHECK(names(rejection("defect_broken_identity.json"), "d_0 s_0 = id", "(1, 0)"));
  CHECK(names(rejection("defect_broken_commutation.json"), "composition/face", "level 2 pair (1,2)"));
  CHECK(names(rejection("defect_broken_marking.json"), "marking/degenerate", "(0, 0, 0)"));
  CHECK(names(rejection("defect_non_wide.json"), "subcategory/identity", "object 1"));
}

TEST_CASE("empty simplicial set") {
  const Loaded v = load(fixture("empty_sset.json"));
  REQUIRE(std::holds_alternative<SSet>(v));
  CHECK(std::get<SSet>(v).total_cells() == 0);
}

TEST_CASE("decoding round-trips generated structures") {
  for (const auto& name : example_names()) {
    INFO(name);
    const RelativeSimplicialCategory r = build_example(name, 2).rel;
    const Json j = to_json(r);
    const RelativeSimplicialCategory back = relative_from_json(parse_json(dump(j)));
    CHECK(back.cat.names == r.cat.names);
    CHECK(back.cat.homs == r.cat.homs);
    CHECK(back.cat.comp == r.cat.comp);
    CHECK(back.cat.id == r.cat.id);
    CHECK(back.sub == r.sub);
  }
  const Binerve b = binerve_marked(build_example("bg:z2", 2).rel, 2, 2);
  const MarkedBisimplicialSet m = marked_bisset_from_json(to_json(b.marked));
  CHECK(m.marked == b.marked.marked);
  CHECK(m.space.hface == b.marked.space.hface);
  CHECK(m.space.vdegen == b.marked.space.vdegen);
  CHECK(dump(to_json(m)) == dump(to_json(b.marked)));
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(parse_json("{\"dim\": 1,"), ParseError);
  CHECK_THROWS_AS(decode(parse_json("[1, 2]")), ParseError);
  CHECK_THROWS_AS(decode(parse_json("{\"dim\": 1, \"cells\": [1]}")), ParseError);
  // Face table of the wrong length.
  CHECK_THROWS_AS(decode(parse_json("{\"dim\":1,\"cells\":[1,1],\"face\":[[],[[0]]],\"degen\":[[[0]],[]]}")),
                  ParseError);
  CHECK_THROWS_AS(decode(parse_json("{\"objects\":[\"a\"],\"dim\":0,\"hom\":{},\"comp\":{},\"id\":{}}")), ParseError);
  CHECK_THROWS_AS(load(fixture("no_such_file.json")), ParseError);
}

TEST_CASE("digests") {
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}
