#include <chrono>

#include "doctest.h"
#include "nervekit/examples.hpp"
#include "nervekit/verify.hpp"

using namespace nervekit;

namespace {

bool mentions(const CheckResult& r, const std::string& text) {
  for (const auto& w : r.witnesses)
    if (w.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("horn checks") {
  const SSet nz2 = build_example("bg:z2", 3).rel.cat.hom(0, 0);
  CHECK(horn_check_all(nz2, 3).pass);

  const SSet arrow = standard_simplex(1, 2);
  const CheckResult r = horn_check(arrow, 2, 0);
  CHECK_FALSE(r.pass);
  // 0 -> 1 on {0,1} and the identity of 0 on {0,2}: no arrow 1 -> 0.
  CHECK(mentions(r, "{0,2} -> (0,0) {0,1} -> (0,1)"));
  CHECK(horn_check(arrow, 2, 1).pass);

  CHECK(horn_check_all(standard_simplex(2, 3), 3, true).pass);
  CHECK_FALSE(horn_check_all(standard_simplex(2, 3), 3).pass);
  CHECK_THROWS_AS(horn_check(arrow, 3, 1), TruncationError);
}

TEST_CASE("Segal and column formula") {
  for (const std::string name : {"bg:z2", "discrete:poset012", "hom-simplex:1", "bg:z3"}) {
    INFO(name);
    const Example ex = build_example(name, 3);
    const CheckResult r = segal_column_check(ex.rel, 3, 3);
    CHECK(r.pass);
  }
  // A corrupted horizontal face table is caught.
  const RelativeSimplicialCategory r = build_example("bg:z2", 2).rel;
  Binerve b = binerve_marked(r, 3, 2);
  auto& d2 = b.marked.space.hface[2][1][2];
  std::swap(d2[1], d2[2]);
  const CheckResult bad = segal_column_check(b, r.cat, 3);
  CHECK_FALSE(bad.pass);
  CHECK(mentions(bad, "(2,1) cell"));
}

TEST_CASE("fiber identification") {
  for (const auto& name : example_names()) {
    INFO(name);
    CHECK(fiber_check(build_example(name, 2).rel).pass);
  }
}

TEST_CASE("consistency of the two routes") {
  const CheckResult r = consistency_check(build_example("bg:z2", 2).rel.cat, 2);
  CHECK(r.pass);
  // 16 + 2 + 1 diagonal cells.
  CHECK(r.bounds[1].second == 19);
  CHECK(consistency_check(build_example("discrete:poset012", 2).rel.cat, 2).pass);
  CHECK(consistency_check(build_example("hom-simplex:1", 2).rel.cat, 2).pass);
}

TEST_CASE("discrete collapse") {
  for (const std::string name : {"discrete:poset01", "discrete:poset012", "discrete:z2", "poset:3:0<1,0<2"}) {
    INFO(name);
    CHECK(discrete_collapse_check(build_example(name, 3).rel.cat, 3).pass);
  }
  CHECK_FALSE(discrete_collapse_check(build_example("bg:z2", 2).rel.cat, 2).pass);
}

TEST_CASE("theta streaming check") {
  for (const std::string name : {"bg:z2", "discrete:poset01", "hom-simplex:1/whole", "two-object-interval"}) {
    INFO(name);
    const RelativeSimplicialCategory r = build_example(name, 2).rel;
    const CheckResult res = theta_check(r, 2, 1);
    CHECK(res.pass);
    for (const auto& w : res.witnesses) MESSAGE(w);
  }
  CHECK_THROWS_AS(theta_check(build_example("bg:z2", 1).rel, 2, 1), TruncationError);
}

TEST_CASE("uniqueness search") {
  const UniquenessResult one = uniqueness_search(1);
  CHECK(one.families.size() == 2);
  CHECK(one.eliminated.empty());

  const UniquenessResult two = uniqueness_search(2);
  REQUIRE(two.families.size() == 1);
  for (int n = 0; n <= 2; ++n) CHECK(two.families[0][n] == comparison_key(n, 1));
  // The other choice of g_1 dies at degree 2.
  REQUIRE(two.eliminated.size() == 1);
  CHECK(two.eliminated[0].degree == 2);
  CHECK(two.eliminated[0].partial[1] != comparison_key(1, 1));
  CHECK(two.eliminated[0].witness.find("{0,1} -> ((1))") != std::string::npos);
}

TEST_CASE("symbolic comparison functor check") {
  const CheckResult r = comparison_functor_check(3);
  CHECK(r.pass);
  for (const auto& w : r.witnesses) MESSAGE(w);
}
