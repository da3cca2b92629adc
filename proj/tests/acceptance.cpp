// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nervekit/examples.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/io.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/verify.hpp"

using namespace nervekit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void absorb(const CheckResult& r) {
    if (r.pass) return;
    pass = false;
    notes.push_back(r.check + " failed");
    for (std::size_t k = 0; k < r.witnesses.size() && k < 3; ++k) notes.push_back("  " + r.witnesses[k]);
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ")";
  return s.str();
}

std::vector<std::size_t> ranks(const HomologyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& g : r.groups) out.push_back(g.rank);
  return out;
}

Outcome uniqueness() {
  Outcome o;
  const UniquenessResult u = uniqueness_search(2);
  o.require(u.families.size() == 1, std::to_string(u.families.size()) + " families");
  if (u.families.size() == 1)
    for (int n = 0; n <= 2; ++n) o.require(u.families[0][n] == comparison_key(n, 1), "family differs from f at degree " + std::to_string(n));
  o.require(u.eliminated.size() == 1, std::to_string(u.eliminated.size()) + " eliminations");
  if (u.eliminated.size() == 1) {
    const Elimination& e = u.eliminated[0];
    o.require(e.degree == 2, "eliminated at degree " + std::to_string(e.degree));
    // The rejected g_1 sends the vertex of C[Delta^1](0,1) to the vertex 1 of Delta^1.
    o.require(e.partial.size() == 2 && describe_bfrak_key(1, e.partial[1]) == "objects (0,1); {0,1} -> ((1))",
              "eliminated candidate is not the vertex-1 choice");
  }
  return o;
}

Outcome formula() {
  Outcome o;
  const FrakC c = frak_c(2, 1);
  const SimplicialCategory b = bfrak(2, 1);
  const SimplicialFunctor f = comparison_functor(c, b);
  auto image = [&](std::vector<std::uint32_t> chain) {
    const CellId cell = c.cell(0, 2, chain);
    return bfrak_tuple(2, 0, 2, 0, f.homs[0 * 3 + 2].levels[0][cell]);
  };
  // Values per factor, top factor first: {0,2} -> (0,0), {0,1,2} -> (1,0).
  o.require(image({0b101}) == std::vector<Sequence>{{0}, {0}}, "{0,2} is not sent to (0,0)");
  o.require(image({0b111}) == std::vector<Sequence>{{1}, {0}}, "{0,1,2} is not sent to (1,0)");
  o.require(validate_functor(c.cat, b, f).ok(), "f_2 is not a simplicial functor");
  o.absorb(comparison_functor_check(4));
  return o;
}

Outcome column_formula() {
  Outcome o;
  for (const std::string name : {"bg:z2", "discrete:poset012"}) {
    const CheckResult r = segal_column_check(build_example(name, 3).rel, 3, 3);
    o.absorb(r);
  }
  return o;
}

Outcome fibers() {
  Outcome o;
  for (const auto& name : example_names()) {
    CheckResult r = fiber_check(build_example(name, 2).rel);
    r.check = name + " " + r.check;
    o.absorb(r);
  }
  return o;
}

Outcome discrete_collapse() {
  Outcome o;
  for (const std::string name : {"discrete:poset01", "discrete:poset012", "discrete:z2", "poset:3:0<1,0<2"})
    o.absorb(discrete_collapse_check(build_example(name, 3).rel.cat, 3));
  return o;
}

Outcome homology_iso() {
  Outcome o;
  const SimplicialCategory c = build_example("bg:z2", 4).rel.cat;
  const Comparison cmp = comparison_map(c, 4);
  const ChainMapReport r = induced_chain_iso(cmp.b, cmp.hc.space, cmp.map, Coeff::F2, 2);
  o.require(r.iso == std::vector<char>{1, 1, 1}, "iso verdicts " + show(std::vector<int>(r.iso.begin(), r.iso.end())));
  // Oracle: the bar resolution of Z/2 gives F2 in every degree.
  const std::vector<std::size_t> bar{1, 1, 1};
  o.require(ranks(r.source) == bar, "B(C) has F2 dimensions " + show(ranks(r.source)) + ", oracle " + show(bar));
  o.require(ranks(r.target) == bar, "N_hc(C) has F2 dimensions " + show(ranks(r.target)) + ", oracle " + show(bar));
  return o;
}

Outcome theta() {
  Outcome o;
  o.absorb(theta_check(build_example("bg:z2/whole", 5).rel, 3, 3));
  o.absorb(theta_check(build_example("discrete:poset01/ids", 5).rel, 3, 3));
  o.absorb(consistency_check(build_example("bg:z2", 3).rel.cat, 3));
  o.absorb(consistency_check(build_example("discrete:poset01", 3).rel.cat, 3));
  return o;
}

Outcome counting() {
  Outcome o;
  const SimplicialCategory c = build_example("bg:z2", 3).rel.cat;
  const SSet hc = hc_nerve(c, 3).space;
  const SSet b = classifying_space(c, 3);
  std::vector<std::size_t> hc_oracle, b_oracle;
  for (int n = 0; n <= 3; ++n) {
    hc_oracle.push_back(std::size_t{1} << (n * (n - 1) / 2));
    b_oracle.push_back(std::size_t{1} << (n * n));
  }
  o.require(hc.sizes() == hc_oracle, "hc_nerve sizes " + show(hc.sizes()) + ", oracle " + show(hc_oracle));
  o.require(b.sizes() == b_oracle, "classifying_space sizes " + show(b.sizes()) + ", oracle " + show(b_oracle));
  o.require(hc.sizes() == std::vector<std::size_t>{1, 1, 2, 8}, "hc_nerve sizes are not (1,1,2,8)");
  o.require(b.sizes() == std::vector<std::size_t>{1, 2, 16, 512}, "classifying_space sizes are not (1,2,16,512)");
  return o;
}

Outcome fibrancy() {
  Outcome o;
  for (const std::string name : {"bg:z2", "bg:z3", "bg:z2xz2"}) {
    const SimplicialCategory c = build_example(name, 3).rel.cat;
    for (const SSet& h : c.homs) {
      CheckResult r = horn_check_all(h, 3);
      r.check = name + " " + r.check;
      o.absorb(r);
    }
  }
  const CheckResult bad = horn_check(standard_simplex(1, 2), 2, 0);
  o.require(!bad.pass, "N([1]) fills every Lambda^2_0 horn");
  o.require(!bad.witnesses.empty() && bad.witnesses[0].rfind("Lambda^2_0:", 0) == 0, "no named Lambda^2_0 witness");
  return o;
}

Outcome soundness() {
  Outcome o;
  const std::string dir = NERVEKIT_FIXTURES;
  for (const std::string name : {"bg_z2", "bg_z2_plain", "binerve_poset01", "empty_sset", "hom_simplex_1",
                                 "nerve_poset012", "poset01_ids"}) {
    try {
      load(dir + "/" + name + ".json");
    } catch (const std::exception& e) {
      o.require(false, name + " rejected: " + e.what());
    }
  }
  for (const std::string name : {"defect_broken_identity", "defect_broken_commutation", "defect_broken_marking",
                                 "defect_non_wide"}) {
    try {
      load(dir + "/" + name + ".json");
      o.require(false, name + " accepted");
    } catch (const ValidationError& e) {
      o.require(!e.report().ok() && !e.report().violations[0].witness.empty(), name + " rejected without a witness");
    } catch (const std::exception& e) {
      o.require(false, name + " failed to parse: " + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "uniqueness of the natural family at truncation 2", 60, uniqueness},
      {2, "formula reproduction for f_n", 60, formula},
      {3, "column formula and Segal bijections", 60, column_formula},
      {4, "fiber identification", 60, fibers},
      {5, "discrete collapse", 60, discrete_collapse},
      {6, "comparison map on F2 homology of bg:z2 at D = 4", 300, homology_iso},
      {7, "theta well-formed up to (3,3)", 300, theta},
      {8, "counting cross-oracle", 60, counting},
      {9, "fibrancy precondition", 60, fibrancy},
      {10, "validation soundness", 60, soundness},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limit_s, "took " + std::to_string(secs) + " s");
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
