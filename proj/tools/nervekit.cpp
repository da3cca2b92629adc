#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "nervekit/examples.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/io.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/verify.hpp"

using namespace nervekit;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string example;
  std::string in;
  std::string out;
  std::string coeff = "z";
  std::string format = "json";
  std::string space = "b";
  int max_dim = 2;
  int rows = 1;
  int cols = 1;
  int jobs = 1;
  int max_cosimplicial = 2;
  bool emit_cells = false;
  bool no_timings = false;
  std::vector<std::string> argv;
};

class Run {
 public:
  explicit Run(const Options& o) : opt(o) {}

  const Options& opt;
  Json inputs = Json::array();
  Json checks = Json::array();
  Json results = Json::object();
  Json timings = Json::object();
  std::optional<Json> raw;  // written instead of a report
  bool pass = true;

  void add(const CheckResult& r) {
    checks.push_back(to_json(r));
    pass = pass && r.pass;
  }

  template <class F>
  auto timed(const std::string& what, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto v = f();
    timings[what] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return v;
  }

  // Input in the requested truncation. Files are used as they are.
  Loaded input(int dim) {
    if (!opt.example.empty() && !opt.in.empty()) throw UsageError("give --example or --in, not both");
    if (!opt.example.empty()) {
      Example ex = build_example(opt.example, dim);
      Loaded v = std::move(ex.rel);
      inputs.push_back({{"example", opt.example}, {"dim", dim}, {"digest", fnv1a64(dump(to_json(v)))}});
      return v;
    }
    if (opt.in.empty()) throw UsageError("no input: give --example NAME or --in FILE");
    const std::string text = read_file(opt.in);
    Loaded v = decode(parse_json(text));
    ValidationReport r = validate_loaded(v);
    if (!r.ok()) throw ValidationError(std::move(r));
    inputs.push_back({{"file", opt.in}, {"kind", kind_name(v)}, {"digest", fnv1a64(text)}});
    return v;
  }

  RelativeSimplicialCategory relative(int dim) {
    Loaded v = input(dim);
    if (auto* r = std::get_if<RelativeSimplicialCategory>(&v)) return std::move(*r);
    if (auto* c = std::get_if<SimplicialCategory>(&v)) return whole(std::move(*c));
    throw UsageError("command needs a simplicial category, got " + kind_name(v));
  }

  Json report() const {
    Json j;
    std::string cmd = opt.command;
    for (const auto& a : opt.argv) cmd += " " + a;
    j["command"] = cmd;
    j["inputs"] = inputs;
    j["checks"] = checks;
    j["results"] = results;
    if (!opt.no_timings) j["timings"] = timings;
    return j;
  }
};

Coeff coeff_of(const Options& o) {
  if (o.coeff == "z") return Coeff::Z;
  if (o.coeff == "f2") return Coeff::F2;
  throw UsageError("--coeff must be z or f2");
}

Json sizes_json(const SSet& x) {
  return {{"cells", x.sizes()}, {"nondegenerate", x.nondegenerate_counts()}};
}

Json homology_json(const HomologyReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(g.to_string(r.coeff));
  return {{"coeff", coeff_name(r.coeff)}, {"validity_bound", r.validity_bound}, {"groups", groups}};
}

CheckResult validity(const std::string& name, const ValidationReport& r) {
  CheckResult c(name);
  c.absorb(r);
  return c;
}

SSet space_of(Run& run, int d) {
  Loaded v = run.input(d);
  if (auto* x = std::get_if<SSet>(&v)) return std::move(*x);
  const RelativeSimplicialCategory r = [&] {
    if (auto* rel = std::get_if<RelativeSimplicialCategory>(&v)) return std::move(*rel);
    if (auto* c = std::get_if<SimplicialCategory>(&v)) return whole(std::move(*c));
    throw UsageError("command needs a simplicial set or category, got " + kind_name(v));
  }();
  run.results["space"] = run.opt.space;
  if (run.opt.space == "b") return classifying_space(r.cat, d);
  if (run.opt.space == "hc") return hc_nerve(r.cat, d, run.opt.jobs).space;
  if (run.opt.space == "n0") return nerve_cat(level_category(r.cat, 0), d).space;
  throw UsageError("--space must be b, hc or n0");
}

void cmd_validate(Run& run) {
  // Decode first so that invariant failures become a report instead of an exception.
  Loaded v;
  if (!run.opt.in.empty() && run.opt.example.empty()) {
    const std::string text = read_file(run.opt.in);
    v = decode(parse_json(text));
    run.inputs.push_back({{"file", run.opt.in}, {"kind", kind_name(v)}, {"digest", fnv1a64(text)}});
  } else {
    v = run.input(run.opt.max_dim);
  }
  run.results["kind"] = kind_name(v);
  run.add(validity("validate/" + kind_name(v), validate_loaded(v)));
}

void cmd_example(Run& run) {
  if (run.opt.example.empty()) {
    run.results["examples"] = example_names();
    return;
  }
  const Example ex = build_example(run.opt.example, run.opt.max_dim);
  const ValidationReport r = validate_relative(ex.rel);
  if (!r.ok()) throw ValidationError(r);
  run.raw = to_json(ex.rel);
}

void cmd_nerve(Run& run) {
  const int d = run.opt.max_dim;
  const RelativeSimplicialCategory r = run.relative(d);
  const CategoryNerve n = run.timed("nerve", [&] { return nerve_cat(level_category(r.cat, 0), d); });
  run.results["nerve"] = sizes_json(n.space);
  run.add(validity("validate/sset", validate_sset(n.space)));
  if (run.opt.emit_cells) run.results["space"] = to_json(n.space);
}

void cmd_binerve(Run& run) {
  const int P = run.opt.cols, Q = run.opt.rows;
  const RelativeSimplicialCategory r = run.relative(Q);
  const Binerve b = run.timed("binerve", [&] { return binerve_marked(r, P, Q); });
  run.results["cells"] = b.marked.space.sizes;
  std::size_t marked = 0;
  for (const auto& row : b.marked.marked) marked += static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
  run.results["marked"] = marked;
  run.add(validity("validate/marked-bisset", validate_marked_bisset(b.marked)));
  run.add(run.timed("segal", [&] { return segal_column_check(b, r.cat, P); }));
  run.add(run.timed("fiber", [&] { return fiber_check(r); }));
  if (run.opt.emit_cells) run.results["bisset"] = to_json(b.marked);
}

void cmd_hcnerve(Run& run) {
  const int d = run.opt.max_dim;
  const RelativeSimplicialCategory r = run.relative(std::max(d - 1, 0));
  const HcNerve hc = run.timed("hc_nerve", [&] { return hc_nerve(r.cat, d, run.opt.jobs); });
  run.results["hc_nerve"] = sizes_json(hc.space);
  run.add(validity("validate/sset", validate_sset(hc.space)));
  if (run.opt.emit_cells) run.results["space"] = to_json(hc.space);
}

void cmd_bspace(Run& run) {
  const int d = run.opt.max_dim;
  const RelativeSimplicialCategory r = run.relative(d);
  const SSet b = run.timed("classifying_space", [&] { return classifying_space(r.cat, d); });
  run.results["classifying_space"] = sizes_json(b);
  run.add(validity("validate/sset", validate_sset(b)));
  if (run.opt.emit_cells) run.results["space"] = to_json(b);
}

void cmd_diag(Run& run) {
  const int d = run.opt.max_dim;
  const RelativeSimplicialCategory r = run.relative(d);
  const MarkedSSet m = run.timed("diag_plus", [&] { return diag_plus(binerve_marked(r, d, d).marked); });
  run.results["diagonal"] = sizes_json(m.space);
  run.results["marked_edges"] = std::count(m.marked.begin(), m.marked.end(), 1);
  run.add(validity("validate/marked-sset", validate_marked(m)));
  if (run.opt.emit_cells) {
    Json j = to_json(m.space);
    j["marked"] = m.marked;
    run.results["space"] = std::move(j);
  }
}

void cmd_compare(Run& run) {
  const int d = run.opt.max_dim;
  const Coeff coeff = coeff_of(run.opt);
  const RelativeSimplicialCategory r = run.relative(d);
  const Comparison cmp = run.timed("comparison_map", [&] { return comparison_map(r.cat, d, run.opt.jobs); });
  run.results["classifying_space"] = sizes_json(cmp.b);
  run.results["hc_nerve"] = sizes_json(cmp.hc.space);
  run.add(validity("comparison/simplicial-map", validate_map(cmp.b, cmp.hc.space, cmp.map)));
  const ChainMapReport rep =
      run.timed("induced_chain_iso", [&] { return induced_chain_iso(cmp.b, cmp.hc.space, cmp.map, coeff, d - 1); });
  CheckResult iso("comparison/homology-iso");
  for (int n = 0; n <= d - 1; ++n) {
    if (!rep.commutes[n]) iso.fail("degree " + std::to_string(n) + ": chain map does not commute with boundaries");
    if (!rep.iso[n]) iso.fail("degree " + std::to_string(n) + ": not an isomorphism");
  }
  iso.bounds = {{"max_degree", d - 1}};
  run.add(iso);
  run.results["source_homology"] = homology_json(rep.source);
  run.results["target_homology"] = homology_json(rep.target);
  run.results["iso"] = rep.iso;
  run.add(run.timed("consistency", [&] { return consistency_check(r.cat, d); }));
  if (run.opt.emit_cells) run.results["map"] = cmp.map.levels;
}

void cmd_cls(Run& run) {
  const int P = run.opt.cols, Q = run.opt.rows;
  const RelativeSimplicialCategory r = run.relative(std::max(P + Q - 1, 0));
  const HcNerve hc = run.timed("hc_nerve", [&] { return hc_nerve(r.cat, P + Q, run.opt.jobs); });
  const ClsDiagram cls = run.timed("cls", [&] { return cls_diagram(hc_marked(r, hc), P, Q, run.opt.jobs); });
  run.results["cells"] = cls.marked.space.sizes;
  run.add(validity("validate/marked-bisset", validate_marked_bisset(cls.marked)));
  if (run.opt.emit_cells) run.results["bisset"] = to_json(cls.marked);
}

void cmd_theta(Run& run) {
  const int P = run.opt.cols, Q = run.opt.rows;
  const RelativeSimplicialCategory r = run.relative(std::max(Q, P + Q - 1));
  run.add(run.timed("theta", [&] { return theta_check(r, P, Q); }));
}

void cmd_homology(Run& run) {
  const int d = run.opt.max_dim;
  const SSet x = space_of(run, d);
  const HomologyReport h = run.timed("homology", [&] { return homology(x, coeff_of(run.opt), d - 1); });
  run.results["cells"] = x.sizes();
  run.results["homology"] = homology_json(h);
}

void cmd_pi0(Run& run) {
  const SSet x = space_of(run, run.opt.max_dim);
  const auto classes = pi0(x);
  run.results["components"] = classes.size();
  run.results["classes"] = classes;
}

void cmd_horncheck(Run& run) {
  const int d = run.opt.max_dim;
  Loaded v = run.input(d);
  if (auto* x = std::get_if<SSet>(&v)) {
    run.add(horn_check_all(*x, d));
    return;
  }
  const RelativeSimplicialCategory r = [&] {
    if (auto* rel = std::get_if<RelativeSimplicialCategory>(&v)) return std::move(*rel);
    if (auto* c = std::get_if<SimplicialCategory>(&v)) return whole(std::move(*c));
    throw UsageError("horncheck needs a simplicial set or category, got " + kind_name(v));
  }();
  const std::size_t N = r.cat.objects();
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      CheckResult c = horn_check_all(r.cat.hom(x, y), d);
      c.check = "horns/hom(" + std::to_string(x) + "," + std::to_string(y) + ")";
      run.add(c);
    }
}

void cmd_uniq(Run& run) {
  const int N = run.opt.max_cosimplicial;
  const UniquenessResult u = run.timed("uniqueness", [&] { return uniqueness_search(N); });
  CheckResult c("uniqueness at truncation " + std::to_string(N));
  if (u.families.size() != 1) c.fail(std::to_string(u.families.size()) + " natural families");
  c.bounds = {{"max_cosimplicial", N}};
  run.add(c);
  run.results["summary"] = "families found: " + std::to_string(u.families.size());
  Json fams = Json::array();
  for (const auto& f : u.families) {
    Json one = Json::array();
    for (std::size_t n = 0; n < f.size(); ++n) one.push_back(describe_bfrak_key(static_cast<int>(n), f[n]));
    fams.push_back(std::move(one));
  }
  run.results["families"] = std::move(fams);
  Json elim = Json::array();
  for (const auto& e : u.eliminated) elim.push_back({{"degree", e.degree}, {"witness", e.witness}});
  run.results["eliminated"] = std::move(elim);
}

void render_text(const Json& rep, std::ostream& out) {
  out << "command: " << rep["command"].get<std::string>() << "\n";
  for (const auto& in : rep["inputs"]) out << "input: " << in.dump() << "\n";
  for (const auto& c : rep["checks"]) {
    out << c["check"].get<std::string>() << ": " << c["verdict"].get<std::string>() << "\n";
    for (const auto& w : c["witnesses"]) out << "  " << w.get<std::string>() << "\n";
  }
  for (const auto& [k, v] : rep["results"].items())
    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nervekit: nerves of simplicial categories and their comparisons"};
  app.require_subcommand(1);
  Options opt;
  struct Verb {
    const char* name;
    const char* help;
    void (*fn)(Run&);
  };
  const std::vector<Verb> verbs = {
      {"validate", "load and validate an input file", cmd_validate},
      {"example", "list examples or dump one", cmd_example},
      {"nerve", "nerve of the category of vertices", cmd_nerve},
      {"binerve", "marked binerve up to --cols x --rows", cmd_binerve},
      {"hcnerve", "homotopy coherent nerve up to --max-dim", cmd_hcnerve},
      {"bspace", "classifying space, the diagonal of the binerve", cmd_bspace},
      {"diag", "marked diagonal of the binerve", cmd_diag},
      {"compare", "comparison map, its effect on homology, consistency", cmd_compare},
      {"cls", "classification diagram of the marked hc nerve", cmd_cls},
      {"theta", "check theta up to --cols x --rows", cmd_theta},
      {"homology", "homology of a space", cmd_homology},
      {"pi0", "path components of a space", cmd_pi0},
      {"horncheck", "horn filling in every hom", cmd_horncheck},
      {"uniq-check", "natural families C[Delta^n] -> B[Delta^n]", cmd_uniq},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--example", opt.example, "example name");
    sub->add_option("--in", opt.in, "input JSON file");
    sub->add_option("--out", opt.out, "write the report here instead of stdout");
    sub->add_option("-d,--max-dim", opt.max_dim, "truncation level")->check(CLI::NonNegativeNumber);
    sub->add_option("--rows", opt.rows, "rows Q of a bidegree")->check(CLI::NonNegativeNumber);
    sub->add_option("--cols", opt.cols, "columns P of a bidegree")->check(CLI::NonNegativeNumber);
    sub->add_option("--coeff", opt.coeff, "z or f2")->check(CLI::IsMember({"z", "f2"}));
    sub->add_option("--space", opt.space, "b, hc or n0 for homology and pi0")->check(CLI::IsMember({"b", "hc", "n0"}));
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-cosimplicial", opt.max_cosimplicial, "degree N for uniq-check")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--emit-cells", opt.emit_cells, "include cell tables");
    sub->add_flag("--no-timings", opt.no_timings, "omit timings");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const Verb* verb = nullptr;
  for (const auto& v : verbs)
    if (app.got_subcommand(v.name)) verb = &v;
  opt.command = verb->name;
  for (int k = 2; k < argc; ++k) opt.argv.emplace_back(argv[k]);

  Run run(opt);
  int rc = 0;
  try {
    run.timed("total", [&] {
      verb->fn(run);
      return 0;
    });
    rc = run.pass ? 0 : 1;
  } catch (const ValidationError& e) {
    CheckResult c("validate/input");
    c.absorb(e.report());
    run.add(c);
    rc = 1;
  } catch (const ParseError& e) {
    std::cerr << "nervekit: parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "nervekit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "nervekit: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "nervekit: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "nervekit: " << e.what() << "\n";
    return 2;
  }
  const Json rep = run.raw ? *run.raw : run.report();
  std::ostringstream text;
  if (opt.format == "text" && !run.raw)
    render_text(rep, text);
  else
    text << dump(rep);
  if (opt.out.empty())
    std::cout << text.str();
  else
    write_file(opt.out, text.str());
  return rc;
}
