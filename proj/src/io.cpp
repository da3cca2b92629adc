#include "nervekit/io.hpp"

#include <fstream>
#include <sstream>

namespace nervekit {

namespace {

std::string pair_key(std::size_t x, std::size_t y) { return std::to_string(x) + "," + std::to_string(y); }

std::string triple_key(std::size_t x, std::size_t y, std::size_t z) {
  return pair_key(x, y) + "," + std::to_string(z);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

template <class T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

}  // namespace

// Encoding ---------------------------------------------------------------------

Json to_json(const SSet& x) {
  Json j;
  j["dim"] = x.dim();
  j["cells"] = x.sizes();
  j["face"] = x.face_tables();
  j["degen"] = x.degen_tables();
  return j;
}

Json to_json(const SimplicialCategory& c) {
  const std::size_t N = c.objects();
  Json j;
  j["objects"] = c.names;
  j["dim"] = c.dim;
  Json hom = Json::object(), comp = Json::object(), id = Json::object();
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) hom[pair_key(x, y)] = to_json(c.hom(x, y));
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) comp[triple_key(x, y, z)] = c.comp[(x * N + y) * N + z];
  for (std::size_t x = 0; x < N; ++x) id[std::to_string(x)] = c.id[x];
  j["hom"] = std::move(hom);
  j["comp"] = std::move(comp);
  j["id"] = std::move(id);
  return j;
}

Json to_json(const RelativeSimplicialCategory& r) {
  Json j = to_json(r.cat);
  const std::size_t N = r.cat.objects();
  Json sub = Json::object();
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      Json cells = Json::array();
      const auto& s = r.sub[x * N + y];
      for (std::size_t n = 0; n < s.size(); ++n)
        for (std::size_t c = 0; c < s[n].size(); ++c)
          if (s[n][c]) cells.push_back({n, c});
      sub[pair_key(x, y)] = std::move(cells);
    }
  j["sub"] = std::move(sub);
  return j;
}

Json to_json(const BisimplicialSet& x) {
  Json j;
  j["dims"] = {x.P, x.Q};
  j["cells"] = x.sizes;
  j["hface"] = x.hface;
  j["hdegen"] = x.hdegen;
  j["vface"] = x.vface;
  j["vdegen"] = x.vdegen;
  return j;
}

Json to_json(const MarkedBisimplicialSet& m) {
  Json j = to_json(m.space);
  Json marked = Json::array();
  for (std::size_t q = 0; q < m.marked.size(); ++q)
    for (std::size_t c = 0; c < m.marked[q].size(); ++c)
      if (m.marked[q][c]) marked.push_back({1, q, c});
  j["marked"] = std::move(marked);
  return j;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["check"] = r.check;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["witnesses"] = r.witnesses;
  Json bounds = Json::object();
  for (const auto& [k, v] : r.bounds) bounds[k] = v;
  j["bounds"] = std::move(bounds);
  return j;
}

// Decoding ---------------------------------------------------------------------

SSet sset_from_json(const Json& j) {
  const int dim = as<int>(field(j, "dim"), "dim");
  expect(dim >= 0, "dim must be non-negative");
  auto sizes = as<std::vector<std::size_t>>(field(j, "cells"), "cells");
  auto faces = as<OperatorTables>(field(j, "face"), "face");
  auto degens = as<OperatorTables>(field(j, "degen"), "degen");
  expect(sizes.size() == static_cast<std::size_t>(dim) + 1, "cells must list dim + 1 level sizes");
  try {
    return SSet(std::move(sizes), std::move(faces), std::move(degens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SimplicialCategory category_from_json(const Json& j) {
  SimplicialCategory c;
  c.names = as<std::vector<std::string>>(field(j, "objects"), "objects");
  c.dim = as<int>(field(j, "dim"), "dim");
  expect(c.dim >= 0, "dim must be non-negative");
  const std::size_t N = c.objects();
  const Json& hom = field(j, "hom");
  const Json& comp = field(j, "comp");
  const Json& id = field(j, "id");
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const std::string key = pair_key(x, y);
      expect(hom.is_object() && hom.contains(key), "hom \"" + key + "\" missing");
      c.homs.push_back(sset_from_json(hom[key]));
    }
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        const std::string key = triple_key(x, y, z);
        expect(comp.is_object() && comp.contains(key), "comp \"" + key + "\" missing");
        c.comp.push_back(as<std::vector<std::vector<CellId>>>(comp[key], "comp " + key));
      }
  for (std::size_t x = 0; x < N; ++x) {
    const std::string key = std::to_string(x);
    expect(id.is_object() && id.contains(key), "id \"" + key + "\" missing");
    c.id.push_back(as<CellId>(id[key], "id " + key));
  }
  return c;
}

RelativeSimplicialCategory relative_from_json(const Json& j) {
  RelativeSimplicialCategory r;
  r.cat = category_from_json(j);
  const std::size_t N = r.cat.objects();
  const Json& sub = field(j, "sub");
  expect(sub.is_object(), "sub must be an object");
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const SSet& h = r.cat.hom(x, y);
      std::vector<std::vector<char>> s;
      for (int n = 0; n <= r.cat.dim; ++n) s.emplace_back(n <= h.dim() ? h.size(n) : 0, 0);
      const std::string key = pair_key(x, y);
      if (sub.contains(key))
        for (const auto& ref : as<std::vector<std::pair<int, CellId>>>(sub[key], "sub " + key)) {
          expect(ref.first >= 0 && ref.first <= r.cat.dim && ref.second < s[ref.first].size(),
                 "sub " + key + ": cell (" + std::to_string(ref.first) + ", " + std::to_string(ref.second) +
                     ") out of range");
          s[ref.first][ref.second] = 1;
        }
      r.sub.push_back(std::move(s));
    }
  return r;
}

BisimplicialSet bisset_from_json(const Json& j) {
  BisimplicialSet x;
  const auto dims = as<std::vector<int>>(field(j, "dims"), "dims");
  expect(dims.size() == 2 && dims[0] >= 0 && dims[1] >= 0, "dims must be [P, Q] with P, Q >= 0");
  x.P = dims[0];
  x.Q = dims[1];
  x.sizes = as<std::vector<std::vector<std::size_t>>>(field(j, "cells"), "cells");
  x.hface = as<BiOperatorTables>(field(j, "hface"), "hface");
  x.hdegen = as<BiOperatorTables>(field(j, "hdegen"), "hdegen");
  x.vface = as<BiOperatorTables>(field(j, "vface"), "vface");
  x.vdegen = as<BiOperatorTables>(field(j, "vdegen"), "vdegen");
  return x;
}

MarkedBisimplicialSet marked_bisset_from_json(const Json& j) {
  MarkedBisimplicialSet m;
  m.space = bisset_from_json(j);
  const BisimplicialSet& x = m.space;
  expect(x.P >= 1, "a marking needs column 1");
  expect(x.sizes.size() > 1 && static_cast<int>(x.sizes[1].size()) == x.Q + 1, "cells do not match dims");
  for (int q = 0; q <= x.Q; ++q) m.marked.emplace_back(x.sizes[1][q], 0);
  for (const auto& ref : as<std::vector<std::vector<std::size_t>>>(field(j, "marked"), "marked")) {
    expect(ref.size() == 3 && ref[0] == 1, "marked entries are [1, q, cell]");
    expect(ref[1] <= static_cast<std::size_t>(x.Q) && ref[2] < m.marked[ref[1]].size(),
           "marked cell (1, " + std::to_string(ref[1]) + ", " + std::to_string(ref[2]) + ") out of range");
    m.marked[ref[1]][ref[2]] = 1;
  }
  return m;
}

// Files --------------------------------------------------------------------------

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string kind_name(const Loaded& v) {
  static const char* names[] = {"sset", "category", "relative", "bisset", "marked-bisset"};
  return names[v.index()];
}

Loaded decode(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("hom")) {
    if (j.contains("sub")) return relative_from_json(j);
    return category_from_json(j);
  }
  if (j.contains("dims")) {
    if (j.contains("marked")) return marked_bisset_from_json(j);
    return bisset_from_json(j);
  }
  if (j.contains("dim")) return sset_from_json(j);
  throw ParseError("unrecognized document: expected \"hom\", \"dims\" or \"dim\"");
}

ValidationReport validate_loaded(const Loaded& v) {
  switch (v.index()) {
    case 0: return validate_sset(std::get<0>(v));
    case 1: return validate_simplicial_category(std::get<1>(v));
    case 2: return validate_relative(std::get<2>(v));
    case 3: return validate_bisset(std::get<3>(v));
    default: return validate_marked_bisset(std::get<4>(v));
  }
}

Loaded load(const std::string& path) {
  Loaded v = decode(parse_json(read_file(path)));
  ValidationReport r = validate_loaded(v);
  if (!r.ok()) throw ValidationError(std::move(r));
  return v;
}

Json to_json(const Loaded& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

void save(const std::string& path, const Loaded& v) { write_file(path, dump(to_json(v))); }

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) s[k] = hex[h & 15];
  return s;
}

}  // namespace nervekit
