#include "nervekit/examples.hpp"

#include <sstream>

namespace nervekit {

namespace {

std::vector<std::vector<CellId>> cyclic_table(std::size_t n) {
  std::vector<std::vector<CellId>> t(n, std::vector<CellId>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<CellId>((a + b) % n);
  return t;
}

std::vector<std::vector<CellId>> klein_table() {
  std::vector<std::vector<CellId>> t(4, std::vector<CellId>(4));
  for (CellId a = 0; a < 4; ++a)
    for (CellId b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

FiniteCategory group_as_category(const std::vector<std::vector<CellId>>& mult) {
  FiniteCategory c;
  c.objects = 1;
  c.hom_sizes = {mult.size()};
  c.id = {0};
  c.comp.emplace_back();
  for (const auto& row : mult)
    for (CellId v : row) c.comp[0].push_back(v);
  return c;
}

bool invertible(const FiniteCategory& c, ObjId x, ObjId y, CellId f) {
  for (CellId g = 0; g < c.hom_size(y, x); ++g)
    if (c.compose(x, y, x, g, f) == c.id[x] && c.compose(y, x, y, f, g) == c.id[y]) return true;
  return false;
}

RelativeSimplicialCategory with_marking(SimplicialCategory c, const std::string& marking) {
  if (marking == "whole") return whole(std::move(c));
  if (marking == "ids") return identities_only(std::move(c));
  if (marking == "isos") {
    const FiniteCategory c0 = level_category(c, 0);
    return components_of(std::move(c), [&](ObjId x, ObjId y, CellId v) { return invertible(c0, x, y, v); });
  }
  throw std::invalid_argument("unknown marking '" + marking + "'");
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v < 0) throw std::invalid_argument("bad " + what + " '" + s + "'");
  return v;
}

}  // namespace

SimplicialCategory group_category(const std::vector<std::vector<CellId>>& mult, int dim, std::string name) {
  const std::size_t g = mult.size();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      if (mult[a][b] != mult[b][a]) throw std::invalid_argument("group_category: group must be abelian");
  const CategoryNerve nerve = nerve_cat(group_as_category(mult), dim);
  SimplicialCategory c;
  c.names = {std::move(name)};
  c.dim = dim;
  c.homs = {nerve.space};
  c.id = {0};
  c.comp.emplace_back(dim + 1);
  for (int n = 0; n <= dim; ++n) {
    const auto& keys = nerve.keys[n];
    auto& t = c.comp[0][n];
    t.resize(keys.size() * keys.size());
    std::vector<CellId> key;
    for (std::size_t a = 0; a < keys.size(); ++a)
      for (std::size_t b = 0; b < keys.size(); ++b) {
        key = keys[a];
        for (int s = 1; s <= n; ++s) key[2 * s] = mult[keys[a][2 * s]][keys[b][2 * s]];
        t[a * keys.size() + b] = nerve.find(key);
      }
  }
  return c;
}

std::vector<std::string> example_names() {
  return {"bg:z2",          "bg:z3",         "bg:z2xz2",          "discrete:poset01", "discrete:poset012",
          "discrete:z2",    "poset:3:0<1,0<2", "two-object-interval", "hom-simplex:1",    "bfrak:2",
          "cfrak:3"};
}

Example build_example(const std::string& descriptor, int dim) {
  std::string name = descriptor, marking;
  if (auto slash = descriptor.find('/'); slash != std::string::npos) {
    name = descriptor.substr(0, slash);
    marking = descriptor.substr(slash + 1);
  }
  Example ex;
  ex.name = descriptor;
  SimplicialCategory cat;
  std::string default_marking = "ids";
  if (name.rfind("bg:", 0) == 0) {
    const std::string g = name.substr(3);
    if (g == "z2xz2") {
      cat = group_category(klein_table(), dim, "*");
    } else if (g.size() > 1 && g[0] == 'z') {
      const int n = parse_int(g.substr(1), "group order");
      if (n < 1) throw std::invalid_argument("bad group order");
      cat = group_category(cyclic_table(static_cast<std::size_t>(n)), dim, "*");
    } else {
      throw std::invalid_argument("unknown group '" + g + "'");
    }
    ex.fibrant = true;
    default_marking = "whole";
  } else if (name == "discrete:poset01" || name == "discrete:poset012") {
    const std::size_t n = name == "discrete:poset01" ? 2 : 3;
    cat = discrete_simplicial(poset_category(FinitePoset::chain(n)), dim);
    ex.fibrant = true;
  } else if (name == "discrete:z2") {
    cat = discrete_simplicial(group_as_category(cyclic_table(2)), dim, {"*"});
    ex.fibrant = true;
  } else if (name.rfind("poset:", 0) == 0) {
    const std::string rest = name.substr(6);
    const auto colon = rest.find(':');
    const int n = parse_int(rest.substr(0, colon), "poset size");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    if (colon != std::string::npos) {
      std::stringstream ss(rest.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto lt = item.find('<');
        if (lt == std::string::npos) throw std::invalid_argument("bad relation '" + item + "'");
        rel.emplace_back(parse_int(item.substr(0, lt), "element"), parse_int(item.substr(lt + 1), "element"));
      }
    }
    const FinitePoset p = FinitePoset::from_relations(static_cast<std::size_t>(n), rel);
    if (!validate_poset(p).ok()) throw std::invalid_argument("relations do not define a poset");
    cat = discrete_simplicial(poset_category(p), dim);
    ex.fibrant = true;
  } else if (name == "two-object-interval") {
    cat = discrete_simplicial(poset_category(FinitePoset::chain(2)), dim);
    ex.fibrant = true;
  } else if (name.rfind("hom-simplex:", 0) == 0) {
    const int k = parse_int(name.substr(12), "simplex dimension");
    cat = interval_power_cat(1, standard_simplex(k, dim));
    ex.fibrant = k == 0;
  } else if (name.rfind("bfrak:", 0) == 0) {
    const int n = parse_int(name.substr(6), "level");
    cat = bfrak(n, dim);
    ex.fibrant = n == 0;
  } else if (name.rfind("cfrak:", 0) == 0) {
    const int n = parse_int(name.substr(6), "level");
    cat = frak_c(n, dim).cat;
    ex.fibrant = n <= 1;
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  ex.rel = with_marking(std::move(cat), marking.empty() ? default_marking : marking);
  return ex;
}

}  // namespace nervekit
