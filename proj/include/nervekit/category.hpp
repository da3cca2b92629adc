#pragma once

#include <string>
#include <vector>

#include "nervekit/sset.hpp"

namespace nervekit {

/// A finite category with morphisms indexed per ordered pair of objects.
///
/// comp[(x*N + y)*N + z][g * hom_size(x,y) + f] is g o f for f : x -> y and
/// g : y -> z.
struct FiniteCategory {
  std::size_t objects = 0;
  std::vector<std::size_t> hom_sizes;  // [x*N + y]
  std::vector<CellId> id;
  std::vector<std::vector<CellId>> comp;

  std::size_t hom_size(ObjId x, ObjId y) const { return hom_sizes[x * objects + y]; }
  CellId compose(ObjId x, ObjId y, ObjId z, CellId g, CellId f) const {
    return comp[(x * objects + y) * objects + z][g * hom_size(x, y) + f];
  }
};

ValidationReport validate_category(const FiniteCategory& c);

/// The nerve of a finite category. A k-chain is keyed as
/// [x0, x1, f1, x2, f2, ..., xk, fk] with f_t : x_{t-1} -> x_t; cells are in
/// lexicographic key order.
struct CategoryNerve {
  SSet space;
  std::vector<std::vector<std::vector<CellId>>> keys;  // [level][cell]
  std::vector<std::unordered_map<std::vector<CellId>, CellId, VecHash>> index;
  CellId find(const std::vector<CellId>& key) const;
};

CategoryNerve nerve_cat(const FiniteCategory& c, int dim);

/// Category with hom simplicial sets sharing one truncation.
///
/// comp[(x*N + y)*N + z][n] is the level-n composition table of
/// hom(y,z) x hom(x,y) -> hom(x,z), indexed g * |hom(x,y)_n| + f.
struct SimplicialCategory {
  std::vector<std::string> names;
  int dim = 0;
  std::vector<SSet> homs;  // [x*N + y]
  std::vector<std::vector<std::vector<CellId>>> comp;
  std::vector<CellId> id;  // vertex of hom(x,x)

  std::size_t objects() const { return names.size(); }
  const SSet& hom(ObjId x, ObjId y) const { return homs[x * objects() + y]; }
  const std::vector<CellId>& comp_table(ObjId x, ObjId y, ObjId z, int n) const {
    return comp[(x * objects() + y) * objects() + z][n];
  }
  CellId compose(ObjId x, ObjId y, ObjId z, int n, CellId g, CellId f) const {
    return comp_table(x, y, z, n)[g * hom(x, y).size(n) + f];
  }
  /// The identity of x as an n-cell.
  CellId identity(ObjId x, int n) const { return hom(x, x).degenerate_up(0, id[x], n); }
};

/// A simplicial category with a designated subcategory; sub[x*N + y][n][c].
struct RelativeSimplicialCategory {
  SimplicialCategory cat;
  std::vector<std::vector<std::vector<char>>> sub;

  bool in_sub(ObjId x, ObjId y, int n, CellId c) const {
    return sub[x * cat.objects() + y][n][c] != 0;
  }
};

/// Marks every cell of every hom.
RelativeSimplicialCategory whole(SimplicialCategory c);
/// Marks the identity vertices and their degeneracies.
RelativeSimplicialCategory identities_only(SimplicialCategory c);
/// Marks the union of the components of each hom that meet a vertex of the
/// sub-category generated by the given level-0 predicate.
RelativeSimplicialCategory components_of(SimplicialCategory c,
                                         const std::function<bool(ObjId, ObjId, CellId)>& vertex_in);

ValidationReport validate_simplicial_category(const SimplicialCategory& c);
ValidationReport validate_relative(const RelativeSimplicialCategory& r);

/// The ordinary category of n-cells.
FiniteCategory level_category(const SimplicialCategory& c, int n);

/// A simplicial category with discrete homs (each hom set a constant simplicial set).
SimplicialCategory discrete_simplicial(const FiniteCategory& c, int dim,
                                       std::vector<std::string> names = {});

/// The finite category of a poset: one morphism x -> y iff x <= y.
FiniteCategory poset_category(const FinitePoset& p);

/// Simplicial functor; homs[x*N + y] maps src.hom(x,y) -> tgt.hom(F x, F y).
struct SimplicialFunctor {
  std::vector<ObjId> objects;
  std::vector<SimplicialMap> homs;
  bool operator==(const SimplicialFunctor&) const = default;
};

ValidationReport validate_functor(const SimplicialCategory& src, const SimplicialCategory& tgt,
                                  const SimplicialFunctor& f);
SimplicialFunctor compose(const SimplicialFunctor& g, const SimplicialFunctor& f);

// Cosimplicial gadgets ---------------------------------------------------------

/// [n]_K: objects 0..n, hom(i,j) = K^(j-i), composition by concatenation.
/// A cell of hom(i,j) is a tuple (c_j, ..., c_{i+1}) listed from the top
/// factor down; the top factor is most significant in the cell index.
SimplicialCategory interval_power_cat(int n, const SSet& k);

/// B[Delta^n] = [n]_{Delta^n}, truncated at dim.
SimplicialCategory bfrak(int n, int dim);

/// Tuple of sequences for a cell of hom(i,j) in bfrak(n, dim): one monotone
/// sequence into [n] per factor, top factor first.
std::vector<Sequence> bfrak_tuple(int n, int i, int j, int level, CellId c);
CellId bfrak_cell(int n, int level, const std::vector<Sequence>& tuple);

/// B[alpha] for monotone alpha : [m] -> [n].
SimplicialFunctor bfrak_map(const Sequence& alpha, int m, int n, int dim);

/// C[Delta^n]: hom(i,j) is the nerve of P_{i,j}, the subsets of [n] with
/// minimum i and maximum j under inclusion, composition by union.
struct FrakC {
  int n = 0;
  SimplicialCategory cat;
  std::vector<std::vector<std::uint32_t>> elements;  // [i*(n+1)+j] bitmasks, ascending
  std::vector<PosetNerve> nerves;                    // [i*(n+1)+j]

  const std::vector<std::uint32_t>& poset(int i, int j) const { return elements[i * (n + 1) + j]; }
  const PosetNerve& nerve(int i, int j) const { return nerves[i * (n + 1) + j]; }
  /// The chain of subsets behind cell c of hom(i,j) at level k.
  std::vector<std::uint32_t> chain(int i, int j, int level, CellId c) const;
  CellId cell(int i, int j, const std::vector<std::uint32_t>& chain) const;
};

FrakC frak_c(int n, int dim);

/// C[alpha] for monotone alpha : [m] -> [n]; S |-> alpha(S).
SimplicialFunctor frak_c_map(const Sequence& alpha, const FrakC& src, const FrakC& tgt);

/// Image of a subset S in P_{i,j} under the comparison functor, as one value
/// per factor p = j, j-1, ..., i+1: the largest element of S below p.
std::vector<int> comparison_vertex(std::uint32_t s, int i, int j);

/// f_n : C[Delta^n] -> B[Delta^n], identity on objects.
SimplicialFunctor comparison_functor(const FrakC& c, const SimplicialCategory& b);

std::uint32_t image_mask(std::uint32_t s, const Sequence& alpha);
std::string mask_string(std::uint32_t s);

}  // namespace nervekit
