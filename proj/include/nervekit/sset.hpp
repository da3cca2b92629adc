#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nervekit/report.hpp"
#include "nervekit/util.hpp"

namespace nervekit {

/// Operator tables indexed [n][i][cell].
using OperatorTables = std::vector<std::vector<std::vector<CellId>>>;

/// A finite simplicial set truncated at dimension dim().
///
/// All cells are stored, degenerate ones included. face(n, i, c) is d_i on
/// X_n (1 <= n <= dim) and degen(n, i, c) is s_i on X_n (n < dim). The
/// constructor checks table shapes only; simplicial identities are the job
/// of validate_sset().
class SSet {
 public:
  /// The empty simplicial set truncated at dim.
  explicit SSet(int dim = 0);
  SSet(std::vector<std::size_t> sizes, OperatorTables faces, OperatorTables degens);

  int dim() const { return static_cast<int>(sizes_.size()) - 1; }
  std::size_t size(int n) const { return sizes_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t total_cells() const;

  CellId face(int n, int i, CellId c) const { return faces_[n][i][c]; }
  CellId degen(int n, int i, CellId c) const { return degens_[n][i][c]; }
  const OperatorTables& face_tables() const { return faces_; }
  const OperatorTables& degen_tables() const { return degens_; }

  bool degenerate(int n, CellId c) const { return degenerate_[n][c] != 0; }
  std::vector<CellId> nondegenerate(int n) const;
  std::vector<std::size_t> nondegenerate_counts() const;

  /// Vertex k of an n-cell.
  CellId vertex(int n, CellId c, int k) const;

  /// The m-cell seq^*(c) for a monotone seq : [m] -> [n].
  CellId apply(int n, CellId c, std::span<const int> seq) const;

  /// s_0 applied `times` times to a cell of level n.
  CellId degenerate_up(int n, CellId c, int times) const;

  bool operator==(const SSet&) const = default;

 private:
  std::vector<std::size_t> sizes_;
  OperatorTables faces_;
  OperatorTables degens_;
  std::vector<std::vector<char>> degenerate_;
};

/// Level-wise cell functions; levels[n][c] is the image of the n-cell c.
struct SimplicialMap {
  std::vector<std::vector<CellId>> levels;
  bool operator==(const SimplicialMap&) const = default;
};

struct MarkedSSet {
  SSet space;
  std::vector<char> marked;  // indexed by 1-cells
  bool is_marked(CellId edge) const { return marked.at(edge) != 0; }
};

/// Finite poset given by its order relation.
struct FinitePoset {
  std::size_t size = 0;
  std::vector<char> leq;  // row-major size x size
  bool less_eq(std::size_t a, std::size_t b) const { return leq[a * size + b] != 0; }

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  /// Reflexive-transitive closure of the given relations.
  static FinitePoset from_relations(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& rel);
};

/// Nerve of a poset, keeping the chain behind every cell.
struct PosetNerve {
  SSet space;
  std::vector<std::vector<std::vector<int>>> chains;  // [level][cell]
  std::vector<std::unordered_map<std::vector<int>, CellId, VecHash>> index;
  CellId find(const std::vector<int>& chain) const;
};

// Builders ------------------------------------------------------------------

SSet standard_simplex(int n, int dim);
SSet point(int dim);
SSet product(const SSet& x, const SSet& y);
/// K^m with the first factor most significant in the cell index; K^0 is a point.
SSet power(const SSet& k, int m);
SSet disjoint_union(const SSet& x, const SSet& y);
SSet truncate(const SSet& x, int dim);
PosetNerve poset_nerve(const FinitePoset& poset, int dim);
/// The sub-simplicial set of Delta^n on cells whose vertex set satisfies keep.
SSet simplex_subcomplex(int n, int dim, const std::function<bool(std::uint32_t mask)>& keep);
SSet boundary_simplex(int n, int dim);
SSet horn(int n, int k, int dim);

/// Generic builder: cells are keys, operators act on keys.
template <class Key, class Hash = VecHash>
struct KeyedCells {
  std::vector<std::vector<Key>> keys;
  std::vector<std::unordered_map<Key, CellId, Hash>> index;

  CellId find(int n, const Key& key) const {
    auto it = index[n].find(key);
    if (it == index[n].end()) throw std::logic_error("KeyedCells: operator result is not a cell");
    return it->second;
  }
};

template <class Key, class Hash, class FaceFn, class DegenFn>
SSet build_keyed(KeyedCells<Key, Hash>& cells, FaceFn face_fn, DegenFn degen_fn) {
  const int dim = static_cast<int>(cells.keys.size()) - 1;
  cells.index.assign(cells.keys.size(), {});
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= dim; ++n) {
    sizes.push_back(cells.keys[n].size());
    for (std::size_t c = 0; c < cells.keys[n].size(); ++c)
      cells.index[n].emplace(cells.keys[n][c], static_cast<CellId>(c));
  }
  OperatorTables faces(dim + 1), degens(dim + 1);
  for (int n = 0; n <= dim; ++n) {
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<CellId>(sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t c = 0; c < sizes[n]; ++c)
          faces[n][i][c] = cells.find(n - 1, face_fn(n, i, cells.keys[n][c]));
    }
    if (n < dim) {
      degens[n].assign(n + 1, std::vector<CellId>(sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (std::size_t c = 0; c < sizes[n]; ++c)
          degens[n][i][c] = cells.find(n + 1, degen_fn(n, i, cells.keys[n][c]));
    }
  }
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

// Maps -------------------------------------------------------------------------

SimplicialMap identity_map(const SSet& x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap projection_first(const SSet& x, const SSet& y);
SimplicialMap projection_second(const SSet& x, const SSet& y);

/// Empty iff every operator commutes with the map in range.
ValidationReport validate_map(const SSet& src, const SSet& tgt, const SimplicialMap& f);

// Validation ----------------------------------------------------------------

ValidationReport validate_sset(const SSet& x);
ValidationReport validate_marked(const MarkedSSet& x);
ValidationReport validate_poset(const FinitePoset& p);

// Enumeration ---------------------------------------------------------------

/// Lookup of the cells of X by their face tuple.
class FaceIndex {
 public:
  explicit FaceIndex(const SSet& x);
  const std::vector<CellId>& candidates(int n, const std::vector<CellId>& faces) const;
  const SSet& space() const { return *x_; }

 private:
  const SSet* x_;
  std::vector<CellId> vertices_;
  std::vector<std::unordered_map<std::vector<CellId>, std::vector<CellId>, VecHash>> by_faces_;
  std::vector<CellId> none_;
};

struct MapSearchOptions {
  /// Optional pruning filter: may cell a of A (at level n) go to x?
  std::function<bool(int n, CellId a, CellId x)> allow;
  int jobs = 1;
};

/// Visits every simplicial map A -> X in canonical order: lexicographic in
/// the images of the nondegenerate cells of A, ordered by level then index.
/// The visitor returns false to stop early.
void for_each_map(const SSet& a, const FaceIndex& x, const MapSearchOptions& opts,
                  const std::function<bool(const SimplicialMap&)>& visit);

std::vector<SimplicialMap> enumerate_maps(const SSet& a, const SSet& x,
                                          const MapSearchOptions& opts = {});

/// Eilenberg-Zilber decomposition of a cell: c = seq^*(base) with base
/// nondegenerate at level base_level and seq a surjection.
struct EzDecomposition {
  int base_level;
  CellId base;
  Sequence seq;
};
EzDecomposition ez_decompose(const SSet& x, int n, CellId c);

/// Connected component label of every vertex (smallest vertex in the class).
std::vector<CellId> vertex_components(const SSet& x);

}  // namespace nervekit
