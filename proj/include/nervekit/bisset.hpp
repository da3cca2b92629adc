#pragma once

#include <vector>

#include "nervekit/sset.hpp"

namespace nervekit {

/// Tables indexed [p][q][i][cell].
using BiOperatorTables = std::vector<std::vector<std::vector<std::vector<CellId>>>>;

/// A bisimplicial set truncated at (P, Q). cells[p][q]: p is the column
/// index (horizontal direction), q the row index (vertical direction).
///
/// hface[p][q][i] : X_{p,q} -> X_{p-1,q}, hdegen[p][q][i] : X_{p,q} -> X_{p+1,q},
/// vface[p][q][i] : X_{p,q} -> X_{p,q-1}, vdegen[p][q][i] : X_{p,q} -> X_{p,q+1}.
struct BisimplicialSet {
  int P = 0, Q = 0;
  std::vector<std::vector<std::size_t>> sizes;
  BiOperatorTables hface, hdegen, vface, vdegen;

  std::size_t size(int p, int q) const { return sizes[p][q]; }
  /// Allocates correctly shaped, zero-filled tables for the given sizes.
  static BisimplicialSet with_sizes(std::vector<std::vector<std::size_t>> sizes);
};

/// Marking: marked[q][c] flags cell c of X_{1,q}. Requires P >= 1.
struct MarkedBisimplicialSet {
  BisimplicialSet space;
  std::vector<std::vector<char>> marked;
};

SSet row(const BisimplicialSet& x, int q);     // X_{*,q}
SSet column(const BisimplicialSet& x, int p);  // X_{p,*}
SSet diagonal(const BisimplicialSet& x);
BisimplicialSet transpose(const BisimplicialSet& x);
MarkedSSet diag_plus(const MarkedBisimplicialSet& m);

ValidationReport validate_bisset(const BisimplicialSet& x);
ValidationReport validate_marked_bisset(const MarkedBisimplicialSet& m);

/// Map of bisimplicial sets, levels[p][q][cell].
struct BisimplicialMap {
  std::vector<std::vector<std::vector<CellId>>> levels;
};

ValidationReport validate_bisset_map(const BisimplicialSet& src, const BisimplicialSet& tgt,
                                     const BisimplicialMap& f);
/// Additionally checks that marked cells go to marked cells.
ValidationReport validate_marked_map(const MarkedBisimplicialSet& src, const MarkedBisimplicialSet& tgt,
                                     const BisimplicialMap& f);

}  // namespace nervekit
