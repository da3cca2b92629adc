#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nervekit/linalg.hpp"
#include "nervekit/sset.hpp"

namespace nervekit {

class DegreeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Normalized chains: basis = nondegenerate cells, degenerate faces dropped.
struct ChainComplex {
  int dim = 0;
  std::vector<std::vector<CellId>> basis;    // [n] nondegenerate cells
  std::vector<std::vector<int>> position;    // [n][cell] -> basis index or -1
  std::vector<SparseMatrix> boundary;        // [n] : C_n -> C_{n-1}; [0] is empty
};
ChainComplex normalized_chains(const SSet& x);

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;             // free rank, or dimension over F2
  std::vector<mpz_class> torsion;   // divisibility order; always empty over F2
  /// "Z^2 + Z/2", or "F2^2" over F2; "0" for the zero group.
  std::string to_string(Coeff coeff = Coeff::Z) const;
};

struct HomologyReport {
  Coeff coeff = Coeff::Z;
  int validity_bound = 0;  // dim - 1
  std::vector<HomologyGroup> groups;
};

/// Throws DegreeError unless max_deg <= dim - 1.
HomologyReport homology(const SSet& x, Coeff coeff, int max_deg);

/// Vertex classes, each sorted, ordered by smallest element.
std::vector<std::vector<CellId>> pi0(const SSet& x);

struct ChainMapReport {
  Coeff coeff = Coeff::Z;
  int max_deg = 0;
  std::vector<SparseMatrix> matrices;  // [n] : C_n(src) -> C_n(tgt)
  std::vector<char> commutes;          // [n] boundary square for n >= 1
  std::vector<char> iso;               // [n] induced map on H_n is an isomorphism
  HomologyReport source, target;
};

/// Induced map on normalized chains and per-degree homology verdicts. Over Z
/// a surjection between isomorphic finitely generated groups is an iso, so
/// the verdict is surjectivity plus equal invariants.
ChainMapReport induced_chain_iso(const SSet& src, const SSet& tgt, const SimplicialMap& f, Coeff coeff,
                                 int max_deg);

}  // namespace nervekit
