#pragma once

#include <vector>

#include "nervekit/bisset.hpp"
#include "nervekit/category.hpp"

namespace nervekit {

// Binerve ---------------------------------------------------------------------

/// A chain x_0 -> ... -> x_p of q-cells: morphisms[t-1] lies in hom(x_{t-1}, x_t).
struct CellChain {
  std::vector<ObjId> objects;
  std::vector<CellId> morphisms;
  int level = 0;
};

struct Binerve {
  MarkedBisimplicialSet marked;
  std::vector<CategoryNerve> rows;  // row q = nerve of the level-q category

  CellChain chain(int p, int q, CellId c) const;
  CellId find(int q, const CellChain& chain) const;
};

/// Row q is the nerve of the level-q category, truncated at P; column 1 is
/// marked on the cells of the subcategory.
Binerve binerve_marked(const RelativeSimplicialCategory& r, int P, int Q);

/// B(C) = diagonal of the binerve, truncated at L.
SSet classifying_space(const SimplicialCategory& c, int L);

// Homotopy coherent simplices ---------------------------------------------------

/// The generating data of a functor C[Delta^n] -> C: one slot per pair
/// a < b and strict chain of subsets in P_{a,b} beginning with {a, b}.
/// Every other chain of P_{a,b} is either degenerate or passes through an
/// interior object, so its value is forced.
struct HcShape {
  struct Slot {
    int a, b, level;
    std::vector<std::uint32_t> chain;
    std::vector<int> faces;  // faces[i] for i >= 1: slot of the chain without entry i
  };
  int n = 0;
  std::vector<Slot> slots;  // by gap b - a, then a, then level, then lexicographic chain
  std::unordered_map<std::vector<std::uint32_t>, int, VecHash> index;
  int find(const std::vector<std::uint32_t>& strict_chain) const;

  /// face_gather[i][t]: slot of this shape read by slot t of d_i (shape n-1).
  std::vector<std::vector<int>> face_gather;
  /// degen_gather[i][t] for s_i (shape n+1): source slot and pullback, or
  /// slot -1 when the pair collapses and the value is an identity.
  struct DegenEntry {
    int slot;
    Sequence seq;
  };
  std::vector<std::vector<DegenEntry>> degen_gather;
};

/// Cached shape for level n (thread safe).
const HcShape& hc_shape(int n);

/// An n-simplex of the homotopy coherent nerve: n+1 objects followed by one
/// cell per slot of hc_shape(n).
using HcKey = std::vector<CellId>;

/// Value of the simplex on an arbitrary weakly increasing chain of P_{a,b}.
CellId hc_eval(const SimplicialCategory& c, int n, const HcKey& key, int a, int b,
               const std::vector<std::uint32_t>& chain);

/// Checks ranges and the face relations of every slot.
ValidationReport validate_hc_simplex(const SimplicialCategory& c, int n, const HcKey& key);

HcKey hc_face(int n, int i, const HcKey& key);
HcKey hc_degen(const SimplicialCategory& c, int n, int i, const HcKey& key);

/// Pulls a simplex back along a monotone seq : [m] -> [n].
HcKey hc_apply(const SimplicialCategory& c, int n, const HcKey& key, const Sequence& seq);

struct HcNerve {
  SSet space;
  std::vector<std::vector<HcKey>> keys;
  std::vector<std::unordered_map<HcKey, CellId, VecHash>> index;
  CellId find(int n, const HcKey& key) const;
};

/// N_hc(C) truncated at L. Needs L <= dim + 1; throws TruncationError otherwise.
HcNerve hc_nerve(const SimplicialCategory& c, int L, int jobs = 1);

/// Builds a simplex from a value function on slots.
HcKey hc_from_slots(int n, const std::vector<ObjId>& objects,
                    const std::function<CellId(const HcShape::Slot&)>& value);

// Comparison B(C) -> N_hc(C) ----------------------------------------------------

/// Composite g_j(seq_j) o ... o g_{i+1}(seq_{i+1}) at level `level`, where
/// g_p = chain.morphisms[p-1] is pulled back along seqs[j-p].
CellId sigma_prime(const SimplicialCategory& c, const CellChain& chain, int i, int j,
                   const std::vector<Sequence>& seqs, int level);

/// Image of a k-chain of k-cells (a k-cell of B(C)) under precomposition with f_k.
HcKey comparison_simplex(const SimplicialCategory& c, const CellChain& chain);

struct Comparison {
  SSet b;
  HcNerve hc;
  SimplicialMap map;
  Binerve binerve;
};

Comparison comparison_map(const SimplicialCategory& c, int L, int jobs = 1);

/// The simplex of N_hc given by a chain of vertices (a cell of N(C_0)).
HcKey vertex_chain_simplex(const SimplicialCategory& c, const CellChain& vertices);

// chi and theta -------------------------------------------------------------------

/// The functor C[Delta^r] -> [p]_{Delta^q} obtained from an r-cell
/// tau = (tau1, tau2) of Delta^p x Delta^q: objects k -> tau1(k), and a
/// subset S goes to the tuple whose entry for p' in (tau1(a), tau1(b)],
/// top first, is max { tau2(s) : s in S, tau1(s) < p' }.
struct ChiComposite {
  int p, q, r;
  Sequence tau1, tau2;
  std::vector<int> objects() const { return tau1; }
  /// Tuple of sequences into [q] for a chain of subsets of [r] in P_{a,b}.
  std::vector<Sequence> hom(int a, int b, const std::vector<std::uint32_t>& chain) const;
};

/// Throws std::invalid_argument unless tau1 and tau2 are monotone of equal length.
ChiComposite chi_simplex(int p, int q, const Sequence& tau1, const Sequence& tau2);

/// Materializes a chi composite as a functor frak_c(r) -> interval_power_cat(p, Delta^q).
SimplicialFunctor chi_functor(const ChiComposite& chi, const FrakC& src);

/// theta(x)(tau) for a (p,q)-cell x of the binerve.
HcKey theta_simplex(const SimplicialCategory& c, const CellChain& x, const Sequence& tau1, const Sequence& tau2);

// Classification diagram -----------------------------------------------------------

/// Delta^p x Delta^q with its cells as pairs of sequences.
struct PrismCells {
  int p = 0, q = 0;
  SSet space;
  std::vector<std::pair<int, CellId>> order;  // nondegenerate cells, level-major
  std::vector<std::vector<int>> position;     // [level][cell] -> index in order, or -1
  std::pair<Sequence, Sequence> cell(int level, CellId c) const;
  CellId cell_id(const Sequence& s1, const Sequence& s2) const;
};
/// Truncated at max(dim, p + q).
PrismCells prism(int p, int q, int dim = 0);

struct ClsDiagram {
  MarkedBisimplicialSet marked;
  std::vector<std::vector<PrismCells>> prisms;                            // [p][q]
  std::vector<std::vector<std::vector<std::vector<CellId>>>> keys;         // [p][q][cell] nondegenerate images
  std::vector<std::vector<std::unordered_map<std::vector<CellId>, CellId, VecHash>>> index;

  /// Value of cell u at an arbitrary cell of the prism.
  CellId value(const SSet& x, int p, int q, CellId u, int level, CellId prism_cell) const;
  CellId find(int p, int q, const std::vector<CellId>& key) const;
};

/// Cls+ of a marked simplicial set, truncated at (P, Q). Needs P + Q <= dim.
ClsDiagram cls_diagram(const MarkedSSet& m, int P, int Q, int jobs = 1);

/// N_hc(C) with its edges marked when their vertex lies in the subcategory.
MarkedSSet hc_marked(const RelativeSimplicialCategory& r, const HcNerve& hc);

/// theta as a map of marked bisimplicial sets into a materialized Cls+.
BisimplicialMap theta_map(const RelativeSimplicialCategory& r, const Binerve& b, const HcNerve& hc,
                          const ClsDiagram& cls);

}  // namespace nervekit
