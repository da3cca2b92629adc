#pragma once

#include <string>
#include <vector>

#include "nervekit/homology.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/report.hpp"

namespace nervekit {

/// Every map from the horn Lambda^n_k into X, checked for an extension to
/// Delta^n. Throws TruncationError if n > dim.
CheckResult horn_check(const SSet& x, int n, int k);
/// All horns with 1 <= n <= n_max; inner_only restricts to 0 < k < n.
CheckResult horn_check_all(const SSet& x, int n_max, bool inner_only = false);

/// Column bijections X_{n,q} = coprod C(x_{n-1},x_n)_q x ... x C(x_0,x_1)_q,
/// compatible with vertical operators, and the strict Segal bijections
/// X_{n,q} -> X_{n-1,q} x_{X_{0,q}} X_{1,q} for 2 <= n <= n_max. Reads the
/// operator tables, so a corrupted table is reported.
CheckResult segal_column_check(const Binerve& b, const SimplicialCategory& c, int n_max);
CheckResult segal_column_check(const RelativeSimplicialCategory& r, int n_max, int Q);

/// Fiber of column 1 over (X, Y) in column 0 x column 0 is C(X, Y), cellwise
/// and compatibly with vertical operators, at every level up to dim.
CheckResult fiber_check(const RelativeSimplicialCategory& r);

/// (a) theta at tau = (id, id) agrees with comparison_map on every diagonal
/// cell of level <= L; (b) the restriction of theta(x) to Delta^p x {i}
/// is the vertex chain of the i-th vertex of x.
CheckResult consistency_check(const SimplicialCategory& c, int L);

/// B(C), N_hc(C) and N(C_0) agree for a discrete C, and comparison_map is
/// the identification.
CheckResult discrete_collapse_check(const SimplicialCategory& c, int L);

/// theta on every cell of the binerve up to (P, Q), without materializing
/// Cls: HC validity, operators in the prism, the slice condition, markings
/// and naturality in both directions. Needs dim >= max(Q, P + Q - 1). When
/// cross_check is set, also compares against a materialized Cls at bidegree
/// (min(P, 2), min(Q, 1)).
CheckResult theta_check(const RelativeSimplicialCategory& r, int P, int Q, bool cross_check = true);

/// Families {g_n : C[Delta^n] -> B[Delta^n]}_{n <= N} natural for all
/// monotone maps between [a], [b] with a, b <= N. g_n is the HC simplex of
/// N_hc(B[Delta^n]) it defines.
struct Elimination {
  std::vector<HcKey> partial;  // g_0 .. g_{degree-1}
  int degree = 0;
  std::string witness;
};
struct UniquenessResult {
  int max_degree = 0;
  std::vector<std::vector<HcKey>> families;
  std::vector<Elimination> eliminated;
};
UniquenessResult uniqueness_search(int N);

/// The HC simplex of N_hc(B[Delta^n]) given by the comparison functor f_n.
HcKey comparison_key(int n, int dim);

/// Human-readable slot values of a simplex of N_hc(B[Delta^n]).
std::string describe_bfrak_key(int n, const HcKey& key);

/// Symbolic check of f_n for n <= n_max: values are cells, faces,
/// degeneracies, composition and identities are preserved, and f is natural
/// for every monotone map between [m], [n] <= n_max. B[Delta^n] is never built.
CheckResult comparison_functor_check(int n_max);

}  // namespace nervekit
