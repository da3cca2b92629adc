#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace nervekit {

enum class Coeff { Z, F2 };

const char* coeff_name(Coeff c);

/// Sparse integer matrix, stored by rows.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::map<std::size_t, mpz_class>> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  void add(std::size_t r, std::size_t c, const mpz_class& v);
  mpz_class at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
bool operator==(const SparseMatrix& a, const SparseMatrix& b);

/// Smith invariants: rank and the invariant factors greater than 1, in
/// divisibility order. Under F2 only the rank is meaningful.
struct SmithInvariants {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};

/// Unit pivots are eliminated sparsely first; the remainder is reduced densely.
SmithInvariants smith_invariants(const SparseMatrix& m, Coeff coeff = Coeff::Z);

/// Dense matrix over Z, or over F2 when modulus is 2.
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  static DenseMatrix from_sparse(const SparseMatrix& m);
  static DenseMatrix identity(std::size_t n);
};

/// Column reduction M V = R with V unimodular. Nonzero columns of R have
/// distinct pivot rows; the columns of V at the zero columns of R span ker M.
struct ColumnReduction {
  DenseMatrix reduced, v, vinv;
  std::vector<std::size_t> kernel;  // zero columns of R
};
ColumnReduction column_reduce(DenseMatrix m, Coeff coeff);

SmithInvariants smith_invariants(DenseMatrix m, Coeff coeff);

}  // namespace nervekit
