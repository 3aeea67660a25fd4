#pragma once

// Exact integer and rational linear algebra over GMP.
//
// Everything in the library is built on top of these routines: Smith and
// Hermite normal forms, saturated integer kernels, primitive vectors and the
// quotient lattices N/N_sigma used throughout the divisorial-fan code.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cotv {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;
  void append_row(const IntVector& r);

  IntMatrix transpose() const;
  IntVector apply(const IntVector& x) const;  // this * x
  RatVector apply(const RatVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Integer& k);
  void add_col_multiple(std::size_t a, std::size_t b, const Integer& k);
  void negate_row(std::size_t a);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// S = U * m * V with U, V unimodular and S diagonal, s_1 | s_2 | ... , s_i >= 0.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> invariant_factors() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form of the row lattice of m; zero rows dropped.
// Unique for a given lattice, so it is used to canonicalize bases.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Rows form a saturated, Hermite-reduced basis of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Throws Error(ErrorCode::ZeroVector) on the zero vector.
IntVector primitive(const IntVector& v);

// Smallest positive integer d with d*v integral.
Integer common_denominator(const RatVector& v);
IntVector clear_denominators(const RatVector& v);  // primitive direction of v
RatVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
Rational dot(const IntVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Integer integer_determinant(const IntMatrix& square);

// Rational Gaussian elimination helpers for geometric (non-lattice) work.
std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t cols);
std::size_t rational_rank(const std::vector<IntVector>& rows, std::size_t cols);
// Basis of {x in Q^cols : rows . x = 0}, in reduced-echelon free-variable form.
std::vector<RatVector> rational_kernel(const std::vector<RatVector>& rows, std::size_t cols);
std::vector<RatVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t cols);

// A saturated sublattice L of Z^n together with the quotient Z^n / L.
//
// `projection` has rank(Z^n/L) rows; its kernel is exactly L and it is
// surjective onto Z^(n - rank L). The rows of `dual_basis` (equal to the
// projection rows) are the coordinate functionals of the quotient, i.e. a
// basis of L^perp in the dual lattice. `section` is an integer right inverse
// of the projection.
struct QuotientLattice {
  std::size_t ambient_rank = 0;
  IntMatrix sub_basis;
  IntMatrix projection;
  IntMatrix dual_basis;
  IntMatrix section;

  std::size_t rank() const { return projection.rows(); }
  IntVector project(const IntVector& x) const;
  RatVector project(const RatVector& x) const;
  IntVector lift(const IntVector& q) const;
  RatVector lift(const RatVector& q) const;
  bool vanishes_on_sublattice(const IntVector& functional) const;
  bool vanishes_on_sublattice(const RatVector& functional) const;
  // Coordinates, in the dual basis, of a functional that vanishes on L.
  // Throws Error(ErrorCode::NotDescendable) otherwise.
  IntVector descend(const IntVector& functional) const;
  RatVector descend(const RatVector& functional) const;
};

QuotientLattice quotient_lattice(std::size_t ambient_rank, const IntMatrix& generators);
QuotientLattice quotient_lattice(std::size_t ambient_rank, const std::vector<IntVector>& generators);

std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace cotv
