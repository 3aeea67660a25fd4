#include "cotv/ratlin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "cotv/error.hpp"

namespace cotv {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::RankMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::append_row(const IntVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::RankMismatch, "appended row has wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  assert(x.size() == cols_);
  IntVector y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RatVector IntMatrix::apply(const RatVector& x) const {
  assert(x.size() == cols_);
  RatVector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += Rational((*this)(i, j)) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << cotv::to_string(row(i));
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Normal forms

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s(i, i) != 0) out.push_back(s(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = f.s;
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  const std::size_t diag = std::min(rows, cols);

  auto row_op = [&](std::size_t a, std::size_t b, const Integer& k) {
    s.add_row_multiple(a, b, k);
    f.u.add_row_multiple(a, b, k);
  };
  auto col_op = [&](std::size_t a, std::size_t b, const Integer& k) {
    s.add_col_multiple(a, b, k);
    f.v.add_col_multiple(a, b, k);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in row-major order.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          Integer a = abs(s(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) return f;  // trailing block is zero
      s.swap_rows(t, pi);
      f.u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      f.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold an offending row into the pivot row and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_op(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.u.negate_row(t);
    }
  }
  return f;
}

namespace {

// Integer row echelon form using unimodular row operations on all columns of
// `b`, pivoting only in columns [0, pivot_cols). Pivots are made positive and
// entries above a pivot are reduced into [0, pivot). Returns the rank.
std::size_t integer_echelon(IntMatrix& b, std::size_t pivot_cols) {
  const std::size_t rows = b.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows; ++col) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (b(i, col) == 0) continue;
      Integer a = b(r, col);
      Integer c = b(i, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      Integer a_g = a / g;
      Integer c_g = c / g;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Integer x = b(r, j);
        Integer y = b(i, j);
        b(r, j) = s * x + t * y;
        b(i, j) = a_g * y - c_g * x;
      }
    }
    if (b(r, col) == 0) continue;
    if (b(r, col) < 0) b.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (b(i, col) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), b(i, col).get_mpz_t(), b(r, col).get_mpz_t());
      b.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix b = m;
  const std::size_t r = integer_echelon(b, b.cols());
  IntMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = b(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // [m^T | I_n]; row operations W with W m^T = echelon. Rows of W whose
  // echelon part vanishes span the kernel, and W unimodular makes it saturated.
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(j, i);
    aug(i, k + i) = 1;
  }
  const std::size_t r = integer_echelon(aug, k);
  IntMatrix ker(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ker(i - r, j) = aug(i, k + j);
  return hermite_normal_form(ker);
}

// ---------------------------------------------------------------------------
// Vectors

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive() of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Integer common_denominator(const RatVector& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

IntVector clear_denominators(const RatVector& v) {
  const Integer d = common_denominator(v);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational q = v[i] * d;
    out[i] = q.get_num();
  }
  return primitive(out);
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(const IntVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer integer_determinant(const IntMatrix& square) {
  assert(square.rows() == square.cols());
  SmithForm f = smith_normal_form(square);
  Integer d = 1;
  for (std::size_t i = 0; i < square.rows(); ++i) d *= f.s(i, i);
  return d;
}

// ---------------------------------------------------------------------------
// Rational elimination

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> to_rat_rows(const std::vector<IntVector>& rows) {
  std::vector<RatVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

}  // namespace

std::size_t rational_rank(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> a = rows;
  return rref(a, cols).size();
}

std::size_t rational_rank(const std::vector<IntVector>& rows, std::size_t cols) {
  return rational_rank(to_rat_rows(rows), cols);
}

std::vector<RatVector> rational_kernel(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> a = rows;
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RatVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t cols) {
  return rational_kernel(to_rat_rows(rows), cols);
}

// ---------------------------------------------------------------------------
// Quotient lattices

IntVector QuotientLattice::project(const IntVector& x) const { return projection.apply(x); }
RatVector QuotientLattice::project(const RatVector& x) const { return projection.apply(x); }
IntVector QuotientLattice::lift(const IntVector& q) const { return section.apply(q); }
RatVector QuotientLattice::lift(const RatVector& q) const { return section.apply(q); }

bool QuotientLattice::vanishes_on_sublattice(const IntVector& functional) const {
  for (std::size_t i = 0; i < sub_basis.rows(); ++i)
    if (dot(functional, sub_basis.row(i)) != 0) return false;
  return true;
}

bool QuotientLattice::vanishes_on_sublattice(const RatVector& functional) const {
  for (std::size_t i = 0; i < sub_basis.rows(); ++i)
    if (dot(sub_basis.row(i), functional) != 0) return false;
  return true;
}

IntVector QuotientLattice::descend(const IntVector& functional) const {
  if (!vanishes_on_sublattice(functional))
    throw Error(ErrorCode::NotDescendable, "functional " + to_string(functional) + " does not vanish on the sublattice");
  // functional = dual_basis^T c and projection * section = I, so c = functional . section.
  IntVector c(rank(), Integer(0));
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i) c[j] += functional[i] * section(i, j);
  return c;
}

RatVector QuotientLattice::descend(const RatVector& functional) const {
  if (!vanishes_on_sublattice(functional))
    throw Error(ErrorCode::NotDescendable, "functional " + to_string(functional) + " does not vanish on the sublattice");
  RatVector c(rank(), Rational(0));
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i) c[j] += functional[i] * Rational(section(i, j));
  return c;
}

QuotientLattice quotient_lattice(std::size_t ambient_rank, const IntMatrix& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient_rank)
    throw Error(ErrorCode::RankMismatch, "generators do not live in the ambient lattice");
  IntMatrix gens = generators.rows() > 0 ? generators : IntMatrix(0, ambient_rank);
  QuotientLattice q;
  q.ambient_rank = ambient_rank;
  // Functionals vanishing on the generators: a saturated basis of L^perp.
  q.projection = integer_kernel(gens);
  q.dual_basis = q.projection;
  // Saturation of the row span of the generators.
  q.sub_basis = integer_kernel(q.projection);
  const std::size_t r = q.projection.rows();
  if (r == 0) {
    q.section = IntMatrix(ambient_rank, 0);
    return q;
  }
  // projection = U^-1 [I 0] V^-1, hence section = V [I;0] U.
  SmithForm f = smith_normal_form(q.projection);
  IntMatrix top(ambient_rank, r);
  for (std::size_t i = 0; i < ambient_rank; ++i)
    for (std::size_t j = 0; j < r; ++j) top(i, j) = f.v(i, j);
  q.section = top * f.u;
  return q;
}

QuotientLattice quotient_lattice(std::size_t ambient_rank, const std::vector<IntVector>& generators) {
  return quotient_lattice(ambient_rank, IntMatrix::from_rows(ambient_rank, generators));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace cotv
