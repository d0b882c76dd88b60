#pragma once

// Exact rational dense linear algebra. Every basis this header hands out is
// derived from a reduced row echelon form, so equal inputs always produce
// equal outputs.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiltq {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& columns) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  RatVector column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
    if (r0 + r > rows_ || c0 + c > cols_) throw std::out_of_range("block out of range");
    RatMatrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  RatMatrix select_rows(const std::vector<std::size_t>& idx) const {
    RatMatrix s(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) == 0) continue;
          t = aik * b(k, j);
          c(i, j) += t;
        }
      }
    return c;
  }

  friend RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RatVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) r[i] += a(i, k) * v[k];
    return r;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
  }

  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
    return a;
  }

  friend RatMatrix operator*(const Rational& s, RatMatrix a) {
    for (auto& x : a.entries_) x *= s;
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (i) os << "; ";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j).get_str();
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline RatMatrix hstack(const std::vector<RatMatrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  RatMatrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

inline RatMatrix vstack(const std::vector<RatMatrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  RatMatrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

inline RatMatrix block_diagonal(const std::vector<RatMatrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  RatMatrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row k, increasing
};

// Gauss-Jordan elimination; the first nonzero entry in a column is the pivot.
inline EchelonForm rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    if (m(row, col) != 1) {
      const Rational inv = 1 / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

struct RankKernel {
  std::size_t rank = 0;
  std::vector<RatVector> kernel_basis;
};

// Kernel spanned by one vector per free column: 1 at the free column, zero at
// every other free column.
inline RankKernel rank_kernel(const RatMatrix& m) {
  const EchelonForm e = rref(m);
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

// Columns form a kernel basis; `free_rows` are the coordinates at which the
// basis matrix is the identity, which gives a left inverse by row selection.
struct KernelMatrix {
  RatMatrix basis;
  std::vector<std::size_t> free_rows;

  RatVector coordinates(const RatVector& v) const {
    RatVector c(free_rows.size());
    for (std::size_t k = 0; k < free_rows.size(); ++k) c[k] = v[free_rows[k]];
    return c;
  }
  RatMatrix left_inverse_apply(const RatMatrix& m) const { return m.select_rows(free_rows); }
};

inline KernelMatrix kernel_matrix(const RatMatrix& m) {
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  KernelMatrix out;
  for (std::size_t f = 0; f < m.cols(); ++f)
    if (!is_pivot[f]) out.free_rows.push_back(f);
  out.basis = RatMatrix(m.cols(), out.free_rows.size());
  for (std::size_t k = 0; k < out.free_rows.size(); ++k) {
    const std::size_t f = out.free_rows[k];
    out.basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return out;
}

inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length does not match rows");
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const EchelonForm e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

// Solves m * X = b for a matrix right-hand side; absent when any column is inconsistent.
inline std::optional<RatMatrix> solve_matrix(const RatMatrix& m, const RatMatrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_matrix: row mismatch");
  RatMatrix aug = hstack({m, b}, m.rows());
  const EchelonForm e = rref(std::move(aug));
  RatMatrix x(m.cols(), b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, m.cols() + j);
  }
  return x;
}

inline std::vector<RatVector> image_basis(const RatMatrix& m) {
  const EchelonForm e = rref(m.transpose());
  std::vector<RatVector> basis;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    RatVector v(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) v[j] = e.reduced(k, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Quotient of k^ambient by the column span of `generators`. The projection
// keeps the non-pivot coordinates after reducing by the echelon image basis,
// so `section` (inclusion of those coordinates) satisfies projection*section = 1.
struct Quotient {
  RatMatrix projection;
  RatMatrix section;
  std::vector<std::size_t> kept;
};

inline Quotient quotient_by(const RatMatrix& generators) {
  const std::size_t ambient = generators.rows();
  const EchelonForm e = rref(generators.transpose());
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Quotient q;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) q.kept.push_back(c);
  q.projection = RatMatrix(q.kept.size(), ambient);
  q.section = RatMatrix(ambient, q.kept.size());
  for (std::size_t k = 0; k < q.kept.size(); ++k) {
    const std::size_t c = q.kept[k];
    q.section(c, k) = 1;
    q.projection(k, c) = 1;
  }
  // w - sum_k w[p_k] b_k, restricted to kept coordinates
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t p = e.pivots[r];
    for (std::size_t k = 0; k < q.kept.size(); ++k) q.projection(k, p) = -e.reduced(r, q.kept[k]);
  }
  return q;
}

inline RatVector flatten(const RatMatrix& m) { return m.entries(); }

inline bool is_invertible(const RatMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace tiltq
