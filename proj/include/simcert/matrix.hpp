#pragma once

// Dense exact matrices over any Ring<T> and the field/integral-domain
// elimination routines built on them.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "simcert/error.hpp"
#include "simcert/scalar.hpp"

namespace simcert {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Ring<T> ring = {})
      : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols, ring.zero()) {}

  static Matrix identity(std::size_t n, Ring<T> ring = {}) {
    Matrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, Ring<T> ring = {}) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c, ring);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) fail(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                          Ring<T> ring = {}) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c, ring);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) fail(ErrorCode::DimensionMismatch, "ragged rows");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = ring.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix column_vector(const Vec<T>& v, Ring<T> ring = {}) {
    Matrix m(v.size(), 1, ring);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const Ring<T>& ring() const noexcept { return ring_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const {
    return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<T> column(std::size_t j) const {
    Vec<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  void set_column(std::size_t j, const Vec<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Vec<T> diagonal() const {
    Vec<T> out;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back((*this)(i, i));
    return out;
  }

  T trace() const {
    T t = ring_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
    Matrix out(r, c, ring_);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }

  bool is_zero_matrix() const {
    for (const T& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Vec<T> apply(const Vec<T>& v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector size");
    Vec<T> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_, a.ring_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Elementary row/column operations used by the elimination routines.
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row[dst] += t * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& t) {
    if (is_zero(t)) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      T v = t * (*this)(src, c);
      (*this)(dst, c) += v;
    }
  }
  /// col[dst] += t * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& t) {
    if (is_zero(t)) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      T v = t * (*this)(r, src);
      (*this)(r, dst) += v;
    }
  }
  void scale_row(std::size_t i, const T& t) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = t * (*this)(i, c);
  }
  void scale_col(std::size_t j, const T& t) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = t * (*this)(r, j);
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Ring<T> ring_{};
  std::vector<T> data_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

/// Elementwise conversion between coefficient domains.
template <class U, class T, class F>
Matrix<U> map_matrix(const Matrix<T>& m, const Ring<U>& ring, F&& f) {
  Matrix<U> out(m.rows(), m.cols(), ring);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

inline Matrix<Rational> to_rational(const Matrix<Integer>& m) {
  return map_matrix(m, Ring<Rational>{}, [](const Integer& x) { return Rational(x); });
}

inline Matrix<Fp> reduce_mod(const Matrix<Integer>& m, const Ring<Fp>& field) {
  return map_matrix(m, field, [&](const Integer& x) {
    Integer r = x % field.p;
    return Fp(r.get_si(), field.p);
  });
}

/// Returns nullopt when some entry is not an integer.
inline std::optional<Matrix<Integer>> to_integer(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols(), a.ring());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

template <class T>
bool is_scalar(const Matrix<T>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "is_scalar needs a square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && !is_zero(a(i, j))) return false;
      if (i == j && !(a(i, i) == a(0, 0))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Determinants

namespace detail {

/// Fraction-free Bareiss elimination; every division is exact in an integral
/// domain.
template <class T>
T det_bareiss(Matrix<T> m) {
  const std::size_t n = m.rows();
  const Ring<T>& R = m.ring();
  if (n == 0) return R.one();
  T prev = R.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return R.zero();
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;
      }
      m(i, k) = R.zero();
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  if (negate) d = -d;
  return d;
}

template <class T>
T det_gauss(Matrix<T> m) {
  const std::size_t n = m.rows();
  const Ring<T>& R = m.ring();
  T d = R.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return R.zero();
    if (p != k) {
      m.swap_rows(k, p);
      d = -d;
    }
    d *= m(k, k);
    const T inv = R.unit_inverse(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      T f = -(m(i, k) * inv);
      m.add_row_multiple(i, k, f);
    }
  }
  return d;
}

}  // namespace detail

/// Exact determinant. Integer and Q(beta) matrices use Bareiss so that every
/// intermediate is a minor of the input; Q and F_p use plain elimination.
template <class T>
T det(const Matrix<T>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "det of non-square matrix");
  if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Cubic>)
    return detail::det_bareiss(a);
  else
    return detail::det_gauss(a);
}

// ---------------------------------------------------------------------------
// Field elimination

template <FieldScalar T>
struct EchelonForm {
  Matrix<T> reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column per nonzero row
};

template <FieldScalar T>
EchelonForm<T> rref(Matrix<T> m) {
  const Ring<T> R = m.ring();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    m.scale_row(row, R.unit_inverse(m(row, col)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = -m(i, col);
      m.add_row_multiple(i, row, f);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <FieldScalar T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <FieldScalar T>
std::vector<Vec<T>> nullspace(const Matrix<T>& m) {
  const auto ef = rref(m);
  const Ring<T> R = m.ring();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(m.cols(), R.zero());
    v[free] = R.one();
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b (free variables set to zero), or nullopt.
template <FieldScalar T>
std::optional<Vec<T>> solve(const Matrix<T>& m, const Vec<T>& b) {
  if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "solve rhs size");
  Matrix<T> aug(m.rows(), m.cols() + 1, m.ring());
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const auto ef = rref(aug);
  Vec<T> x(m.cols(), m.ring().zero());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
    if (ef.pivots[r] == m.cols()) return std::nullopt;
    x[ef.pivots[r]] = ef.reduced(r, m.cols());
  }
  return x;
}

namespace detail {

template <FieldScalar T>
Matrix<T> inverse_gauss_jordan(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n, a.ring());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix<T>::identity(n, a.ring()));
  const auto ef = rref(aug);
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1)
    fail(ErrorCode::NotInvertibleInRing, "singular matrix");
  return ef.reduced.block(0, n, n, n);
}

Matrix<Integer> minor_matrix(const Matrix<Integer>& a, std::size_t skip_row, std::size_t skip_col);

}  // namespace detail

/// Exact inverse over a field, or over Z when det = +-1 (adjugate route).
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  if constexpr (Ring<T>::is_field) {
    return detail::inverse_gauss_jordan(a);
  } else {
    static_assert(std::is_same_v<T, Integer>);
    const Integer d = det(a);
    if (!a.ring().is_unit(d)) fail(ErrorCode::NotInvertibleInRing, "determinant is not +-1");
    const std::size_t n = a.rows();
    Matrix<Integer> out(n, n);
    if (n == 1) {
      out(0, 0) = d;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer cof = det(detail::minor_matrix(a, j, i));
        if ((i + j) % 2) cof = -cof;
        out(i, j) = cof * d;  // d = +-1 so d^{-1} = d
      }
    return out;
  }
}

/// Extends the given independent columns to a basis of T^n with standard
/// vectors, keeping the given columns first.
template <FieldScalar T>
Matrix<T> complete_basis(const std::vector<Vec<T>>& columns, std::size_t n, Ring<T> ring) {
  std::vector<Vec<T>> basis = columns;
  auto as_matrix = [&](const std::vector<Vec<T>>& cols) {
    Matrix<T> m(n, cols.size(), ring);
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  };
  if (rank(as_matrix(basis)) != basis.size())
    fail(ErrorCode::InvalidArgument, "basis completion needs independent columns");
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    Vec<T> e(n, ring.zero());
    e[i] = ring.one();
    basis.push_back(e);
    if (rank(as_matrix(basis)) != basis.size()) basis.pop_back();
  }
  return as_matrix(basis);
}

}  // namespace simcert
