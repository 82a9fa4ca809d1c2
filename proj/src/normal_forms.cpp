#include "simcert/normal_forms.hpp"

namespace simcert {

namespace detail {

Matrix<Integer> minor_matrix(const Matrix<Integer>& a, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = a.rows();
  Matrix<Integer> out(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(r, c++) = a(i, j);
    }
    ++r;
  }
  return out;
}

}  // namespace detail

namespace {

// Replace rows (r, s) by [[x, y], [-b/g, a/g]] applied to them; determinant 1.
void combine_rows(Matrix<Integer>& m, std::size_t r, std::size_t s, const Integer& x,
                  const Integer& y, const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer top = x * m(r, c) + y * m(s, c);
    Integer bottom = u * m(r, c) + v * m(s, c);
    m(r, c) = std::move(top);
    m(s, c) = std::move(bottom);
  }
}

}  // namespace

HermiteForm hermite_normal_form(const Matrix<Integer>& a) {
  Matrix<Integer> H = a;
  Matrix<Integer> U = Matrix<Integer>::identity(a.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    for (std::size_t i = row + 1; i < H.rows(); ++i) {
      if (sgn(H(i, col)) == 0) continue;
      const Integer p = H(row, col);
      const Integer q = H(i, col);
      const GcdResult e = ext_gcd(p, q);
      Integer u = -q / e.g;
      Integer v = p / e.g;
      combine_rows(H, row, i, e.x, e.y, u, v);
      combine_rows(U, row, i, e.x, e.y, u, v);
    }
    if (sgn(H(row, col)) == 0) continue;
    if (sgn(H(row, col)) < 0) {
      H.scale_row(row, Integer(-1));
      U.scale_row(row, Integer(-1));
    }
    const Integer pivot = H(row, col);
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = -euclid::quotient(H(r, col), pivot);
      H.add_row_multiple(r, row, q);
      U.add_row_multiple(r, row, q);
    }
    ++row;
  }
  return {std::move(H), std::move(U)};
}

Integer content(const Vec<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Matrix<Integer> complete_primitive_vector(const Vec<Integer>& v) {
  if (v.empty()) fail(ErrorCode::InvalidArgument, "empty vector");
  if (content(v) != 1) fail(ErrorCode::NotPrimitive, "vector entries have gcd != 1");
  // U v = e_1, so U^{-1} has first column v.
  const HermiteForm hf = hermite_normal_form(Matrix<Integer>::column_vector(v));
  return inverse(hf.U);
}

}  // namespace simcert
