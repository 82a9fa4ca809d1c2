#pragma once

// Hermite and Smith normal forms over Euclidean domains (Z and K[x]) with
// unimodular transforms, and unimodular completion of primitive vectors.

#include <cstddef>
#include <utility>

#include "simcert/matrix.hpp"
#include "simcert/poly.hpp"
#include "simcert/scalar.hpp"

namespace simcert {

struct HermiteForm {
  Matrix<Integer> H;
  Matrix<Integer> U;  // U * A = H, det U = +-1
};

/// Row-style Hermite normal form: H is in row echelon form, pivots are
/// positive and entries above each pivot lie in [0, pivot).
HermiteForm hermite_normal_form(const Matrix<Integer>& a);

/// P in GL_n(Z) with first column v. Throws NotPrimitive if gcd(v) != 1.
Matrix<Integer> complete_primitive_vector(const Vec<Integer>& v);

/// gcd of all entries (non-negative).
Integer content(const Vec<Integer>& v);

// ---------------------------------------------------------------------------
// Euclidean structure

namespace euclid {

inline Integer norm(const Integer& x) { return abs(x); }
inline Integer unit_normalizer(const Integer& x) { return sgn(x) < 0 ? Integer(-1) : Integer(1); }
inline Integer quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(const Integer& d, const Integer& x) {
  if (sgn(d) == 0) return sgn(x) == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

template <FieldScalar T>
long norm(const Poly<T>& p) {
  return p.degree();
}
template <FieldScalar T>
Poly<T> unit_normalizer(const Poly<T>& p) {
  return Poly<T>::constant(p.ring(), p.ring().unit_inverse(p.leading()));
}
template <FieldScalar T>
Poly<T> quotient(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).quotient;
}
template <FieldScalar T>
bool divides(const Poly<T>& d, const Poly<T>& x) {
  if (d.is_zero()) return x.is_zero();
  return divmod(x, d).remainder.is_zero();
}

}  // namespace euclid

template <class T>
struct SmithForm {
  Matrix<T> D;
  Matrix<T> U;
  Matrix<T> V;  // U * A * V = D
};

/// Smith normal form with transforms. Pivot choice: smallest Euclidean norm
/// in the active block, ties broken by lowest row then lowest column.
/// Diagonal entries are normalized (non-negative over Z, monic over K[x]).
template <class T>
SmithForm<T> smith_normal_form(const Matrix<T>& a) {
  const Ring<T> R = a.ring();
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  Matrix<T> D = a;
  Matrix<T> U = Matrix<T>::identity(m, R);
  Matrix<T> V = Matrix<T>::identity(k, R);

  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    bool active = true;
    while (true) {
      // Locate the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      decltype(euclid::norm(D(t, t))) best{};
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < k; ++j) {
          if (is_zero(D(i, j))) continue;
          auto nrm = euclid::norm(D(i, j));
          if (!found || nrm < best) {
            found = true;
            best = nrm;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        active = false;
        break;
      }
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool leftover = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(D(i, t))) continue;
        T q = -euclid::quotient(D(i, t), D(t, t));
        D.add_row_multiple(i, t, q);
        U.add_row_multiple(i, t, q);
        if (!is_zero(D(i, t))) leftover = true;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (is_zero(D(t, j))) continue;
        T q = -euclid::quotient(D(t, j), D(t, t));
        D.add_col_multiple(j, t, q);
        V.add_col_multiple(j, t, q);
        if (!is_zero(D(t, j))) leftover = true;
      }
      if (leftover) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (!euclid::divides(D(t, t), D(i, j))) {
            D.add_row_multiple(t, i, R.one());
            U.add_row_multiple(t, i, R.one());
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (!active) break;
    const T u = euclid::unit_normalizer(D(t, t));
    D.scale_row(t, u);
    U.scale_row(t, u);
  }
  return {std::move(D), std::move(U), std::move(V)};
}

}  // namespace simcert
