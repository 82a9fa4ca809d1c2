#pragma once

// Elementary conjugations and similarity certificates.
//
// A certificate records g, g^{-1} and B = g A g^{-1}. The conjugation ring is
// the coefficient domain T of the matrices; the entry ring may be a subring of
// it (Z inside Q for rational conjugations with integral result, Z[alpha]
// inside Q(beta)).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "simcert/matrix.hpp"
#include "simcert/scalar.hpp"

namespace simcert {

template <class T>
struct ElementaryConj {
  enum class Kind { Transvection, Permutation, DiagonalUnit };

  Kind kind = Kind::Transvection;
  // Transvection I + t E_ij.
  std::size_t i = 0;
  std::size_t j = 0;
  T t{};
  // Permutation matrix P with P e_k = e_{perm[k]}.
  std::vector<std::size_t> perm;
  // diag(units).
  std::vector<T> units;

  static ElementaryConj transvection(std::size_t i, std::size_t j, T t) {
    ElementaryConj e;
    e.kind = Kind::Transvection;
    e.i = i;
    e.j = j;
    e.t = std::move(t);
    return e;
  }
  static ElementaryConj permutation(std::vector<std::size_t> perm) {
    ElementaryConj e;
    e.kind = Kind::Permutation;
    e.perm = std::move(perm);
    return e;
  }
  static ElementaryConj diagonal(std::vector<T> units) {
    ElementaryConj e;
    e.kind = Kind::DiagonalUnit;
    e.units = std::move(units);
    return e;
  }

  Matrix<T> matrix(std::size_t n, const Ring<T>& R) const {
    Matrix<T> m = Matrix<T>::identity(n, R);
    switch (kind) {
      case Kind::Transvection: m(i, j) += t; break;
      case Kind::Permutation:
        m = Matrix<T>(n, n, R);
        for (std::size_t k = 0; k < n; ++k) m(perm[k], k) = R.one();
        break;
      case Kind::DiagonalUnit:
        for (std::size_t k = 0; k < n; ++k) m(k, k) = units[k];
        break;
    }
    return m;
  }

  ElementaryConj inverse(const Ring<T>& R) const {
    switch (kind) {
      case Kind::Transvection: return transvection(i, j, -t);
      case Kind::Permutation: {
        std::vector<std::size_t> inv(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
        return permutation(std::move(inv));
      }
      case Kind::DiagonalUnit: {
        std::vector<T> inv;
        for (const auto& u : units) inv.push_back(R.unit_inverse(u));
        return diagonal(std::move(inv));
      }
    }
    return *this;
  }
};

/// E A E^{-1} computed by row and column operations.
template <class T>
Matrix<T> apply_conj(const Matrix<T>& a, const ElementaryConj<T>& e) {
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  using Kind = typename ElementaryConj<T>::Kind;
  switch (e.kind) {
    case Kind::Transvection: {
      if (e.i == e.j || e.i >= n || e.j >= n)
        fail(ErrorCode::ParameterNotInRing, "transvection needs distinct in-range indices");
      Matrix<T> b = a;
      b.add_row_multiple(e.i, e.j, e.t);
      T neg = -e.t;
      b.add_col_multiple(e.j, e.i, neg);
      return b;
    }
    case Kind::Permutation: {
      if (e.perm.size() != n) fail(ErrorCode::ParameterNotInRing, "permutation size");
      std::vector<std::size_t> sorted = e.perm;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 0; k < n; ++k)
        if (sorted[k] != k) fail(ErrorCode::ParameterNotInRing, "not a permutation");
      Matrix<T> b(n, n, R);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) b(e.perm[r], e.perm[c]) = a(r, c);
      return b;
    }
    case Kind::DiagonalUnit: {
      if (e.units.size() != n) fail(ErrorCode::ParameterNotInRing, "diagonal size");
      for (const auto& u : e.units)
        if (!R.is_unit(u)) fail(ErrorCode::ParameterNotInRing, "diagonal entry is not a unit");
      Matrix<T> b = a;
      for (std::size_t r = 0; r < n; ++r) b.scale_row(r, e.units[r]);
      for (std::size_t c = 0; c < n; ++c) b.scale_col(c, R.unit_inverse(e.units[c]));
      return b;
    }
  }
  return a;
}

template <class T>
struct SimilarityCertificate {
  Matrix<T> g;
  Matrix<T> g_inv;
  Matrix<T> B;
  RingTag conj_ring = Ring<T>::tag;
  RingTag entry_ring = Ring<T>::tag;
  bool verified = false;
  // Present when g is exactly the product of these steps (last applied first
  // in the product, i.e. g = E_k ... E_1).
  std::optional<std::vector<ElementaryConj<T>>> steps;
};

/// Membership of a scalar in the named entry ring.
inline bool in_entry_ring(const Integer&, RingTag tag) { return tag == RingTag::Z; }
inline bool in_entry_ring(const Rational& x, RingTag tag) {
  return tag == RingTag::Q || (tag == RingTag::Z && is_integral(x));
}
inline bool in_entry_ring(const Fp&, RingTag tag) { return tag == RingTag::Fp; }
inline bool in_entry_ring(const Cubic& x, RingTag tag) {
  return tag == RingTag::Qbeta || (tag == RingTag::ZAlpha && in_z_alpha(x));
}

/// Checks g g_inv = I, g A g_inv = B, det g a unit of the conjugation ring and
/// every entry of B in the entry ring.
template <class T>
bool verify_certificate(const Matrix<T>& a, const SimilarityCertificate<T>& c) {
  const std::size_t n = a.rows();
  if (!a.is_square() || c.g.rows() != n || c.g.cols() != n || c.g_inv.rows() != n ||
      c.g_inv.cols() != n || c.B.rows() != n || c.B.cols() != n)
    return false;
  if (c.conj_ring != Ring<T>::tag) return false;
  const Ring<T>& R = a.ring();
  if (!(c.g * c.g_inv == Matrix<T>::identity(n, R))) return false;
  if (!(c.g * a * c.g_inv == c.B)) return false;
  if (!R.is_unit(det(c.g))) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!in_entry_ring(c.B(i, j), c.entry_ring)) return false;
  return true;
}

/// Certificate for the identity conjugation.
template <class T>
SimilarityCertificate<T> identity_certificate(const Matrix<T>& a) {
  SimilarityCertificate<T> c;
  c.g = Matrix<T>::identity(a.rows(), a.ring());
  c.g_inv = c.g;
  c.B = a;
  c.steps = std::vector<ElementaryConj<T>>{};
  return c;
}

}  // namespace simcert
