#pragma once

// Dense univariate polynomials, coefficients lowest degree first.

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "simcert/error.hpp"
#include "simcert/matrix.hpp"
#include "simcert/scalar.hpp"

namespace simcert {

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring<T> ring) : ring_(ring) {}
  Poly(Ring<T> ring, std::vector<T> coeffs) : ring_(ring), c_(std::move(coeffs)) { trim(); }

  static Poly constant(Ring<T> ring, T c) { return Poly(ring, {std::move(c)}); }
  static Poly x(Ring<T> ring) { return Poly(ring, {ring.zero(), ring.one()}); }
  static Poly monomial(Ring<T> ring, T c, std::size_t deg) {
    std::vector<T> v(deg + 1, ring.zero());
    v[deg] = std::move(c);
    return Poly(ring, std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const Ring<T>& ring() const noexcept { return ring_; }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  const T& leading() const {
    if (c_.empty()) fail(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == ring_.one(); }

  T eval(const T& x) const {
    T acc = ring_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> v = a.c_;
    for (auto& x : v) x = s * x;
    return Poly(a.ring_, std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && simcert::is_zero(c_.back())) c_.pop_back();
  }

  Ring<T> ring_{};
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    if (is_zero(p.coeffs()[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << p.coeffs()[i] << ')';
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
  }
  return os;
}

/// Polynomials over a ring form a ring; over a field, a Euclidean domain.
template <class T>
struct Ring<Poly<T>> {
  static constexpr bool is_field = false;

  Ring() = default;
  explicit Ring(Ring<T> b) : base(b) {}

  Ring<T> base{};

  Poly<T> zero() const { return Poly<T>(base); }
  Poly<T> one() const { return Poly<T>::constant(base, base.one()); }
  Poly<T> from_int(long v) const { return Poly<T>::constant(base, base.from_int(v)); }
  bool is_unit(const Poly<T>& p) const { return p.degree() == 0 && base.is_unit(p.leading()); }
  Poly<T> unit_inverse(const Poly<T>& p) const {
    if (!is_unit(p)) fail(ErrorCode::NotInvertibleInRing, "polynomial is not a unit");
    return Poly<T>::constant(base, base.unit_inverse(p.leading()));
  }
  bool operator==(const Ring&) const = default;
};

template <FieldScalar T>
struct PolyDivision {
  Poly<T> quotient;
  Poly<T> remainder;
};

template <FieldScalar T>
PolyDivision<T> divmod(const Poly<T>& f, const Poly<T>& g) {
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Ring<T>& R = f.ring();
  std::vector<T> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly<T>(R), f};
  std::vector<T> q(f.degree() - dg + 1, R.zero());
  const T lead_inv = R.unit_inverse(g.leading());
  for (int k = f.degree() - dg; k >= 0; --k) {
    T c = rem[k + dg] * lead_inv;
    if (is_zero(c)) continue;
    q[k] = c;
    for (int j = 0; j <= dg; ++j) rem[k + j] -= c * g.coeffs()[j];
  }
  rem.resize(dg);
  return {Poly<T>(R, std::move(q)), Poly<T>(R, std::move(rem))};
}

template <FieldScalar T>
Poly<T> make_monic(const Poly<T>& p) {
  if (p.is_zero()) return p;
  return p.ring().unit_inverse(p.leading()) * p;
}

/// Monic gcd (zero only when both inputs are zero).
template <FieldScalar T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <FieldScalar T>
Poly<T> lcm(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<T>(a.ring());
  return make_monic(divmod(a * b, gcd(a, b)).quotient);
}

template <FieldScalar T>
bool divides(const Poly<T>& d, const Poly<T>& f) {
  return divmod(f, d).remainder.is_zero();
}

/// f(A) by Horner's rule.
template <class T>
Matrix<T> eval_at_matrix(const Poly<T>& f, const Matrix<T>& a) {
  const std::size_t n = a.rows();
  Matrix<T> acc(n, n, a.ring());
  const auto id = Matrix<T>::identity(n, a.ring());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * a + f.coeffs()[i] * id;
  return acc;
}

/// Companion matrix with ones on the subdiagonal and -f_0, ..., -f_{d-1} in
/// the last column.
template <class T>
Matrix<T> companion_matrix(const Poly<T>& f) {
  if (!f.is_monic()) fail(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const Ring<T>& R = f.ring();
  Matrix<T> c(d, d, R);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = R.one();
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -f.coeffs()[i];
  return c;
}

}  // namespace simcert
