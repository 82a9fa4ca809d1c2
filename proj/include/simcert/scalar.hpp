#pragma once

// Exact coefficient domains: integers, rationals, prime fields and the cubic
// field Q(beta) with beta^3 = 2. Every domain is paired with a Ring<T>
// descriptor that generic algorithms use to create constants and to answer
// unit questions.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "simcert/error.hpp"

namespace simcert {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingTag { Z, Q, Fp, Qbeta, ZAlpha };

const char* ring_tag_name(RingTag tag) noexcept;
RingTag parse_ring_tag(std::string_view name);

// ---------------------------------------------------------------------------
// Integers and rationals

struct GcdResult {
  Integer g;
  Integer x;
  Integer y;
};

/// Extended Euclid: g = a*x + b*y with g = gcd(a, b) >= 0.
GcdResult ext_gcd(const Integer& a, const Integer& b);

/// Smallest non-negative solution of the congruences r_i mod m_i.
/// Throws NonCoprimeModuli when two moduli share a factor.
Integer crt(const std::vector<std::pair<Integer, Integer>>& residues);

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
std::string format_integer(const Integer& x);
std::string format_rational(const Rational& x);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Distinct prime factors in increasing order (trial division, then Pollard rho).
std::vector<Integer> prime_factors(Integer n);

// ---------------------------------------------------------------------------
// Prime fields

/// Element of Z/pZ. Residues live in [0, p); moduli up to 10^12 are supported
/// (products are formed in 128-bit arithmetic).
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::int64_t modulus);

  std::int64_t residue() const noexcept { return r_; }
  std::int64_t modulus() const noexcept { return p_; }

  Fp inverse() const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  Fp operator-() const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b) = default;

 private:
  std::int64_t r_ = 0;
  std::int64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Trial division primality test; moduli above 10^12 are rejected.
bool is_prime_modulus(std::int64_t p);

// ---------------------------------------------------------------------------
// Q(beta), beta^3 = 2, in beta-coordinates a + b*beta + c*beta^2.
//
// The order Z[alpha] with alpha = cbrt(16) = 2*beta is Z + 2beta Z + 4beta^2 Z.

class Cubic {
 public:
  Cubic() = default;
  Cubic(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed
  Cubic(long a) : a_(a) {}                 // NOLINT
  Cubic(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  /// (a, b, c) in the basis {1, alpha, alpha^2}.
  static Cubic from_alpha_coords(const Rational& a, const Rational& b,
                                 const Rational& c);
  static Cubic beta() { return Cubic(0, 1, 0); }
  static Cubic alpha() { return Cubic(0, 2, 0); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0; }

  /// Solves the regular-representation system x * y = 1.
  Cubic inverse() const;

  friend Cubic operator+(const Cubic& x, const Cubic& y);
  friend Cubic operator-(const Cubic& x, const Cubic& y);
  friend Cubic operator*(const Cubic& x, const Cubic& y);
  friend Cubic operator/(const Cubic& x, const Cubic& y);
  Cubic operator-() const { return Cubic(-a_, -b_, -c_); }
  Cubic& operator+=(const Cubic& o) { return *this = *this + o; }
  Cubic& operator-=(const Cubic& o) { return *this = *this - o; }
  Cubic& operator*=(const Cubic& o) { return *this = *this * o; }
  friend bool operator==(const Cubic& x, const Cubic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  Rational a_, b_, c_;
};

std::ostream& operator<<(std::ostream& os, const Cubic& x);

/// Membership in Z[alpha]: a in Z, b in 2Z, c in 4Z.
bool in_z_alpha(const Cubic& x);

// ---------------------------------------------------------------------------
// Zero tests shared by generic code.

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.residue() == 0; }
inline bool is_zero(const Cubic& x) { return x.is_zero(); }

// ---------------------------------------------------------------------------
// Ring descriptors

template <class T>
struct Ring;

template <>
struct Ring<Integer> {
  static constexpr bool is_field = false;
  static constexpr RingTag tag = RingTag::Z;

  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer from_int(long v) const { return v; }
  bool is_unit(const Integer& x) const { return x == 1 || x == -1; }
  Integer unit_inverse(const Integer& x) const {
    if (!is_unit(x)) fail(ErrorCode::NotInvertibleInRing, "integer is not +-1");
    return x;
  }
  bool operator==(const Ring&) const = default;
};

template <>
struct Ring<Rational> {
  static constexpr bool is_field = true;
  static constexpr RingTag tag = RingTag::Q;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long v) const { return v; }
  bool is_unit(const Rational& x) const { return sgn(x) != 0; }
  Rational unit_inverse(const Rational& x) const {
    if (sgn(x) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(1) / x;
  }
  bool operator==(const Ring&) const = default;
};

template <>
struct Ring<Fp> {
  static constexpr bool is_field = true;
  static constexpr RingTag tag = RingTag::Fp;

  Ring() = default;
  explicit Ring(std::int64_t modulus);

  std::int64_t p = 0;

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(long v) const { return Fp(v, p); }
  bool is_unit(const Fp& x) const { return x.residue() != 0; }
  Fp unit_inverse(const Fp& x) const { return x.inverse(); }
  bool operator==(const Ring&) const = default;
};

template <>
struct Ring<Cubic> {
  static constexpr bool is_field = true;
  static constexpr RingTag tag = RingTag::Qbeta;

  Cubic zero() const { return Cubic(); }
  Cubic one() const { return Cubic(1); }
  Cubic from_int(long v) const { return Cubic(v); }
  bool is_unit(const Cubic& x) const { return !x.is_zero(); }
  Cubic unit_inverse(const Cubic& x) const { return x.inverse(); }
  bool operator==(const Ring&) const = default;
};

template <class T>
concept FieldScalar = Ring<T>::is_field;

// ---------------------------------------------------------------------------
// Text encodings used by the JSON layer. Cubic elements use "a:b:c" when
// written as a single token (command-line targets); JSON uses arrays.

std::string to_text(const Integer& x);
std::string to_text(const Rational& x);
std::string to_text(const Fp& x);
std::string to_text(const Cubic& x);

Integer scalar_from_text(const Ring<Integer>& ring, std::string_view text);
Rational scalar_from_text(const Ring<Rational>& ring, std::string_view text);
Fp scalar_from_text(const Ring<Fp>& ring, std::string_view text);
Cubic scalar_from_text(const Ring<Cubic>& ring, std::string_view text);

}  // namespace simcert
