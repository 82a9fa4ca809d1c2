#include "simcert/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>

#include "simcert/matrix.hpp"

namespace simcert {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotInvertibleInRing: return "NotInvertibleInRing";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::ParameterNotInRing: return "ParameterNotInRing";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ScalarMatrix: return "ScalarMatrix";
    case ErrorCode::TargetTraceMismatch: return "TargetTraceMismatch";
    case ErrorCode::NoUnitOffDiagonal: return "NoUnitOffDiagonal";
    case ErrorCode::IdealNotUnit: return "IdealNotUnit";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::DecompositionSearchExhausted: return "DecompositionSearchExhausted";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::MinpolyDegreeNotTwo: return "MinpolyDegreeNotTwo";
    case ErrorCode::ConstraintUnsatisfiable: return "ConstraintUnsatisfiable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

const char* ring_tag_name(RingTag tag) noexcept {
  switch (tag) {
    case RingTag::Z: return "Z";
    case RingTag::Q: return "Q";
    case RingTag::Fp: return "Fp";
    case RingTag::Qbeta: return "Qbeta";
    case RingTag::ZAlpha: return "Zalpha";
  }
  return "?";
}

RingTag parse_ring_tag(std::string_view name) {
  if (name == "Z") return RingTag::Z;
  if (name == "Q") return RingTag::Q;
  if (name == "Fp") return RingTag::Fp;
  if (name == "Qbeta") return RingTag::Qbeta;
  if (name == "Zalpha") return RingTag::ZAlpha;
  fail(ErrorCode::Parse, "unknown ring tag '" + std::string(name) + "'");
}

GcdResult ext_gcd(const Integer& a, const Integer& b) {
  GcdResult r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer crt(const std::vector<std::pair<Integer, Integer>>& residues) {
  Integer x = 0;
  Integer m = 1;
  for (const auto& [r, mi] : residues) {
    if (mi < 1) fail(ErrorCode::InvalidArgument, "CRT modulus must be >= 1");
    const GcdResult e = ext_gcd(m, mi);
    if (e.g != 1) fail(ErrorCode::NonCoprimeModuli, "CRT moduli are not pairwise coprime");
    // x + m*k = r (mod mi)  =>  k = (r - x) * m^{-1} (mod mi)
    Integer k = ((r - x) * e.x) % mi;
    if (k < 0) k += mi;
    x += m * k;
    m *= mi;
    x %= m;
    if (x < 0) x += m;
  }
  return x;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) fail(ErrorCode::Parse, "malformed integer '" + std::string(text) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!all_digits(den_text)) fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_integer(const Integer& x) { return x.get_str(10); }

std::string format_rational(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Pollard's rho with Brent's cycle detection; n odd composite.
Integer rho_divisor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    auto f = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    std::size_t r = 1;
    while (d == 1) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      for (std::size_t k = 0; k < r && d == 1; k += 128) {
        ys = y;
        for (std::size_t i = 0; i < std::min<std::size_t>(128, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  const Integer d = rho_divisor(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  if (n < 0) n = -n;
  if (n == 0) return out;
  for (unsigned long d = 2; d < 10000 && Integer(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    out.push_back(d);
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) n /= d;
  }
  split(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  if (p == 0) return 0;
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t common_modulus(const Fp& a, const Fp& b) {
  if (a.modulus() == b.modulus() || b.modulus() == 0) return a.modulus();
  if (a.modulus() == 0) return b.modulus();
  fail(ErrorCode::InvalidArgument, "mixed prime-field moduli");
}

}  // namespace

Fp::Fp(std::int64_t value, std::int64_t modulus) : r_(reduce(value, modulus)), p_(modulus) {
  if (modulus < 0) fail(ErrorCode::InvalidArgument, "negative modulus");
}

Fp operator+(const Fp& a, const Fp& b) {
  const std::int64_t p = common_modulus(a, b);
  return Fp(reduce(a.r_ + b.r_, p), p);
}

Fp operator-(const Fp& a, const Fp& b) {
  const std::int64_t p = common_modulus(a, b);
  return Fp(reduce(a.r_ - b.r_, p), p);
}

Fp operator*(const Fp& a, const Fp& b) {
  const std::int64_t p = common_modulus(a, b);
  if (p == 0) return Fp();
  const auto prod = static_cast<__int128>(a.r_) * b.r_ % p;
  return Fp(static_cast<std::int64_t>(prod), p);
}

Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

Fp Fp::operator-() const { return Fp(reduce(-r_, p_), p_); }

Fp Fp::inverse() const {
  if (r_ == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  const GcdResult e = ext_gcd(Integer(static_cast<long>(r_)), Integer(static_cast<long>(p_)));
  Integer x = e.x % p_;
  return Fp(x.get_si(), p_);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.residue(); }

bool is_prime_modulus(std::int64_t p) {
  constexpr std::int64_t kTrialLimit = 1000000;
  if (p < 2) return false;
  if (p > kTrialLimit * kTrialLimit)
    fail(ErrorCode::NotPrime, "modulus exceeds the trial-division limit 10^12");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring<Fp>::Ring(std::int64_t modulus) : p(modulus) {
  if (!is_prime_modulus(modulus))
    fail(ErrorCode::NotPrime, std::to_string(modulus) + " is not prime");
}

// ---------------------------------------------------------------------------

Cubic Cubic::from_alpha_coords(const Rational& a, const Rational& b, const Rational& c) {
  return Cubic(a, 2 * b, 4 * c);
}

Cubic operator+(const Cubic& x, const Cubic& y) {
  return Cubic(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_);
}

Cubic operator-(const Cubic& x, const Cubic& y) {
  return Cubic(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_);
}

Cubic operator*(const Cubic& x, const Cubic& y) {
  // (a + b B + c B^2)(d + e B + f B^2) with B^3 = 2
  const Rational& a = x.a_;
  const Rational& b = x.b_;
  const Rational& c = x.c_;
  const Rational& d = y.a_;
  const Rational& e = y.b_;
  const Rational& f = y.c_;
  Rational r0 = a * d + 2 * (b * f + c * e);
  Rational r1 = a * e + b * d + 2 * (c * f);
  Rational r2 = a * f + c * d + b * e;
  return Cubic(std::move(r0), std::move(r1), std::move(r2));
}

Cubic operator/(const Cubic& x, const Cubic& y) { return x * y.inverse(); }

Cubic Cubic::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(beta)");
  // Columns are x*1, x*beta, x*beta^2 in beta-coordinates.
  Matrix<Rational> m(3, 3);
  const Cubic basis[3] = {Cubic(1), Cubic(0, 1, 0), Cubic(0, 0, 1)};
  for (std::size_t j = 0; j < 3; ++j) {
    const Cubic col = *this * basis[j];
    m(0, j) = col.a_;
    m(1, j) = col.b_;
    m(2, j) = col.c_;
  }
  const auto y = solve(m, Vec<Rational>{1, 0, 0});
  if (!y) fail(ErrorCode::Internal, "regular representation is singular");
  return Cubic((*y)[0], (*y)[1], (*y)[2]);
}

std::ostream& operator<<(std::ostream& os, const Cubic& x) { return os << to_text(x); }

bool in_z_alpha(const Cubic& x) {
  if (!is_integral(x.a()) || !is_integral(x.b()) || !is_integral(x.c())) return false;
  return mpz_divisible_ui_p(x.b().get_num_mpz_t(), 2) != 0 &&
         mpz_divisible_ui_p(x.c().get_num_mpz_t(), 4) != 0;
}

// ---------------------------------------------------------------------------

std::string to_text(const Integer& x) { return format_integer(x); }
std::string to_text(const Rational& x) { return format_rational(x); }
std::string to_text(const Fp& x) { return std::to_string(x.residue()); }
std::string to_text(const Cubic& x) {
  return format_rational(x.a()) + ":" + format_rational(x.b()) + ":" + format_rational(x.c());
}

Integer scalar_from_text(const Ring<Integer>&, std::string_view text) { return parse_integer(text); }

Rational scalar_from_text(const Ring<Rational>&, std::string_view text) {
  return parse_rational(text);
}

Fp scalar_from_text(const Ring<Fp>& ring, std::string_view text) {
  Integer v = parse_integer(text) % ring.p;
  return Fp(v.get_si(), ring.p);
}

Cubic scalar_from_text(const Ring<Cubic>&, std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return Cubic(parse_rational(text));
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
    fail(ErrorCode::Parse, "cubic element must be 'a:b:c', got '" + std::string(text) + "'");
  return Cubic(parse_rational(text.substr(0, first)),
               parse_rational(text.substr(first + 1, second - first - 1)),
               parse_rational(text.substr(second + 1)));
}

}  // namespace simcert
