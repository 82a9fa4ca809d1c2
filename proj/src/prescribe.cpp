#include "simcert/prescribe.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace simcert {

NonscalarityIdeal nonscalarity_ideal(const Matrix<Integer>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "square matrix required");
  const std::size_t n = a.rows();
  NonscalarityIdeal out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.generators.push_back(a(i, i) - a(j, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.generators.push_back(a(i, j));
  out.generator = content(out.generators);
  return out;
}

bool is_scalar_mod(const Matrix<Integer>& a, const Integer& m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Integer x = i == j ? Integer(a(i, i) - a(0, 0)) : a(i, j);
      if (!euclid::divides(m, x)) return false;
    }
  return true;
}

SimilarityCertificate<Rational> prescribe_ksim_integral(const Matrix<Integer>& a,
                                                        const Vec<Integer>& target,
                                                        std::uint64_t seed) {
  check_target(a, target);
  if (is_scalar(a)) fail(ErrorCode::ScalarMatrix, "matrix is scalar");

  const FrobeniusForm<Rational> ff = frobenius_form(to_rational(a), seed);
  const auto rcf = to_integer(ff.rcf);
  if (!rcf)
    fail(ErrorCode::IntegralityViolation,
         "rational canonical form of an integer matrix has a non-integral entry");

  const SimilarityCertificate<Integer> inner = prescribe_with_unit(*rcf, target);
  SimilarityCertificate<Rational> cert;
  cert.g = to_rational(inner.g) * ff.transform.g;
  cert.g_inv = ff.transform.g_inv * to_rational(inner.g_inv);
  cert.B = to_rational(inner.B);
  cert.conj_ring = RingTag::Q;
  cert.entry_ring = RingTag::Z;
  cert.verified = verify_certificate(to_rational(a), cert);
  if (!cert.verified) fail(ErrorCode::Internal, "rational certificate failed verification");
  return cert;
}

// ---------------------------------------------------------------------------
// Good vectors

Integer minor_gcd(const Matrix<Integer>& a, const Vec<Integer>& v) {
  const Vec<Integer> av = a.apply(v);
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Integer minor = v[i] * av[j] - v[j] * av[i];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
    }
  return g;
}

namespace {

/// Minors of [v0 + t u | A (v0 + t u)] as polynomials in t (degree <= 2).
std::vector<Poly<Integer>> line_minors(const Matrix<Integer>& a, const Vec<Integer>& v0, const Vec<Integer>& u) {
  const Vec<Integer> av = a.apply(v0), au = a.apply(u);
  std::vector<Poly<Integer>> out;
  for (std::size_t i = 0; i < v0.size(); ++i)
    for (std::size_t j = i + 1; j < v0.size(); ++j) {
      Integer c0 = v0[i] * av[j] - v0[j] * av[i];
      Integer c1 = v0[i] * au[j] + u[i] * av[j] - v0[j] * au[i] - u[j] * av[i];
      Integer c2 = u[i] * au[j] - u[j] * au[i];
      Poly<Integer> m(Ring<Integer>{}, {c0, c1, c2});
      if (!m.is_zero()) out.push_back(std::move(m));
    }
  return out;
}

Integer resultant(const Poly<Integer>& f, const Poly<Integer>& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m + n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<Integer> s(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  return det(s);
}

constexpr long kLineSmallPrimes = 10000;
constexpr long kLineSteps = 64;

/// Looks for t with v0 + t u good. When the minors have no common factor
/// over Q, every prime dividing all of them at some integer t divides
/// Res(f, h) for f one minor and h any combination of the others, so only the
/// primes of a nonzero resultant can obstruct.
std::optional<Vec<Integer>> repair_along_line(const Matrix<Integer>& a, const Vec<Integer>& v0,
                                              const Vec<Integer>& u) {
  const std::size_t n = v0.size();
  const std::vector<Poly<Integer>> minors = line_minors(a, v0, u);
  if (minors.empty()) return std::nullopt;
  Poly<Rational> common(Ring<Rational>{}, {});
  for (const auto& m : minors) {
    std::vector<Rational> c;
    for (int k = 0; k <= m.degree(); ++k) c.emplace_back(m.coeff(k));
    common = gcd(common, Poly<Rational>(Ring<Rational>{}, c));
  }
  if (common.degree() > 0) return std::nullopt;

  Integer bound = 0;
  const Poly<Integer>& f = minors.front();
  if (f.degree() == 0) {
    bound = f.coeff(0);
  } else {
    for (long c = 2, found = 0; c < 40 && found < 3; ++c) {
      Poly<Integer> h(Ring<Integer>{}, {});
      Integer w = 1;
      for (std::size_t k = 1; k < minors.size(); ++k, w *= c) h = h + w * minors[k];
      const Integer r = resultant(f, h);
      if (sgn(r) == 0) continue;
      ++found;
      mpz_gcd(bound.get_mpz_t(), bound.get_mpz_t(), r.get_mpz_t());
    }
  }
  if (sgn(bound) == 0) return std::nullopt;

  // Primes below kLineSmallPrimes get an explicit residue; the remaining
  // primes of the resultant each rule out at most n + 1 residues of t, so
  // stepping through the CRT progression clears them quickly.
  std::vector<std::pair<Integer, Integer>> residues;
  Integer modulus = 1;
  for (long q = 2; q < kLineSmallPrimes; ++q) {
    bool prime = true;
    for (long d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
    if (!prime || !euclid::divides(Integer(q), bound)) continue;
    const long tries = std::min<long>(q, static_cast<long>(n) + 2);
    std::optional<long> hit;
    for (long t = 0; t < tries && !hit; ++t) {
      Vec<Integer> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = v0[k] + t * u[k];
      if (!euclid::divides(Integer(q), minor_gcd(a, v))) hit = t;
    }
    if (!hit) return std::nullopt;
    residues.emplace_back(*hit, q);
    modulus *= q;
  }
  const Integer t0 = residues.empty() ? Integer(0) : crt(residues);
  for (long step = 0; step < kLineSteps; ++step) {
    const Integer t = t0 + step * modulus;
    Vec<Integer> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = v0[k] + t * u[k];
    if (minor_gcd(a, v) == 1) return v;
  }
  return std::nullopt;
}

/// A = lambda I + x y^T with x, y primitive: v is good iff y.v = +-1 and
/// v, x extend to a basis. Builds such a v directly, or nullopt when A has
/// no eigenspace of codimension one.
std::optional<Vec<Integer>> rank_one_good_vector(const Matrix<Integer>& a) {
  const std::size_t n = a.rows();
  const Poly<Rational> m = minpoly(to_rational(a));
  if (m.degree() != 2) return std::nullopt;
  const Rational b = m.coeff(1), c = m.coeff(0);
  const Rational disc = b * b - 4 * c;
  if (sgn(disc) < 0 || disc.get_den() != 1) return std::nullopt;
  const Integer root = sqrt(disc.get_num());
  if (root * root != disc.get_num()) return std::nullopt;
  for (const Integer& s : {root, Integer(-root)}) {
    const Rational lam_q = (-b + Rational(s)) / 2;
    if (lam_q.get_den() != 1) continue;
    Matrix<Integer> nmat = a;
    for (std::size_t i = 0; i < n; ++i) nmat(i, i) -= lam_q.get_num();
    if (rank(to_rational(nmat)) != 1) continue;

    Vec<Integer> x(n, 0), y(n, 0);
    std::size_t col = 0;
    while (col < n && [&] {
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(nmat(i, col)) != 0) return false;
      return true;
    }())
      ++col;
    for (std::size_t i = 0; i < n; ++i) x[i] = nmat(i, col);
    const Integer cx = content(x);
    for (auto& e : x) e /= cx;
    std::size_t piv = 0;
    while (sgn(x[piv]) == 0) ++piv;
    for (std::size_t j = 0; j < n; ++j) y[j] = nmat(piv, j) / x[piv];
    if (content(y) != 1) return std::nullopt;

    // Coordinates w with v = U w and x = U e1.
    const Matrix<Integer> u = complete_primitive_vector(x);
    const Vec<Integer> z = u.transpose().apply(y);
    Vec<Integer> zeta(z.begin() + 1, z.end());
    Vec<Integer> w(n, 0);
    const Integer g = content(zeta);
    if (sgn(g) == 0) {
      w[0] = z[0];
      w[1] = 1;
    } else {
      Integer w1 = 0;
      if (g != 1) mpz_invert(w1.get_mpz_t(), Integer(z[0] % g).get_mpz_t(), g.get_mpz_t());
      const Integer k = (1 - z[0] * w1) / g;
      for (auto& e : zeta) e /= g;
      const Matrix<Integer> vmat = inverse(complete_primitive_vector(zeta).transpose());
      Vec<Integer> coords(n - 1, 0);
      coords[0] = k;
      coords[1] = 1;
      const Vec<Integer> tail = vmat.apply(coords);
      w[0] = w1;
      for (std::size_t i = 1; i < n; ++i) w[i] = tail[i - 1];
    }
    Vec<Integer> v = u.apply(w);
    if (minor_gcd(a, v) != 1) fail(ErrorCode::Internal, "rank-one construction produced a bad vector");
    return v;
  }
  return std::nullopt;
}

struct SearchState {
  const Matrix<Integer>& a;
  std::size_t tried = 0;
  std::optional<Vec<Integer>> best;
  Integer best_gcd = 0;

  // True when v is good; records the best partial candidate otherwise.
  bool probe(const Vec<Integer>& v) {
    ++tried;
    const Integer g = minor_gcd(a, v);
    if (g == 1) return true;
    if (sgn(g) != 0 && (!best || g < best_gcd)) {
      best = v;
      best_gcd = g;
    }
    return false;
  }
  bool exhausted() const { return tried >= kGoodVectorCap; }
};

}  // namespace

Vec<Integer> good_vector_search(const Matrix<Integer>& a, std::uint64_t seed) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "square matrix required");
  const std::size_t n = a.rows();
  if (n < 3) fail(ErrorCode::DimensionTooSmall, "good vector search needs n >= 3");
  if (nonscalarity_ideal(a).generator != 1)
    fail(ErrorCode::IdealNotUnit, "nonscalarity ideal is not the unit ideal");

  SearchState st{a, 0, std::nullopt, 0};

  // Tier 1: standard vectors, pairwise sums and differences, the box {-2..2}^n.
  for (std::size_t i = 0; i < n; ++i) {
    Vec<Integer> e(n, 0);
    e[i] = 1;
    if (st.probe(e)) return e;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int sign : {1, -1}) {
        Vec<Integer> e(n, 0);
        e[i] = 1;
        e[j] = sign;
        if (st.probe(e)) return e;
      }
  {
    std::vector<int> digits(n, 0);
    while (!st.exhausted()) {
      Vec<Integer> v(n);
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = digits[k] - 2;
        nonzero = nonzero || digits[k] != 2;
      }
      if (nonzero && st.probe(v)) return v;
      std::size_t pos = n;
      bool wrapped = true;
      while (pos-- > 0) {
        if (++digits[pos] <= 4) {
          wrapped = false;
          break;
        }
        digits[pos] = 0;
      }
      if (wrapped) break;
    }
  }

  // Tier 2: scalar plus rank one is solved directly. Otherwise lines
  // v0 + t u with t fixed prime by prime and combined by CRT.
  if (auto v = rank_one_good_vector(a)) return *v;
  {
    std::mt19937_64 line_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> small(-3, 3);
    std::vector<Vec<Integer>> starts;
    if (st.best) starts.push_back(*st.best);
    for (std::size_t i = 0; i < n; ++i) {
      Vec<Integer> e(n, 0);
      e[i] = 1;
      starts.push_back(e);
    }
    for (std::size_t attempt = 0; attempt < 200 && !st.exhausted(); ++attempt) {
      const Vec<Integer>& v0 = starts[attempt % starts.size()];
      Vec<Integer> u(n);
      for (auto& e : u) e = small(line_rng);
      if (content(u) == 0) continue;
      ++st.tried;
      if (auto v = repair_along_line(a, v0, u)) return *v;
    }
  }

  // Tier 3: seeded random vectors.
  std::mt19937_64 rng(seed);
  const long bound = static_cast<long>(n * n);
  std::uniform_int_distribution<long> dist(-bound, bound);
  while (!st.exhausted()) {
    Vec<Integer> v(n);
    for (auto& x : v) x = dist(rng);
    if (st.probe(v)) return v;
  }

  std::ostringstream msg;
  msg << "no good vector within " << kGoodVectorCap << " candidates";
  if (st.best) msg << "; best minor gcd " << st.best_gcd;
  fail(ErrorCode::SearchExhausted, msg.str());
}

SimilarityCertificate<Integer> prescribe_zsim(const Matrix<Integer>& a, const Vec<Integer>& target,
                                              std::uint64_t seed) {
  check_target(a, target);
  const std::size_t n = a.rows();
  if (n < 3)
    fail(ErrorCode::DimensionTooSmall,
         "unimodular prescription needs n >= 3; for n = 2 it can fail (see decide-2x2)");
  const NonscalarityIdeal ideal = nonscalarity_ideal(a);
  if (ideal.generator != 1)
    fail(ErrorCode::IdealNotUnit,
         "A is scalar modulo " + format_integer(ideal.generator) + " (nonscalarity ideal is not Z)");

  const Vec<Integer> v = good_vector_search(a, seed);
  const Matrix<Integer> P = complete_primitive_vector(v);
  const Matrix<Integer> P_inv = inverse(P);
  const Matrix<Integer> C = P_inv * a * P;

  // The subcolumn C(1.., 0) has content 1; a unimodular Q sends it to e_1.
  Matrix<Integer> sub(n - 1, 1);
  for (std::size_t k = 1; k < n; ++k) sub(k - 1, 0) = C(k, 0);
  const HermiteForm hf = hermite_normal_form(sub);
  if (hf.H(0, 0) != 1) fail(ErrorCode::Internal, "good vector did not yield a unit subcolumn");
  const Matrix<Integer> Q = direct_sum(Matrix<Integer>::identity(1), hf.U);
  const Matrix<Integer> Q_inv = inverse(Q);
  const Matrix<Integer> C2 = Q * C * Q_inv;

  const SimilarityCertificate<Integer> inner = prescribe_with_unit(C2, target);
  SimilarityCertificate<Integer> cert;
  cert.g = inner.g * Q * P_inv;
  cert.g_inv = P * Q_inv * inner.g_inv;
  cert.B = inner.B;
  cert.verified = verify_certificate(a, cert);
  if (!cert.verified) fail(ErrorCode::Internal, "unimodular certificate failed verification");
  return cert;
}

// ---------------------------------------------------------------------------
// 2 x 2 decisions

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Similar: return "Similar";
    case Verdict::NotSimilar: return "NotSimilar";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

Matrix<Integer> reshape2(const Vec<Integer>& r) {
  Matrix<Integer> m(2, 2);
  m(0, 0) = r[0];
  m(0, 1) = r[1];
  m(1, 0) = r[2];
  m(1, 1) = r[3];
  return m;
}

/// Hermite basis of the integer solutions of g A = B g (g read row-major).
std::vector<Vec<Integer>> intertwiner_lattice(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  // Equation (i, j): sum_k g_ik a_kj - sum_k b_ik g_kj = 0.
  Matrix<Integer> eqs(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t row = 2 * i + j;
      for (std::size_t k = 0; k < 2; ++k) {
        eqs(row, 2 * i + k) += a(k, j);
        eqs(row, 2 * k + j) -= b(i, k);
      }
    }
  // U eqs^T = H; rows of U facing zero rows of H span the integer kernel.
  const HermiteForm hf = hermite_normal_form(eqs.transpose());
  std::vector<Vec<Integer>> kernel;
  for (std::size_t r = 0; r < 4; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < 4 && zero; ++c) zero = sgn(hf.H(r, c)) == 0;
    if (zero) kernel.push_back(hf.U.row(r));
  }
  if (kernel.empty()) return kernel;
  Matrix<Integer> basis = Matrix<Integer>::from_rows(kernel);
  const HermiteForm canon = hermite_normal_form(basis);
  std::vector<Vec<Integer>> out;
  for (std::size_t r = 0; r < canon.H.rows(); ++r) out.push_back(canon.H.row(r));
  return out;
}

bool is_square_integer(const Integer& x, Integer& root) {
  if (sgn(x) < 0) return false;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  return root * root == x;
}

Integer isqrt_floor(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// 0, 1, -1, 2, -2, ... up to +-limit
std::vector<Integer> symmetric_order(const Integer& limit) {
  std::vector<Integer> out{0};
  for (Integer k = 1; k <= limit; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

/// Exact enumeration for a definite form: every (s, t) with |Q| <= value_cap
/// lies in the box |t| <= sqrt(4|a| cap / |D|), |s| <= sqrt(4|c| cap / |D|).
std::pair<Integer, Integer> definite_radius(const BinaryForm& f, const Integer& cap) {
  const Integer D = abs(f.discriminant());
  return {isqrt_floor(4 * abs(f.c) * cap / D), isqrt_floor(4 * abs(f.a) * cap / D)};
}

void decide_candidate(const Matrix<Integer>& a, CandidateReport& rep, const Integer& bound,
                      std::optional<SimilarityCertificate<Integer>>& cert) {
  const auto lattice = intertwiner_lattice(a, rep.candidate);
  rep.lattice_rank = lattice.size();

  auto accept = [&](const Integer& s, const Integer& t) {
    Vec<Integer> r(4);
    for (std::size_t k = 0; k < 4; ++k) {
      r[k] = s * lattice[0][k];
      if (lattice.size() > 1) r[k] += t * lattice[1][k];
    }
    SimilarityCertificate<Integer> c;
    c.g = reshape2(r);
    c.g_inv = inverse(c.g);
    c.B = rep.candidate;
    c.verified = verify_certificate(a, c);
    if (!c.verified) fail(ErrorCode::Internal, "2x2 certificate failed verification");
    rep.outcome = Verdict::Similar;
    rep.witness.emplace(s, t);
    if (!cert) cert = std::move(c);
  };

  if (lattice.empty()) {
    rep.outcome = Verdict::NotSimilar;
    rep.reason = "only g = 0 satisfies gA = Bg";
    return;
  }
  if (lattice.size() == 1) {
    const Integer d = det(reshape2(lattice[0]));
    rep.form = BinaryForm{d, 0, 0};
    if (d == 1 || d == -1) {
      accept(1, 0);
    } else {
      rep.outcome = Verdict::NotSimilar;
      rep.minimum = abs(d);
      rep.reason = "solution lattice has rank 1 and det(s*G) = s^2 * det(G) misses +-1";
    }
    return;
  }

  const Matrix<Integer> G1 = reshape2(lattice[0]);
  const Matrix<Integer> G2 = reshape2(lattice[1]);
  BinaryForm f;
  f.a = det(G1);
  f.c = det(G2);
  f.b = det(G1 + G2) - f.a - f.c;
  rep.form = f;
  const Integer D = f.discriminant();

  if (sgn(D) < 0) {
    const auto [rs, rt] = definite_radius(f, 1);
    for (const Integer& t : symmetric_order(rt))
      for (const Integer& s : symmetric_order(rs)) {
        const Integer v = f(s, t);
        if (v == 1 || v == -1) {
          accept(s, t);
          return;
        }
      }
    // Least nonzero |value|; it is at most min(|a|, |c|).
    Integer cap = std::min(abs(f.a), abs(f.c));
    const auto [ms, mt] = definite_radius(f, cap);
    Integer best = cap;
    for (const Integer& t : symmetric_order(mt))
      for (const Integer& s : symmetric_order(ms)) {
        if (sgn(s) == 0 && sgn(t) == 0) continue;
        const Integer v = abs(f(s, t));
        if (v < best) best = v;
      }
    rep.minimum = best;
    rep.outcome = Verdict::NotSimilar;
    rep.reason = "definite determinant form with minimum " + format_integer(best) + " > 1";
    return;
  }

  if (sgn(D) == 0) {
    // f = e * g * (p s + q t)^2 with gcd(p, q) = 1: a unit value needs g = 1.
    Integer g;
    mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
    if (sgn(g) == 0) {
      rep.outcome = Verdict::NotSimilar;
      rep.reason = "det(g) vanishes on every solution of gA = Bg";
      return;
    }
    if (g != 1) {
      rep.outcome = Verdict::NotSimilar;
      rep.minimum = g;
      rep.reason = "degenerate determinant form, every value divisible by " + format_integer(g);
      return;
    }
    const int e = sgn(f.a) != 0 ? sgn(f.a) : sgn(f.c);
    const Integer p = isqrt_floor(abs(f.a));
    const Integer q = sgn(p) != 0 ? Integer(f.b / (2 * e * p)) : isqrt_floor(abs(f.c));
    const GcdResult r = ext_gcd(p, q);
    accept(r.x, r.y);
    return;
  }

  // Indefinite: for each |t| <= bound solve exactly for s.
  for (const Integer& t : symmetric_order(bound))
    for (int eps : {1, -1}) {
      if (sgn(f.a) != 0) {
        const Integer disc = f.b * f.b * t * t - 4 * f.a * (f.c * t * t - eps);
        Integer root;
        if (!is_square_integer(disc, root)) continue;
        for (const Integer& r : {root, Integer(-root)}) {
          const Integer num = -f.b * t + r;
          const Integer den = 2 * f.a;
          if (euclid::divides(den, num)) {
            const Integer s = num / den;
            accept(s, t);
            return;
          }
        }
      } else {
        const Integer bt = f.b * t;
        const Integer rhs = eps - f.c * t * t;
        if (sgn(bt) != 0) {
          if (euclid::divides(bt, rhs)) {
            accept(Integer(rhs / bt), t);
            return;
          }
        } else if (sgn(rhs) == 0) {
          accept(0, t);
          return;
        }
      }
    }
  rep.outcome = Verdict::Unknown;
  rep.reason = "indefinite determinant form; no unit value with |t| <= " +
               format_integer(bound);
}

}  // namespace

Decision2x2 decide_2x2(const Matrix<Integer>& a, const Vec<Integer>& target, const Integer& bound) {
  if (a.rows() != 2 || a.cols() != 2) fail(ErrorCode::DimensionMismatch, "decide_2x2 needs a 2x2 matrix");
  check_target(a, target);
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  Decision2x2 out;
  out.bound = bound;

  if (a.diagonal() == target) {
    out.verdict = Verdict::Similar;
    out.certificate = identity_certificate(a);
    out.certificate->verified = verify_certificate(a, *out.certificate);
    out.reason = "diagonal already matches";
    return out;
  }

  const Integer& g1 = target[0];
  const Integer& g2 = target[1];
  const Integer N = g1 * g2 - det(a);  // b * c for any candidate [[g1, b], [c, g2]]

  if (sgn(N) == 0) {
    // g1 is an integer eigenvalue: a primitive eigenvector starts a basis in
    // which A is upper triangular with diagonal (g1, g2).
    if (is_scalar(a)) {
      out.verdict = Verdict::NotSimilar;
      out.reason = "scalar matrix with a different diagonal";
      return out;
    }
    Matrix<Integer> m = a;
    m(0, 0) -= g1;
    m(1, 1) -= g1;
    Vec<Integer> u = sgn(m(0, 0)) != 0 || sgn(m(0, 1)) != 0 ? Vec<Integer>{-m(0, 1), m(0, 0)}
                                                            : Vec<Integer>{-m(1, 1), m(1, 0)};
    const Integer c = content(u);
    for (auto& x : u) x /= c;
    const Matrix<Integer> P = complete_primitive_vector(u);
    SimilarityCertificate<Integer> cert;
    cert.g = inverse(P);
    cert.g_inv = P;
    cert.B = cert.g * a * P;
    cert.verified = verify_certificate(a, cert);
    if (!cert.verified || !(cert.B.diagonal() == target))
      fail(ErrorCode::Internal, "eigenvector triangularization failed");
    out.verdict = Verdict::Similar;
    out.certificate = std::move(cert);
    out.reason = "integer eigenvalue; triangularized by a primitive eigenvector";
    return out;
  }

  // Candidates [[g1, b], [c, g2]] with b c = N, one per orbit of
  // (b, c) -> (-b, -c) and, when g1 = g2, (b, c) -> (c, b).
  std::set<Integer> reps;
  const Integer absN = abs(N);
  for (Integer d = 1; d * d <= absN; ++d) {
    if (!euclid::divides(d, absN)) continue;
    for (const Integer& b : {d, Integer(absN / d)})
      for (int sign : {1, -1}) {
        const Integer bb = sign * b;
        const Integer cc = N / bb;
        std::vector<std::pair<Integer, Integer>> orbit{{bb, cc}, {-bb, -cc}};
        if (g1 == g2) {
          orbit.emplace_back(cc, bb);
          orbit.emplace_back(-cc, -bb);
        }
        Integer best = 0;
        for (const auto& [x, y] : orbit)
          if (sgn(x) > 0 && (sgn(best) == 0 || x < best)) best = x;
        reps.insert(best);
      }
  }

  bool any_unknown = false;
  for (const Integer& b : reps) {
    CandidateReport rep;
    rep.candidate = Matrix<Integer>(2, 2);
    rep.candidate(0, 0) = g1;
    rep.candidate(0, 1) = b;
    rep.candidate(1, 0) = N / b;
    rep.candidate(1, 1) = g2;
    decide_candidate(a, rep, bound, out.certificate);
    if (rep.outcome == Verdict::Unknown) any_unknown = true;
    out.candidates.push_back(std::move(rep));
    if (out.certificate) break;
  }

  if (out.certificate) {
    out.verdict = Verdict::Similar;
    out.reason = "determinant form represents a unit";
  } else if (any_unknown) {
    out.verdict = Verdict::Unknown;
    out.reason = "some candidate has an indefinite form; search bound reached";
  } else {
    out.verdict = Verdict::NotSimilar;
    out.reason = "no candidate's determinant form represents +-1";
  }
  return out;
}

}  // namespace simcert
