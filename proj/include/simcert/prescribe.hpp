#pragma once

// Conjugating a matrix to one with a prescribed diagonal.
//
//   prescribe_with_unit      any ring, given an off-diagonal unit
//   fillmore_field           fields, any non-scalar matrix
//   prescribe_ksim_integral  integer matrices, rational conjugation, integer result
//   prescribe_zsim           integer matrices, unimodular conjugation (n >= 3)
//   decide_2x2               unimodular conjugation for 2 x 2 integer matrices

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simcert/canonical.hpp"
#include "simcert/matrix.hpp"
#include "simcert/normal_forms.hpp"
#include "simcert/similarity.hpp"

namespace simcert {

/// Throws TargetTraceMismatch unless sum(target) = tr(a).
template <class T>
void check_target(const Matrix<T>& a, const Vec<T>& target) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "square matrix required");
  if (target.size() != a.rows())
    fail(ErrorCode::DimensionMismatch, "target length " + std::to_string(target.size()) +
                                           " does not match dimension " + std::to_string(a.rows()));
  T sum = a.ring().zero();
  for (const auto& g : target) sum += g;
  if (!(sum == a.trace())) fail(ErrorCode::TargetTraceMismatch, "target does not sum to the trace");
}

namespace detail {

template <class T>
class ConjugationChain {
 public:
  explicit ConjugationChain(const Matrix<T>& start)
      : B_(start),
        g_(Matrix<T>::identity(start.rows(), start.ring())),
        g_inv_(g_) {}

  void push(const ElementaryConj<T>& e) {
    const std::size_t n = B_.rows();
    const Ring<T>& R = B_.ring();
    B_ = apply_conj(B_, e);
    g_ = e.matrix(n, R) * g_;
    g_inv_ = g_inv_ * e.inverse(R).matrix(n, R);
    steps_.push_back(e);
  }

  const Matrix<T>& current() const { return B_; }

  SimilarityCertificate<T> certificate() const {
    SimilarityCertificate<T> c;
    c.g = g_;
    c.g_inv = g_inv_;
    c.B = B_;
    c.steps = steps_;
    return c;
  }

 private:
  Matrix<T> B_;
  Matrix<T> g_;
  Matrix<T> g_inv_;
  std::vector<ElementaryConj<T>> steps_;
};

}  // namespace detail

/// Realizes `target` on the diagonal of a conjugate of b0 using only
/// elementary conjugations over the coefficient ring, given that b0 has an
/// off-diagonal unit.
///
/// For each leading index s of the active block [s, n):
///  - move an off-diagonal unit of the block to (s, s+1) and scale it to 1;
///  - if the block has size >= 3, conjugate by I + (1 - b) E_{s+2,s} so that
///    (s+2, s+1) becomes 1; the (s, s+1) entry is untouched;
///  - conjugate by I + (b_ss - target_s) E_{s+1,s}, which sets (s, s) to the
///    target and leaves (s, s+1) and (s+2, s+1) alone;
///  - continue on [s+1, n), whose (s+2, s+1) entry is a unit.
/// The last diagonal entry is forced by the trace. The loop stops early once
/// the remaining diagonal already agrees with the target.
template <class T>
SimilarityCertificate<T> prescribe_with_unit(const Matrix<T>& b0, const Vec<T>& target) {
  check_target(b0, target);
  const std::size_t n = b0.rows();
  const Ring<T>& R = b0.ring();
  detail::ConjugationChain<T> chain(b0);

  for (std::size_t s = 0; s + 1 < n; ++s) {
    const Matrix<T>& B = chain.current();
    bool done = true;
    for (std::size_t k = s; k < n && done; ++k) done = B(k, k) == target[k];
    if (done) break;

    std::optional<std::pair<std::size_t, std::size_t>> unit;
    for (std::size_t p = s; p < n && !unit; ++p)
      for (std::size_t q = s; q < n; ++q)
        if (p != q && R.is_unit(B(p, q))) {
          unit.emplace(p, q);
          break;
        }
    if (!unit) fail(ErrorCode::NoUnitOffDiagonal, "no off-diagonal unit in the active block");

    const auto [p, q] = *unit;
    if (p != s || q != s + 1) {
      std::vector<std::size_t> order{p, q};
      for (std::size_t k = s; k < n; ++k)
        if (k != p && k != q) order.push_back(k);
      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[k] = k;
      for (std::size_t k = 0; k < order.size(); ++k) perm[order[k]] = s + k;
      chain.push(ElementaryConj<T>::permutation(std::move(perm)));
    }
    if (!(chain.current()(s, s + 1) == R.one())) {
      std::vector<T> units(n, R.one());
      units[s] = R.unit_inverse(chain.current()(s, s + 1));
      chain.push(ElementaryConj<T>::diagonal(std::move(units)));
    }
    if (n - s >= 3) {
      T shift = R.one() - chain.current()(s + 2, s + 1);
      if (!is_zero(shift)) chain.push(ElementaryConj<T>::transvection(s + 2, s, shift));
    }
    T t = chain.current()(s, s) - target[s];
    if (!is_zero(t)) chain.push(ElementaryConj<T>::transvection(s + 1, s, t));
  }

  SimilarityCertificate<T> cert = chain.certificate();
  if (!(cert.B.diagonal() == target)) fail(ErrorCode::Internal, "diagonal prescription failed");
  cert.verified = verify_certificate(b0, cert);
  if (!cert.verified) fail(ErrorCode::Internal, "elementary certificate failed verification");
  return cert;
}

/// K-similarity to a matrix with the given diagonal, for non-scalar A over a
/// field K.
template <FieldScalar T>
SimilarityCertificate<T> fillmore_field(const Matrix<T>& a, const Vec<T>& target) {
  check_target(a, target);
  if (is_scalar(a)) fail(ErrorCode::ScalarMatrix, "matrix is scalar");
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();

  auto independent = [&](const Vec<T>& v) {
    Matrix<T> m(n, 2, R);
    m.set_column(0, v);
    m.set_column(1, a.apply(v));
    return rank(m) == 2;
  };
  std::optional<Vec<T>> v;
  for (std::size_t i = 0; i < n && !v; ++i) {
    Vec<T> e(n, R.zero());
    e[i] = R.one();
    if (independent(e)) v = e;
  }
  // Every e_i is an eigenvector, so A is diagonal with two distinct entries.
  for (std::size_t i = 0; i < n && !v; ++i)
    for (std::size_t j = i + 1; j < n && !v; ++j) {
      if (a(i, i) == a(j, j)) continue;
      Vec<T> e(n, R.zero());
      e[i] = R.one();
      e[j] = R.one();
      if (independent(e)) v = e;
    }
  if (!v) fail(ErrorCode::Internal, "non-scalar matrix without a cyclic pair");

  Vec<T> w = a.apply(*v);
  for (std::size_t k = 0; k < n; ++k) w[k] -= target[0] * (*v)[k];
  const Matrix<T> P = complete_basis(std::vector<Vec<T>>{*v, w}, n, R);
  const Matrix<T> P_inv = inverse(P);
  const Matrix<T> C = P_inv * a * P;  // first column (target_0, 1, 0, ..., 0)

  SimilarityCertificate<T> inner = prescribe_with_unit(C, target);
  SimilarityCertificate<T> cert;
  cert.g = inner.g * P_inv;
  cert.g_inv = P * inner.g_inv;
  cert.B = std::move(inner.B);
  cert.verified = verify_certificate(a, cert);
  if (!cert.verified) fail(ErrorCode::Internal, "field certificate failed verification");
  return cert;
}

// ---------------------------------------------------------------------------
// Integer matrices

struct NonscalarityIdeal {
  Integer generator;          // gcd of all generators, 0 iff A is scalar
  Vec<Integer> generators;    // a_ii - a_jj (i < j), then a_ij (i != j)
};

NonscalarityIdeal nonscalarity_ideal(const Matrix<Integer>& a);

/// Whether the image of A in M_n(Z/mZ) is scalar. Requires m >= 2.
bool is_scalar_mod(const Matrix<Integer>& a, const Integer& m);

/// Rational conjugation to an integer matrix with the prescribed diagonal,
/// through the Frobenius form (whose entries are integral for integer A).
SimilarityCertificate<Rational> prescribe_ksim_integral(const Matrix<Integer>& a,
                                                        const Vec<Integer>& target,
                                                        std::uint64_t seed = 0);

/// gcd of the 2x2 minors of [v | Av].
Integer minor_gcd(const Matrix<Integer>& a, const Vec<Integer>& v);

inline constexpr std::size_t kGoodVectorCap = 50000;

/// Primitive v with the 2x2 minors of [v | Av] coprime. Requires n >= 3 and a
/// unit nonscalarity ideal.
Vec<Integer> good_vector_search(const Matrix<Integer>& a, std::uint64_t seed = 0);

/// Unimodular conjugation to a matrix with the prescribed diagonal.
SimilarityCertificate<Integer> prescribe_zsim(const Matrix<Integer>& a, const Vec<Integer>& target,
                                              std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// 2 x 2 decision procedure

/// a*s^2 + b*s*t + c*t^2
struct BinaryForm {
  Integer a, b, c;

  Integer operator()(const Integer& s, const Integer& t) const { return a * s * s + b * s * t + c * t * t; }
  Integer discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

enum class Verdict { Similar, NotSimilar, Unknown };

const char* verdict_name(Verdict v) noexcept;

struct CandidateReport {
  Matrix<Integer> candidate;     // target matrix with the prescribed diagonal
  std::size_t lattice_rank = 0;  // rank of the integer solution lattice of gA = Bg
  std::optional<BinaryForm> form;  // det(s G1 + t G2) in a Hermite basis G1, G2
  Verdict outcome = Verdict::Unknown;
  std::optional<Integer> minimum;  // least |value| at nonzero points (definite forms)
  std::optional<std::pair<Integer, Integer>> witness;  // (s, t) with det = +-1
  std::string reason;
};

struct Decision2x2 {
  Verdict verdict = Verdict::Unknown;
  std::optional<SimilarityCertificate<Integer>> certificate;
  std::vector<CandidateReport> candidates;
  Integer bound;
  std::string reason;
};

/// Decides whether a 2x2 integer matrix is GL_2(Z)-similar to a matrix with
/// the prescribed diagonal. Exact when no candidate's determinant form is
/// indefinite; otherwise searches |t| <= bound and may return Unknown.
Decision2x2 decide_2x2(const Matrix<Integer>& a, const Vec<Integer>& target, const Integer& bound = 1000);

}  // namespace simcert
