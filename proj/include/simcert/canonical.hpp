#pragma once

// Characteristic and minimal polynomials, invariant factors and the Frobenius
// (rational canonical) form with an explicit transformation certificate.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "simcert/matrix.hpp"
#include "simcert/normal_forms.hpp"
#include "simcert/poly.hpp"
#include "simcert/similarity.hpp"

namespace simcert {

/// det(xI - A) by Berkowitz's division-free recurrence; valid over any
/// commutative ring.
template <class T>
Poly<T> charpoly(const Matrix<T>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  if (n == 0) return Poly<T>::constant(R, R.one());

  // p holds the coefficients of the leading k x k block, highest degree first.
  std::vector<T> p{R.one(), -a(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R S, -R A_k S, ..., -R A_k^{k-1} S
    std::vector<T> col(k + 2, R.zero());
    col[0] = R.one();
    col[1] = -a(k, k);
    std::vector<T> x(k, R.zero());
    for (std::size_t i = 0; i < k; ++i) x[i] = a(i, k);
    for (std::size_t step = 0; step < k; ++step) {
      T dot = R.zero();
      for (std::size_t j = 0; j < k; ++j) dot += a(k, j) * x[j];
      col[step + 2] = -dot;
      if (step + 1 == k) break;
      std::vector<T> y(k, R.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) y[i] += a(i, j) * x[j];
      x = std::move(y);
    }
    std::vector<T> next(k + 2, R.zero());
    for (std::size_t r = 0; r < k + 2; ++r)
      for (std::size_t j = 0; j <= std::min(r, k); ++j) next[r] += col[r - j] * p[j];
    p = std::move(next);
  }
  return Poly<T>(R, std::vector<T>(p.rbegin(), p.rend()));
}

template <FieldScalar T>
struct KrylovData {
  Poly<T> annihilator;  // monic, least degree with f(A) v = 0
  Matrix<T> basis;      // columns v, Av, ..., A^{d-1} v
};

template <FieldScalar T>
KrylovData<T> krylov(const Matrix<T>& a, const Vec<T>& v) {
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  std::vector<Vec<T>> cols;
  Vec<T> cur = v;
  while (true) {
    Matrix<T> k(n, cols.size(), R);
    for (std::size_t j = 0; j < cols.size(); ++j) k.set_column(j, cols[j]);
    if (auto c = solve(k, cur)) {
      std::vector<T> coeffs(cols.size() + 1, R.zero());
      for (std::size_t j = 0; j < cols.size(); ++j) coeffs[j] = -(*c)[j];
      coeffs.back() = R.one();
      return {Poly<T>(R, std::move(coeffs)), std::move(k)};
    }
    cols.push_back(cur);
    cur = a.apply(cur);
  }
}

/// Least common multiple of the Krylov annihilators of the standard basis.
template <FieldScalar T>
Poly<T> minpoly(const Matrix<T>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "minpoly of non-square matrix");
  const Ring<T>& R = a.ring();
  Poly<T> m = Poly<T>::constant(R, R.one());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vec<T> e(a.rows(), R.zero());
    e[i] = R.one();
    m = lcm(m, krylov(a, e).annihilator);
  }
  return m;
}

/// Nontrivial diagonal of the Smith form of xI - A over K[x], in divisibility
/// order.
template <FieldScalar T>
std::vector<Poly<T>> invariant_factors(const Matrix<T>& a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "invariant factors of non-square matrix");
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  const Ring<Poly<T>> PR(R);
  Matrix<Poly<T>> resolvent(n, n, PR);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly<T> entry = Poly<T>::constant(R, -a(i, j));
      if (i == j) entry += Poly<T>::x(R);
      resolvent(i, j) = std::move(entry);
    }
  const auto snf = smith_normal_form(resolvent);
  std::vector<Poly<T>> out;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.D(i, i).degree() >= 1) out.push_back(snf.D(i, i));
  return out;
}

template <FieldScalar T>
struct FrobeniusForm {
  std::vector<Poly<T>> blocks;   // f_1 | f_2 | ... | f_k
  Matrix<T> rcf;                 // direct sum of companion matrices
  SimilarityCertificate<T> transform;  // g A g^{-1} = rcf
};

namespace detail {

/// Candidate vectors for the maximal-vector search, in a fixed order: e_i,
/// e_i + e_j, the boxes {-1..1}^m and {-2..2}^m in lexicographic order, then
/// seeded random vectors with entries in {-m^2..m^2}.
template <FieldScalar T>
class CandidateStream {
 public:
  CandidateStream(std::size_t m, Ring<T> R, std::uint64_t seed) : m_(m), R_(R), rng_(seed) {}

  Vec<T> next() {
    ++count_;
    if (stage_ == 0) {
      Vec<T> v(m_, R_.zero());
      v[i_] = R_.one();
      if (++i_ == m_) advance(1);
      return v;
    }
    if (stage_ == 1) {
      Vec<T> v(m_, R_.zero());
      v[i_] = R_.one();
      v[j_] = R_.one();
      if (++j_ == m_) {
        ++i_;
        j_ = i_ + 1;
        if (j_ >= m_) advance(2);
      }
      return v;
    }
    if (stage_ == 2 || stage_ == 3) {
      const long k = stage_ == 2 ? 1 : 2;
      Vec<T> v(m_, R_.zero());
      for (std::size_t t = 0; t < m_; ++t) v[t] = R_.from_int(digits_[t] - k);
      // increment base-(2k+1) counter, most significant digit first
      std::size_t pos = m_;
      while (pos-- > 0) {
        if (++digits_[pos] <= 2 * k) break;
        digits_[pos] = 0;
        if (pos == 0) {
          advance(stage_ + 1);
          break;
        }
      }
      return v;
    }
    const long bound = static_cast<long>(m_ * m_);
    std::uniform_int_distribution<long> dist(-bound, bound);
    Vec<T> v(m_, R_.zero());
    for (auto& x : v) x = R_.from_int(dist(rng_));
    return v;
  }

  std::size_t count() const noexcept { return count_; }

 private:
  void advance(int stage) {
    stage_ = (stage == 1 && m_ < 2) ? 2 : stage;
    i_ = 0;
    j_ = 1;
    digits_.assign(m_, 0);
  }

  std::size_t m_;
  Ring<T> R_;
  std::mt19937_64 rng_;
  int stage_ = 0;
  std::size_t i_ = 0, j_ = 1;
  std::vector<long> digits_;
  std::size_t count_ = 0;
};

}  // namespace detail

inline constexpr std::size_t kMaximalVectorCap = 10000;

/// Frobenius form by iterated cyclic decomposition. Each round picks a vector
/// whose Krylov annihilator is the minimal polynomial of the current operator,
/// splits off its cyclic subspace, and continues on an invariant complement
/// cut out by an A-commuting projection.
template <FieldScalar T>
FrobeniusForm<T> frobenius_form(const Matrix<T>& a, std::uint64_t seed = 0) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "frobenius form of non-square matrix");
  const std::size_t n = a.rows();
  const Ring<T> R = a.ring();

  Matrix<T> op = a;                            // restriction to the current subspace
  Matrix<T> embed = Matrix<T>::identity(n, R);  // subspace basis in original coordinates
  std::vector<std::pair<Poly<T>, Matrix<T>>> found;  // (f, columns) largest first

  while (op.rows() > 0) {
    const std::size_t m = op.rows();
    const Poly<T> mu = minpoly(op);
    const std::size_t d = static_cast<std::size_t>(mu.degree());

    detail::CandidateStream<T> stream(m, R, seed + found.size());
    std::optional<KrylovData<T>> cyc;
    while (stream.count() < kMaximalVectorCap) {
      Vec<T> v = stream.next();
      bool nonzero = false;
      for (const auto& x : v) nonzero = nonzero || !is_zero(x);
      if (!nonzero) continue;
      auto kd = krylov(op, v);
      if (kd.annihilator.degree() == mu.degree()) {
        cyc = std::move(kd);
        break;
      }
    }
    if (!cyc)
      fail(ErrorCode::DecompositionSearchExhausted,
           "no maximal vector within " + std::to_string(kMaximalVectorCap) + " candidates");

    const Matrix<T>& K = cyc->basis;  // m x d
    found.emplace_back(mu, embed * K);
    if (d == m) break;

    // Projection P = K X onto the cyclic subspace commuting with op:
    // X K = I_d and C X = X op, with C the companion matrix of mu.
    const Matrix<T> C = companion_matrix(mu);
    const std::size_t unknowns = d * m;
    auto var = [m](std::size_t r, std::size_t c) { return r * m + c; };
    Matrix<T> sys(d * d + d * m, unknowns, R);
    Vec<T> rhs(d * d + d * m, R.zero());
    std::size_t eq = 0;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c, ++eq) {
        for (std::size_t k = 0; k < m; ++k) sys(eq, var(r, k)) += K(k, c);
        if (r == c) rhs[eq] = R.one();
      }
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < m; ++c, ++eq) {
        for (std::size_t k = 0; k < d; ++k) sys(eq, var(k, c)) += C(r, k);
        for (std::size_t k = 0; k < m; ++k) sys(eq, var(r, k)) -= op(k, c);
      }
    const auto sol = solve(sys, rhs);
    if (!sol) fail(ErrorCode::Internal, "no invariant complement for a maximal vector");
    Matrix<T> X(d, m, R);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < m; ++c) X(r, c) = (*sol)[var(r, c)];
    const Matrix<T> comp = Matrix<T>::identity(m, R) - K * X;

    // Independent columns of I - P span the complement.
    const auto ef = rref(comp);
    if (ef.pivots.size() != m - d) fail(ErrorCode::Internal, "complement has wrong dimension");
    Matrix<T> Y(m, m - d, R);
    for (std::size_t j = 0; j < ef.pivots.size(); ++j) Y.set_column(j, comp.column(ef.pivots[j]));

    // Restriction: solve Y op' = op Y using m - d independent rows of Y.
    const auto rows = rref(Y.transpose()).pivots;
    Matrix<T> Ysq(m - d, m - d, R);
    const Matrix<T> opY = op * Y;
    Matrix<T> rhsRows(m - d, m - d, R);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m - d; ++c) {
        Ysq(r, c) = Y(rows[r], c);
        rhsRows(r, c) = opY(rows[r], c);
      }
    op = inverse(Ysq) * rhsRows;
    embed = embed * Y;
  }

  FrobeniusForm<T> out;
  Matrix<T> S(n, n, R);
  out.rcf = Matrix<T>(n, n, R);
  std::size_t offset = 0;
  for (auto it = found.rbegin(); it != found.rend(); ++it) {
    const auto& [f, cols] = *it;
    out.blocks.push_back(f);
    out.rcf.set_block(offset, offset, companion_matrix(f));
    S.set_block(0, offset, cols);
    offset += cols.cols();
  }
  out.transform.g = inverse(S);
  out.transform.g_inv = S;
  out.transform.B = out.rcf;
  out.transform.verified = verify_certificate(a, out.transform);
  if (!out.transform.verified) fail(ErrorCode::Internal, "frobenius transform failed verification");
  return out;
}

/// Coefficientwise membership of a monic polynomial in R[x] for the subrings
/// Z of Q and Z[alpha] of Q(beta).
bool monic_divisor_integrality(const Poly<Rational>& f);
bool monic_divisor_integrality(const Poly<Cubic>& f);

}  // namespace simcert
