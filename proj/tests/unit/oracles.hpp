#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <cstdint>
#include <random>
#include <vector>

#include "simcert/matrix.hpp"
#include "simcert/poly.hpp"

namespace oracle {

using namespace simcert;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  if (n == 0) return R.one();
  if (n == 1) return a(0, 0);
  T total = R.zero();
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1, R);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    T term = a(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Coefficient of x^(n-k) is (-1)^k times the sum of k x k principal minors.
template <class T>
Poly<T> principal_minor_charpoly(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  std::vector<T> coeffs(n + 1, R.zero());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const std::size_t k = idx.size();
    Matrix<T> sub(k, k, R);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = a(idx[r], idx[c]);
    T m = cofactor_det(sub);
    if (k % 2 == 1) m = -m;
    coeffs[n - k] += m;
  }
  return Poly<T>(R, coeffs);
}

// Smallest k with A^k in the span of I, A, ..., A^(k-1).
template <class T>
std::size_t minpoly_degree_by_powers(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  const Ring<T>& R = a.ring();
  Matrix<T> power = Matrix<T>::identity(n, R);
  std::vector<Vec<T>> flat;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec<T> v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(power(i, j));
    flat.push_back(v);
    Matrix<T> m(n * n, flat.size(), R);
    for (std::size_t c = 0; c < flat.size(); ++c) m.set_column(c, flat[c]);
    if (rank(m) < flat.size()) return k;
    power = power * a;
  }
  return n;
}

inline long brute_gcd(long a, long b) {
  if (a == 0 && b == 0) return 0;
  const long top = std::max(a < 0 ? -a : a, b < 0 ? -b : b);
  for (long d = top; d >= 1; --d)
    if (a % d == 0 && b % d == 0) return d;
  return 1;
}

inline long crt_enumerate(const std::vector<std::pair<long, long>>& residues) {
  long product = 1;
  for (const auto& [r, m] : residues) product *= m;
  for (long x = 0; x < product; ++x) {
    bool ok = true;
    for (const auto& [r, m] : residues) ok = ok && ((x - r) % m + m) % m == 0;
    if (ok) return x;
  }
  return -1;
}

inline Cubic random_cubic(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, 4);
  auto q = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  return Cubic(q(), q(), q());
}

inline Cubic random_z_alpha(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return Cubic::from_alpha_coords(d(rng), d(rng), d(rng));
}

}  // namespace oracle
