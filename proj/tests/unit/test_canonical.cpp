#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simcert/canonical.hpp"
#include "simcert/counterexample.hpp"
#include "testkit.hpp"

using namespace simcert;

namespace {

using QM = Matrix<Rational>;
using QP = Poly<Rational>;
const Ring<Rational> Q{};

QP qp(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return QP(Q, c);
}

template <class T>
void check_frobenius(const Matrix<T>& a, std::uint64_t seed = 0) {
  const FrobeniusForm<T> f = frobenius_form(a, seed);
  CHECK(f.blocks == invariant_factors(a));
  CHECK(verify_certificate(a, f.transform));
  CHECK(f.transform.B == f.rcf);
  std::size_t total = 0;
  Matrix<T> expected(0, 0, a.ring());
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    CHECK(f.blocks[i].is_monic());
    if (i + 1 < f.blocks.size()) CHECK(divides(f.blocks[i], f.blocks[i + 1]));
    total += static_cast<std::size_t>(f.blocks[i].degree());
    expected = direct_sum(expected, companion_matrix(f.blocks[i]));
  }
  CHECK(total == a.rows());
  CHECK(f.rcf == expected);
}

}  // namespace

TEST_CASE("characteristic polynomial examples") {
  CHECK(charpoly(QM::identity(2)) == qp({1, -2, 1}));
  const QP f = qp({3, -1, 0, 2, 1});
  CHECK(charpoly(companion_matrix(f)) == f);
  const Matrix<Cubic> brewer = brewer_matrix();
  const Cubic alpha = Cubic::alpha();
  const Poly<Cubic> expected(Ring<Cubic>{}, {Cubic(-64), Cubic(-12) * alpha, Cubic(0), Cubic(1)});
  CHECK(charpoly(brewer) == expected);
  CHECK(oracle::principal_minor_charpoly(brewer) == expected);
}

TEST_CASE("characteristic polynomial agrees with principal minors and satisfies Cayley-Hamilton") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + k % 6;
    const Matrix<Integer> a = testkit::random_integer_matrix(rng, n, 9);
    const Poly<Integer> chi = charpoly(a);
    CHECK(chi.is_monic());
    CHECK(chi.degree() == static_cast<int>(n));
    CHECK(eval_at_matrix(chi, a).is_zero_matrix());
    if (n <= 5) CHECK(chi == oracle::principal_minor_charpoly(a));
  }
  for (long p : {2L, 3L, 5L, 101L}) {
    const Ring<Fp> F(p);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = 1 + k % 6;
      const Matrix<Fp> a = reduce_mod(testkit::random_integer_matrix(rng, n, 50), F);
      const Poly<Fp> chi = charpoly(a);
      CHECK(eval_at_matrix(chi, a).is_zero_matrix());
      if (n <= 4) CHECK(chi == oracle::principal_minor_charpoly(a));
    }
  }
}

TEST_CASE("minimal polynomial examples") {
  CHECK(minpoly(Rational(3) * QM::identity(3)) == qp({-3, 1}));
  CHECK(minpoly(QM::from_ints({{0, 1}, {1, 0}})) == qp({-1, 0, 1}));
  const Cubic beta = Cubic::beta();
  const Poly<Cubic> m = minpoly(brewer_matrix());
  CHECK(m == Poly<Cubic>(Ring<Cubic>{}, {Cubic(-16) * beta, Cubic(0, 0, -2), Cubic(1)}));
  const Cubic alpha = Cubic::alpha();
  CHECK(m.coeff(1) == -(alpha * alpha * Cubic(Rational(1, 2))));
  CHECK(m.coeff(0) == Cubic(-8) * alpha);
}

TEST_CASE("minimal polynomial: annihilates, divides charpoly, has least degree") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 1 + k % 5;
    Matrix<Integer> a = testkit::random_integer_matrix(rng, n, 4);
    // Repeated blocks make the minimal polynomial a proper divisor.
    if (k % 2 == 1 && n >= 2) {
      const Matrix<Integer> b = testkit::random_integer_matrix(rng, (n + 1) / 2, 3);
      a = direct_sum(b, b).block(0, 0, n, n);
    }
    const QM q = to_rational(a);
    const QP m = minpoly(q);
    CHECK(m.is_monic());
    CHECK(eval_at_matrix(m, q).is_zero_matrix());
    CHECK(divides(m, charpoly(q)));
    CHECK(static_cast<std::size_t>(m.degree()) == oracle::minpoly_degree_by_powers(q));
  }
  for (long p : {2L, 3L}) {
    const Ring<Fp> F(p);
    for (int k = 0; k < 100; ++k) {
      const Matrix<Fp> a = reduce_mod(testkit::random_integer_matrix(rng, 1 + k % 5, 5), F);
      const Poly<Fp> m = minpoly(a);
      CHECK(eval_at_matrix(m, a).is_zero_matrix());
      CHECK(divides(m, charpoly(a)));
      CHECK(static_cast<std::size_t>(m.degree()) == oracle::minpoly_degree_by_powers(a));
    }
  }
}

TEST_CASE("invariant factor examples") {
  CHECK(invariant_factors(QM::identity(2)) == std::vector<QP>{qp({-1, 1}), qp({-1, 1})});
  CHECK(invariant_factors(QM::from_ints({{0, 1}, {1, 0}})) == std::vector<QP>{qp({-1, 0, 1})});
  CHECK(invariant_factors(QM::from_ints({{1, 0}, {0, 2}})) == std::vector<QP>{qp({-1, 1}) * qp({-2, 1})});
}

TEST_CASE("Frobenius form examples") {
  const QM c = companion_matrix(qp({-1, 0, 0, 1}));
  const FrobeniusForm<Rational> fc = frobenius_form(c);
  CHECK(fc.rcf == c);
  CHECK(fc.transform.g == QM::identity(3));

  const FrobeniusForm<Rational> f = frobenius_form(QM::from_ints({{1, 2}, {4, 3}}));
  CHECK(f.blocks == std::vector<QP>{qp({-5, -4, 1})});
  CHECK(f.rcf == QM::from_ints({{0, 5}, {1, 4}}));

  const FrobeniusForm<Rational> s = frobenius_form(QM::identity(2));
  CHECK(s.rcf == QM::identity(2));
  CHECK(s.blocks == std::vector<QP>{qp({-1, 1}), qp({-1, 1})});
}

TEST_CASE("Frobenius form agrees with Smith-form invariant factors") {
  std::mt19937_64 rng(59);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 5;
    Matrix<Integer> a = testkit::random_integer_matrix(rng, n, 3);
    if (k % 5 == 0) {
      // Block repetition gives several invariant factors.
      const Matrix<Integer> b = testkit::random_integer_matrix(rng, (n + 1) / 2, 2);
      a = direct_sum(b, b).block(0, 0, n, n);
    }
    const QM q = to_rational(a);
    check_frobenius(q, k);
    for (const QP& f : invariant_factors(q)) CHECK(monic_divisor_integrality(f));
    QP prod = QP::constant(Q, 1);
    for (const QP& f : invariant_factors(q)) prod *= f;
    CHECK(prod == charpoly(q));
  }
  const Ring<Fp> F2(2);
  for (int k = 0; k < 100; ++k) check_frobenius(reduce_mod(testkit::random_integer_matrix(rng, 1 + k % 5, 3), F2));
  check_frobenius(brewer_matrix());
}

TEST_CASE("Frobenius form with a non-cyclic standard basis") {
  // No standard basis vector is maximal; the search must combine them.
  const QM a = QM::from_ints({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}});
  check_frobenius(a);
  const QM j = QM::from_ints({{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 2}});
  check_frobenius(j);
  CHECK(frobenius_form(j).blocks.size() == 2);
}

TEST_CASE("monic divisor integrality") {
  CHECK(monic_divisor_integrality(qp({-5, 1})));
  CHECK_FALSE(monic_divisor_integrality(QP(Q, {Rational(1, 2), 1})));
  const Cubic beta = Cubic::beta();
  const Poly<Cubic> m(Ring<Cubic>{}, {Cubic(-16) * beta, Cubic(0, 0, -2), Cubic(1)});
  CHECK_FALSE(monic_divisor_integrality(m));
  CHECK(monic_divisor_integrality(charpoly(brewer_matrix())));
  CHECK_THROWS_AS(monic_divisor_integrality(qp({1, 2})), Error);
}
