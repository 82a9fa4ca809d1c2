#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simcert/counterexample.hpp"
#include "simcert/matrix.hpp"
#include "testkit.hpp"

using namespace simcert;

namespace {

using ZM = Matrix<Integer>;
using QM = Matrix<Rational>;

// Product of random transvections and sign flips.
ZM random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  ZM u = ZM::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> t(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      u.scale_row(i, Integer(-1));
    } else {
      u.add_row_multiple(i, j, Integer(t(rng)));
    }
  }
  return u;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det(ZM::identity(3)) == 1);
  CHECK(det(ZM::from_ints({{1, 0}, {1, 1}})) == 1);
  const Matrix<Cubic> brewer = brewer_matrix();
  CHECK(det(brewer) == Cubic(64));
  CHECK(oracle::cofactor_det(brewer) == Cubic(64));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 5;
    const ZM a = testkit::random_integer_matrix(rng, n, 9);
    CHECK(det(a) == oracle::cofactor_det(a));
    const QM q = to_rational(a);
    CHECK(det(q) == oracle::cofactor_det(q));
    const Matrix<Fp> f = reduce_mod(a, Ring<Fp>(5));
    CHECK(det(f) == oracle::cofactor_det(f));
  }
  std::mt19937_64 crng(9);
  for (int k = 0; k < 50; ++k) {
    Matrix<Cubic> c(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) c(i, j) = oracle::random_z_alpha(crng, 3);
    CHECK(det(c) == oracle::cofactor_det(c));
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse(ZM::from_ints({{1, 0}, {1, 1}})) == ZM::from_ints({{1, 0}, {-1, 1}}));
  try {
    (void)inverse(ZM::from_ints({{2, 0}, {0, 1}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertibleInRing);
  }
  CHECK(inverse(QM::from_ints({{1, 1}, {1, 2}})) == QM::from_ints({{2, -1}, {-1, 1}}));
  CHECK_THROWS_AS(inverse(QM::from_ints({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("random unimodular products") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 5;
    const ZM u = random_unimodular(rng, n, 12);
    const Integer d = det(u);
    CHECK((d == 1 || d == -1));
    CHECK(inverse(u) * u == ZM::identity(n));
    CHECK(u * inverse(u) == ZM::identity(n));
  }
}

TEST_CASE("is_scalar") {
  CHECK(is_scalar(ZM::from_ints({{2, 0}, {0, 2}})));
  CHECK_FALSE(is_scalar(ZM::from_ints({{1, 2}, {-3, -1}})));
  CHECK(is_scalar(ZM::from_ints({{7}})));
  CHECK_FALSE(is_scalar(ZM::from_ints({{1, 0}, {0, 2}})));
}

TEST_CASE("rank, nullspace and solve over fields") {
  const QM a = QM::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(a.apply(ns[0]) == Vec<Rational>(3, 0));
  const auto x = solve(a, Vec<Rational>{1, 2, 1});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == Vec<Rational>{1, 2, 1});
  CHECK_FALSE(solve(a, Vec<Rational>{1, 0, 0}).has_value());
}

TEST_CASE("basis completion keeps the given columns") {
  const Ring<Rational> Q;
  const QM p = complete_basis<Rational>({{1, 1, 0}, {0, 1, 1}}, 3, Q);
  CHECK(p.column(0) == Vec<Rational>{1, 1, 0});
  CHECK(p.column(1) == Vec<Rational>{0, 1, 1});
  CHECK(det(p) != 0);
}

TEST_CASE("direct sum and conversions") {
  const ZM a = direct_sum(ZM::from_ints({{1, 2}, {4, 3}}), ZM::from_ints({{5}}));
  CHECK(a == ZM::from_ints({{1, 2, 0}, {4, 3, 0}, {0, 0, 5}}));
  CHECK(to_integer(to_rational(a)).value() == a);
  QM h = to_rational(a);
  h(0, 0) = Rational(1, 2);
  CHECK_FALSE(to_integer(h).has_value());
  CHECK(reduce_mod(ZM::from_ints({{-1}}), Ring<Fp>(7))(0, 0).residue() == 6);
}
