#include <doctest.h>

#include <random>

#include "simcert/poly.hpp"

using namespace simcert;

namespace {

using QPoly = Poly<Rational>;
const Ring<Rational> Q{};

QPoly qp(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return QPoly(Q, c);
}

QPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = d(rng);
  return QPoly(Q, c);
}

}  // namespace

TEST_CASE("division examples") {
  PolyDivision<Rational> d = divmod(qp({-1, 0, 1}), qp({-1, 1}));
  CHECK(d.quotient == qp({1, 1}));
  CHECK(d.remainder.is_zero());

  d = divmod(qp({0, 0, 0, 1}), qp({0, 1}));
  CHECK(d.quotient == qp({0, 0, 1}));
  CHECK(d.remainder.is_zero());

  d = divmod(qp({1, 0, 1}), qp({1, 1}));
  CHECK(d.quotient == qp({-1, 1}));
  CHECK(d.remainder == qp({2}));

  CHECK_THROWS_AS(divmod(qp({1, 1}), QPoly(Q)), Error);
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 500; ++k) {
    const QPoly f = random_poly(rng, 6);
    QPoly g = random_poly(rng, 4);
    if (g.is_zero()) continue;
    const PolyDivision<Rational> d = divmod(f, g);
    CHECK(d.quotient * g + d.remainder == f);
    CHECK(d.remainder.degree() < g.degree());
  }
}

TEST_CASE("gcd and lcm") {
  const QPoly a = qp({-1, 1}) * qp({-2, 1});
  const QPoly b = qp({-1, 1}) * qp({3, 1});
  CHECK(gcd(a, b) == qp({-1, 1}));
  CHECK(lcm(a, b) == qp({-1, 1}) * qp({-2, 1}) * qp({3, 1}));
  CHECK(divides(gcd(a, b), a));
  CHECK_FALSE(divides(qp({-2, 1}), b));
  CHECK(make_monic(qp({2, 4})) == QPoly(Q, {Rational(1, 2), 1}));
}

TEST_CASE("polynomials over a prime field") {
  const Ring<Fp> F(2);
  const Poly<Fp> x = Poly<Fp>::x(F);
  const Poly<Fp> one = Poly<Fp>::constant(F, F.one());
  // (x + 1)^2 = x^2 + 1 in characteristic 2.
  CHECK((x + one) * (x + one) == x * x + one);
  CHECK(divmod(x * x + one, x + one).remainder.is_zero());
}

TEST_CASE("companion matrix and evaluation") {
  const QPoly f = qp({-1, 0, 0, 1});
  const Matrix<Rational> c = companion_matrix(f);
  CHECK(c == Matrix<Rational>::from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(eval_at_matrix(f, c).is_zero_matrix());
  CHECK(f.eval(Rational(1)) == 0);
  CHECK(qp({1, 2, 3}).eval(Rational(2)) == 17);
}
