#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simcert/canonical.hpp"
#include "simcert/counterexample.hpp"

using namespace simcert;

namespace {

using CM = Matrix<Cubic>;

Cubic beta_coords(long a, long b, long c) { return Cubic(Rational(a), Rational(b), Rational(c)); }

const ForcedProduct& product(const ObstructionReport& r, const std::string& name) {
  for (const auto& p : r.forced_products)
    if (p.name == name) return p;
  FAIL("missing forced product " << name);
  return r.forced_products.front();
}

}  // namespace

TEST_CASE("Brewer matrix entries") {
  const CM a = brewer_matrix();
  CHECK(a.trace() == Cubic(0));
  CHECK(a(0, 2) == beta_coords(0, 2, 0));
  CHECK(a(1, 0) == beta_coords(0, 4, 0));
  CHECK(a(2, 1) == Cubic::alpha());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(in_z_alpha(a(i, j)));
}

TEST_CASE("forced products for the diagonal (1, -1, 0)") {
  const CM a = brewer_matrix();
  const ObstructionReport r = forced_products_obstruction(a, {Cubic(1), Cubic(-1), Cubic(0)});
  CHECK(r.minimal_poly.degree() == 2);
  CHECK(r.minimal_poly.coeff(1) == beta_coords(0, 0, -2));
  CHECK(r.minimal_poly.coeff(0) == beta_coords(0, -16, 0));
  CHECK(product(r, "P13").value == beta_coords(0, 8, 2));
  CHECK(product(r, "P23").value == beta_coords(0, 8, -2));
  CHECK_FALSE(product(r, "P13").in_subring);
  CHECK_FALSE(product(r, "P23").in_subring);
  CHECK(r.verdict == ObstructionVerdict::Obstructed);

  // The three diagonal equations of m(B) = 0, recomputed directly.
  const Cubic& p = r.minimal_poly.coeff(1);
  const Cubic& q = r.minimal_poly.coeff(0);
  const Cubic p12 = product(r, "P12").value, p13 = product(r, "P13").value, p23 = product(r, "P23").value;
  const Cubic g[3] = {Cubic(1), Cubic(-1), Cubic(0)};
  CHECK(g[0] * g[0] + p12 + p13 + p * g[0] + q == Cubic(0));
  CHECK(g[1] * g[1] + p12 + p23 + p * g[1] + q == Cubic(0));
  CHECK(g[2] * g[2] + p13 + p23 + p * g[2] + q == Cubic(0));
}

TEST_CASE("zero diagonal is inconclusive") {
  const ObstructionReport r = forced_products_obstruction(brewer_matrix(), {Cubic(0), Cubic(0), Cubic(0)});
  REQUIRE(r.forced_products.size() == 3);
  for (const auto& fp : r.forced_products) {
    CHECK(fp.value == beta_coords(0, 8, 0));
    CHECK(fp.value == Cubic(4) * Cubic::alpha());
    CHECK(fp.in_subring);
  }
  CHECK(r.verdict == ObstructionVerdict::Inconclusive);
}

TEST_CASE("obstruction preconditions") {
  const CM cyclic = CM::from_rows({{Cubic(0), Cubic(0), Cubic(1)}, {Cubic(1), Cubic(0), Cubic(0)},
                                   {Cubic(0), Cubic(1), Cubic(0)}});
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code([&] { forced_products_obstruction(cyclic, {Cubic(0), Cubic(0), Cubic(0)}); }) ==
        ErrorCode::MinpolyDegreeNotTwo);
  CHECK(code([&] { forced_products_obstruction(brewer_matrix(), {Cubic(1), Cubic(0), Cubic(0)}); }) ==
        ErrorCode::TargetTraceMismatch);
}

TEST_CASE("Brewer report") {
  const BrewerReport rep = brewer_obstruction_report();
  const auto& m = rep.obstruction.minimal_poly;
  CHECK(eval_at_matrix(m, rep.matrix).is_zero_matrix());
  CHECK(eval_at_matrix(rep.charpoly, rep.matrix).is_zero_matrix());
  CHECK(divides(m, rep.charpoly));
  CHECK(rep.charpoly.coeff(0) == Cubic(-64));
  CHECK(rep.charpoly.coeff(1) == Cubic(-12) * Cubic::alpha());
  CHECK(rep.charpoly.coeff(2) == Cubic(0));
  for (const auto& c : rep.charpoly_integrality) CHECK(c.in_subring);

  REQUIRE(rep.obstruction.integrality.size() == 3);
  CHECK_FALSE(rep.obstruction.integrality[1].in_subring);
  CHECK(rep.obstruction.integrality[0].in_subring);
  CHECK(rep.obstruction.integrality[0].value == Cubic(-8) * Cubic::alpha());
  CHECK(rep.obstruction.integrality[1].value == -(Cubic::alpha() * Cubic::alpha() / Cubic(2)));
  CHECK(rep.obstruction.verdict == ObstructionVerdict::Obstructed);
  CHECK_FALSE(rep.alternate_annihilates);
}

TEST_CASE("obstructed targets admit no annihilated sample") {
  std::mt19937_64 rng(777);
  const CM a = brewer_matrix();
  const Poly<Cubic> m = minpoly(a);
  std::uniform_int_distribution<long> pick(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 5000 && checked < 600; ++trial) {
    // Z[alpha] diagonals summing to zero.
    const Cubic g1 = Cubic::from_alpha_coords(pick(rng), pick(rng), pick(rng));
    const Cubic g2 = Cubic::from_alpha_coords(pick(rng), pick(rng), pick(rng));
    const Vec<Cubic> target{g1, g2, -(g1 + g2)};
    const ObstructionReport r = forced_products_obstruction(a, target);
    CM b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = i == j ? target[i] : oracle::random_z_alpha(rng, 6);
    if (r.verdict == ObstructionVerdict::Obstructed) {
      CHECK_FALSE(eval_at_matrix(m, b).is_zero_matrix());
      ++checked;
    }
    for (const auto& fp : r.forced_products) CHECK(fp.in_subring == in_z_alpha(fp.value));
  }
  CHECK(checked >= 500);
}
