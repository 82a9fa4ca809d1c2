#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simcert/scalar.hpp"

using namespace simcert;

TEST_CASE("ext_gcd examples") {
  const GcdResult r = ext_gcd(2, -3);
  CHECK(r.g == 1);
  CHECK(2 * r.x + (-3) * r.y == 1);

  const GcdResult z = ext_gcd(0, 0);
  CHECK(z.g == 0);
  CHECK(z.x == 0);
  CHECK(z.y == 0);

  CHECK(ext_gcd(4, 6).g == oracle::brute_gcd(4, 6));
  CHECK(ext_gcd(4, 6).g == 2);
}

TEST_CASE("ext_gcd satisfies Bezout on sampled pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int k = 0; k < 2000; ++k) {
    const long a = d(rng), b = d(rng);
    const GcdResult r = ext_gcd(a, b);
    CHECK(r.g >= 0);
    CHECK(r.g == oracle::brute_gcd(a, b));
    CHECK(a * r.x + b * r.y == r.g);
  }
}

TEST_CASE("crt examples") {
  CHECK(crt({{1, 2}, {2, 3}}) == 5);
  CHECK(crt({{0, 7}}) == 0);
  CHECK(crt({{1, 2}, {1, 3}, {1, 5}}) == 1);
  CHECK_THROWS_AS(crt({{1, 4}, {1, 6}}), Error);
  try {
    crt({{1, 4}, {1, 6}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCoprimeModuli);
  }
}

TEST_CASE("crt agrees with enumeration") {
  std::mt19937_64 rng(5);
  const long moduli[] = {2, 3, 5, 7, 11, 13};
  for (int k = 0; k < 300; ++k) {
    std::vector<std::pair<Integer, Integer>> sys;
    std::vector<std::pair<long, long>> small;
    for (long m : moduli) {
      if (rng() % 2) continue;
      const long r = static_cast<long>(rng() % 40) - 20;
      sys.emplace_back(r, m);
      small.emplace_back(r, m);
    }
    if (sys.empty()) continue;
    CHECK(crt(sys) == oracle::crt_enumerate(small));
  }
}

TEST_CASE("rationals stay normalized") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-60, 60), pos(1, 60);
  for (int k = 0; k < 1000; ++k) {
    const Rational x = parse_rational(std::to_string(d(rng)) + "/" + std::to_string(pos(rng)));
    const Rational y = parse_rational(std::to_string(d(rng)) + "/" + std::to_string(pos(rng)));
    for (const Rational& r : {x, y, Rational(x + y), Rational(x * y), Rational(x - y)}) {
      CHECK(r.get_den() > 0);
      CHECK(gcd(r.get_num(), r.get_den()) == 1);
      Rational again = r;
      again.canonicalize();
      CHECK(again == r);
      CHECK(parse_rational(format_rational(r)) == r);
    }
  }
  CHECK(format_rational(parse_rational("0/5")) == "0");
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("prime field elements") {
  const Ring<Fp> F(101);
  const Fp a = F.from_int(-3);
  CHECK(a.residue() == 98);
  CHECK((a * a.inverse()) == F.one());
  CHECK_THROWS_AS(F.zero().inverse(), Error);
  CHECK_THROWS_AS(Ring<Fp>(91), Error);
  CHECK_THROWS_AS(Ring<Fp>(1), Error);
  CHECK(is_prime_modulus(2));
  CHECK(is_prime_modulus(999983));
  CHECK_FALSE(is_prime_modulus(1000001));
  const Ring<Fp> big(1000000007);
  const Fp x = big.from_int(123456789);
  CHECK(x * x.inverse() == big.one());
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), Error);
  for (long p : {2L, 3L, 5L, 7L, 101L}) {
    const Ring<Fp> G(p);
    for (long v = 1; v < p; ++v) CHECK(G.from_int(v) * G.from_int(v).inverse() == G.one());
  }
}

TEST_CASE("cubic multiplication examples") {
  const Cubic beta = Cubic::beta();
  const Cubic beta2(0, 0, 1);
  CHECK(beta * beta2 == Cubic(2));
  const Cubic alpha = Cubic::alpha();
  CHECK(alpha == Cubic(0, 2, 0));
  CHECK(alpha * alpha == Cubic(0, 0, 4));
  const Cubic half_alpha = alpha * Cubic(Rational(1, 2));
  CHECK(half_alpha * half_alpha * half_alpha == Cubic(2));
}

TEST_CASE("cubic multiplication matches the beta^3 = 2 formula") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 1000; ++k) {
    const Cubic x = oracle::random_cubic(rng), y = oracle::random_cubic(rng);
    const Rational &a = x.a(), &b = x.b(), &c = x.c(), &d = y.a(), &e = y.b(), &f = y.c();
    const Cubic expected(a * d + 2 * (b * f + c * e), a * e + b * d + 2 * c * f, a * f + c * d + b * e);
    CHECK(x * y == expected);
  }
}

TEST_CASE("cubic field axioms on sampled triples") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 1000; ++k) {
    const Cubic x = oracle::random_cubic(rng), y = oracle::random_cubic(rng), z = oracle::random_cubic(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Cubic(1));
  }
}

TEST_CASE("cubic inverse examples") {
  CHECK(Cubic(1).inverse() == Cubic(1));
  CHECK(Cubic::beta().inverse() == Cubic(0, 0, Rational(1, 2)));
  CHECK(Cubic(2).inverse() == Cubic(Rational(1, 2)));
  try {
    (void)Cubic().inverse();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("Z[alpha] membership") {
  CHECK(in_z_alpha(Cubic::alpha()));
  CHECK_FALSE(in_z_alpha(Cubic(0, 0, 2)));
  CHECK_FALSE(in_z_alpha(Cubic(0, 8, 2)));
  CHECK(in_z_alpha(Cubic(0, 0, 4)));
  CHECK_FALSE(in_z_alpha(Cubic::beta()));
  CHECK_FALSE(in_z_alpha(Cubic(Rational(1, 2))));
  const Cubic alpha = Cubic::alpha();
  CHECK_FALSE(in_z_alpha(alpha * alpha * Cubic(Rational(1, 2))));
  CHECK(Cubic::from_alpha_coords(1, 2, 3) == Cubic(1, 4, 12));
}

TEST_CASE("Z[alpha] is closed under sums and products") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 1000; ++k) {
    const Cubic x = oracle::random_z_alpha(rng), y = oracle::random_z_alpha(rng);
    REQUIRE(in_z_alpha(x));
    CHECK(in_z_alpha(x + y));
    CHECK(in_z_alpha(x * y));
    CHECK(in_z_alpha(x - y));
  }
}

TEST_CASE("text encodings round-trip") {
  CHECK(scalar_from_text(Ring<Cubic>{}, "0:1:0") == Cubic::beta());
  CHECK(scalar_from_text(Ring<Cubic>{}, "3") == Cubic(3));
  CHECK(scalar_from_text(Ring<Cubic>{}, to_text(Cubic(Rational(1, 2), -3, 4))) == Cubic(Rational(1, 2), -3, 4));
  CHECK(scalar_from_text(Ring<Fp>(7), "-1") == Fp(6, 7));
  CHECK(scalar_from_text(Ring<Integer>{}, "-12") == -12);
  CHECK_THROWS_AS(scalar_from_text(Ring<Integer>{}, "1/2"), Error);
  CHECK(parse_ring_tag("Qbeta") == RingTag::Qbeta);
  CHECK_THROWS_AS(parse_ring_tag("R"), Error);
}

TEST_CASE("prime factors") {
  CHECK(prime_factors(360) == std::vector<Integer>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<Integer>{97});
  CHECK(prime_factors(1).empty());
}
