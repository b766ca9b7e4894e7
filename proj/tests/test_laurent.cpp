#include <doctest.h>

#include <random>

#include "green/error.hpp"
#include "green/laurent.hpp"
#include "green/matrix.hpp"

using namespace green;

namespace {

LaurentPoly t(long k) { return LaurentPoly::t_power(k); }
LaurentPoly s(long e) { return LaurentPoly::monomial(1, e); }

// Random sparse Laurent polynomial with small rational coefficients.
LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int exp_range = 6) {
  std::uniform_int_distribution<int> terms(0, max_terms), expo(-exp_range, exp_range), num(-5, 5), den(1, 3);
  LaurentPoly p;
  for (int k = terms(rng); k > 0; --k) p += LaurentPoly::monomial(Rational(num(rng), den(rng)), expo(rng));
  return p;
}

LaurentPoly random_nonzero(std::mt19937_64& rng) {
  for (;;)
    if (auto p = random_poly(rng); !p.is_zero()) return p;
}

}  // namespace

TEST_CASE("add") {
  CHECK(t(-1) + t(-1) == LaurentPoly::monomial(2, -2));
  const auto p = t(3) - LaurentPoly::monomial(Rational(1, 2), 1);
  CHECK(p + LaurentPoly() == p);
  const auto q = (t(1) - t(-1)) + t(-1);
  CHECK(q == t(1));
  CHECK(q.term_count() == 1);
}

TEST_CASE("mul") {
  CHECK(s(1) * s(1) == t(1));
  const auto one_minus_t = LaurentPoly::from_t_coefficients({1, -1});
  CHECK(one_minus_t * LaurentPoly::from_t_coefficients({1, 1, 1}) == LaurentPoly::from_t_coefficients({1, 0, 0, -1}));
  const auto p = t(2) + LaurentPoly::monomial(Rational(-3, 4), -5);
  CHECK(p * LaurentPoly(1) == p);
}

TEST_CASE("bar") {
  CHECK(bar(t(-1)) == t(1));
  CHECK(bar(LaurentPoly(1) + t(1)) == LaurentPoly(1) + t(-1));
  const auto p = s(3) - LaurentPoly::monomial(7, -2) + LaurentPoly(2);
  CHECK(bar(bar(p)) == p);
}

TEST_CASE("divide_exact") {
  const auto one_minus_t = LaurentPoly::from_t_coefficients({1, -1});
  CHECK(divide_exact(LaurentPoly::from_t_coefficients({1, 0, 0, -1}), one_minus_t) ==
        LaurentPoly::from_t_coefficients({1, 1, 1}));
  CHECK(divide_exact(LaurentPoly(), one_minus_t).is_zero());
  CHECK_THROWS_AS(divide_exact(LaurentPoly::from_t_coefficients({1, 1}), one_minus_t), NotDivisible);
  CHECK_THROWS_AS(divide_exact(t(1), LaurentPoly()), NotDivisible);
  // Exponent bookkeeping across negative powers.
  CHECK(divide_exact(t(-3) - t(-1), t(-2)) == t(-1) - t(1));
}

TEST_CASE("rational functions") {
  const auto one_minus_t = LaurentPoly::from_t_coefficients({1, -1});
  const RationalFunction a(LaurentPoly(1), one_minus_t);
  const RationalFunction b(-t(1), one_minus_t);
  CHECK(rf_to_poly(rf_add(a, b)) == LaurentPoly(1));

  CHECK(rf_to_poly(RationalFunction(LaurentPoly::from_t_coefficients({1, 0, -1}), one_minus_t)) ==
        LaurentPoly::from_t_coefficients({1, 1}));
  CHECK_THROWS_AS(rf_to_poly(a), NotPolynomial);
  CHECK_THROWS_AS(RationalFunction(LaurentPoly(1), LaurentPoly()), ZeroDenominator);

  SUBCASE("canonical form") {
    // 2t / (2t^2 - 2t^3) reduces to t^-1 / (1 - t).
    const RationalFunction f(LaurentPoly::monomial(2, 2), LaurentPoly::monomial(2, 4) - LaurentPoly::monomial(2, 6));
    CHECK(f.numerator() == t(-1));
    CHECK(f.denominator() == one_minus_t);
    CHECK(f == RationalFunction(t(-1), one_minus_t));
  }
  SUBCASE("monomial denominators fold into the numerator") {
    const RationalFunction f(LaurentPoly(3), LaurentPoly::monomial(6, 3));
    CHECK(f.is_polynomial());
    CHECK(rf_to_poly(f) == LaurentPoly::monomial(Rational(1, 2), -3));
  }
  CHECK(rf_mul(a, RationalFunction(one_minus_t)) == RationalFunction(1));
}

TEST_CASE("ring axioms and bar as an involution on random triples") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(bar(a * b) == bar(a) * bar(b));
    CHECK(bar(a + b) == bar(a) + bar(b));
    CHECK(bar(bar(a)) == a);
  }
}

TEST_CASE("divide_exact inverts multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_nonzero(rng);
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("rational function field axioms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalFunction f(random_poly(rng), random_nonzero(rng));
    const RationalFunction g(random_poly(rng), random_nonzero(rng));
    const RationalFunction h(random_nonzero(rng), random_nonzero(rng));
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f - f == RationalFunction());
    CHECK(h * h.inverse() == RationalFunction(1));
    CHECK((f / h) * h == f);
    // Canonical form: denominator has constant term 1 and no s factor.
    CHECK((f + g).denominator().coefficient(0) == 1);
    CHECK((f + g).denominator().min_exponent() == 0);
  }
}

TEST_CASE("serialization") {
  const auto p = t(-1) * Rational(-3, 7) + s(3) + LaurentPoly(5);
  const auto j = to_json(p);
  CHECK(j.dump() == R"([[-2,"-3","7"],[0,"5","1"],[3,"1","1"]])");
  CHECK(laurent_from_json(j) == p);
  CHECK(laurent_from_json(nlohmann::json::array()).is_zero());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = random_poly(rng);
    CHECK(laurent_from_json(nlohmann::json::parse(to_json(q).dump())) == q);
    CHECK(to_json(laurent_from_json(to_json(q))).dump() == to_json(q).dump());
  }

  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"([[0,"1","0"]])")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"([[0,"x","1"]])")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"([[0,"1","1"],[0,"2","1"]])")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"([[0,"0","1"]])")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"a":1})")), ParseError);
}

TEST_CASE("to_string") {
  CHECK((t(1) - t(-1)).to_string() == "t - t^-1");
  CHECK(LaurentPoly::monomial(2, -2).to_string() == "2t^-1");
  CHECK((s(1) + LaurentPoly(1)).to_string() == "t^1/2 + 1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::monomial(Rational(-1, 2), 0).to_string() == "-1/2");
}

// ---------------------------------------------------------------------------

TEST_CASE("matrix inverse") {
  Matrix<RationalFunction> m(1, 1);
  m(0, 0) = RationalFunction(t(-1));
  const auto inv = mat_inverse(m);
  CHECK(rf_to_poly(inv(0, 0)) == t(1));

  CHECK_THROWS_AS(mat_inverse(Matrix<RationalFunction>(1, 1)), Singular);

  Matrix<RationalFunction> rank_one(2, 2);
  rank_one(0, 0) = RationalFunction(t(1));
  rank_one(0, 1) = RationalFunction(LaurentPoly(1));
  rank_one(1, 0) = RationalFunction(t(2));
  rank_one(1, 1) = RationalFunction(t(1));
  CHECK_THROWS_AS(mat_inverse(rank_one), Singular);
}

TEST_CASE("M times its inverse is exactly the identity") {
  std::mt19937_64 rng(42);
  int tested = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<RationalFunction> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = RationalFunction(random_poly(rng, 2, 3) + LaurentPoly(i == j ? 1 : 0));
    Matrix<RationalFunction> inv;
    try {
      inv = mat_inverse(m);
    } catch (const Singular&) {
      continue;
    }
    ++tested;
    CHECK(mat_mul(m, inv) == Matrix<RationalFunction>::identity(3));
    CHECK(mat_mul(inv, m) == Matrix<RationalFunction>::identity(3));
  }
  CHECK(tested >= 15);
}

TEST_CASE("mat_mul and transpose") {
  Matrix<LaurentPoly> a(2, 3);
  a(0, 0) = t(1);
  a(0, 2) = LaurentPoly(2);
  a(1, 1) = t(-1);
  const auto at = mat_transpose(a);
  CHECK(at.rows() == 3);
  CHECK(at(2, 0) == LaurentPoly(2));
  const auto g = mat_mul(a, at);
  CHECK(g(0, 0) == t(2) + LaurentPoly(4));
  CHECK(g(1, 1) == t(-2));
  CHECK(g(0, 1).is_zero());
  CHECK(is_symmetric(g));
  CHECK_THROWS_AS(mat_mul(a, a), std::invalid_argument);
}
