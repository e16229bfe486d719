#include <random>

#include "doctest.h"
#include "g2/ratfunc.hpp"

using namespace g2;

namespace {

RatFunc delta() { return RatFunc::laurent({{10, 1}, {8, 1}, {2, 1}, {0, 1}, {-2, 1}, {-8, 1}, {-10, 1}}); }

// Schoolbook product on raw coefficient vectors, independent of Poly.
std::vector<long> naive_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4), coef(-6, 6);
  auto poly = [&] {
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    return Poly(c);
  };
  Poly den;
  do den = poly();
  while (den.is_zero());
  return {poly(), den};
}

}  // namespace

TEST_CASE("normal form") {
  RatFunc q = RatFunc::q();
  CHECK(q * q / q == q);
  CHECK(equals(q.pow(2) / q, q));
  CHECK((q - q).is_zero());
  CHECK((q + 1) / (q + 1) == RatFunc(1));
  RatFunc x({Poly({2, 4})}, {Poly({6, 0, 2})});  // (2+4q)/(6+2q^2)
  CHECK(x.numerator() == Poly({1, 2}));
  CHECK(x.denominator() == Poly({3, 0, 1}));
  RatFunc neg(Poly({1}), Poly({0, -1}));  // -1/q
  CHECK(neg.denominator().leading() > 0);
  CHECK(neg == -q.inverse());
  CHECK_THROWS_AS(RatFunc(Poly({1}), Poly()), DivisionByZero);
  CHECK_THROWS_AS((void)(q / RatFunc(0)), DivisionByZero);
  CHECK(!equals(delta(), delta() + 1));
}

TEST_CASE("half content stays normalized") {
  RatFunc half(mpq_class(1, 2));
  RatFunc x = RatFunc(2) * (RatFunc::q() * half);
  CHECK(x == RatFunc::q());
  CHECK(x.denominator().is_one());
}

TEST_CASE("loop value") {
  RatFunc d = delta();
  CHECK(d.eval_at(mpq_class(1)) == 7);
  CHECK(d.eval_at(mpq_class(2)) == mpq_class(1316101, 1024));
  CHECK(d.denominator() == Poly::monomial(1, 10));
  CHECK(d.eval_at(2.0) == doctest::Approx(1316101.0 / 1024));
  CHECK_THROWS_AS((void)d.eval_at(mpq_class(0)), EvaluationError);
  CHECK_THROWS_AS((void)d.eval_at(mpq_class(-1)), EvaluationError);
  CHECK_THROWS_AS((void)(RatFunc(1) / (RatFunc::q() - 1)).eval_at(mpq_class(1)), EvaluationError);
}

TEST_CASE("product against schoolbook expansion") {
  // q^10 * delta * (q^4+q^-4) * q^4 as integer polynomials
  std::vector<long> d = {1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1};
  std::vector<long> e = {1, 0, 0, 0, 0, 0, 0, 0, 1};
  auto prod = naive_mul(d, e);
  std::vector<mpz_class> pc(prod.begin(), prod.end());
  RatFunc lhs = delta() * RatFunc::laurent({{4, 1}, {-4, 1}});
  CHECK(lhs == RatFunc(Poly(pc), Poly::monomial(1, 14)));
}

TEST_CASE("field laws on random triples") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng), z = random_ratfunc(rng);
    CHECK(equals((x + y) + z, x + (y + z)));
    CHECK(equals((x * y) * z, x * (y * z)));
    CHECK(equals(x * (y + z), x * y + x * z));
    CHECK(equals(x + y, y + x));
    CHECK(equals(x * y, y * x));
    CHECK((x - x).is_zero());
    if (!x.is_zero()) CHECK((x / x).is_one());
    if (!y.is_zero()) CHECK(equals((x / y) * y, x));
    // equals is invariant under a common factor
    Poly common({3, -1, 2});
    RatFunc scaled(x.numerator() * common, x.denominator() * common);
    CHECK(equals(scaled, x));
    CHECK(scaled == x);
  }
}

TEST_CASE("substitution is a homomorphism at rational q") {
  std::mt19937_64 rng(7);
  const mpq_class pts[] = {mpq_class(1, 3), mpq_class(2), mpq_class(7, 5), mpq_class(11, 10)};
  for (int trial = 0; trial < 40; ++trial) {
    RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng);
    for (const auto& p : pts) {
      try {
        mpq_class ex = x.eval_at(p), ey = y.eval_at(p);
        CHECK((x + y).eval_at(p) == ex + ey);
        CHECK((x * y).eval_at(p) == ex * ey);
        if (ey != 0) CHECK((x / y).eval_at(p) == ex / ey);
      } catch (const EvaluationError&) {
        // a pole at p; skip
      }
    }
  }
}

TEST_CASE("gcd") {
  Poly a = Poly({-1, 0, 1}) * Poly({1, 1, 1});  // (q^2-1)(q^2+q+1)
  Poly b = Poly({1, 1}) * Poly({2, 0, 0, 1});
  CHECK(gcd(a, b) == Poly({1, 1}));
  CHECK(gcd(Poly({0, 0, 4}), Poly({0, 6})) == Poly({0, 2}));
  CHECK(gcd(Poly(), Poly({3, -6})) == Poly({-3, 6}));
  // high-degree coprime pair
  Poly p = Poly::monomial(1, 30) + Poly(1), r = Poly::monomial(1, 17) - Poly(2);
  CHECK(gcd(p * Poly({5, 7}), r * Poly({5, 7})) == Poly({5, 7}));
}

TEST_CASE("parse and print round trip") {
  RatFunc d = delta();
  CHECK(RatFunc::parse(d.to_string()) == d);
  CHECK(RatFunc::parse("q^10+q^8+q^2+1+q^-2+q^-8+q^-10") == d);
  CHECK(RatFunc::parse("(q^2+1)/(q^4)") == (RatFunc::q().pow(2) + 1) / RatFunc::q().pow(4));
  CHECK(RatFunc::parse("-3/4") == RatFunc(mpq_class(-3, 4)));
  CHECK(RatFunc::parse("2*q - q^2").to_string() == "(-q^2+2*q)");
  CHECK(RatFunc(0).to_string() == "(0)");
  CHECK_THROWS_AS(RatFunc::parse("q^"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("(q+1"), ParseError);
  CHECK_THROWS_AS(RatFunc::parse("1/(q-q)"), ParseError);
  CHECK_THROWS_AS(RatFunc(1) / (RatFunc::q() - RatFunc::q()), DivisionByZero);
}

TEST_CASE("rational input") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("1.1") == mpq_class(11, 10));
  CHECK(parse_rational("-2.5e-1") == mpq_class(-1, 4));
  CHECK(parse_rational("2") == 2);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(to_decimal(mpq_class(1, 3), 5) == "0.33333");
}
