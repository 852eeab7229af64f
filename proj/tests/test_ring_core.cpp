#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/testutil.hpp"

using namespace hgl;
using hgltest::pp;

TEST_CASE("prime field arithmetic is exact and invertible") {
  Scalar a = Scalar::of_int(32003, -5);
  CHECK(a.fp_value() == 31998);
  CHECK((a * a.inverse()).is_one());
  CHECK((a + a.negated()).is_zero());
  CHECK(is_odd_prime(32003));
  CHECK(!is_odd_prime(32001));

  Scalar q = Scalar::of_rational(Rational(3, 4));
  CHECK((q * q.inverse()).is_one());
  CHECK_THROWS_AS((void)(a + q), std::invalid_argument);
}

TEST_CASE("weighted degree") {
  RingPtr R = Ring::make({"x", "y"}, 0, {1, 2});
  CHECK(R->monomial({2, 1}).degree() == 4);
  CHECK(R->monomial({0, 0}).degree() == 0);

  RingPtr V = hgltest::ring_veronese();
  Polynomial f = pp(V, "V^2 - U*W");
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 2);
}

TEST_CASE("grevlex agrees with the textbook rule on degree-3 monomials") {
  RingPtr R = hgltest::ring_xy();
  Monomial x2y = R->monomial({2, 1});
  Monomial xy2 = R->monomial({1, 2});
  CHECK(R->compare(x2y, xy2) > 0);
  CHECK(R->compare(x2y, x2y) == 0);

  // brute enumeration: grevlex on equal total degree is lexicographic from
  // the right with reversed sign; verify antisymmetry and transitivity over
  // all degree-3 monomials in three variables
  RingPtr S = hgltest::ring_xyz();
  std::vector<Monomial> all;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      all.push_back(S->monomial({a, b, 3 - a - b}));
  for (const auto& m1 : all)
    for (const auto& m2 : all) {
      int c = S->compare(m1, m2);
      CHECK(c == -S->compare(m2, m1));
      for (const auto& m3 : all)
        if (c > 0 && S->compare(m2, m3) > 0) CHECK(S->compare(m1, m3) > 0);
    }
}

TEST_CASE("lex order puts earlier variables first") {
  RingPtr R = Ring::make({"x", "y"}, kDefaultCharacteristic, {}, MonomialOrder::lex());
  CHECK(R->compare(R->monomial({1, 0}), R->monomial({0, 1})) > 0);
  CHECK(R->compare(R->monomial({1, 0}), R->monomial({0, 5})) > 0);
}

TEST_CASE("divisibility matches componentwise comparison and respects order") {
  RingPtr R = hgltest::ring_xyz();
  hgltest::PolyGen gen(R, 7);
  for (int t = 0; t < 200; ++t) {
    Polynomial f = gen.next();
    Polynomial g = gen.next();
    if (f.is_zero() || g.is_zero()) continue;
    const Monomial& a = f.leading().mono;
    const Monomial& b = g.leading().mono;
    if (a.divides(b)) CHECK(R->compare(a, b) <= 0);  // graded order
  }
}

TEST_CASE("polynomial arithmetic examples") {
  RingPtr R = hgltest::ring_xy();
  CHECK(pp(R, "x + y") + pp(R, "x - y") == pp(R, "2*x"));

  RingPtr V = hgltest::ring_veronese();
  CHECK(pp(V, "V") * pp(V, "V") == pp(V, "V^2"));
  CHECK(pp(V, "U + V") * pp(V, "U - V") == pp(V, "U^2 - V^2"));
}

TEST_CASE("mixed-ring operands are rejected") {
  RingPtr R1 = hgltest::ring_xy();
  RingPtr R2 = hgltest::ring_xyz();
  CHECK_THROWS_AS((void)(pp(R1, "x") + pp(R2, "x")), std::invalid_argument);
}

TEST_CASE("canonical form: ring laws on random polynomials") {
  for (long long p : {32003LL, 0LL}) {
    RingPtr R = hgltest::ring_xyz(p);
    hgltest::PolyGen gen(R, 42);
    for (int t = 0; t < 80; ++t) {
      Polynomial a = gen.next(), b = gen.next(), c = gen.next();
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      for (const auto& t1 : (a * b).terms()) CHECK(!t1.coef.is_zero());
    }
  }
}

TEST_CASE("characteristic consistency: p * a = 0 in F_p") {
  RingPtr R = hgltest::ring_xy(32003);
  hgltest::PolyGen gen(R, 3);
  for (int t = 0; t < 20; ++t) {
    Polynomial a = gen.next();
    CHECK(a.scaled(Scalar::of_int(32003, 32003)).is_zero());
  }
}

TEST_CASE("text syntax round trip") {
  RingPtr V = hgltest::ring_veronese();
  for (const char* s : {"V^2 - U*W", "U", "2*U*V + 3*W^2", "-U + 1", "0"}) {
    Polynomial f = pp(V, s);
    CHECK(Polynomial::parse(V, f.str()) == f);
  }
  hgltest::PolyGen gen(V, 11);
  for (int t = 0; t < 100; ++t) {
    Polynomial f = gen.next();
    CHECK(Polynomial::parse(V, f.str()) == f);
  }
}

TEST_CASE("parse errors carry positions") {
  RingPtr R = hgltest::ring_xy();
  CHECK_THROWS_AS((void)pp(R, "x + + y"), PolyParseError);
  CHECK_THROWS_AS((void)pp(R, "2x"), PolyParseError);   // juxtaposition
  CHECK_THROWS_AS((void)pp(R, "x*z"), PolyParseError);  // unknown variable
  CHECK_THROWS_AS((void)pp(R, ""), PolyParseError);
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(Ring::make({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(Ring::make({"x"}, 4), std::invalid_argument);
  CHECK_THROWS_AS(Ring::make({"x"}, 2), std::invalid_argument);
  RingPtr base = Ring::make({"x", "y"});
  CHECK_THROWS_AS(base->with_relations({pp(base, "x + 1")}), std::invalid_argument);
  CHECK_THROWS_AS(
      base->with_relations({pp(base, "x"), pp(base, "y")}), std::invalid_argument);
}
