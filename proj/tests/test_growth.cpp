#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hgl/growth.hpp"

using namespace hgl;

namespace {

LengthSequence seq_of(long long n0, std::vector<long long> vals) {
  LengthSequence s;
  s.n0 = n0;
  for (long long v : vals) s.values.push_back(v);
  return s;
}

// integer-valued quasi-polynomial in the binomial basis, one polynomial
// per residue class
struct RandomQP {
  int period;
  std::vector<std::vector<long long>> binom;  // class r -> binomial coefficients

  long long eval(long long n) const {
    const auto& c = binom[((n % period) + period) % period];
    long long acc = 0;
    for (size_t k = 0; k < c.size(); ++k) {
      // C(n, k)
      long long b = 1;
      for (size_t j = 0; j < k; ++j) b = b * (n - static_cast<long long>(j)) / (j + 1);
      acc += c[k] * b;
    }
    return acc;
  }

  int degree() const {
    int d = -1;
    for (const auto& c : binom)
      for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) d = std::max(d, static_cast<int>(k));
    return d;
  }
};

}  // namespace

TEST_CASE("linear sequence n+1") {
  auto rep = fit_polynomial(seq_of(1, {2, 3, 4, 5, 6, 7, 8, 9}), 2);
  REQUIRE(rep.has_value());
  CHECK(rep->period == 1);
  CHECK(rep->degree == 1);
  CHECK(rep->is_true_polynomial);
  CHECK(rep->normalized_leading_coefficient == 1);
  CHECK(rep->nlc_is_integer);
  CHECK(rep->stable_from == 1);
  REQUIRE(rep->classes.size() == 1);
  CHECK(rep->classes[0].coeffs == RatPoly{1, 1});  // n + 1
}

TEST_CASE("constant zero fits the zero polynomial") {
  auto rep = fit_polynomial(seq_of(1, {0, 0, 0, 0, 0, 0, 0, 0}), 2);
  REQUIRE(rep.has_value());
  CHECK(rep->degree == -1);
  CHECK(rep->normalized_leading_coefficient == 0);
}

TEST_CASE("the period-2 counterexample values refuse a true polynomial") {
  // lengths n^2/4 resp. (n^2-1)/4 for n = 2..12
  LengthSequence s = seq_of(2, {1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36});
  CHECK(!fit_polynomial(s, 2).has_value());

  auto rep = fit_quasipolynomial(s, 6, 2);
  REQUIRE(rep.has_value());
  CHECK(rep->period == 2);
  CHECK(rep->degree == 2);
  CHECK(!rep->is_true_polynomial);
  CHECK(rep->stable_from == 2);
  CHECK(rep->normalized_leading_coefficient == Rational(1, 2));
  CHECK(!rep->nlc_is_integer);
  REQUIRE(rep->classes.size() == 2);
  CHECK(rep->classes[0].coeffs == RatPoly{0, 0, Rational(1, 4)});              // n^2/4
  CHECK(rep->classes[1].coeffs == RatPoly{Rational(-1, 4), 0, Rational(1, 4)});  // (n^2-1)/4
  CHECK(rat_poly_str(rep->classes[0].coeffs) == "1/4*n^2");
  CHECK(rat_poly_str(rep->classes[1].coeffs) == "1/4*n^2 - 1/4");
}

TEST_CASE("true polynomials get period 1 from the quasip fitter") {
  LengthSequence s = seq_of(1, {1, 4, 9, 16, 25, 36, 49, 64});
  auto a = fit_polynomial(s, 2);
  auto b = fit_quasipolynomial(s, 6, 2);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(b->period == 1);
  CHECK(a->degree == b->degree);
  CHECK(a->classes[0].coeffs == b->classes[0].coeffs);
  CHECK(a->normalized_leading_coefficient == 2);
}

TEST_CASE("alternating constants have period 2") {
  auto rep = fit_quasipolynomial(seq_of(1, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1}), 4, 2);
  REQUIRE(rep.has_value());
  CHECK(rep->period == 2);
  CHECK(rep->degree == 0);
  // n odd (residue 1) gives 0, n even gives 1
  for (const auto& c : rep->classes) {
    if (c.residue == 0) CHECK(eval_rat_poly(c.coeffs, 2) == 1);
    if (c.residue == 1) CHECK(eval_rat_poly(c.coeffs, 1) == 0);
  }
}

TEST_CASE("eventual fits report stable_from past the transient") {
  // junk at n=1,2 then n^2
  LengthSequence s = seq_of(1, {7, 100, 9, 16, 25, 36, 49, 64, 81, 100});
  auto rep = fit_polynomial(s, 3);
  REQUIRE(rep.has_value());
  CHECK(rep->degree == 2);
  CHECK(rep->stable_from == 3);
  CHECK(rep->matches(3, 9));
  CHECK(!rep->matches(1, 7));
}

TEST_CASE("errors: INFINITE entries and too-short sequences") {
  LengthSequence inf;
  inf.n0 = 1;
  inf.values = {1, std::nullopt, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(fit_polynomial(inf, 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_polynomial(seq_of(1, {1, 2, 3}), 2), std::invalid_argument);
}

TEST_CASE("round trip: random integer quasi-polynomials are recovered exactly") {
  std::mt19937 rng(20240809);
  std::uniform_int_distribution<int> period_d(1, 4);
  std::uniform_int_distribution<int> deg_d(0, 3);
  std::uniform_int_distribution<long long> coef_d(-4, 4);

  int recovered = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RandomQP qp;
    qp.period = period_d(rng);
    int deg = deg_d(rng);
    qp.binom.assign(qp.period, {});
    for (int r = 0; r < qp.period; ++r) {
      qp.binom[r].assign(deg + 1, 0);
      for (int k = 0; k <= deg; ++k) qp.binom[r][k] = coef_d(rng);
    }

    const long long n0 = 1, n1 = 40;
    LengthSequence s;
    s.n0 = n0;
    for (long long n = n0; n <= n1; ++n) s.values.push_back(qp.eval(n));

    auto rep = fit_quasipolynomial(s, 4, 3);
    REQUIRE(rep.has_value());
    // the minimal period divides the sampled one
    CHECK(qp.period % rep->period == 0);
    CHECK(rep->degree == qp.degree());
    // exact agreement on the sample and on an extrapolation window
    for (long long n = n0; n <= n1 + 8; ++n) CHECK(rep->matches(n, qp.eval(n)));
    ++recovered;
  }
  CHECK(recovered == 200);
}

TEST_CASE("integer-valued true polynomials have integer normalized leading coefficient") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coef_d(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    RandomQP qp;
    qp.period = 1;
    qp.binom = {{coef_d(rng), coef_d(rng), coef_d(rng), coef_d(rng)}};
    LengthSequence s;
    s.n0 = 0;
    for (long long n = 0; n < 16; ++n) s.values.push_back(qp.eval(n));
    auto rep = fit_polynomial(s, 3);
    REQUIRE(rep.has_value());
    CHECK(rep->nlc_is_integer);
  }
}

TEST_CASE("degree bound audit branches") {
  GrowthReport quadratic;
  quadratic.degree = 2;
  // dim branch with equality
  BoundAudit a = audit_degree_bound(quadratic, 2, 2);
  CHECK(a.bound == 2);
  CHECK(a.satisfied);
  CHECK(a.equality_applies);
  CHECK(a.equality_holds);
  CHECK(a.equality_case);
  CHECK(a.attains_bound);

  GrowthReport linear;
  linear.degree = 1;
  // spread branch attained, dim branch vacuous
  BoundAudit b = audit_degree_bound(linear, -1, 2);
  CHECK(b.bound == 1);
  CHECK(b.satisfied);
  CHECK(!b.equality_applies);
  CHECK(b.equality_case);  // vacuous implication
  CHECK(b.attains_bound);

  // dim branch equality with spread slack
  BoundAudit c = audit_degree_bound(linear, 1, 1);
  CHECK(c.bound == 1);
  CHECK(c.equality_applies);
  CHECK(c.equality_holds);
  CHECK(c.equality_case);

  GrowthReport flat;
  flat.degree = 0;
  BoundAudit d = audit_degree_bound(flat, 2, 2);
  CHECK(d.satisfied);
  CHECK(d.equality_applies);
  CHECK(!d.equality_holds);
  CHECK(!d.equality_case);
}
