#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylab/series.hpp"

using namespace weylab;

namespace {

TruncSeries random_series(std::mt19937& rng, unsigned order, bool zero_const = false) {
  std::uniform_int_distribution<int> coef(-4, 4);
  TruncSeries f(order);
  for (unsigned k = zero_const ? 1 : 0; k <= order; ++k) f[k] = coef(rng);
  return f;
}

TruncSeries one_minus_4x(unsigned order) {
  TruncSeries t = TruncSeries::one(order);
  t[1] = -4;
  return t;
}

}  // namespace

TEST_CASE("constructors and valuation") {
  TruncSeries f = TruncSeries::monomial(3, 8, Rat(2, 3));
  CHECK(f.order() == 8);
  CHECK(f[3] == Rat(2, 3));
  CHECK(f.valuation() == 3);
  CHECK(TruncSeries(5).valuation() == 6);
  CHECK(TruncSeries::x(4) == TruncSeries::monomial(1, 4));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(31);
  for (int t = 0; t < 15; ++t) {
    unsigned order = 4 + t % 13;
    TruncSeries f = random_series(rng, order);
    TruncSeries g = random_series(rng, order);
    TruncSeries h = random_series(rng, order);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f - f == TruncSeries(order));
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937 rng(37);
  for (int t = 0; t < 10; ++t) {
    TruncSeries f = random_series(rng, 10);
    TruncSeries g = random_series(rng, 10);
    g[0] = 1 + t;  // nonzero constant
    CHECK(TruncSeries::div(f * g, g) == f);
  }
  CHECK_THROWS_AS(TruncSeries::div(TruncSeries::one(4), TruncSeries::x(4)), DomainError);
}

TEST_CASE("order mismatch is an error") {
  CHECK_THROWS_AS(TruncSeries::one(4) + TruncSeries::one(5), DomainError);
  CHECK_THROWS_AS(TruncSeries::one(4) * TruncSeries::one(5), DomainError);
}

TEST_CASE("composition") {
  // (1/(1-x)) o (x + x^2) has coefficient sum over compositions
  TruncSeries geom(6);
  for (unsigned k = 0; k <= 6; ++k) geom[k] = 1;
  TruncSeries s = TruncSeries::x(6) + TruncSeries::monomial(2, 6);
  TruncSeries c = geom.compose(s);
  // 1/(1-x-x^2): Fibonacci numbers
  long fib[7] = {1, 1, 2, 3, 5, 8, 13};
  for (unsigned k = 0; k <= 6; ++k) CHECK(c[k] == fib[k]);

  CHECK_THROWS_AS(geom.compose(TruncSeries::one(6)), DomainError);
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(41);
  for (int t = 0; t < 8; ++t) {
    TruncSeries f = random_series(rng, 9);
    TruncSeries s = random_series(rng, 9, true);
    TruncSeries u = random_series(rng, 9, true);
    CHECK(f.compose(s).compose(u) == f.compose(s.compose(u)));
  }
}

TEST_CASE("binomial powers") {
  TruncSeries t = one_minus_4x(6);
  TruncSeries h = t.binom_pow(Rat(-1, 2));
  long central[7] = {1, 2, 6, 20, 70, 252, 924};
  for (unsigned k = 0; k <= 6; ++k) CHECK(h[k] == central[k]);

  TruncSeries g = t.binom_pow(Rat(-3, 4));
  CHECK(g[0] == 1);
  CHECK(g[1] == 3);
  CHECK(g[2] == Rat(21, 2));
  CHECK(g[3] == Rat(77, 2));

  // derivative identity (1-4x) g' = 3 g fixes g up to the constant term
  TruncSeries lhs = TruncSeries::mul(one_minus_4x(5), g.derive());
  TruncSeries g5(5);
  for (unsigned k = 0; k <= 5; ++k) g5[k] = g[k];
  CHECK(lhs == g5 * Rat(3));
}

TEST_CASE("binom_pow group properties") {
  std::mt19937 rng(43);
  for (int t = 0; t < 8; ++t) {
    TruncSeries f = random_series(rng, 8);
    f[0] = 1;
    Rat r = Rat(t - 3) / 2;
    CHECK(f.binom_pow(r) * f.binom_pow(-r) == TruncSeries::one(8));
    CHECK(f.binom_pow(2) == f * f);
  }
  TruncSeries bad = TruncSeries::constant(2, 4);
  CHECK_THROWS_AS(bad.binom_pow(Rat(1, 2)), DomainError);
}

TEST_CASE("exp and log") {
  TruncSeries x = TruncSeries::x(8);
  TruncSeries e = x.exp_trunc();
  for (unsigned k = 0; k <= 8; ++k) CHECK(e[k] == Rat(1, factorial(k)));
  CHECK(e.log_trunc() == x);

  std::mt19937 rng(47);
  for (int t = 0; t < 6; ++t) {
    TruncSeries f = random_series(rng, 8, true);
    CHECK(f.exp_trunc().log_trunc() == f);
    TruncSeries g = random_series(rng, 8, true);
    CHECK((f + g).exp_trunc() == f.exp_trunc() * g.exp_trunc());
  }
  CHECK_THROWS_AS(TruncSeries::one(4).exp_trunc(), DomainError);
  CHECK_THROWS_AS(TruncSeries::x(4).log_trunc(), DomainError);
}

TEST_CASE("derive and integrate") {
  TruncSeries f = TruncSeries::monomial(4, 6, Rat(1, 2));
  TruncSeries d = f.derive();
  CHECK(d.order() == 5);
  CHECK(d[3] == 2);
  TruncSeries i = d.integrate();
  CHECK(i.order() == 6);
  CHECK(i == f);
}

TEST_CASE("bivariate slices and products") {
  BivSeries b(3, 4);
  b.at(1, 2) = Rat(5, 2);
  b.at(0, 0) = 1;
  CHECK(b.slice_u(1)[2] == Rat(5, 2));
  CHECK(BivSeries::from_slice(b.slice_u(1), 1, 3) + BivSeries::from_slice(b.slice_u(0), 0, 3) == b);

  // (1 + u x)^2 = 1 + 2 u x + u^2 x^2
  BivSeries p(2, 2);
  p.at(0, 0) = 1;
  p.at(1, 1) = 1;
  BivSeries sq = p * p;
  CHECK(sq.at(0, 0) == 1);
  CHECK(sq.at(1, 1) == 2);
  CHECK(sq.at(2, 2) == 1);
  CHECK(sq.at(1, 0) == 0);
}

TEST_CASE("compose_in_x") {
  // f = x^2, s = x/(1 - u x) => f o s = x^2 sum (k+1) u^k x^k
  unsigned ou = 4, ox = 6;
  BivSeries s(ou, ox);
  for (unsigned m = 0; m <= ou; ++m)
    if (m + 1 <= ox) s.at(m, m + 1) = 1;
  BivSeries c = compose_in_x(TruncSeries::monomial(2, ox), s);
  for (unsigned k = 0; k <= ou; ++k)
    if (k + 2 <= ox) CHECK(c.at(k, k + 2) == k + 1);

  // constant term in x is rejected
  BivSeries bad = s;
  bad.at(2, 0) = 1;
  CHECK_THROWS_AS(compose_in_x(TruncSeries::monomial(2, ox), bad), DomainError);
}
