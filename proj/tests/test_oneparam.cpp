#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylab/oneparam.hpp"
#include "weylab/parser.hpp"

using namespace weylab;

TEST_CASE("identity substitution") {
  PrefSub id = PrefSub::identity(4, 6);
  TruncSeries f(6);
  f[0] = 2;
  f[3] = Rat(-1, 3);
  BivSeries out = apply_prefsub(id, f);
  CHECK(out.slice_u(0) == f);
  for (unsigned m = 1; m <= 4; ++m) CHECK(out.slice_u(m) == TruncSeries(6));
}

TEST_CASE("invalid components are rejected") {
  BivSeries g(2, 4), s(2, 4);
  g.at(0, 0) = 1;
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;  // constant term in a lambda slice
  CHECK_THROWS_AS(PrefSub(2, 4, g, s), DomainError);
  BivSeries g2 = g;
  g2.at(0, 1) = 1;  // g not 1 at lambda^0
  BivSeries s2(2, 4);
  s2.at(0, 1) = 1;
  CHECK_THROWS_AS(PrefSub(2, 4, g2, s2), DomainError);
}

TEST_CASE("pure substitution flow of x^2 d/dx") {
  PrefSub u = integrate_monomial(1, 2, 0, 5, 8);
  // s = x/(1 - lambda x), g = 1
  for (unsigned p = 0; p <= 5; ++p) {
    for (unsigned n = 0; n <= 8; ++n) {
      CHECK(u.g.at(p, n) == (p == 0 && n == 0 ? 1 : 0));
      CHECK(u.s.at(p, n) == (n == p + 1 ? 1 : 0));
    }
  }
  CHECK(group_law_check(u).empty());
  CHECK(tangent_check(u, TruncSeries::monomial(2, 8), TruncSeries(8)).empty());
}

TEST_CASE("flow of x^2 d/dx + x") {
  PrefSub u = integrate_monomial(1, 2, 1, 5, 8);
  // g = (1 - lambda x)^{-1}
  for (unsigned p = 0; p <= 5; ++p)
    for (unsigned n = 0; n <= 8; ++n) CHECK(u.g.at(p, n) == (n == p ? 1 : 0));
  CHECK(group_law_check(u).empty());
  CHECK(tangent_check(u, TruncSeries::monomial(2, 8), TruncSeries::x(8)).empty());
}

TEST_CASE("flow of 2x^3 d/dx + 3x^2") {
  PrefSub u = integrate_monomial(2, 3, 3, 4, 10);
  // g = (1 - 4 lambda x^2)^{-3/4}, s = x (1 - 4 lambda x^2)^{-1/2}
  CHECK(u.g.at(1, 2) == 3);
  CHECK(u.g.at(2, 4) == Rat(21, 2));
  CHECK(u.s.at(1, 3) == 2);
  CHECK(u.s.at(2, 5) == 6);
  CHECK(group_law_check(u).empty());
  CHECK(tangent_check(u, TruncSeries::monomial(3, 10, 2),
                      TruncSeries::monomial(2, 10, 3)).empty());
}

TEST_CASE("tangent_check flags a wrong field") {
  PrefSub u = integrate_monomial(1, 2, 0, 4, 6);
  auto bad = tangent_check(u, TruncSeries::monomial(2, 6, 2), TruncSeries(6));
  CHECK(!bad.empty());
}

TEST_CASE("integrate_monomial rejects bad parameters") {
  CHECK_THROWS_AS(integrate_monomial(0, 2, 1, 4, 6), DomainError);
  CHECK_THROWS_AS(integrate_monomial(1, 1, 1, 4, 6), DomainError);
}

TEST_CASE("composition against the closed form") {
  // U_lambda U_theta [f] for the pure flow equals substitution at lambda + theta
  PrefSub u = integrate_monomial(1, 2, 0, 6, 8);
  PrefSubTwo c = compose_prefsub(u, u);
  TriSeries ts = expand_at_sum(u.s, 6);
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; a + b <= 6; ++b)
      for (unsigned n = 0; n <= 8; ++n) CHECK(c.s.at(a, b, n) == ts.at(a, b, n));
}

TEST_CASE("expand_at_sum is the binomial expansion") {
  BivSeries v(3, 2);
  v.at(2, 1) = 5;
  TriSeries t = expand_at_sum(v, 3);
  CHECK(t.at(1, 1, 1) == 10);  // C(2,1) * 5
  CHECK(t.at(2, 0, 1) == 5);
  CHECK(t.at(0, 2, 1) == 5);
}

TEST_CASE("sheffer substitution of the number operator") {
  // exp(lambda a+ a) x^j = (x e^lambda)^j => s = x e^lambda, g = 1
  PrefSub u = sheffer_prefsub(parse_operator("a+ a"), 5, 6);
  for (unsigned p = 0; p <= 5; ++p) {
    CHECK(u.g.at(p, 0) == (p == 0 ? 1 : 0));
    CHECK(u.s.at(p, 1) == Rat(1, factorial(p)));
  }
  CHECK(prop2_bridge(parse_operator("a+ a"), 5, 6).empty());
}

TEST_CASE("sheffer substitution of the creation operator") {
  CHECK(prop2_bridge(NormalForm::a_plus(), 5, 6).empty());
}

TEST_CASE("sheffer substitution of the two-annihilator word") {
  NormalForm omega = parse_operator("(a+)^2 a a+ + a+ a (a+)^2");
  PrefSub u = sheffer_prefsub(omega, 4, 10);
  PrefSub closed = integrate_monomial(2, 3, 3, 4, 10);
  CHECK(u.g == closed.g);
  CHECK(u.s == closed.s);
  CHECK(prop2_bridge(omega, 4, 10).empty());
}

TEST_CASE("sheffer substitution scope") {
  CHECK_THROWS_AS(sheffer_prefsub(parse_operator("(a+)^3 a^2"), 4, 6), DomainError);
  CHECK_THROWS_AS(sheffer_prefsub(parse_operator("a"), 4, 6), DomainError);
  CHECK_THROWS_AS(sheffer_prefsub(parse_operator("a + a+ a"), 4, 6), DomainError);
}
