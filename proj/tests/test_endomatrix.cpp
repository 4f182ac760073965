#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "weylab/endomatrix.hpp"
#include "weylab/parser.hpp"

using namespace weylab;

namespace {

// Coefficient of lambda^a theta^b in the (n,k) entry of E(lambda) E(theta).
Rat two_param_coeff(const LambdaMatrix& e, unsigned n, unsigned k, unsigned a, unsigned b) {
  Rat sum = 0;
  for (unsigned j = 0; j < e.dim(); ++j) sum += e.at(n, j)[a] * e.at(j, k)[b];
  return sum;
}

void check_group_law(const NormalForm& f, unsigned N, unsigned L) {
  LambdaMatrix e = exp_lambda(f, N, L);
  for (unsigned n = 0; n <= N; ++n)
    for (unsigned k = 0; k <= N; ++k)
      for (unsigned a = 0; a <= L; ++a)
        for (unsigned b = 0; a + b <= L; ++b) {
          Rat want = Rat(binomial(a + b, a)) * e.at(n, k)[a + b];
          CHECK(two_param_coeff(e, n, k, a, b) == want);
        }
}

}  // namespace

TEST_CASE("letter matrices") {
  const unsigned N = 8;
  OpMatrix d = rho_bf(NormalForm::a(), N);
  OpMatrix x = rho_bf(NormalForm::a_plus(), N);
  for (unsigned k = 1; k <= N; ++k) CHECK(d.at(k - 1, k) == k);
  for (unsigned k = 0; k + 1 <= N; ++k) CHECK(x.at(k + 1, k) == 1);
  OpMatrix num = rho_bf(parse_operator("a+ a"), N);
  for (unsigned k = 0; k <= N; ++k) CHECK(num.at(k, k) == k);
  CHECK(d.band == N);
  CHECK(x.band == N - 1);
  CHECK(x.raise == 1);
}

TEST_CASE("apply") {
  const unsigned N = 8;
  NormalForm omega = parse_operator("(a+)^2 a a+ + a+ a (a+)^2");
  TruncSeries f = TruncSeries::x(N);
  TruncSeries g = apply(rho_bf(omega, N), f);
  CHECK(g == TruncSeries::monomial(3, N, 5));  // (2k+3) x^{k+2} at k = 1

  // same map in factorial-weighted coordinates
  CHECK(apply(rho_bf(omega, N, DenomSeq::factorial()), f) == g);
}

TEST_CASE("commutation relation as matrices") {
  const unsigned N = 10;
  OpMatrix d = rho_bf(NormalForm::a(), N);
  OpMatrix x = rho_bf(NormalForm::a_plus(), N);
  OpMatrix comm = compose(d, x) - compose(x, d);
  CHECK(comm.band == N - 1);
  CHECK(comm.equal_on_columns(OpMatrix::identity(N + 1), N - 1));
}

TEST_CASE("representation homomorphism on exact bands") {
  std::mt19937 rng(53);
  const unsigned N = 16;
  for (int t = 0; t < 20; ++t) {
    NormalForm f = testutil::random_normal_form(rng, 4);
    NormalForm g = testutil::random_normal_form(rng, 4);
    OpMatrix lhs = rho_bf(normal_product(f, g), N);
    OpMatrix rhs = compose(rho_bf(f, N), rho_bf(g, N));
    long band = std::min(lhs.band, rhs.band);
    REQUIRE(band >= 8);
    CHECK(lhs.equal_on_columns(rhs, static_cast<unsigned>(band)));
  }
}

TEST_CASE("denominators change coordinates, not the operator") {
  std::mt19937 rng(59);
  const unsigned N = 10;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    NormalForm f = testutil::random_normal_form(rng, 3);
    TruncSeries s(N);
    for (unsigned k = 0; k <= N; ++k) s[k] = coef(rng);
    TruncSeries ones = apply(rho_bf(f, N), s);
    CHECK(apply(rho_bf(f, N, DenomSeq::factorial()), s) == ones);
  }
}

TEST_CASE("custom denominators validate") {
  CHECK_THROWS_AS(DenomSeq::make_custom({Rat(1), Rat(0)}), DomainError);
  DenomSeq d = DenomSeq::make_custom({Rat(1), Rat(2), Rat(6)});
  CHECK(d.at(2) == 6);
  CHECK_THROWS_AS(d.at(3), DomainError);
}

TEST_CASE("triangularity trichotomy") {
  CHECK(triangularity(NormalForm::a(), 12) == Triangularity::StrictlyUpper);
  CHECK(triangularity(parse_operator("a+ a"), 12) == Triangularity::Diagonal);
  CHECK(triangularity(parse_operator("a+ a a+"), 12) == Triangularity::StrictlyLower);
  CHECK(to_string(Triangularity::StrictlyLower) == "strictly-lower");
  CHECK_THROWS_AS(triangularity(parse_operator("a + a+ a"), 12), DomainError);
}

TEST_CASE("inverse") {
  const unsigned N = 6;
  OpMatrix x = rho_bf(NormalForm::a_plus(), N);
  CHECK(!x.inverse().has_value());  // nilpotent

  OpMatrix m = OpMatrix::identity(N + 1) + x;
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(compose(m, *inv) == OpMatrix::identity(N + 1));
  CHECK(compose(*inv, m) == OpMatrix::identity(N + 1));
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("exponential of the creation operator") {
  LambdaMatrix e = exp_lambda(NormalForm::a_plus(), 8, 8);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 0; m <= 8; ++m)
      CHECK(e.at(n, 0)[m] == (m == n ? Rat(1, factorial(m)) : Rat(0)));
  BivSeries col = e.column(0);
  CHECK(col.at(3, 3) == Rat(1, 6));
  CHECK(col.at(3, 2) == 0);
}

TEST_CASE("exponential of the number operator is diagonal") {
  LambdaMatrix e = exp_lambda(parse_operator("a+ a"), 6, 6);
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned k = 0; k <= 6; ++k)
      for (unsigned m = 0; m <= 6; ++m) {
        Rat want = 0;
        if (n == k) {
          want = 1;
          for (unsigned p = 0; p < m; ++p) want *= static_cast<long>(n);
          want /= factorial(m);
        }
        CHECK(e.at(n, k)[m] == want);
      }
}

TEST_CASE("exponential of the two-annihilator word on the constant") {
  const unsigned N = 12, L = 6;
  NormalForm omega = parse_operator("(a+)^2 a a+ + a+ a (a+)^2");
  BivSeries col = exp_lambda(omega, N, L).column(0);
  // exp(lambda Omega) 1 = (1 - 4 lambda x^2)^(-3/4)
  for (unsigned p = 0; p <= L; ++p)
    for (unsigned n = 0; n <= N; ++n) {
      Rat want = 0;
      if (n == 2 * p) {
        want = rat_binomial(Rat(-3, 4), p);
        for (unsigned q = 0; q < p; ++q) want *= -4;
      }
      CHECK(col.at(p, n) == want);
    }
}

TEST_CASE("one-parameter group law at the matrix level") {
  check_group_law(parse_operator("a+ a"), 6, 5);
  check_group_law(parse_operator("(a+)^2 a a+ + a+ a (a+)^2"), 10, 4);
  check_group_law(parse_operator("a^2"), 8, 4);
}
