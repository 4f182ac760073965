#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "weylab/parser.hpp"
#include "weylab/stirling.hpp"

using namespace weylab;

namespace {

void check_rows(const StirlingTable& t, const std::vector<std::vector<long>>& want) {
  REQUIRE(t.rows.size() == want.size());
  for (size_t n = 0; n < want.size(); ++n) {
    REQUIRE(t.rows[n].size() == want[n].size());
    for (size_t k = 0; k < want[n].size(); ++k) CHECK(t.rows[n][k] == want[n][k]);
  }
}

}  // namespace

TEST_CASE("number operator gives Stirling numbers of the second kind") {
  StirlingTable t = stirling_table(parse_operator("a+ a"), 6);
  CHECK(t.excess == 0);
  check_rows(t, {{1},
                 {0, 1},
                 {0, 1, 1},
                 {0, 1, 3, 1},
                 {0, 1, 7, 6, 1},
                 {0, 1, 15, 25, 10, 1},
                 {0, 1, 31, 90, 65, 15, 1}});
}

TEST_CASE("excess-one word") {
  StirlingTable t = stirling_table(parse_operator("a+ a a+"), 6);
  CHECK(t.excess == 1);
  check_rows(t, {{1},
                 {1, 1},
                 {2, 4, 1},
                 {6, 18, 9, 1},
                 {24, 96, 72, 16, 1},
                 {120, 600, 600, 200, 25, 1},
                 {720, 4320, 5400, 2400, 450, 36, 1}});
}

TEST_CASE("word with two annihilators per factor") {
  StirlingTable t = stirling_table(parse_operator("a+ a a a+ a+"), 4);
  CHECK(t.excess == 1);
  check_rows(t, {{1},
                 {2, 4, 1},
                 {12, 60, 54, 14, 1},
                 {144, 1296, 2232, 1296, 306, 30, 1},
                 {2880, 40320, 109440, 105120, 45000, 9504, 1016, 52, 1}});
}

TEST_CASE("negative excess") {
  // Omega = a a+ a: N(Omega^n) = (sum_k S(n,k) (a+)^k a^k) a^n
  StirlingTable t = stirling_table(parse_operator("a a+ a"), 4);
  CHECK(t.excess == -1);
  // row 1: a a+ a = (a+ a + 1) a => S(1,0) = 1, S(1,1) = 1
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(0, 0) == 1);
}

TEST_CASE("classical recurrence oracle") {
  StirlingTable t = stirling_table(parse_operator("a+ a"), 8);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= 8; ++k) CHECK(t.at(n, k) == classical_stirling2(n, k));
}

TEST_CASE("at() is zero outside the stored width") {
  StirlingTable t = stirling_table(parse_operator("a+ a"), 3);
  CHECK(t.at(2, 7) == 0);
  CHECK(t.at(3, 3) == 1);
}

TEST_CASE("non-homogeneous input is rejected") {
  CHECK_THROWS_AS(stirling_table(parse_operator("a+ a + a"), 4), DomainError);
}

TEST_CASE("generating functions of the number operator") {
  StirlingTable t = stirling_table(parse_operator("a+ a"), 8);
  auto [g, phi] = egf_extract(t, 8);
  CHECK(g == TruncSeries::one(8));
  TruncSeries expm1 = TruncSeries::x(8).exp_trunc() - TruncSeries::one(8);
  CHECK(phi == expm1);
  CHECK(sheffer_check(t, g, phi).empty());
}

TEST_CASE("generating functions of the creation operator") {
  StirlingTable t = stirling_table(parse_operator("a+"), 8);
  auto [g, phi] = egf_extract(t, 8);
  CHECK(g == TruncSeries::x(8).exp_trunc());
  CHECK(phi == TruncSeries(8));
  CHECK(sheffer_check(t, g, phi).empty());
}

TEST_CASE("generating functions of the two-annihilator word") {
  StirlingTable t = stirling_table(parse_operator("(a+)^2 a a+ + a+ a (a+)^2"), 8);
  auto [g, phi] = egf_extract(t, 8);

  TruncSeries base = TruncSeries::one(8);
  base[1] = -4;
  CHECK(g == base.binom_pow(Rat(-3, 4)));
  TruncSeries central = base.binom_pow(Rat(-1, 2)) - TruncSeries::one(8);
  CHECK(phi == central);
  long want[7] = {0, 2, 6, 20, 70, 252, 924};
  for (unsigned n = 1; n <= 6; ++n) CHECK(phi[n] == want[n]);

  CHECK(sheffer_check(t, g, phi).empty());
}

TEST_CASE("sheffer_check reports mismatches") {
  StirlingTable t = stirling_table(parse_operator("a+ a"), 6);
  auto bad = sheffer_check(t, TruncSeries::one(6), TruncSeries::x(6));
  CHECK(!bad.empty());
}

TEST_CASE("serialization shapes") {
  StirlingTable t = stirling_table(parse_operator("a+ a a+"), 3);
  auto j = t.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["excess"] == 1);
  CHECK(j["rows"].size() == 4);
  CHECK(!t.to_csv().empty());
  CHECK(t.to_latex().find("\\lceil") != std::string::npos);
}
