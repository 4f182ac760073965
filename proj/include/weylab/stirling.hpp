#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylab/normal_form.hpp"
#include "weylab/series.hpp"

namespace weylab {

/// Triangular array S(n, k) read off the normal-ordered powers of a
/// homogeneous operator; rows 0..n_max, trailing zeros trimmed.
struct StirlingTable {
  long excess = 0;
  std::vector<std::vector<Rat>> rows;

  const Rat& at(unsigned n, unsigned k) const;  // 0 outside the stored width
  unsigned n_max() const { return static_cast<unsigned>(rows.size()) - 1; }

  std::string to_csv() const;
  std::string to_latex() const;
  nlohmann::json to_json() const;
};

/// Normal-orders Omega^n for n = 0..n_max and reads the generalized Stirling
/// rows from the coefficients. Omega must be homogeneous.
StirlingTable stirling_table(const NormalForm& omega, unsigned n_max);

/// Sheffer-type generating data: g(x) = sum_n S(n,0) x^n/n! and
/// phi(x) = (sum_n S(n,1) x^n/n!) / g(x). Requires rows through n = N.
std::pair<TruncSeries, TruncSeries> egf_extract(const StirlingTable& t, unsigned N);

/// Verifies S(n,k) = n! [x^n] g phi^k / k! for every stored entry with
/// n <= g.order(). Returns a list of mismatch descriptions; empty = pass.
std::vector<std::string> sheffer_check(const StirlingTable& t, const TruncSeries& g,
                                       const TruncSeries& phi);

/// Stirling numbers of the second kind by the classical recurrence
/// S(n+1,k) = k S(n,k) + S(n,k-1); independent oracle for Omega = a+ a.
Rat classical_stirling2(unsigned n, unsigned k);

}  // namespace weylab
