#include "weylab/stirling.hpp"

#include <nlohmann/json.hpp>

namespace weylab {

namespace {
const Rat kZero = 0;
}

const Rat& StirlingTable::at(unsigned n, unsigned k) const {
  if (n >= rows.size() || k >= rows[n].size()) return kZero;
  return rows[n][k];
}

StirlingTable stirling_table(const NormalForm& omega, unsigned n_max) {
  Excess ex = excess_of(omega);
  if (!ex.homogeneous())
    throw DomainError("stirling_table: operator is not homogeneous");
  long e = ex.value;

  StirlingTable t;
  t.excess = e;
  t.rows.push_back({Rat(1)});  // Omega^0 = 1

  NormalForm pow = NormalForm::one();
  for (unsigned n = 1; n <= n_max; ++n) {
    pow = normal_product(pow, omega);
    std::vector<Rat> row;
    for (const auto& [key, c] : pow.terms()) {
      auto [i, j] = key;
      unsigned k;
      if (e >= 0) {
        // term must be (a+)^{ne+k} a^k
        unsigned shift = static_cast<unsigned>(e) * n;
        if (i < shift || i - shift != j)
          throw std::logic_error("stirling_table: power has unexpected shape");
        k = j;
      } else {
        // term must be (a+)^k a^{k+n|e|}
        unsigned shift = static_cast<unsigned>(-e) * n;
        if (j < shift || j - shift != i)
          throw std::logic_error("stirling_table: power has unexpected shape");
        k = i;
      }
      if (row.size() <= k) row.resize(k + 1);
      row[k] = c;
    }
    while (!row.empty() && row.back() == 0) row.pop_back();
    if (row.empty()) row.push_back(0);  // zero power of a zero-like operator
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::pair<TruncSeries, TruncSeries> egf_extract(const StirlingTable& t, unsigned N) {
  if (t.n_max() < N) throw DomainError("egf_extract: table has too few rows");
  TruncSeries g(N), h(N);
  Rat fact = 1;
  for (unsigned n = 0; n <= N; ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    g[n] = t.at(n, 0) / fact;
    h[n] = t.at(n, 1) / fact;
  }
  if (g[0] != 1) throw DomainError("egf_extract: S(0,0) != 1");
  TruncSeries phi = TruncSeries::div(h, g);
  return {g, phi};
}

std::vector<std::string> sheffer_check(const StirlingTable& t, const TruncSeries& g,
                                       const TruncSeries& phi) {
  if (phi[0] != 0) throw DomainError("sheffer_check: phi(0) != 0");
  if (g[0] != 1) throw DomainError("sheffer_check: g(0) != 1");
  unsigned N = g.order();
  std::vector<std::string> bad;
  TruncSeries col = g;  // g phi^k / k!
  Rat kfact = 1;
  unsigned width = 0;
  for (const auto& row : t.rows) width = std::max<unsigned>(width, row.size());
  for (unsigned k = 0; k < width; ++k) {
    if (k > 0) {
      col = col * phi;
      kfact *= static_cast<long>(k);
    }
    Rat nfact = 1;
    for (unsigned n = 0; n <= std::min(N, t.n_max()); ++n) {
      if (n > 0) nfact *= static_cast<long>(n);
      Rat expected = nfact * col[n] / kfact;
      if (expected != t.at(n, k))
        bad.push_back("S(" + std::to_string(n) + "," + std::to_string(k) + "): table " +
                      rat_str(t.at(n, k)) + " vs generating function " + rat_str(expected));
    }
  }
  return bad;
}

Rat classical_stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // row-by-row recurrence
  std::vector<Rat> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Rat> next(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
      Rat v = 0;
      if (j <= m - 1) v += Rat(static_cast<long>(j)) * row[j];
      if (j >= 1 && j - 1 <= m - 1) v += row[j - 1];
      next[j] = v;
    }
    row = std::move(next);
  }
  return row[k];
}

std::string StirlingTable::to_csv() const {
  std::string out;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out += ",";
      out += rat_str(row[k]);
    }
    out += "\n";
  }
  return out;
}

std::string StirlingTable::to_latex() const {
  unsigned width = 0;
  for (const auto& row : rows) width = std::max<unsigned>(width, row.size());
  std::string out = "\\left\\lceil\n{\\begin{array}{" + std::string(width, 'r') + "}\n";
  for (const auto& row : rows) {
    for (unsigned k = 0; k < width; ++k) {
      if (k) out += " & ";
      out += rat_str(k < row.size() ? row[k] : Rat(0));
    }
    out += "\\\\\n";
  }
  out += "\\end{array}}\n\\right.\n";
  return out;
}

nlohmann::json StirlingTable::to_json() const {
  nlohmann::json jr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const Rat& v : row) {
      Rat c = v;
      c.canonicalize();
      r.push_back({{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    jr.push_back(r);
  }
  return {{"schema", 1}, {"excess", excess}, {"rows", jr}};
}

}  // namespace weylab
