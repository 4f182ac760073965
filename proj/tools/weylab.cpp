// weylab: exact computer algebra for the Heisenberg-Weyl algebra.
//
// Subcommands: normal-order, stirling, egf, exp, expand.
// Exit codes: 0 success, 1 domain error, 2 usage or syntax error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weylab/endomatrix.hpp"
#include "weylab/ladder.hpp"
#include "weylab/normal_form.hpp"
#include "weylab/oneparam.hpp"
#include "weylab/parser.hpp"
#include "weylab/stirling.hpp"

using nlohmann::json;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw weylab::DomainError("cannot open output file: " + out_path);
  f << text;
}

weylab::DenomSeq denoms_from(const std::string& name) {
  if (name == "ones") return weylab::DenomSeq::ones();
  if (name == "factorial") return weylab::DenomSeq::factorial();
  throw CLI::ValidationError("--denoms must be 'ones' or 'factorial'");
}

unsigned default_margin(unsigned n) {
  if (const char* env = std::getenv("WEYLAB_MARGIN")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<unsigned>(v);
    throw weylab::DomainError("WEYLAB_MARGIN must be a nonnegative integer");
  }
  return n;
}

weylab::Rat rat_from_json(const json& v) {
  if (v.is_string()) return weylab::rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return weylab::Rat(static_cast<long>(v.get<long long>()));
  throw weylab::DomainError("expected a rational as \"p/q\" string or integer");
}

weylab::OpMatrix matrix_from_json(const json& rows, unsigned dim) {
  if (!rows.is_array() || rows.size() < dim)
    throw weylab::DomainError("matrix smaller than the working dimension");
  weylab::OpMatrix m(dim);
  for (unsigned n = 0; n < dim; ++n) {
    const json& row = rows.at(n);
    if (!row.is_array() || row.size() < dim)
      throw weylab::DomainError("matrix row smaller than the working dimension");
    for (unsigned k = 0; k < dim; ++k) m.at(n, k) = rat_from_json(row.at(k));
  }
  return m;
}

std::vector<weylab::Rat> seq_from_json(const json& arr, unsigned len) {
  if (!arr.is_array() || arr.size() < len)
    throw weylab::DomainError("coefficient sequence shorter than required length");
  std::vector<weylab::Rat> v(len);
  for (unsigned i = 0; i < len; ++i) v[i] = rat_from_json(arr.at(i));
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for the Heisenberg-Weyl algebra"};
  app.require_subcommand(1);
  app.footer("Operator expressions: words over 'a' and 'a+' with +, -, *, ^, parentheses\n"
             "and rational scalars (p or p/q). 'a+' must be written without internal\n"
             "whitespace; 'a +' followed by another term is a sum.");

  std::string expr, out_path, format = "text", denoms = "ones", input_path;
  unsigned rows = 6, trunc = 8, lambda_order = 6;
  int margin = -1;

  auto* cmd_no = app.add_subcommand("normal-order", "Normal-order an operator expression");
  cmd_no->add_option("expr", expr, "operator expression")->required();
  cmd_no->add_option("--format", format, "text|json")->default_str("text");
  cmd_no->add_option("--out", out_path, "output path (default stdout)");

  auto* cmd_st = app.add_subcommand("stirling", "Generalized Stirling table of a homogeneous operator");
  cmd_st->add_option("--op", expr, "operator expression")->required();
  cmd_st->add_option("--rows", rows, "number of rows n_max")->required();
  cmd_st->add_option("--format", format, "csv|json|latex")->default_str("csv");
  cmd_st->add_option("--out", out_path, "output path (default stdout)");

  auto* cmd_egf = app.add_subcommand("egf", "Sheffer-type generating functions g, phi with consistency report");
  cmd_egf->add_option("--op", expr, "operator expression")->required();
  cmd_egf->add_option("--rows", rows, "table rows / series order")->required();
  cmd_egf->add_option("--out", out_path, "output path (default stdout)");

  auto* cmd_exp = app.add_subcommand("exp", "Truncated one-parameter-group exponential as a matrix");
  cmd_exp->add_option("--op", expr, "operator expression")->required();
  cmd_exp->add_option("--trunc", trunc, "matrix truncation degree N")->required();
  cmd_exp->add_option("--lambda-order", lambda_order, "truncation order in lambda")->required();
  cmd_exp->add_option("--denoms", denoms, "ones|factorial")->default_str("ones");
  cmd_exp->add_option("--out", out_path, "output path (default stdout)");

  auto* cmd_ex = app.add_subcommand("expand", "Expand an endomorphism in ladder operators");
  cmd_ex->add_option("--input", input_path, "JSON job file")->required();
  cmd_ex->add_option("--trunc", trunc, "number of polynomials P_0..P_N")->required();
  cmd_ex->add_option("--margin", margin, "extra working dimension (default: N, or WEYLAB_MARGIN)");
  cmd_ex->add_option("--format", format, "json|latex")->default_str("json");
  cmd_ex->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  if (cmd_no->parsed()) {
    weylab::NormalForm f = weylab::parse_operator(expr);
    if (format == "json") {
      json j = {{"schema", 1}, {"terms", f.to_json()}};
      emit(j.dump(2), out_path);
    } else {
      emit(f.render(), out_path);
    }
  } else if (cmd_st->parsed()) {
    weylab::StirlingTable t = weylab::stirling_table(weylab::parse_operator(expr), rows);
    if (format == "json") emit(t.to_json().dump(2), out_path);
    else if (format == "latex") emit(t.to_latex(), out_path);
    else emit(t.to_csv(), out_path);
  } else if (cmd_egf->parsed()) {
    weylab::NormalForm f = weylab::parse_operator(expr);
    weylab::StirlingTable t = weylab::stirling_table(f, rows);
    auto [g, phi] = weylab::egf_extract(t, rows);
    auto report = weylab::sheffer_check(t, g, phi);
    bool in_scope = true;  // the proposition covers at most one annihilator per term
    for (const auto& [key, c] : f.terms())
      if (key.second > 1) in_scope = false;
    json j = {{"schema", 1},
              {"excess", t.excess},
              {"g", g.to_json()},
              {"phi", phi.to_json()},
              {"sheffer", {{"pass", report.empty()},
                           {"in_proposition_scope", in_scope},
                           {"note", in_scope ? "" : "out of proposition scope"},
                           {"mismatches", report}}}};
    emit(j.dump(2), out_path);
  } else if (cmd_exp->parsed()) {
    weylab::LambdaMatrix m =
        weylab::exp_lambda(weylab::parse_operator(expr), trunc, lambda_order, denoms_from(denoms));
    emit(m.to_json().dump(2), out_path);
  } else if (cmd_ex->parsed()) {
    std::ifstream in(input_path);
    if (!in) throw weylab::DomainError("cannot open input file: " + input_path);
    json job = json::parse(in);
    unsigned use_margin = margin >= 0 ? static_cast<unsigned>(margin) : default_margin(trunc);
    unsigned dim = trunc + use_margin + 1;
    weylab::OpMatrix phi = matrix_from_json(job.at("phi"), dim);
    weylab::BasisMat a = job.contains("basis_a")
        ? weylab::BasisMat(matrix_from_json(job.at("basis_a"), dim))
        : weylab::BasisMat::standard(dim);
    weylab::BasisMat b = job.contains("basis_b")
        ? weylab::BasisMat(matrix_from_json(job.at("basis_b"), dim))
        : weylab::BasisMat::standard(dim);
    weylab::CoeffSeq alpha = job.contains("alpha")
        ? weylab::CoeffSeq::alpha(seq_from_json(job.at("alpha"), dim))
        : weylab::CoeffSeq::ones(weylab::CoeffSeq::Role::Alpha, dim);
    weylab::CoeffSeq beta = job.contains("beta")
        ? weylab::CoeffSeq::beta(seq_from_json(job.at("beta"), dim))
        : weylab::CoeffSeq::ones(weylab::CoeffSeq::Role::Beta, dim);
    weylab::PolySeq p = weylab::expand_endo(phi, a, alpha, b, beta, trunc);
    if (format == "latex") emit(p.to_latex(), out_path);
    else emit(p.to_json().dump(2), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const weylab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const weylab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
