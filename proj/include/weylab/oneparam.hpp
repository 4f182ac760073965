#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylab/normal_form.hpp"
#include "weylab/series.hpp"

namespace weylab {

/// Truncated series in (lambda, theta, x); used to hold compositions of
/// one-parameter substitutions at two distinct formal parameters.
class TriSeries {
 public:
  TriSeries(unsigned order_l, unsigned order_t, unsigned order_x)
      : ol_(order_l), ot_(order_t), ox_(order_x),
        c_((order_l + 1) * (order_t + 1) * (order_x + 1)) {}

  unsigned order_l() const { return ol_; }
  unsigned order_t() const { return ot_; }
  unsigned order_x() const { return ox_; }
  const Rat& at(unsigned a, unsigned b, unsigned n) const {
    return c_.at((a * (ot_ + 1) + b) * (ox_ + 1) + n);
  }
  Rat& at(unsigned a, unsigned b, unsigned n) {
    return c_.at((a * (ot_ + 1) + b) * (ox_ + 1) + n);
  }

  bool operator==(const TriSeries& o) const = default;
  TriSeries& operator+=(const TriSeries& o);
  friend TriSeries operator*(const TriSeries& f, const TriSeries& g) { return mul(f, g); }
  static TriSeries mul(const TriSeries& f, const TriSeries& g);

  /// Lift of a (lambda, x) series (theta absent) or a (theta, x) series
  /// (lambda absent).
  static TriSeries lift_lambda(const BivSeries& s, unsigned order_t);
  static TriSeries lift_theta(const BivSeries& s, unsigned order_l);

  /// Restriction theta = 0 back to a (lambda, x) series.
  BivSeries theta_zero() const;

 private:
  unsigned ol_, ot_, ox_;
  std::vector<Rat> c_;
};

/// One-parameter family of substitutions with prefunction:
/// f |-> g(lambda, x) * f(s(lambda, x)), with g = 1 and s = x at lambda = 0.
struct PrefSub {
  unsigned lambda_order;
  unsigned x_order;
  BivSeries g;  // (lambda, x); g(0, x) = 1
  BivSeries s;  // (lambda, x); s(0, x) = x, every lambda-slice has x-valuation >= 1

  PrefSub(unsigned lambda_order, unsigned x_order, BivSeries g, BivSeries s);
  static PrefSub identity(unsigned lambda_order, unsigned x_order);

  nlohmann::json to_json() const;
  /// Leading terms of g and s for the CLI pretty-printer.
  std::string summary() const;
};

/// g * (f o s) as a (lambda, x) series; f must have order x_order.
BivSeries apply_prefsub(const PrefSub& u, const TruncSeries& f);

/// Composition U1 o U2 at two distinct formal parameters: U1 carries lambda,
/// U2 carries theta. Result: g = g1 * (g2 o s1), s = s2 o s1.
struct PrefSubTwo {
  TriSeries g;
  TriSeries s;
};
PrefSubTwo compose_prefsub(const PrefSub& u1, const PrefSub& u2);

/// Coefficients of u(lambda + theta, x) for a (mu, x)-series u, valid for
/// total parameter degree <= u's order.
TriSeries expand_at_sum(const BivSeries& u, unsigned order_t);

/// Mismatch positions (as strings) between a two-parameter composition and
/// the same family at parameter lambda + theta, compared on total parameter
/// degree <= lambda_order. Empty = group law holds.
std::vector<std::string> group_law_check(const PrefSub& u);

/// Closed-form integration of the monomial field q = alpha x^m (m >= 2) with
/// scalar part v = beta x^{m-1}:
///   s = x (1 - alpha (m-1) lambda x^{m-1})^{-1/(m-1)},
///   g = (1 - alpha (m-1) lambda x^{m-1})^{-beta/(alpha (m-1))}.
PrefSub integrate_monomial(const Rat& alpha, unsigned m, const Rat& beta,
                           unsigned lambda_order, unsigned x_order);

/// Checks d/dlambda at 0 of U[x^j] against (q d/dx + v) x^j for j <= x_order.
std::vector<std::string> tangent_check(const PrefSub& u, const TruncSeries& q,
                                       const TruncSeries& v);

/// Builds the substitution-with-prefunction predicted by the Sheffer data of
/// Omega (g(lambda x^e), x(1 + phi(lambda x^e))) and compares it against the
/// truncated exponential of rho_bf(Omega) on monomials. Omega must be
/// homogeneous with e >= 0 and at most one annihilator per term.
std::vector<std::string> prop2_bridge(const NormalForm& omega, unsigned lambda_order,
                                      unsigned x_order);

/// The PrefSub built from Sheffer data (shared by prop2_bridge and the CLI).
PrefSub sheffer_prefsub(const NormalForm& omega, unsigned lambda_order, unsigned x_order);

}  // namespace weylab
