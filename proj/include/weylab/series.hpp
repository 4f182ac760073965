#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylab/rational.hpp"

namespace weylab {

/// Truncated formal power series over the rationals: coefficients for
/// degrees 0..order, inclusive. Every operation stays within the declared
/// truncation order; mixing orders is an error, never a silent coercion.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order) : order_(order), c_(order + 1) {}

  static TruncSeries constant(const Rat& v, unsigned order);
  static TruncSeries one(unsigned order) { return constant(1, order); }
  static TruncSeries x(unsigned order);
  static TruncSeries monomial(unsigned k, unsigned order, const Rat& c = 1);

  unsigned order() const { return order_; }
  const Rat& operator[](unsigned k) const { return c_.at(k); }
  Rat& operator[](unsigned k) { return c_.at(k); }
  /// Degree of the lowest nonzero coefficient; order()+1 for the zero series.
  unsigned valuation() const;

  bool operator==(const TruncSeries& o) const = default;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rat& c);
  friend TruncSeries operator+(TruncSeries f, const TruncSeries& g) { return f += g; }
  friend TruncSeries operator-(TruncSeries f, const TruncSeries& g) { return f -= g; }
  friend TruncSeries operator*(TruncSeries f, const Rat& c) { return f *= c; }
  friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return mul(f, g); }

  static TruncSeries mul(const TruncSeries& f, const TruncSeries& g);
  /// f/g, requires g(0) != 0.
  static TruncSeries div(const TruncSeries& f, const TruncSeries& g);

  /// f(s(x)); s must have zero constant term.
  TruncSeries compose(const TruncSeries& s) const;
  /// t^r for rational r via the binomial series; requires t(0) = 1.
  TruncSeries binom_pow(const Rat& r) const;
  /// exp(f), requires f(0) = 0.
  TruncSeries exp_trunc() const;
  /// log(f), requires f(0) = 1.
  TruncSeries log_trunc() const;
  /// Formal d/dx; order drops by one.
  TruncSeries derive() const;
  /// Antiderivative with zero constant term; order rises by one.
  TruncSeries integrate() const;

  std::string render(const std::string& var = "x") const;
  nlohmann::json to_json(const std::string& var = "x") const;

 private:
  unsigned order_;
  std::vector<Rat> c_;
};

/// Rectangular truncated series in two variables; coefficient of
/// u^m v^n sits at (m, n), 0 <= m <= order_u, 0 <= n <= order_v.
class BivSeries {
 public:
  BivSeries(unsigned order_u, unsigned order_v)
      : ou_(order_u), ov_(order_v), c_((order_u + 1) * (order_v + 1)) {}

  unsigned order_u() const { return ou_; }
  unsigned order_v() const { return ov_; }
  const Rat& at(unsigned m, unsigned n) const { return c_.at(m * (ov_ + 1) + n); }
  Rat& at(unsigned m, unsigned n) { return c_.at(m * (ov_ + 1) + n); }

  bool operator==(const BivSeries& o) const = default;

  BivSeries& operator+=(const BivSeries& o);
  BivSeries& operator-=(const BivSeries& o);
  BivSeries& operator*=(const Rat& c);
  friend BivSeries operator+(BivSeries f, const BivSeries& g) { return f += g; }
  friend BivSeries operator-(BivSeries f, const BivSeries& g) { return f -= g; }
  friend BivSeries operator*(const BivSeries& f, const BivSeries& g) { return mul(f, g); }

  static BivSeries mul(const BivSeries& f, const BivSeries& g);

  /// Slice at fixed power of the first variable, as a series in the second.
  TruncSeries slice_u(unsigned m) const;
  /// Embeds a series in the second variable at u^m.
  static BivSeries from_slice(const TruncSeries& s, unsigned m, unsigned order_u);

  nlohmann::json to_json(const std::string& var_u, const std::string& var_v) const;

 private:
  unsigned ou_, ov_;
  std::vector<Rat> c_;
};

/// f(s(u, x)) where f is a series in x and s a series in (u, x) whose every
/// u-slice has x-valuation >= 1. Result orders: (order_u of s, order of f).
BivSeries compose_in_x(const TruncSeries& f, const BivSeries& s);

}  // namespace weylab
