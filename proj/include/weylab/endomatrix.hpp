#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylab/normal_form.hpp"
#include "weylab/series.hpp"

namespace weylab {

/// Denominator sequence d_n weighting the monomial basis x^n/d_n.
struct DenomSeq {
  enum class Kind { Ones, Factorial, Custom };
  Kind kind = Kind::Ones;
  std::vector<Rat> custom;  // Custom only; all entries nonzero

  static DenomSeq ones() { return {}; }
  static DenomSeq factorial() { return {Kind::Factorial, {}}; }
  static DenomSeq make_custom(std::vector<Rat> v);

  Rat at(unsigned n) const;
  bool operator==(const DenomSeq&) const = default;
  nlohmann::json to_json() const;
};

/// Dense (N+1) x (N+1) truncation of a row-finite matrix. Entry (n, k)
/// multiplies source coefficient a_k into target coefficient b_n.
///
/// `band` records exactness: columns 0..band faithfully represent the
/// underlying operator on polynomials of that degree (a raising operator
/// pushes images past degree N, so composition shrinks the band).
/// `raise` is the maximum degree shift the operator can apply.
class OpMatrix {
 public:
  explicit OpMatrix(unsigned dim, DenomSeq d = DenomSeq::ones());
  static OpMatrix identity(unsigned dim, DenomSeq d = DenomSeq::ones());

  unsigned dim() const { return dim_; }
  const Rat& at(unsigned n, unsigned k) const { return a_.at(n * dim_ + k); }
  Rat& at(unsigned n, unsigned k) { return a_.at(n * dim_ + k); }
  const DenomSeq& denoms() const { return denoms_; }

  long band = -1;        // last trustworthy column; dim-1 when fully exact
  unsigned raise = 0;    // max degree increase

  bool operator==(const OpMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
  bool equal_on_columns(const OpMatrix& o, unsigned last_col) const;

  OpMatrix& operator+=(const OpMatrix& o);
  OpMatrix& operator-=(const OpMatrix& o);
  OpMatrix& operator*=(const Rat& c);
  friend OpMatrix operator+(OpMatrix m, const OpMatrix& p) { return m += p; }
  friend OpMatrix operator-(OpMatrix m, const OpMatrix& p) { return m -= p; }

  OpMatrix transpose() const;
  /// Exact Gauss-Jordan inverse; nullopt when singular.
  std::optional<OpMatrix> inverse() const;

  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  unsigned dim_;
  std::vector<Rat> a_;
  DenomSeq denoms_;
};

/// Matrix of the Bargmann-Fock action of f on the basis x^k/d_k, k <= N:
/// a acts as d/dx, a+ as multiplication by x.
OpMatrix rho_bf(const NormalForm& f, unsigned N, const DenomSeq& d = DenomSeq::ones());

/// b = M a in the d-weighted coordinates; f and the result are plain series.
TruncSeries apply(const OpMatrix& m, const TruncSeries& f);

/// Matrix product M P (apply P first); bands shrink accordingly.
OpMatrix compose(const OpMatrix& m, const OpMatrix& p);

enum class Triangularity { StrictlyLower, Diagonal, StrictlyUpper, None };
std::string to_string(Triangularity t);

/// Classification of rho_bf(f, N, ones); f must be homogeneous.
Triangularity triangularity(const NormalForm& f, unsigned N);

/// Truncated matrix exponential with series entries in the formal parameter:
/// sum_m lambda^m rho_bf(f)^m / m!, m <= lambda_order. f must be homogeneous.
class LambdaMatrix {
 public:
  LambdaMatrix(unsigned dim, unsigned lambda_order, DenomSeq d = DenomSeq::ones());

  unsigned dim() const { return dim_; }
  unsigned lambda_order() const { return lorder_; }
  const TruncSeries& at(unsigned n, unsigned k) const { return a_.at(n * dim_ + k); }
  TruncSeries& at(unsigned n, unsigned k) { return a_.at(n * dim_ + k); }
  const DenomSeq& denoms() const { return denoms_; }
  bool operator==(const LambdaMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  /// Column k as a series in (lambda, x).
  BivSeries column(unsigned k) const;

  nlohmann::json to_json() const;

 private:
  unsigned dim_, lorder_;
  std::vector<TruncSeries> a_;
  DenomSeq denoms_;
};

LambdaMatrix exp_lambda(const NormalForm& f, unsigned N, unsigned lambda_order,
                        const DenomSeq& d = DenomSeq::ones());

}  // namespace weylab
