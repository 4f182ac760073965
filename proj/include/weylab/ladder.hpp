#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylab/endomatrix.hpp"
#include "weylab/rational.hpp"

namespace weylab {

/// Invertible matrix whose columns are the coordinates of basis vectors
/// e_0..e_{dim-1} in a fixed working coordinate system.
struct BasisMat {
  OpMatrix cols;

  explicit BasisMat(OpMatrix m);
  static BasisMat standard(unsigned dim);
  /// b_n = x^n / n! in monomial working coordinates.
  static BasisMat factorial_scaled(unsigned dim);

  unsigned dim() const { return cols.dim(); }
  /// Basis vector e_n as a coordinate column.
  std::vector<Rat> vec(unsigned n) const;

  nlohmann::json to_json() const;
};

/// Coefficient sequence of a relative ladder operator. All entries nonzero;
/// a lowering sequence (beta) additionally has beta_0 = 1.
struct CoeffSeq {
  enum class Role { Alpha, Beta };
  Role role;
  std::vector<Rat> v;

  CoeffSeq(Role role, std::vector<Rat> values);
  static CoeffSeq alpha(std::vector<Rat> values) { return {Role::Alpha, std::move(values)}; }
  static CoeffSeq beta(std::vector<Rat> values) { return {Role::Beta, std::move(values)}; }
  static CoeffSeq ones(Role role, unsigned len);

  const Rat& at(unsigned n) const;
  size_t size() const { return v.size(); }
  bool operator==(const CoeffSeq&) const = default;

  nlohmann::json to_json() const;
};

/// beta-up: gamma_n = beta_{n+1} (result used as a raising sequence).
CoeffSeq shift_up(const CoeffSeq& beta);
/// alpha-down: gamma_0 = 1, gamma_n = alpha_{n-1} (a lowering sequence).
CoeffSeq shift_down(const CoeffSeq& alpha);

/// Matrix (working coordinates) of L_{b,beta}: b_n -> beta_n b_{n-1}, b_0 -> 0.
OpMatrix lowering(const BasisMat& b, const CoeffSeq& beta);
/// Matrix of R_{a,alpha}: a_n -> alpha_n a_{n+1}; the top basis vector has no
/// image inside the truncation and maps to 0 (matrix band = dim-2).
OpMatrix raising(const BasisMat& a, const CoeffSeq& alpha);

/// Diagonal operator [L_{e,beta}, R_{e,alpha}] by the closed formula:
/// entry 0 is alpha_0 beta_1, entry n>0 is alpha_n beta_{n+1} - alpha_{n-1} beta_n.
OpMatrix diagonal_op(const CoeffSeq& alpha, const CoeffSeq& beta, unsigned N);

/// Sequence of polynomials P_0..P_N as coefficient lists.
struct PolySeq {
  std::vector<std::vector<Rat>> polys;

  unsigned count() const { return static_cast<unsigned>(polys.size()); }
  /// P_n evaluated coefficient list (trailing zeros trimmed).
  const std::vector<Rat>& at(unsigned n) const { return polys.at(n); }

  std::string to_latex() const;
  nlohmann::json to_json() const;
};

/// Expansion phi = sum_n P_n(R_{a,alpha}) L_{b,beta}^n by the ladder
/// recursion. phi, a, b are given in working coordinates; requires
/// b_0 = lambda a_0 for a nonzero scalar lambda. Returns P_0..P_N.
PolySeq expand_endo(const OpMatrix& phi, const BasisMat& a, const CoeffSeq& alpha,
                    const BasisMat& b, const CoeffSeq& beta, unsigned N);

/// sum_{n <= N} P_n(R_{a,alpha}) L_{b,beta}^n as a working-coordinate matrix.
OpMatrix reconstruct(const PolySeq& p, const BasisMat& a, const CoeffSeq& alpha,
                     const BasisMat& b, const CoeffSeq& beta, unsigned N);

/// Classical special case: a_n = x^n, b_n = x^n/n!, alpha = beta = ones.
PolySeq km_expand(const OpMatrix& phi, unsigned N);

/// Matrix transpose in the e-coordinates.
OpMatrix transpose_op(const OpMatrix& m);
/// Duality pairing: coordinatewise dot product.
Rat pairing(const std::vector<Rat>& p, const std::vector<Rat>& s);

/// Expansion of a continuous endomorphism of the completion:
/// psi = sum_n R_{e,beta-up}^n P_n(L_{e,alpha-down}), obtained by expanding
/// the transpose. With corollary_mode, the re-parametrized form
/// psi = sum_n R_{e,alpha}^n P_n(L_{e,beta}) is produced instead.
PolySeq expand_continuous(const OpMatrix& psi, const BasisMat& e, const CoeffSeq& alpha,
                          const CoeffSeq& beta, unsigned N, bool corollary_mode = false);

/// The verification sum for expand_continuous (default mode):
/// sum_{n <= N} R_{e,beta-up}^n P_n(L_{e,alpha-down}).
OpMatrix reconstruct_continuous(const PolySeq& p, const BasisMat& e, const CoeffSeq& alpha,
                                const CoeffSeq& beta, unsigned N,
                                bool corollary_mode = false);

}  // namespace weylab
