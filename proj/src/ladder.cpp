#include "weylab/ladder.hpp"

#include <nlohmann/json.hpp>

namespace weylab {
namespace {

std::vector<Rat> matvec(const OpMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.dim());
  for (unsigned n = 0; n < m.dim(); ++n) {
    Rat acc = 0;
    for (unsigned k = 0; k < m.dim(); ++k) {
      if (m.at(n, k) == 0 || v[k] == 0) continue;
      acc += m.at(n, k) * v[k];
    }
    out[n] = std::move(acc);
  }
  return out;
}

OpMatrix matmul(const OpMatrix& m, const OpMatrix& p) {
  OpMatrix out(m.dim());
  for (unsigned n = 0; n < m.dim(); ++n)
    for (unsigned j = 0; j < m.dim(); ++j) {
      if (m.at(n, j) == 0) continue;
      for (unsigned k = 0; k < m.dim(); ++k) {
        if (p.at(j, k) == 0) continue;
        out.at(n, k) += m.at(n, j) * p.at(j, k);
      }
    }
  return out;
}

void require_role(const CoeffSeq& s, CoeffSeq::Role r, const char* what) {
  if (s.role != r) throw DomainError(std::string(what) + ": wrong coefficient-sequence role");
}

// P(M) for a coefficient list, given precomputed powers of M.
OpMatrix poly_of(const std::vector<Rat>& coeffs, const std::vector<OpMatrix>& pows) {
  OpMatrix out(pows.front().dim());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    OpMatrix term = pows.at(i);
    term *= coeffs[i];
    out += term;
  }
  return out;
}

std::vector<OpMatrix> powers_of(const OpMatrix& m, unsigned count) {
  std::vector<OpMatrix> pows;
  pows.reserve(count + 1);
  pows.push_back(OpMatrix::identity(m.dim()));
  for (unsigned i = 1; i <= count; ++i) pows.push_back(matmul(m, pows.back()));
  return pows;
}

}  // namespace

BasisMat::BasisMat(OpMatrix m) : cols(std::move(m)) {
  if (!cols.inverse()) throw DomainError("BasisMat: singular basis matrix");
}

BasisMat BasisMat::standard(unsigned dim) { return BasisMat(OpMatrix::identity(dim)); }

BasisMat BasisMat::factorial_scaled(unsigned dim) {
  OpMatrix m(dim);
  for (unsigned n = 0; n < dim; ++n) m.at(n, n) = Rat(1) / Rat(factorial(n));
  return BasisMat(std::move(m));
}

std::vector<Rat> BasisMat::vec(unsigned n) const {
  std::vector<Rat> v(dim());
  for (unsigned r = 0; r < dim(); ++r) v[r] = cols.at(r, n);
  return v;
}

nlohmann::json BasisMat::to_json() const { return cols.to_json(); }

CoeffSeq::CoeffSeq(Role role_, std::vector<Rat> values) : role(role_), v(std::move(values)) {
  for (const Rat& c : v)
    if (c == 0) throw DomainError("CoeffSeq: entries must be nonzero");
  if (role == Role::Beta && !v.empty() && v[0] != 1)
    throw DomainError("CoeffSeq: lowering sequence must have beta_0 = 1");
}

CoeffSeq CoeffSeq::ones(Role role, unsigned len) {
  return {role, std::vector<Rat>(len, Rat(1))};
}

const Rat& CoeffSeq::at(unsigned n) const {
  if (n >= v.size()) throw DomainError("CoeffSeq: index past end of sequence");
  return v[n];
}

nlohmann::json CoeffSeq::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rat& c : v) arr.push_back(rat_str(c));
  return arr;
}

CoeffSeq shift_up(const CoeffSeq& beta) {
  require_role(beta, CoeffSeq::Role::Beta, "shift_up");
  std::vector<Rat> out(beta.v.begin() + 1, beta.v.end());
  return CoeffSeq::alpha(std::move(out));
}

CoeffSeq shift_down(const CoeffSeq& alpha) {
  require_role(alpha, CoeffSeq::Role::Alpha, "shift_down");
  std::vector<Rat> out;
  out.reserve(alpha.v.size() + 1);
  out.push_back(1);
  out.insert(out.end(), alpha.v.begin(), alpha.v.end());
  return CoeffSeq::beta(std::move(out));
}

OpMatrix lowering(const BasisMat& b, const CoeffSeq& beta) {
  require_role(beta, CoeffSeq::Role::Beta, "lowering");
  unsigned dim = b.dim();
  OpMatrix rel(dim);
  for (unsigned n = 1; n < dim; ++n) rel.at(n - 1, n) = beta.at(n);
  OpMatrix out = matmul(matmul(b.cols, rel), *b.cols.inverse());
  out.band = static_cast<long>(dim) - 1;
  return out;
}

OpMatrix raising(const BasisMat& a, const CoeffSeq& alpha) {
  require_role(alpha, CoeffSeq::Role::Alpha, "raising");
  unsigned dim = a.dim();
  OpMatrix rel(dim);
  for (unsigned n = 0; n + 1 < dim; ++n) rel.at(n + 1, n) = alpha.at(n);
  OpMatrix out = matmul(matmul(a.cols, rel), *a.cols.inverse());
  out.raise = 1;
  out.band = static_cast<long>(dim) - 2;  // image of the top basis vector is lost
  return out;
}

OpMatrix diagonal_op(const CoeffSeq& alpha, const CoeffSeq& beta, unsigned N) {
  require_role(alpha, CoeffSeq::Role::Alpha, "diagonal_op");
  require_role(beta, CoeffSeq::Role::Beta, "diagonal_op");
  OpMatrix out(N + 1);
  out.at(0, 0) = alpha.at(0) * beta.at(1);
  for (unsigned n = 1; n <= N; ++n)
    out.at(n, n) = alpha.at(n) * beta.at(n + 1) - alpha.at(n - 1) * beta.at(n);
  return out;
}

PolySeq expand_endo(const OpMatrix& phi, const BasisMat& a, const CoeffSeq& alpha,
                    const BasisMat& b, const CoeffSeq& beta, unsigned N) {
  require_role(alpha, CoeffSeq::Role::Alpha, "expand_endo");
  require_role(beta, CoeffSeq::Role::Beta, "expand_endo");
  unsigned W = phi.dim();
  if (a.dim() != W || b.dim() != W) throw DomainError("expand_endo: dimension mismatch");
  if (N >= W) throw DomainError("expand_endo: N exceeds working dimension");

  // Reduce relative ladder operators to plain ones via scaled bases.
  OpMatrix ap = a.cols, bp = b.cols;
  Rat aprod = 1, bprod = 1;
  for (unsigned n = 0; n < W; ++n) {
    if (n > 0) aprod *= alpha.at(n - 1);
    bprod *= beta.at(n);
    for (unsigned r = 0; r < W; ++r) {
      ap.at(r, n) *= aprod;
      bp.at(r, n) /= bprod;
    }
  }

  // b'_0 = lambda a'_0
  std::vector<Rat> a0(W), b0(W);
  for (unsigned r = 0; r < W; ++r) {
    a0[r] = ap.at(r, 0);
    b0[r] = bp.at(r, 0);
  }
  unsigned pivot = 0;
  while (pivot < W && a0[pivot] == 0) ++pivot;
  Rat lambda = b0[pivot] / a0[pivot];
  for (unsigned r = 0; r < W; ++r)
    if (b0[r] != lambda * a0[r])
      throw DomainError("expand_endo: b_0 is not a scalar multiple of a_0");
  if (lambda == 0) throw DomainError("expand_endo: b_0 is zero");

  auto apinv = ap.inverse();
  if (!apinv) throw DomainError("expand_endo: singular scaled basis");

  // Plain raising operator of the scaled basis a'.
  OpMatrix shift(W);
  for (unsigned n = 0; n + 1 < W; ++n) shift.at(n + 1, n) = 1;
  OpMatrix ra = matmul(matmul(ap, shift), *apinv);
  std::vector<OpMatrix> rpow = powers_of(ra, W - 1);

  auto apply_poly = [&](const std::vector<Rat>& coeffs, const std::vector<Rat>& v) {
    std::vector<Rat> out(W);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      std::vector<Rat> t = matvec(rpow[i], v);
      for (unsigned r = 0; r < W; ++r) out[r] += coeffs[i] * t[r];
    }
    return out;
  };

  auto col_of = [&](const OpMatrix& m, unsigned k) {
    std::vector<Rat> v(W);
    for (unsigned r = 0; r < W; ++r) v[r] = m.at(r, k);
    return v;
  };

  PolySeq result;
  for (unsigned n = 0; n <= N; ++n) {
    std::vector<Rat> rhs = matvec(phi, col_of(bp, n));
    for (unsigned k = 0; k < n; ++k) {
      std::vector<Rat> t = apply_poly(result.polys[k], col_of(bp, n - k));
      for (unsigned r = 0; r < W; ++r) rhs[r] -= t[r];
    }
    std::vector<Rat> coeffs = matvec(*apinv, rhs);
    for (unsigned r = 0; r < W; ++r) coeffs[r] /= lambda;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    result.polys.push_back(std::move(coeffs));
  }
  return result;
}

OpMatrix reconstruct(const PolySeq& p, const BasisMat& a, const CoeffSeq& alpha,
                     const BasisMat& b, const CoeffSeq& beta, unsigned N) {
  unsigned W = a.dim();
  if (b.dim() != W) throw DomainError("reconstruct: dimension mismatch");
  OpMatrix r = raising(a, alpha);
  OpMatrix l = lowering(b, beta);
  unsigned maxdeg = 0;
  for (const auto& c : p.polys) maxdeg = std::max<unsigned>(maxdeg, c.empty() ? 0 : c.size() - 1);
  std::vector<OpMatrix> rpow = powers_of(r, maxdeg);
  OpMatrix out(W);
  OpMatrix lpow = OpMatrix::identity(W);
  for (unsigned n = 0; n <= N && n < p.count(); ++n) {
    if (n > 0) lpow = matmul(l, lpow);
    out += matmul(poly_of(p.at(n), rpow), lpow);
  }
  return out;
}

PolySeq km_expand(const OpMatrix& phi, unsigned N) {
  unsigned W = phi.dim();
  return expand_endo(phi, BasisMat::standard(W), CoeffSeq::ones(CoeffSeq::Role::Alpha, W),
                     BasisMat::factorial_scaled(W), CoeffSeq::ones(CoeffSeq::Role::Beta, W), N);
}

OpMatrix transpose_op(const OpMatrix& m) { return m.transpose(); }

Rat pairing(const std::vector<Rat>& p, const std::vector<Rat>& s) {
  if (p.size() != s.size()) throw DomainError("pairing: dimension mismatch");
  Rat acc = 0;
  for (size_t i = 0; i < p.size(); ++i) acc += p[i] * s[i];
  return acc;
}

PolySeq expand_continuous(const OpMatrix& psi, const BasisMat& e, const CoeffSeq& alpha,
                          const CoeffSeq& beta, unsigned N, bool corollary_mode) {
  unsigned W = psi.dim();
  if (e.dim() != W) throw DomainError("expand_continuous: dimension mismatch");
  // Coordinates in the e basis; transpose there.
  OpMatrix psi_e = matmul(matmul(*e.cols.inverse(), psi), e.cols);
  OpMatrix t = psi_e.transpose();
  CoeffSeq th_alpha = corollary_mode ? shift_up(beta) : alpha;
  CoeffSeq th_beta = corollary_mode ? shift_down(alpha) : beta;
  return expand_endo(t, BasisMat::standard(W), th_alpha, BasisMat::standard(W), th_beta, N);
}

OpMatrix reconstruct_continuous(const PolySeq& p, const BasisMat& e, const CoeffSeq& alpha,
                                const CoeffSeq& beta, unsigned N, bool corollary_mode) {
  unsigned W = e.dim();
  CoeffSeq rseq = corollary_mode ? alpha : shift_up(beta);
  CoeffSeq lseq = corollary_mode ? beta : shift_down(alpha);
  OpMatrix r = raising(e, rseq);
  OpMatrix l = lowering(e, lseq);
  unsigned maxdeg = 0;
  for (const auto& c : p.polys) maxdeg = std::max<unsigned>(maxdeg, c.empty() ? 0 : c.size() - 1);
  std::vector<OpMatrix> lpow = powers_of(l, maxdeg);
  OpMatrix out(W);
  OpMatrix rpow = OpMatrix::identity(W);
  for (unsigned n = 0; n <= N && n < p.count(); ++n) {
    if (n > 0) rpow = matmul(r, rpow);
    out += matmul(rpow, poly_of(p.at(n), lpow));
  }
  return out;
}

std::string PolySeq::to_latex() const {
  std::string out;
  for (unsigned n = 0; n < count(); ++n) {
    out += "P_{" + std::to_string(n) + "}(x) = ";
    const auto& c = polys[n];
    std::string body;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Rat abs = c[i] < 0 ? Rat(-c[i]) : c[i];
      if (body.empty()) {
        if (c[i] < 0) body += "-";
      } else {
        body += c[i] < 0 ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^{" + std::to_string(i) + "}");
      std::string cs;
      if (abs.get_den() == 1) {
        cs = abs.get_num().get_str();
      } else {
        cs = "\\frac{" + abs.get_num().get_str() + "}{" + abs.get_den().get_str() + "}";
      }
      if (mono.empty()) body += cs;
      else if (abs == 1) body += mono;
      else body += cs + " " + mono;
    }
    if (body.empty()) body = "0";
    out += body + "\\\\\n";
  }
  return out;
}

nlohmann::json PolySeq::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : polys) {
    nlohmann::json pj = nlohmann::json::array();
    for (const Rat& v : c) pj.push_back(rat_str(v));
    arr.push_back(pj);
  }
  return {{"schema", 1}, {"polys", arr}};
}

}  // namespace weylab
