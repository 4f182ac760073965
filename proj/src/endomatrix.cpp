#include "weylab/endomatrix.hpp"

#include <nlohmann/json.hpp>

namespace weylab {

DenomSeq DenomSeq::make_custom(std::vector<Rat> v) {
  for (const Rat& d : v)
    if (d == 0) throw DomainError("DenomSeq: zero denominator");
  return {Kind::Custom, std::move(v)};
}

Rat DenomSeq::at(unsigned n) const {
  switch (kind) {
    case Kind::Ones:
      return 1;
    case Kind::Factorial:
      return Rat(weylab::factorial(n));
    case Kind::Custom:
      if (n >= custom.size()) throw DomainError("DenomSeq: index past custom sequence");
      return custom[n];
  }
  return 1;
}

nlohmann::json DenomSeq::to_json() const {
  switch (kind) {
    case Kind::Ones:
      return "ones";
    case Kind::Factorial:
      return "factorial";
    case Kind::Custom: {
      nlohmann::json arr = nlohmann::json::array();
      for (const Rat& d : custom) arr.push_back(rat_str(d));
      return {{"custom", arr}};
    }
  }
  return "ones";
}

OpMatrix::OpMatrix(unsigned dim, DenomSeq d)
    : band(static_cast<long>(dim) - 1), dim_(dim), a_(dim * dim), denoms_(std::move(d)) {}

OpMatrix OpMatrix::identity(unsigned dim, DenomSeq d) {
  OpMatrix m(dim, std::move(d));
  for (unsigned n = 0; n < dim; ++n) m.at(n, n) = 1;
  return m;
}

bool OpMatrix::equal_on_columns(const OpMatrix& o, unsigned last_col) const {
  if (dim_ != o.dim_) return false;
  for (unsigned n = 0; n < dim_; ++n)
    for (unsigned k = 0; k <= last_col && k < dim_; ++k)
      if (at(n, k) != o.at(n, k)) return false;
  return true;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (dim_ != o.dim_ || !(denoms_ == o.denoms_)) throw DomainError("matrix dim/denom mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  band = std::min(band, o.band);
  raise = std::max(raise, o.raise);
  return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
  if (dim_ != o.dim_ || !(denoms_ == o.denoms_)) throw DomainError("matrix dim/denom mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  band = std::min(band, o.band);
  raise = std::max(raise, o.raise);
  return *this;
}

OpMatrix& OpMatrix::operator*=(const Rat& c) {
  for (auto& v : a_) v *= c;
  return *this;
}

OpMatrix OpMatrix::transpose() const {
  OpMatrix t(dim_, denoms_);
  for (unsigned n = 0; n < dim_; ++n)
    for (unsigned k = 0; k < dim_; ++k) t.at(k, n) = at(n, k);
  return t;
}

std::optional<OpMatrix> OpMatrix::inverse() const {
  OpMatrix work = *this;
  OpMatrix inv = identity(dim_, denoms_);
  for (unsigned col = 0; col < dim_; ++col) {
    unsigned pivot = col;
    while (pivot < dim_ && work.at(pivot, col) == 0) ++pivot;
    if (pivot == dim_) return std::nullopt;
    if (pivot != col) {
      for (unsigned k = 0; k < dim_; ++k) {
        std::swap(work.at(pivot, k), work.at(col, k));
        std::swap(inv.at(pivot, k), inv.at(col, k));
      }
    }
    Rat p = work.at(col, col);
    for (unsigned k = 0; k < dim_; ++k) {
      work.at(col, k) /= p;
      inv.at(col, k) /= p;
    }
    for (unsigned r = 0; r < dim_; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      Rat f = work.at(r, col);
      for (unsigned k = 0; k < dim_; ++k) {
        work.at(r, k) -= f * work.at(col, k);
        inv.at(r, k) -= f * inv.at(col, k);
      }
    }
  }
  return inv;
}

OpMatrix rho_bf(const NormalForm& f, unsigned N, const DenomSeq& d) {
  OpMatrix m(N + 1, d);
  unsigned max_i = f.max_creation();
  for (const auto& [key, c] : f.terms()) {
    auto [i, j] = key;
    for (unsigned k = j; k <= N; ++k) {
      unsigned n = k - j + i;
      if (n > N) continue;
      // (a+)^i a^j maps x^k to k!/(k-j)! x^{k-j+i}
      Rat w = Rat(factorial(k)) / Rat(factorial(k - j));
      m.at(n, k) += c * w * d.at(n) / d.at(k);
    }
  }
  m.raise = max_i;
  m.band = static_cast<long>(N) - static_cast<long>(max_i);
  return m;
}

TruncSeries apply(const OpMatrix& m, const TruncSeries& f) {
  if (f.order() + 1 != m.dim()) throw DomainError("apply: dimension mismatch");
  unsigned N = f.order();
  TruncSeries out(N);
  for (unsigned n = 0; n <= N; ++n) {
    Rat b = 0;
    for (unsigned k = 0; k <= N; ++k) {
      if (m.at(n, k) == 0) continue;
      b += m.at(n, k) * (f[k] * m.denoms().at(k));
    }
    out[n] = b / m.denoms().at(n);
  }
  return out;
}

OpMatrix compose(const OpMatrix& m, const OpMatrix& p) {
  if (m.dim() != p.dim() || !(m.denoms() == p.denoms()))
    throw DomainError("compose: dim/denom mismatch");
  unsigned dim = m.dim();
  OpMatrix out(dim, m.denoms());
  for (unsigned n = 0; n < dim; ++n)
    for (unsigned j = 0; j < dim; ++j) {
      if (m.at(n, j) == 0) continue;
      for (unsigned k = 0; k < dim; ++k) {
        if (p.at(j, k) == 0) continue;
        out.at(n, k) += m.at(n, j) * p.at(j, k);
      }
    }
  out.raise = m.raise + p.raise;
  out.band = std::min(p.band, m.band - static_cast<long>(p.raise));
  return out;
}

std::string to_string(Triangularity t) {
  switch (t) {
    case Triangularity::StrictlyLower: return "strictly-lower";
    case Triangularity::Diagonal: return "diagonal";
    case Triangularity::StrictlyUpper: return "strictly-upper";
    case Triangularity::None: return "none";
  }
  return "none";
}

Triangularity triangularity(const NormalForm& f, unsigned N) {
  if (!excess_of(f).homogeneous() && !f.is_zero())
    throw DomainError("triangularity: operator is not homogeneous");
  OpMatrix m = rho_bf(f, N, DenomSeq::ones());
  bool lower = false, diag = false, upper = false;
  for (unsigned n = 0; n <= N; ++n)
    for (unsigned k = 0; k <= N; ++k) {
      if (m.at(n, k) == 0) continue;
      if (n > k) lower = true;
      else if (n == k) diag = true;
      else upper = true;
    }
  if (lower && !diag && !upper) return Triangularity::StrictlyLower;
  if (upper && !diag && !lower) return Triangularity::StrictlyUpper;
  if (!lower && !upper) return Triangularity::Diagonal;
  return Triangularity::None;
}

LambdaMatrix::LambdaMatrix(unsigned dim, unsigned lambda_order, DenomSeq d)
    : dim_(dim), lorder_(lambda_order),
      a_(static_cast<size_t>(dim) * dim, TruncSeries(lambda_order)),
      denoms_(std::move(d)) {}

BivSeries LambdaMatrix::column(unsigned k) const {
  BivSeries col(lorder_, dim_ - 1);
  for (unsigned n = 0; n < dim_; ++n)
    for (unsigned m = 0; m <= lorder_; ++m) col.at(m, n) = at(n, k)[m];
  return col;
}

nlohmann::json LambdaMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned n = 0; n < dim_; ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned k = 0; k < dim_; ++k) row.push_back(at(n, k).to_json("lambda"));
    rows.push_back(row);
  }
  return {{"schema", 1}, {"dim", dim_}, {"lambda_order", lorder_},
          {"denoms", denoms_.to_json()}, {"entries", rows}};
}

LambdaMatrix exp_lambda(const NormalForm& f, unsigned N, unsigned lambda_order,
                        const DenomSeq& d) {
  if (!excess_of(f).homogeneous() && !f.is_zero())
    throw DomainError("exp_lambda: operator is not homogeneous");
  OpMatrix m = rho_bf(f, N, d);
  LambdaMatrix out(N + 1, lambda_order, d);
  OpMatrix pow = OpMatrix::identity(N + 1, d);
  Rat fact = 1;
  for (unsigned mm = 0; mm <= lambda_order; ++mm) {
    if (mm > 0) {
      pow = compose(m, pow);
      fact *= static_cast<long>(mm);
    }
    for (unsigned n = 0; n <= N; ++n)
      for (unsigned k = 0; k <= N; ++k)
        if (pow.at(n, k) != 0) out.at(n, k)[mm] = pow.at(n, k) / fact;
  }
  return out;
}

std::string OpMatrix::to_csv() const {
  std::string out;
  for (unsigned n = 0; n < dim_; ++n) {
    for (unsigned k = 0; k < dim_; ++k) {
      if (k) out += ",";
      out += rat_str(at(n, k));
    }
    out += "\n";
  }
  return out;
}

nlohmann::json OpMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned n = 0; n < dim_; ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned k = 0; k < dim_; ++k) row.push_back(rat_str(at(n, k)));
    rows.push_back(row);
  }
  return {{"schema", 1}, {"dim", dim_}, {"denoms", denoms_.to_json()}, {"entries", rows}};
}

}  // namespace weylab
