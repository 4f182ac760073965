#include "weylab/series.hpp"

#include <nlohmann/json.hpp>

namespace weylab {
namespace {

void require_same_order(const TruncSeries& f, const TruncSeries& g) {
  if (f.order() != g.order())
    throw DomainError("truncation order mismatch: " + std::to_string(f.order()) +
                      " vs " + std::to_string(g.order()));
}

void require_same_orders(const BivSeries& f, const BivSeries& g) {
  if (f.order_u() != g.order_u() || f.order_v() != g.order_v())
    throw DomainError("bivariate truncation order mismatch");
}

}  // namespace

TruncSeries TruncSeries::constant(const Rat& v, unsigned order) {
  TruncSeries s(order);
  s[0] = v;
  return s;
}

TruncSeries TruncSeries::x(unsigned order) { return monomial(1, order); }

TruncSeries TruncSeries::monomial(unsigned k, unsigned order, const Rat& c) {
  TruncSeries s(order);
  if (k <= order) s[k] = c;
  return s;
}

unsigned TruncSeries::valuation() const {
  for (unsigned k = 0; k <= order_; ++k)
    if (c_[k] != 0) return k;
  return order_ + 1;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_order(*this, o);
  for (unsigned k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_order(*this, o);
  for (unsigned k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rat& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

TruncSeries TruncSeries::mul(const TruncSeries& f, const TruncSeries& g) {
  require_same_order(f, g);
  TruncSeries out(f.order_);
  for (unsigned i = 0; i <= f.order_; ++i) {
    if (f.c_[i] == 0) continue;
    for (unsigned j = 0; i + j <= f.order_; ++j) {
      if (g.c_[j] == 0) continue;
      out.c_[i + j] += f.c_[i] * g.c_[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::div(const TruncSeries& f, const TruncSeries& g) {
  require_same_order(f, g);
  if (g.c_[0] == 0) throw DomainError("series division by series with zero constant term");
  TruncSeries q(f.order_);
  for (unsigned n = 0; n <= f.order_; ++n) {
    Rat acc = f.c_[n];
    for (unsigned k = 0; k < n; ++k) acc -= q.c_[k] * g.c_[n - k];
    q.c_[n] = acc / g.c_[0];
  }
  return q;
}

TruncSeries TruncSeries::compose(const TruncSeries& s) const {
  require_same_order(*this, s);
  if (s.c_[0] != 0)
    throw DomainError("composition requires inner series with zero constant term");
  // Horner from the top coefficient down.
  TruncSeries acc(order_);
  for (unsigned k = order_ + 1; k-- > 0;) {
    acc = mul(acc, s);
    acc.c_[0] += c_[k];
  }
  return acc;
}

TruncSeries TruncSeries::binom_pow(const Rat& r) const {
  if (c_[0] != 1) throw DomainError("binom_pow requires constant term 1");
  TruncSeries u = *this;
  u.c_[0] = 0;  // t - 1
  TruncSeries out(order_);
  TruncSeries upow = one(order_);
  for (unsigned n = 0; n <= order_; ++n) {
    out += upow * rat_binomial(r, n);
    if (n < order_) upow = mul(upow, u);
  }
  return out;
}

TruncSeries TruncSeries::exp_trunc() const {
  if (c_[0] != 0) throw DomainError("exp_trunc requires zero constant term");
  TruncSeries out = one(order_);
  TruncSeries pow = one(order_);
  Rat fact = 1;
  for (unsigned n = 1; n <= order_; ++n) {
    pow = mul(pow, *this);
    fact *= static_cast<long>(n);
    out += pow * (1 / fact);
  }
  return out;
}

TruncSeries TruncSeries::log_trunc() const {
  if (c_[0] != 1) throw DomainError("log_trunc requires constant term 1");
  TruncSeries u = *this;
  u.c_[0] = 0;
  TruncSeries out(order_);
  TruncSeries pow = one(order_);
  for (unsigned n = 1; n <= order_; ++n) {
    pow = mul(pow, u);
    Rat sign = (n % 2 == 1) ? 1 : -1;
    out += pow * (sign / Rat(static_cast<long>(n)));
  }
  return out;
}

TruncSeries TruncSeries::derive() const {
  if (order_ == 0) return TruncSeries(0);
  TruncSeries out(order_ - 1);
  for (unsigned k = 1; k <= order_; ++k) out.c_[k - 1] = c_[k] * static_cast<long>(k);
  return out;
}

TruncSeries TruncSeries::integrate() const {
  TruncSeries out(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) out.c_[k + 1] = c_[k] / Rat(static_cast<long>(k) + 1);
  return out;
}

std::string TruncSeries::render(const std::string& var) const {
  std::string out;
  for (unsigned k = 0; k <= order_; ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += c_[k] < 0 ? " - " : " + ";
    else if (c_[k] < 0) out += "-";
    Rat abs = c_[k] < 0 ? Rat(-c_[k]) : c_[k];
    if (k == 0) {
      out += rat_str(abs);
    } else {
      std::string mono = k == 1 ? var : var + "^" + std::to_string(k);
      out += abs == 1 ? mono : rat_str(abs) + " " + mono;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
}

nlohmann::json TruncSeries::to_json(const std::string& var) const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (unsigned k = 0; k <= order_; ++k) {
    Rat c = c_[k];
    c.canonicalize();
    coeffs.push_back({{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return {{"var", var}, {"order", order_}, {"coeffs", coeffs}};
}

BivSeries& BivSeries::operator+=(const BivSeries& o) {
  require_same_orders(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BivSeries& BivSeries::operator-=(const BivSeries& o) {
  require_same_orders(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

BivSeries& BivSeries::operator*=(const Rat& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

BivSeries BivSeries::mul(const BivSeries& f, const BivSeries& g) {
  require_same_orders(f, g);
  BivSeries out(f.ou_, f.ov_);
  for (unsigned mu = 0; mu <= f.ou_; ++mu)
    for (unsigned mv = 0; mv <= f.ov_; ++mv) {
      const Rat& a = f.at(mu, mv);
      if (a == 0) continue;
      for (unsigned nu = 0; mu + nu <= f.ou_; ++nu)
        for (unsigned nv = 0; mv + nv <= f.ov_; ++nv) {
          const Rat& b = g.at(nu, nv);
          if (b == 0) continue;
          out.at(mu + nu, mv + nv) += a * b;
        }
    }
  return out;
}

TruncSeries BivSeries::slice_u(unsigned m) const {
  TruncSeries s(ov_);
  for (unsigned n = 0; n <= ov_; ++n) s[n] = at(m, n);
  return s;
}

BivSeries BivSeries::from_slice(const TruncSeries& s, unsigned m, unsigned order_u) {
  BivSeries out(order_u, s.order());
  if (m <= order_u)
    for (unsigned n = 0; n <= s.order(); ++n) out.at(m, n) = s[n];
  return out;
}

nlohmann::json BivSeries::to_json(const std::string& var_u, const std::string& var_v) const {
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned m = 0; m <= ou_; ++m) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned n = 0; n <= ov_; ++n) {
      Rat c = at(m, n);
      c.canonicalize();
      row.push_back({{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    rows.push_back(row);
  }
  return {{"var_u", var_u}, {"var_v", var_v}, {"order_u", ou_}, {"order_v", ov_}, {"coeffs", rows}};
}

BivSeries compose_in_x(const TruncSeries& f, const BivSeries& s) {
  for (unsigned m = 0; m <= s.order_u(); ++m)
    if (s.at(m, 0) != 0)
      throw DomainError("compose_in_x requires every u-slice of s to have x-valuation >= 1");
  if (f.order() != s.order_v())
    throw DomainError("compose_in_x: x-order mismatch");
  BivSeries acc(s.order_u(), s.order_v());
  for (unsigned k = f.order() + 1; k-- > 0;) {
    acc = BivSeries::mul(acc, s);
    acc.at(0, 0) += f[k];
  }
  return acc;
}

}  // namespace weylab
