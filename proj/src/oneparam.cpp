#include "weylab/oneparam.hpp"

#include <nlohmann/json.hpp>

#include "weylab/stirling.hpp"
#include "weylab/endomatrix.hpp"

namespace weylab {

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  if (ol_ != o.ol_ || ot_ != o.ot_ || ox_ != o.ox_)
    throw DomainError("trivariate truncation order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TriSeries TriSeries::mul(const TriSeries& f, const TriSeries& g) {
  if (f.ol_ != g.ol_ || f.ot_ != g.ot_ || f.ox_ != g.ox_)
    throw DomainError("trivariate truncation order mismatch");
  TriSeries out(f.ol_, f.ot_, f.ox_);
  for (unsigned a = 0; a <= f.ol_; ++a)
    for (unsigned b = 0; b <= f.ot_; ++b)
      for (unsigned n = 0; n <= f.ox_; ++n) {
        const Rat& u = f.at(a, b, n);
        if (u == 0) continue;
        for (unsigned a2 = 0; a + a2 <= f.ol_; ++a2)
          for (unsigned b2 = 0; b + b2 <= f.ot_; ++b2)
            for (unsigned n2 = 0; n + n2 <= f.ox_; ++n2) {
              const Rat& v = g.at(a2, b2, n2);
              if (v == 0) continue;
              out.at(a + a2, b + b2, n + n2) += u * v;
            }
      }
  return out;
}

TriSeries TriSeries::lift_lambda(const BivSeries& s, unsigned order_t) {
  TriSeries out(s.order_u(), order_t, s.order_v());
  for (unsigned a = 0; a <= s.order_u(); ++a)
    for (unsigned n = 0; n <= s.order_v(); ++n) out.at(a, 0, n) = s.at(a, n);
  return out;
}

TriSeries TriSeries::lift_theta(const BivSeries& s, unsigned order_l) {
  TriSeries out(order_l, s.order_u(), s.order_v());
  for (unsigned b = 0; b <= s.order_u(); ++b)
    for (unsigned n = 0; n <= s.order_v(); ++n) out.at(0, b, n) = s.at(b, n);
  return out;
}

BivSeries TriSeries::theta_zero() const {
  BivSeries out(ol_, ox_);
  for (unsigned a = 0; a <= ol_; ++a)
    for (unsigned n = 0; n <= ox_; ++n) out.at(a, n) = at(a, 0, n);
  return out;
}

PrefSub::PrefSub(unsigned lambda_order_, unsigned x_order_, BivSeries g_, BivSeries s_)
    : lambda_order(lambda_order_), x_order(x_order_), g(std::move(g_)), s(std::move(s_)) {
  if (g.order_u() != lambda_order || g.order_v() != x_order ||
      s.order_u() != lambda_order || s.order_v() != x_order)
    throw DomainError("PrefSub: component orders do not match declared orders");
  for (unsigned n = 0; n <= x_order; ++n) {
    if (g.at(0, n) != Rat(n == 0 ? 1 : 0))
      throw DomainError("PrefSub: g at lambda^0 must be 1");
    if (s.at(0, n) != Rat(n == 1 ? 1 : 0))
      throw DomainError("PrefSub: s at lambda^0 must be x");
  }
  for (unsigned m = 0; m <= lambda_order; ++m)
    if (s.at(m, 0) != 0)
      throw DomainError("PrefSub: s must have x-valuation >= 1 in every lambda slice");
}

PrefSub PrefSub::identity(unsigned lambda_order, unsigned x_order) {
  BivSeries g(lambda_order, x_order), s(lambda_order, x_order);
  g.at(0, 0) = 1;
  s.at(0, 1) = 1;
  return PrefSub(lambda_order, x_order, std::move(g), std::move(s));
}

nlohmann::json PrefSub::to_json() const {
  return {{"schema", 1},
          {"lambda_order", lambda_order},
          {"x_order", x_order},
          {"g", g.to_json("lambda", "x")},
          {"s", s.to_json("lambda", "x")}};
}

std::string PrefSub::summary() const {
  std::string out;
  unsigned show = std::min(lambda_order, 3u);
  out += "g:\n";
  for (unsigned m = 0; m <= show; ++m)
    out += "  lambda^" + std::to_string(m) + ": " + g.slice_u(m).render() + "\n";
  out += "s:\n";
  for (unsigned m = 0; m <= show; ++m)
    out += "  lambda^" + std::to_string(m) + ": " + s.slice_u(m).render() + "\n";
  return out;
}

BivSeries apply_prefsub(const PrefSub& u, const TruncSeries& f) {
  if (f.order() != u.x_order) throw DomainError("apply_prefsub: order mismatch");
  return BivSeries::mul(u.g, compose_in_x(f, u.s));
}

PrefSubTwo compose_prefsub(const PrefSub& u1, const PrefSub& u2) {
  if (u1.x_order != u2.x_order)
    throw DomainError("compose_prefsub: x-order mismatch");
  unsigned lo = u1.lambda_order, to = u2.lambda_order, xo = u1.x_order;
  TriSeries g2s1(lo, to, xo), s2s1(lo, to, xo);
  for (unsigned m = 0; m <= to; ++m) {
    BivSeries gm = compose_in_x(u2.g.slice_u(m), u1.s);
    BivSeries sm = compose_in_x(u2.s.slice_u(m), u1.s);
    for (unsigned a = 0; a <= lo; ++a)
      for (unsigned n = 0; n <= xo; ++n) {
        g2s1.at(a, m, n) = gm.at(a, n);
        s2s1.at(a, m, n) = sm.at(a, n);
      }
  }
  TriSeries g = TriSeries::mul(TriSeries::lift_lambda(u1.g, to), g2s1);
  return {std::move(g), std::move(s2s1)};
}

TriSeries expand_at_sum(const BivSeries& u, unsigned order_t) {
  TriSeries out(u.order_u(), order_t, u.order_v());
  for (unsigned a = 0; a <= u.order_u(); ++a)
    for (unsigned b = 0; b <= order_t; ++b) {
      if (a + b > u.order_u()) continue;
      Rat binom{binomial(a + b, a)};
      for (unsigned n = 0; n <= u.order_v(); ++n)
        out.at(a, b, n) = binom * u.at(a + b, n);
    }
  return out;
}

std::vector<std::string> group_law_check(const PrefSub& u) {
  PrefSubTwo c = compose_prefsub(u, u);
  TriSeries tg = expand_at_sum(u.g, u.lambda_order);
  TriSeries ts = expand_at_sum(u.s, u.lambda_order);
  std::vector<std::string> bad;
  for (unsigned a = 0; a <= u.lambda_order; ++a)
    for (unsigned b = 0; a + b <= u.lambda_order; ++b)
      for (unsigned n = 0; n <= u.x_order; ++n) {
        if (c.g.at(a, b, n) != tg.at(a, b, n))
          bad.push_back("g at lambda^" + std::to_string(a) + " theta^" + std::to_string(b) +
                        " x^" + std::to_string(n));
        if (c.s.at(a, b, n) != ts.at(a, b, n))
          bad.push_back("s at lambda^" + std::to_string(a) + " theta^" + std::to_string(b) +
                        " x^" + std::to_string(n));
      }
  return bad;
}

PrefSub integrate_monomial(const Rat& alpha, unsigned m, const Rat& beta,
                           unsigned lambda_order, unsigned x_order) {
  if (alpha == 0) throw DomainError("integrate_monomial: alpha must be nonzero");
  if (m < 2) throw DomainError("integrate_monomial: m must be >= 2");
  Rat c = alpha * Rat(static_cast<long>(m) - 1);
  // base(u) = 1 - c u with u = lambda x^{m-1}
  TruncSeries base(lambda_order);
  base[0] = 1;
  if (lambda_order >= 1) base[1] = -c;
  TruncSeries ws = base.binom_pow(Rat(-1) / Rat(static_cast<long>(m) - 1));
  TruncSeries wg = base.binom_pow(-beta / c);
  BivSeries g(lambda_order, x_order), s(lambda_order, x_order);
  for (unsigned p = 0; p <= lambda_order; ++p) {
    unsigned long n = static_cast<unsigned long>(p) * (m - 1);
    if (n <= x_order) g.at(p, static_cast<unsigned>(n)) = wg[p];
    if (n + 1 <= x_order) s.at(p, static_cast<unsigned>(n) + 1) = ws[p];
  }
  return PrefSub(lambda_order, x_order, std::move(g), std::move(s));
}

std::vector<std::string> tangent_check(const PrefSub& u, const TruncSeries& q,
                                       const TruncSeries& v) {
  if (q.order() != u.x_order || v.order() != u.x_order)
    throw DomainError("tangent_check: order mismatch");
  std::vector<std::string> bad;
  for (unsigned j = 0; j <= u.x_order; ++j) {
    TruncSeries f = TruncSeries::monomial(j, u.x_order);
    TruncSeries lhs = apply_prefsub(u, f).slice_u(1);
    TruncSeries fprime = j == 0 ? TruncSeries(u.x_order)
                                : TruncSeries::monomial(j - 1, u.x_order, Rat(static_cast<long>(j)));
    TruncSeries rhs = q * fprime + v * f;
    if (!(lhs == rhs)) bad.push_back("tangent mismatch on x^" + std::to_string(j));
  }
  return bad;
}

PrefSub sheffer_prefsub(const NormalForm& omega, unsigned lambda_order, unsigned x_order) {
  Excess ex = excess_of(omega);
  if (!ex.homogeneous()) throw DomainError("sheffer_prefsub: operator is not homogeneous");
  if (ex.value < 0) throw DomainError("sheffer_prefsub: excess must be nonnegative");
  for (const auto& [key, c] : omega.terms())
    if (key.second > 1)
      throw DomainError("sheffer_prefsub: operator must contain at most one annihilator per term");
  unsigned e = static_cast<unsigned>(ex.value);

  StirlingTable table = stirling_table(omega, lambda_order);
  auto [gt, phit] = egf_extract(table, lambda_order);

  BivSeries g(lambda_order, x_order), s(lambda_order, x_order);
  s.at(0, 1) = 1;
  for (unsigned p = 0; p <= lambda_order; ++p) {
    unsigned long n = static_cast<unsigned long>(p) * e;
    if (n <= x_order) g.at(p, static_cast<unsigned>(n)) += gt[p];
    if (p >= 1 && n + 1 <= x_order) s.at(p, static_cast<unsigned>(n) + 1) += phit[p];
  }
  return PrefSub(lambda_order, x_order, std::move(g), std::move(s));
}

std::vector<std::string> prop2_bridge(const NormalForm& omega, unsigned lambda_order,
                                      unsigned x_order) {
  PrefSub u = sheffer_prefsub(omega, lambda_order, x_order);
  LambdaMatrix exp = exp_lambda(omega, x_order, lambda_order, DenomSeq::ones());
  std::vector<std::string> bad;
  for (unsigned j = 0; j <= x_order; ++j) {
    BivSeries from_sub = apply_prefsub(u, TruncSeries::monomial(j, x_order));
    BivSeries from_exp = exp.column(j);
    if (!(from_sub == from_exp)) bad.push_back("mismatch on monomial x^" + std::to_string(j));
  }
  return bad;
}

}  // namespace weylab
