#include "weylab/normal_form.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace weylab {

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational: " + s);
  }
}

NormalForm NormalForm::word(unsigned i, unsigned j, const Rat& c) {
  NormalForm f;
  f.add_term(i, j, c);
  return f;
}

Rat NormalForm::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

void NormalForm::add_term(unsigned i, unsigned j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

unsigned NormalForm::max_creation() const {
  unsigned m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.first);
  return m;
}

unsigned NormalForm::max_annihilation() const {
  unsigned m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.second);
  return m;
}

std::vector<std::pair<NormalForm::Key, Rat>> NormalForm::sorted_terms() const {
  std::vector<std::pair<Key, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
    unsigned dl = l.first.first + l.first.second;
    unsigned dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  return v;
}

std::string NormalForm::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : sorted_terms()) {
    Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    auto [i, j] = key;
    std::string body;
    if (i > 0) body += "(a+)^" + std::to_string(i);
    if (j > 0) body += (body.empty() ? "" : " ") + std::string("a^") + std::to_string(j);
    if (body.empty()) {
      out += rat_str(abs);
    } else if (abs == 1) {
      out += body;
    } else {
      out += rat_str(abs) + " " + body;
    }
  }
  return out;
}

nlohmann::json NormalForm::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, c] : sorted_terms()) {
    Rat cc = c;
    cc.canonicalize();
    arr.push_back({{"i", key.first},
                   {"j", key.second},
                   {"num", cc.get_num().get_str()},
                   {"den", cc.get_den().get_str()}});
  }
  return arr;
}

NormalForm normal_product(const NormalForm& f, const NormalForm& g) {
  NormalForm out;
  for (const auto& [kf, cf] : f.terms()) {
    auto [i1, j1] = kf;
    for (const auto& [kg, cg] : g.terms()) {
      auto [i2, j2] = kg;
      Rat c = cf * cg;
      unsigned kmax = std::min(j1, i2);
      for (unsigned k = 0; k <= kmax; ++k) {
        Rat w = Rat(factorial(k) * binomial(j1, k) * binomial(i2, k));
        out.add_term(i1 + i2 - k, j1 + j2 - k, c * w);
      }
    }
  }
  return out;
}

NormalForm normalize_word(const std::vector<Letter>& w) {
  // word -> coefficient, words encoded over {A, APlus}
  std::map<std::vector<Letter>, Rat> pool;
  pool[w] = 1;
  NormalForm out;
  while (!pool.empty()) {
    auto node = pool.extract(pool.begin());
    const std::vector<Letter>& cur = node.key();
    const Rat& c = node.mapped();
    size_t pos = cur.size();
    for (size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] == Letter::A && cur[p + 1] == Letter::APlus) {
        pos = p;
        break;
      }
    }
    if (pos == cur.size()) {
      // already normal: count letters
      unsigned i = 0, j = 0;
      for (Letter l : cur) (l == Letter::APlus ? i : j)++;
      out.add_term(i, j, c);
      continue;
    }
    std::vector<Letter> swapped = cur;
    std::swap(swapped[pos], swapped[pos + 1]);
    std::vector<Letter> dropped;
    dropped.reserve(cur.size() - 2);
    dropped.insert(dropped.end(), cur.begin(), cur.begin() + pos);
    dropped.insert(dropped.end(), cur.begin() + pos + 2, cur.end());
    auto bump = [&pool](std::vector<Letter> key, const Rat& v) {
      auto [it, inserted] = pool.try_emplace(std::move(key), v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0) pool.erase(it);
      }
    };
    bump(std::move(swapped), c);
    bump(std::move(dropped), c);
  }
  return out;
}

NormalForm double_dot(const std::vector<Letter>& w) {
  unsigned i = 0, j = 0;
  for (Letter l : w) (l == Letter::APlus ? i : j)++;
  return NormalForm::word(i, j);
}

Excess excess_of(const NormalForm& f) {
  if (f.is_zero()) return Excess::zero();
  long e = 0;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    long d = static_cast<long>(key.first) - static_cast<long>(key.second);
    if (first) {
      e = d;
      first = false;
    } else if (d != e) {
      return Excess::not_homogeneous();
    }
  }
  return Excess::homogeneous(e);
}

}  // namespace weylab
