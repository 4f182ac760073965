#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylab/rational.hpp"

namespace weylab {

enum class Letter { A, APlus };

/// Element of the Heisenberg-Weyl algebra written in the normal-order basis
/// (a+)^i a^j. Zero coefficients are never stored.
class NormalForm {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (i, j)
  using TermMap = std::map<Key, Rat>;

  NormalForm() = default;

  static NormalForm zero() { return {}; }
  static NormalForm one() { return word(0, 0); }
  static NormalForm a() { return word(0, 1); }
  static NormalForm a_plus() { return word(1, 0); }
  static NormalForm word(unsigned i, unsigned j, const Rat& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(unsigned i, unsigned j) const;

  void add_term(unsigned i, unsigned j, const Rat& c);

  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const Rat& c);
  friend NormalForm operator+(NormalForm f, const NormalForm& g) { return f += g; }
  friend NormalForm operator-(NormalForm f, const NormalForm& g) { return f -= g; }
  friend NormalForm operator*(NormalForm f, const Rat& c) { return f *= c; }
  bool operator==(const NormalForm& o) const { return terms_ == o.terms_; }

  unsigned max_creation() const;     // max i over terms (0 for zero)
  unsigned max_annihilation() const; // max j over terms (0 for zero)

  /// Terms sorted for display: descending total degree, then descending i.
  std::vector<std::pair<Key, Rat>> sorted_terms() const;
  std::string render() const;
  nlohmann::json to_json() const;

 private:
  TermMap terms_;
};

/// Product in normal form. Single words multiply by
///   (a+)^{i1} a^{j1} (a+)^{i2} a^{j2}
///     = sum_k k! C(j1,k) C(i2,k) (a+)^{i1+i2-k} a^{j1+j2-k},
/// k = 0..min(j1,i2); extended bilinearly.
NormalForm normal_product(const NormalForm& f, const NormalForm& g);

/// Normal-orders a word over {a, a+} by rewriting a a+ -> a+ a + 1 to a
/// fixed point.
NormalForm normalize_word(const std::vector<Letter>& w);

/// Reordering of a word with the generators treated as commuting (no
/// commutator terms): all a+ letters to the left.
NormalForm double_dot(const std::vector<Letter>& w);

struct Excess {
  enum class Kind { Homogeneous, Zero, NotHomogeneous };
  Kind kind = Kind::NotHomogeneous;
  long value = 0;  // meaningful only when kind == Homogeneous

  bool homogeneous() const { return kind == Kind::Homogeneous; }
  static Excess homogeneous(long e) { return {Kind::Homogeneous, e}; }
  static Excess zero() { return {Kind::Zero, 0}; }
  static Excess not_homogeneous() { return {Kind::NotHomogeneous, 0}; }
  bool operator==(const Excess&) const = default;
};

Excess excess_of(const NormalForm& f);

}  // namespace weylab
