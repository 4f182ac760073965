#pragma once

#include <memory>
#include <string>
#include <vector>

#include "weylab/normal_form.hpp"
#include "weylab/rational.hpp"

namespace weylab {

/// Syntax error with the byte offset of the offending token and a
/// human-readable list of what would have been accepted there.
struct ParseError : std::runtime_error {
  size_t offset;
  std::string expected;
  ParseError(size_t off, const std::string& exp)
      : std::runtime_error("syntax error at offset " + std::to_string(off) +
                           ": expected " + exp),
        offset(off),
        expected(exp) {}
};

// Abstract syntax of operator expressions.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor+              (juxtaposition multiplies; '*' optional)
//   factor := atom ('^' nat)?
//   atom   := 'a+' | 'a' | rational | '(' expr ')'
//
// '+' immediately following 'a' (no whitespace) lexes as the letter a+.
struct OpExpr {
  enum class Kind { LetterA, LetterAPlus, Scalar, Pow, Mul, Add, Neg };
  Kind kind;
  Rat scalar;                     // Scalar
  unsigned exponent = 0;          // Pow
  std::vector<OpExpr> children;   // Pow(1), Mul(n), Add(n), Neg(1)
};

OpExpr parse(const std::string& src);

NormalForm eval(const OpExpr& e);

/// parse + eval convenience.
NormalForm parse_operator(const std::string& src);

}  // namespace weylab
