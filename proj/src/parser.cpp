#include "weylab/parser.hpp"

#include <cctype>

namespace weylab {
namespace {

enum class Tok { A, APlus, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t offset;
  std::string text;  // Number only
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t p = 0;
  while (p < src.size()) {
    char c = src[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    if (c == 'a') {
      // longest match: 'a' immediately followed by '+' is the letter a+
      if (p + 1 < src.size() && src[p + 1] == '+') {
        out.push_back({Tok::APlus, p, {}});
        p += 2;
      } else {
        out.push_back({Tok::A, p, {}});
        ++p;
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = p;
      while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
      out.push_back({Tok::Number, start, src.substr(start, p - start)});
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::Plus, p, {}}); break;
      case '-': out.push_back({Tok::Minus, p, {}}); break;
      case '*': out.push_back({Tok::Star, p, {}}); break;
      case '/': out.push_back({Tok::Slash, p, {}}); break;
      case '^': out.push_back({Tok::Caret, p, {}}); break;
      case '(': out.push_back({Tok::LParen, p, {}}); break;
      case ')': out.push_back({Tok::RParen, p, {}}); break;
      default:
        throw ParseError(p, "'a', 'a+', a number, or one of + - * / ^ ( )");
    }
    ++p;
  }
  out.push_back({Tok::End, src.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  OpExpr run() {
    OpExpr e = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().offset, "'+', '-', or end of input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static bool starts_factor(Tok t) {
    return t == Tok::A || t == Tok::APlus || t == Tok::Number || t == Tok::LParen;
  }

  OpExpr expr() {
    OpExpr sum{OpExpr::Kind::Add, 0, 0, {}};
    sum.children.push_back(signed_term());
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool neg = take().kind == Tok::Minus;
      OpExpr t = term();
      if (neg) {
        OpExpr n{OpExpr::Kind::Neg, 0, 0, {}};
        n.children.push_back(std::move(t));
        sum.children.push_back(std::move(n));
      } else {
        sum.children.push_back(std::move(t));
      }
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  OpExpr signed_term() {
    if (peek().kind == Tok::Minus) {
      take();
      OpExpr n{OpExpr::Kind::Neg, 0, 0, {}};
      n.children.push_back(term());
      return n;
    }
    return term();
  }

  OpExpr term() {
    OpExpr prod{OpExpr::Kind::Mul, 0, 0, {}};
    prod.children.push_back(factor());
    for (;;) {
      if (peek().kind == Tok::Star) {
        take();
        prod.children.push_back(factor());
      } else if (starts_factor(peek().kind)) {
        prod.children.push_back(factor());
      } else {
        break;
      }
    }
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  OpExpr factor() {
    OpExpr base = atom();
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Number)
        throw ParseError(peek().offset, "a nonnegative integer exponent");
      Token n = take();
      OpExpr pow{OpExpr::Kind::Pow, 0, 0, {}};
      pow.exponent = static_cast<unsigned>(std::stoul(n.text));
      pow.children.push_back(std::move(base));
      return pow;
    }
    return base;
  }

  OpExpr atom() {
    switch (peek().kind) {
      case Tok::A:
        take();
        return {OpExpr::Kind::LetterA, 0, 0, {}};
      case Tok::APlus:
        take();
        return {OpExpr::Kind::LetterAPlus, 0, 0, {}};
      case Tok::Number: {
        Token n = take();
        Rat v{Int(n.text)};
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Number)
            throw ParseError(peek().offset, "an integer denominator");
          Token d = take();
          Int den{d.text};
          if (den == 0) throw ParseError(d.offset, "a nonzero denominator");
          v /= Rat(den);
        }
        v.canonicalize();
        return {OpExpr::Kind::Scalar, v, 0, {}};
      }
      case Tok::LParen: {
        take();
        OpExpr e = expr();
        if (peek().kind != Tok::RParen) throw ParseError(peek().offset, "')'");
        take();
        return e;
      }
      default:
        throw ParseError(peek().offset, "'a', 'a+', a number, or '('");
    }
  }
};

}  // namespace

OpExpr parse(const std::string& src) { return Parser(src).run(); }

NormalForm eval(const OpExpr& e) {
  switch (e.kind) {
    case OpExpr::Kind::LetterA:
      return NormalForm::a();
    case OpExpr::Kind::LetterAPlus:
      return NormalForm::a_plus();
    case OpExpr::Kind::Scalar:
      return NormalForm::word(0, 0, e.scalar);
    case OpExpr::Kind::Pow: {
      NormalForm base = eval(e.children.front());
      NormalForm acc = NormalForm::one();
      for (unsigned i = 0; i < e.exponent; ++i) acc = normal_product(acc, base);
      return acc;
    }
    case OpExpr::Kind::Mul: {
      NormalForm acc = NormalForm::one();
      for (const OpExpr& c : e.children) acc = normal_product(acc, eval(c));
      return acc;
    }
    case OpExpr::Kind::Add: {
      NormalForm acc;
      for (const OpExpr& c : e.children) acc += eval(c);
      return acc;
    }
    case OpExpr::Kind::Neg: {
      NormalForm v = eval(e.children.front());
      return v *= Rat(-1);
    }
  }
  return {};
}

NormalForm parse_operator(const std::string& src) { return eval(parse(src)); }

}  // namespace weylab
