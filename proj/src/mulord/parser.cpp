#include "mulord/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace mulord::formula {

namespace {

enum class Tok {
  End, Ident, Number, R,
  LParen, RParen, LBracket, RBracket,
  Star, Caret, Slash, Minus, Arrow,
  Eq, Lt, Le, Bang, Amp, Pipe, Dot,
  KwExists, KwForall, KwTrue, KwFalse, KwInv,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::End) return out;
    }
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  Token next() {
    int line = line_, col = col_;
    auto tok = [&](Tok k, std::string text = {}) { return Token{k, std::move(text), line, col}; };
    if (pos_ >= src_.size()) return tok(Tok::End);
    char c = advance();
    switch (c) {
      case '(': return tok(Tok::LParen);
      case ')': return tok(Tok::RParen);
      case '[': return tok(Tok::LBracket);
      case ']': return tok(Tok::RBracket);
      case '*': return tok(Tok::Star);
      case '^': return tok(Tok::Caret);
      case '/': return tok(Tok::Slash);
      case '=': return tok(Tok::Eq);
      case '!': return tok(Tok::Bang);
      case '&': return tok(Tok::Amp);
      case '|': return tok(Tok::Pipe);
      case '.': return tok(Tok::Dot);
      case 'R': return tok(Tok::R);
      case '<':
        if (peek() == '=') {
          advance();
          return tok(Tok::Le);
        }
        return tok(Tok::Lt);
      case '-':
        if (peek() == '>') {
          advance();
          return tok(Tok::Arrow);
        }
        return tok(Tok::Minus);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text(1, c);
      while (std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
      return tok(Tok::Number, std::move(text));
    }
    if (c >= 'a' && c <= 'z') {
      std::string text(1, c);
      while (std::islower(static_cast<unsigned char>(peek())) || std::isdigit(static_cast<unsigned char>(peek())) ||
             peek() == '_')
        text += advance();
      if (text == "exists") return tok(Tok::KwExists);
      if (text == "forall") return tok(Tok::KwForall);
      if (text == "true") return tok(Tok::KwTrue);
      if (text == "false") return tok(Tok::KwFalse);
      if (text == "inv") return tok(Tok::KwInv);
      return tok(Tok::Ident, std::move(text));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula formula() {
    Formula f = implies();
    expect(Tok::End, "end of input");
    return f;
  }

  Monomial term_only() {
    Monomial m = term();
    expect(Tok::End, "end of input");
    return m;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    return take();
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(std::move(lhs), implies());
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (accept(Tok::Pipe)) parts.push_back(conjunction());
    return parts.size() == 1 ? std::move(parts.front()) : Formula::disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept(Tok::Amp)) parts.push_back(unary());
    return parts.size() == 1 ? std::move(parts.front()) : Formula::conj(std::move(parts));
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::negation(unary());
    if (peek().kind == Tok::KwExists || peek().kind == Tok::KwForall) {
      bool universal = take().kind == Tok::KwForall;
      std::string var = expect(Tok::Ident, "variable name").text;
      expect(Tok::Dot, "'.'");
      return Formula::quantifier(universal, std::move(var), implies());
    }
    return primary();
  }

  Formula primary() {
    switch (peek().kind) {
      case Tok::KwTrue: take(); return Formula::top();
      case Tok::KwFalse: take(); return Formula::bottom();
      case Tok::LParen: {
        take();
        Formula f = implies();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::R: {
        take();
        expect(Tok::LBracket, "'['");
        const Token& num = expect(Tok::Number, "power index");
        long long n = to_ll(num);
        if (n < 2) throw ParseError("R index must be >= 2", num.line, num.col);
        expect(Tok::RBracket, "']'");
        expect(Tok::LParen, "'('");
        Monomial arg = term();
        expect(Tok::RParen, "')'");
        return Formula::pow(n, std::move(arg));
      }
      default: break;
    }
    Monomial lhs = term();
    switch (peek().kind) {
      case Tok::Eq: take(); return Formula::eq(std::move(lhs), term());
      case Tok::Lt: take(); return Formula::lt(std::move(lhs), term());
      case Tok::Le: {
        take();
        Monomial rhs = term();
        return Formula::disj({Formula::lt(lhs, rhs), Formula::eq(lhs, rhs)});
      }
      default: fail("expected '=', '<' or '<='");
    }
  }

  Monomial term() {
    Monomial m = factor();
    while (accept(Tok::Star)) m = m.times(factor());
    return m;
  }

  Monomial factor() {
    Monomial b = base();
    if (accept(Tok::Caret)) {
      bool neg = accept(Tok::Minus);
      const Token& num = expect(Tok::Number, "exponent");
      long long e = to_ll(num);
      return b.pow(neg ? -e : e);
    }
    return b;
  }

  Monomial base() {
    switch (peek().kind) {
      case Tok::Minus:
      case Tok::Number: {
        bool neg = accept(Tok::Minus);
        Rational value = rational_literal();
        return Monomial::constant(neg ? -value : value);
      }
      case Tok::Ident: return Monomial::variable(take().text);
      case Tok::KwInv: {
        take();
        expect(Tok::LParen, "'('");
        Monomial m = term();
        expect(Tok::RParen, "')'");
        return m.inverse();
      }
      default: fail("expected a term");
    }
  }

  Rational rational_literal() {
    const Token& num = expect(Tok::Number, "number");
    Int p(num.text);
    if (accept(Tok::Slash)) {
      const Token& den = expect(Tok::Number, "denominator");
      Int q(den.text);
      if (q == 0) throw ParseError("zero denominator", den.line, den.col);
      return Rational(p, q);
    }
    return Rational(p);
  }

  long long to_ll(const Token& t) const {
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw ParseError("integer out of range", t.line, t.col);
    }
  }
};

// Renames binders so that bound names are pairwise distinct and disjoint
// from the free variables; elimination then never needs capture checks.
Formula rename_apart(const Formula& f, std::set<std::string>& used) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
    case Formula::Kind::Leaf: return f;
    case Formula::Kind::Not: return Formula::negation(rename_apart(f.child(), used));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(rename_apart(c, used));
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Formula::Kind::Implies:
      return Formula::implies(rename_apart(f.child(0), used), rename_apart(f.child(1), used));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string name = fresh_name(f.var(), used);
      Formula body = name == f.var() ? f.body() : f.body().renamed_free(f.var(), name);
      return Formula::quantifier(f.kind() == Formula::Kind::Forall, name, rename_apart(body, used));
    }
  }
  throw std::logic_error("rename_apart: unreachable");
}

}  // namespace

Formula parse(const std::string& text) {
  Parser parser(Lexer(text).run());
  Formula f = parser.formula();
  std::set<std::string> used = f.free_variables();
  return rename_apart(f, used);
}

Monomial parse_term(const std::string& text) {
  Parser parser(Lexer(text).run());
  return parser.term_only();
}

}  // namespace mulord::formula
