#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "guess/error.hpp"
#include "guess/syntax.hpp"

namespace guess {

namespace {

enum class Tok {
  Nat,
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Dot,
  DotDot,
  Eq,
  Lt,
  Gt,
  Le,
  Ge,
  Arrow,
  Bar,
  Amp,
  Bang,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Nat, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    auto two = s.substr(i, 2);
    std::optional<Tok> kind;
    std::size_t width = 2;
    if (two == "..") kind = Tok::DotDot;
    else if (two == "<=") kind = Tok::Le;
    else if (two == ">=") kind = Tok::Ge;
    else if (two == "->") kind = Tok::Arrow;
    if (!kind) {
      width = 1;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case '.': kind = Tok::Dot; break;
        case '=': kind = Tok::Eq; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case '|': kind = Tok::Bar; break;
        case '&': kind = Tok::Amp; break;
        case '!': kind = Tok::Bang; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
      }
    }
    out.push_back({*kind, std::string(s.substr(i, width)), l, cl});
    advance(width);
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula whole_formula() {
    auto f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Term whole_term() {
    auto t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = peek();
    throw ParseError("expected " + what + ", found '" + t.text + "'", t.line, t.column);
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    return take();
  }

  std::string variable() {
    if (!at(Tok::Ident)) fail("a variable");
    const auto& t = peek();
    if (is_keyword(t.text) || t.text == kSequenceSymbol)
      throw ParseError("'" + t.text + "' is reserved and cannot be a variable", t.line, t.column);
    return take().text;
  }

  Formula formula() {
    if (at(Tok::Ident) && is_keyword(peek().text)) {
      const bool all = take().text == "forall";
      auto v = variable();
      expect(Tok::Dot, "'.'");
      auto body = formula();
      return all ? forall(std::move(v), std::move(body)) : exists(std::move(v), std::move(body));
    }
    return imp();
  }

  Formula imp() {
    auto lhs = disjunction();
    if (at(Tok::Arrow)) {
      take();
      return implies(std::move(lhs), quantified_or(&Parser::imp));
    }
    return lhs;
  }

  // Operands of connectives never start with a quantifier in the grammar;
  // this helper exists only to keep the error message precise.
  Formula quantified_or(Formula (Parser::*next)()) {
    if (at(Tok::Ident) && is_keyword(peek().text)) fail("a parenthesized quantifier");
    return (this->*next)();
  }

  Formula disjunction() {
    auto lhs = conjunction();
    while (at(Tok::Bar)) {
      take();
      lhs = disj(std::move(lhs), quantified_or(&Parser::conjunction));
    }
    return lhs;
  }

  Formula conjunction() {
    auto lhs = negation();
    while (at(Tok::Amp)) {
      take();
      lhs = conj(std::move(lhs), quantified_or(&Parser::negation));
    }
    return lhs;
  }

  Formula negation() {
    if (at(Tok::Bang)) {
      take();
      return negate(quantified_or(&Parser::negation));
    }
    return atom();
  }

  static std::optional<std::string> relation(Tok k) {
    switch (k) {
      case Tok::Eq: return "=";
      case Tok::Lt: return "<";
      case Tok::Gt: return ">";
      case Tok::Le: return "<=";
      case Tok::Ge: return ">=";
      default: return std::nullopt;
    }
  }

  Formula atom() {
    if (at(Tok::LParen)) {
      take();
      auto f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    // IDENT '(' ... ')' is a predicate unless a relation follows it.
    if (at(Tok::Ident) && peek().text != kSequenceSymbol && !is_keyword(peek().text) &&
        peek(1).kind == Tok::LParen) {
      auto name = take().text;
      auto args = arguments();
      if (!relation(peek().kind)) return pred(std::move(name), std::move(args));
      return comparison(app(std::move(name), std::move(args)));
    }
    return comparison(term());
  }

  Formula comparison(Term lhs) {
    auto rel = relation(peek().kind);
    if (!rel) fail("a relation (=, <, >, <=, >=)");
    take();
    auto rhs = term();
    if (*rel == "=") return eq(std::move(lhs), std::move(rhs));
    return pred(*rel, {std::move(lhs), std::move(rhs)});
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    args.push_back(term());
    while (at(Tok::Comma)) {
      take();
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term term() {
    if (at(Tok::Nat)) {
      const auto& t = take();
      Nat value = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc{}) throw ParseError("numeral out of range", t.line, t.column);
      return num(value);
    }
    if (!at(Tok::Ident)) fail("a term");
    const auto& t = peek();
    if (is_keyword(t.text)) throw ParseError("unexpected keyword '" + t.text + "' in a term", t.line, t.column);
    if (t.text == kSequenceSymbol) {
      take();
      expect(Tok::LParen, "'(' after f");
      auto arg = term();
      expect(Tok::RParen, "')'");
      return seq(std::move(arg));
    }
    if (peek(1).kind == Tok::LParen) {
      auto name = take().text;
      return app(std::move(name), arguments());
    }
    if (peek(1).kind == Tok::LBracket) {
      auto name = take().text;
      take();
      auto body = term();
      expect(Tok::Colon, "':'");
      auto binder = variable();
      expect(Tok::DotDot, "'..'");
      auto bound = term();
      expect(Tok::RBracket, "']'");
      return ellipsis(std::move(name), std::move(body), std::move(binder), std::move(bound));
    }
    return var(variable());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

Formula parse_formula(std::string_view text, const Signature& sig) {
  auto f = parse_formula(text);
  sig.check(f);
  return f;
}

}  // namespace guess
