#include "mapgerm/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace mapgerm {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const std::size_t l = line, k = col;
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, s.substr(i, j - i), l, k});
      advance(j - i);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), l, k});
      advance(j - i);
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        default: throw ParseError(l, k, std::string("unexpected character '") + s[i] + "'");
      }
      out.push_back({kind, std::string(1, s[i]), l, k});
      advance(1);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<std::string> variables)
      : tokens_(std::move(tokens)), vars_(std::move(variables)) {}

  std::vector<std::pair<Poly, const Token*>> germ() {
    expect(Tok::lparen, "expected '(' to open the germ");
    std::vector<std::pair<Poly, const Token*>> comps;
    for (;;) {
      const Token* start = &peek();
      comps.emplace_back(expr(), start);
      if (peek().kind == Tok::comma) {
        ++pos_;
        continue;
      }
      expect(Tok::rparen, "expected ',' or ')' after a component");
      break;
    }
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()) + " after the closing ')'");
    return comps;
  }

  Poly single() {
    Poly p = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()));
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }

  void expect(Tok kind, const std::string& msg) {
    if (peek().kind != kind) fail(peek(), msg + ", found " + describe(peek()));
    ++pos_;
  }

  std::size_t n() const { return vars_.size(); }

  Poly expr() {
    Poly acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = tokens_[pos_++].kind == Tok::minus;
      Poly rhs = term();
      if (minus) acc -= rhs;
      else acc += rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (peek().kind == Tok::star) {
        ++pos_;
        acc = acc * unary();
      } else if (peek().kind == Tok::slash) {
        const Token& at = tokens_[++pos_];
        Poly d = unary();
        if (d.degree() > 0 || d.is_zero()) fail(at, "division is only allowed by a nonzero constant");
        acc *= Rational(1) / d.constant_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly unary() {
    if (peek().kind == Tok::minus) {
      ++pos_;
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek().kind == Tok::caret) {
      ++pos_;
      const Token& e = peek();
      if (e.kind != Tok::number) fail(e, "exponent must be a non-negative integer literal");
      ++pos_;
      if (e.text.size() > 4) fail(e, "exponent too large");
      const unsigned k = static_cast<unsigned>(std::stoul(e.text));
      Poly out = Poly::constant(n(), 1);
      for (unsigned i = 0; i < k; ++i) out = out * base;
      base = std::move(out);
    }
    const Token& next = peek();
    if (next.kind == Tok::number || next.kind == Tok::ident || next.kind == Tok::lparen)
      fail(next, "implicit multiplication is not allowed; write '*' before " + describe(next));
    return base;
  }

  Poly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        ++pos_;
        return Poly::constant(n(), Rational(t.text));
      }
      case Tok::ident: {
        ++pos_;
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) fail(t, "unknown identifier '" + t.text + "'");
        return Poly::variable(n(), static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        ++pos_;
        Poly inner = expr();
        expect(Tok::rparen, "expected ')'");
        return inner;
      }
      default: fail(t, "expected a number, variable or '(', found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string> infer_variables(const std::vector<Token>& tokens) {
  std::vector<std::string> names;
  for (const auto& t : tokens)
    if (t.kind == Tok::ident && std::find(names.begin(), names.end(), t.text) == names.end())
      names.push_back(t.text);
  return names;
}

void check_names(const std::vector<std::string>& names) {
  for (const auto& name : names) {
    const bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                    std::all_of(name.begin(), name.end(),
                                [](unsigned char c) { return std::isalnum(c) || c == '_'; });
    if (!ok) throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("variable '" + names[i] + "' declared twice");
}

}  // namespace

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

GermExpression parse_germ(const std::string& text, const std::vector<std::string>& variables) {
  std::vector<Token> tokens = tokenize(text);
  std::vector<std::string> vars = variables.empty() ? infer_variables(tokens) : variables;
  check_names(vars);
  if (vars.empty()) throw ParseError(1, 1, "germ has no variables");
  Parser parser(std::move(tokens), vars);
  auto comps = parser.germ();
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& [poly, start] = comps[i];
    if (sgn(poly.constant_term()) != 0) {
      throw ParseError(start->line, start->column,
                       "component " + std::to_string(i + 1) + " has nonzero constant term " +
                           rational_to_string(poly.constant_term()) + "; a germ must map 0 to 0");
    }
    polys.push_back(poly);
  }
  return GermExpression{text, MapGerm(std::move(polys), vars), vars};
}

Poly parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  check_names(variables);
  Parser parser(tokenize(text), variables);
  return parser.single();
}

}  // namespace mapgerm
