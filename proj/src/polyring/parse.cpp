#include <cctype>

#include "lnd/polyring.hpp"

namespace lnd {
namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src_.size()) {
      const char ch = src_[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      const std::size_t col = i + 1;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        out.push_back({Tok::number, std::string(src_.substr(i, j - i)), col});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        out.push_back({Tok::ident, std::string(src_.substr(i, j - i)), col});
        i = j;
        continue;
      }
      Tok kind;
      switch (ch) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", line_, col);
      }
      out.push_back({kind, std::string(1, ch), col});
      ++i;
    }
    out.push_back({Tok::end, "", src_.size() + 1});
    return out;
  }

 private:
  std::string_view src_;
  std::size_t line_;
};

// expr    := term (('+'|'-') term)*
// term    := factor (('*'|'/')? factor)*        juxtaposition multiplies
// factor  := ('+'|'-') factor | primary ('^' number)?
// primary := number | ident | '(' expr ')'
class Parser {
 public:
  Parser(const RingPtr& ring, std::vector<Token> toks, std::size_t line)
      : ring_(ring), toks_(std::move(toks)), line_(line) {}

  Poly parse() {
    if (peek().kind == Tok::end) fail("empty polynomial");
    Poly p = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().column); }

  static bool starts_primary(Tok k) { return k == Tok::number || k == Tok::ident || k == Tok::lparen; }

  Poly expr() {
    Poly acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Poly rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::star) {
        next();
        acc *= factor();
      } else if (k == Tok::slash) {
        next();
        const std::size_t col = peek().column;
        Poly d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division is only allowed by a nonzero constant", line_, col);
        acc *= Rational(1) / d.constant_term();
      } else if (starts_primary(k)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (peek().kind == Tok::minus) {
      next();
      return -factor();
    }
    if (peek().kind == Tok::plus) {
      next();
      return factor();
    }
    Poly base = primary();
    if (peek().kind == Tok::caret) {
      next();
      if (peek().kind != Tok::number) fail("expected a natural exponent after '^'");
      const auto& t = next();
      if (t.text.size() > 6) throw ParseError("exponent too large", line_, t.column);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Poly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        next();
        return Poly::constant(ring_, Rational(Integer(t.text)));
      case Tok::ident: {
        next();
        auto idx = ring_->index_of(t.text);
        if (!idx) throw ParseError("unknown variable '" + t.text + "'", line_, t.column);
        return Poly::variable(ring_, *idx);
      }
      case Tok::lparen: {
        next();
        Poly inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::end:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  const RingPtr& ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text, std::size_t line) {
  Parser parser(ring, Lexer(text, line).run(), line);
  return parser.parse();
}

}  // namespace lnd
