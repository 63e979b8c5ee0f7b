#include "alginv/exactpoly/parse.hpp"

#include <cctype>
#include <string>

#include "alginv/error.hpp"

namespace alginv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableTable& table) : text_(text), table_(table) {}

  Poly run() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  Poly expr() {
    Poly out;
    bool negate = accept('-');
    if (!negate) accept('+');
    out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  Poly term() {
    Poly out = factor();
    while (accept('*')) out *= factor();
    return out;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      if (!peek_digit()) throw ParseError("expected nonnegative integer exponent", pos_);
      std::string digits = integer();
      if (digits.size() > 4) throw ParseError("exponent too large", start);
      b = pow(b, static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly base() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      std::string den = "1";
      // A slash directly after digits belongs to the rational literal.
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!peek_digit()) throw ParseError("expected denominator", pos_);
        std::size_t at = pos_;
        den = integer();
        if (Integer(den, 10) == 0) throw ParseError("zero denominator", at);
      }
      return Poly(make_rational(Integer(num, 10), Integer(den, 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return identifier(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Poly identifier(std::string_view name, std::size_t at) {
    if (table_.declares_parameter(name)) return Poly::parameter(name);
    if (auto coord = coordinate(name, at)) return *coord;
    throw ParseError("undeclared symbol '" + std::string(name) + "'", at);
  }

  std::optional<Poly> coordinate(std::string_view name, std::size_t at) {
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return std::nullopt;
    std::size_t k = 1;
    while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k]))) ++k;
    if (k == 1 || k - 1 > 4) return std::nullopt;
    int slot = std::stoi(std::string(name.substr(1, k - 1)));
    int index;
    if (k == name.size()) {
      if (table_.dim != 2) return std::nullopt;
      index = name[0] == 'x' ? 1 : 2;
    } else {
      if (name[0] != 'x' || name[k] != '_' || k + 1 == name.size() || name.size() - k - 1 > 4) return std::nullopt;
      for (std::size_t q = k + 1; q < name.size(); ++q)
        if (!std::isdigit(static_cast<unsigned char>(name[q]))) return std::nullopt;
      index = std::stoi(std::string(name.substr(k + 1)));
    }
    if (slot < 1 || slot > table_.slots || index < 1 || index > table_.dim)
      throw ParseError("coordinate '" + std::string(name) + "' outside the declared slots/dimension", at);
    return Poly::coordinate(slot, index);
  }

  std::string_view text_;
  const VariableTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expr(std::string_view text, const VariableTable& declared) { return Parser(text, declared).run(); }

}  // namespace alginv
