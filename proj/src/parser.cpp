#include "discode/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "discode/disc.hpp"
#include "discode/errors.hpp"
#include "discode/gallery.hpp"

namespace discode {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ReferenceResolver& resolver) : s_(text), resolve_(resolver) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (eat('+')) {
        e = e + term();
      } else if (eat('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (eat('*')) {
        e = e * unary();
      } else if (eat('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!eat('^')) return base;
    const Expr ex = unary();
    if (!ex.is_constant() || ex.node().value.imag() != 0.0) fail("exponent must be a real constant");
    const double p = ex.node().value.real();
    if (base.is_constant()) return Expr(std::pow(base.node().value, p));
    return pow(base, p);
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Expr reference() {
    const std::size_t start = pos_;
    pos_ += 8;  // "gallery:"
    ident();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unterminated parameter list");
      pos_ = close + 1;
    }
    if (pos_ >= s_.size() || s_[pos_] != '.') fail("gallery reference needs a field (.A, .f, .f1, .f2)");
    ++pos_;
    ident();
    const std::string ref = s_.substr(start, pos_ - start);
    try {
      return resolve_ ? resolve_(ref) : resolve_gallery_reference(ref);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      if (pos_ < s_.size() && s_[pos_] == 'i' &&
          (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        return Expr(Complex(0.0, v));
      }
      return Expr(v);
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (s_.compare(pos_, 8, "gallery:") == 0) return reference();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = ident();
      if (name == "z") return Expr::z();
      if (name == "i") return Expr(Complex(0.0, 1.0));
      if (name == "pi") return Expr(kPi);
      if (name == "e") return Expr(std::exp(1.0));
      using Fn = Expr (*)(const Expr&);
      Fn fn = nullptr;
      if (name == "exp") fn = exp;
      if (name == "log") fn = log;
      if (name == "sqrt") fn = sqrt;
      if (name == "sin") fn = sin;
      if (name == "cos") fn = cos;
      if (!fn) fail("unknown identifier '" + name + "'");
      if (!eat('(')) fail("expected '(' after " + name);
      Expr arg = expr();
      if (!eat(')')) fail("expected ')'");
      return fn(arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const ReferenceResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(const std::string& text, const ReferenceResolver& resolver) {
  return Parser(text, resolver).run();
}

}  // namespace discode
