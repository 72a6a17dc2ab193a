// Recursive-descent parser for the E(n)^k text encoding.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' signed_int)?
//   primary := integer | 'E' '(' integer ')' | '(' expr ')'

#include <cctype>
#include <string>

#include "cubicsym/errors.hpp"
#include "cubicsym/exact/cyclotomic.hpp"

namespace cubicsym {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  long small_integer() {
    Integer v = integer();
    if (!v.fits_slong_p()) fail("integer too large");
    return v.get_si();
  }

  Cyclotomic expr() {
    Cyclotomic v = term();
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Cyclotomic term() {
    Cyclotomic v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Cyclotomic d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Cyclotomic power() {
    skip_space();
    const bool is_root = pos_ < text_.size() && text_[pos_] == 'E';
    long n = 0;
    Cyclotomic base;
    if (is_root) {
      ++pos_;
      expect('(');
      n = small_integer();
      if (n < 1) fail("E(n) requires n >= 1");
      expect(')');
      base = Cyclotomic::root_of_unity(n, 1);
    } else {
      base = primary();
    }
    if (!accept('^')) return base;
    long sign = 1;
    if (accept('-')) sign = -1;
    const long e = sign * small_integer();
    if (is_root) return Cyclotomic::root_of_unity(n, e);
    if (e < 0 && base.is_zero()) fail("division by zero");
    return base.pow(e);
  }

  Cyclotomic primary() {
    if (accept('(')) {
      Cyclotomic v = expr();
      expect(')');
      return v;
    }
    return Cyclotomic(integer());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace cubicsym
