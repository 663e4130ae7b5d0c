#include "superquant/expr.hpp"

#include <cctype>

#include "superquant/errors.hpp"

namespace superquant {

namespace {

struct Value {
  bool is_scalar = true;
  RatFunc s;
  FreeElem e;

  FreeElem as_elem() const {
    if (!is_scalar) return e;
    FreeElem out;
    if (!s.is_zero()) out[Monomial::unit()] = s;
    return out;
  }
};

Value mul(const Value& a, const Value& b) {
  if (a.is_scalar && b.is_scalar) return {true, a.s * b.s, {}};
  Value out;
  out.is_scalar = false;
  if (a.is_scalar)
    out.e = a.s * b.e;
  else if (b.is_scalar)
    out.e = b.s * a.e;
  else
    out.e = free_mul(a.e, b.e);
  return out;
}

Value add(const Value& a, const Value& b) {
  if (a.is_scalar && b.is_scalar) return {true, a.s + b.s, {}};
  Value out;
  out.is_scalar = false;
  out.e = a.as_elem() + b.as_elem();
  return out;
}

Value negate(const Value& a) {
  if (a.is_scalar) return {true, RatFunc(Rat(-1)) * a.s, {}};
  Value out;
  out.is_scalar = false;
  out.e = RatFunc(Rat(-1)) * a.e;
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, int rank, long unit_L)
      : text_(text), rank_(rank), unit_L_(unit_L) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& text_;
  int rank_;
  long unit_L_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("element syntax error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return neg ? -v : v;
  }

  Value expr() {
    Value v = eat('-') ? negate(term()) : term();
    while (true) {
      if (eat('+'))
        v = add(v, term());
      else if (eat('-'))
        v = add(v, negate(term()));
      else
        return v;
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (eat('*'))
        v = mul(v, factor());
      else if (eat('/')) {
        Value d = factor();
        if (!d.is_scalar) fail("division by a non-scalar");
        v = mul(v, Value{true, d.s.inverse(), {}});
      } else
        return v;
    }
  }

  Value factor() {
    Value v = primary();
    if (eat('^')) {
      long exp = integer();
      if (v.is_scalar) {
        RatFunc base = exp < 0 ? v.s.inverse() : v.s;
        long count = exp < 0 ? -exp : exp;
        RatFunc acc{Rat(1)};
        for (long i = 0; i < count; ++i) acc = acc * base;
        return {true, acc, {}};
      }
      if (exp < 0) fail("negative power of a generator expression");
      Value acc{true, RatFunc(Rat(1)), {}};
      for (long i = 0; i < exp; ++i) acc = mul(acc, v);
      return acc;
    }
    return v;
  }

  Value primary() {
    skip_ws();
    if (eat('(')) {
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    char c = peek();
    if (c == 'q') {
      ++pos_;
      return {true, RatFunc::q_power(unit_L_, unit_L_), {}};
    }
    if (c == 't') {
      ++pos_;
      long idx = integer();
      if (idx < 1 || idx > rank_) fail("generator index out of range");
      Value v;
      v.is_scalar = false;
      v.e = free_gen(static_cast<int>(idx - 1));
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      return {true, RatFunc(Rat(num)), {}};
    }
    fail("expected a term");
  }
};

}  // namespace

FreeElem parse_element(const std::string& text, int rank, long unit_L) {
  Parser p(text, rank, unit_L);
  return p.parse().as_elem();
}

}  // namespace superquant
