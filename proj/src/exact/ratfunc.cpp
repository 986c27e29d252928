#include "cubictors/ratfunc.hpp"

#include <cctype>

#include "cubictors/errors.hpp"

namespace cubictors {

RationalFunction::RationalFunction(RationalPoly num, RationalPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RationalPoly::constant(1);
    return;
  }
  RationalPoly g = gcd(num, den);
  num = exact_quotient(num, g);
  den = exact_quotient(den, g);
  Rational lc = den.leading();
  num_ = num * lc.inverse();
  den_ = den * lc.inverse();
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  const RationalFunction zero;
  return num_.evaluate(g, zero) / den_.evaluate(g, zero);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return RationalFunction(Rational(1)) / pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

  RationalFunction run() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || s_.substr(pos_).starts_with(var_);
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = signed_factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * signed_factor();
      } else if (peek('/')) {
        ++pos_;
        acc = acc / signed_factor();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction signed_factor() {
    if (peek('-')) {
      ++pos_;
      return -signed_factor();
    }
    if (peek('+')) {
      ++pos_;
      return signed_factor();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      base = base.pow(std::stol(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (s_.substr(pos_).starts_with(var_)) {
      pos_ += var_.size();
      return RationalFunction::variable();
    }
    fail("expected a number, '" + std::string(var_) + "' or '('");
  }

  std::string_view s_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text, std::string_view var) {
  if (var.empty()) throw InvalidInput("empty variable name");
  return Parser(text, var).run();
}

}  // namespace cubictors
