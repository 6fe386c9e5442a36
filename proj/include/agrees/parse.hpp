#pragma once

// Text grammar for polynomials and ideals:
//   poly  := term (('+'|'-') term)*        (a leading sign is accepted)
//   term  := coeff? mono?
//   mono  := var ('^' nat)? ('*'? var ('^' nat)?)*
//   var   := 'x' | 'y' | 't' | 'T' nat
//   coeff := integer | integer '/' integer
// Whitespace and '*' are optional between factors. An ideal is a comma
// separated list, optionally wrapped in "ideal( ... )" or "( ... )".

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "agrees/polynomial.hpp"

namespace agrees {

namespace detail {

template <Field F>
class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring, const FieldConfig& cfg, MonomialOrder order)
      : text_(text), ring_(ring), cfg_(cfg), order_(order) {}

  Polynomial<F> parse_single() {
    Polynomial<F> p = poly();
    skip_ws();
    if (!at_end()) fail("'+', '-' or end of input");
    return p;
  }

  std::vector<Polynomial<F>> parse_list() {
    skip_ws();
    bool wrapped = false;
    if (text_.substr(pos_, 5) == "ideal") {
      pos_ += 5;
      skip_ws();
      if (peek() != '(') fail("'('");
      ++pos_;
      wrapped = true;
    } else if (peek() == '(') {
      ++pos_;
      wrapped = true;
    }
    skip_ws();
    if (at_end() || (wrapped && peek() == ')')) throw EmptyIdeal("ideal has no generators");
    std::vector<Polynomial<F>> gens;
    gens.push_back(poly());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      gens.push_back(poly());
      skip_ws();
    }
    if (wrapped) {
      if (peek() != ')') fail("',' or ')'");
      ++pos_;
      skip_ws();
    }
    if (!at_end()) fail(wrapped ? "end of input" : "',' or end of input");
    return gens;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(std::string expected) const { throw SyntaxError(pos_, std::move(expected)); }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int nat() {
    std::size_t start = pos_;
    mpz_class v = integer();
    if (v > 0xFFFF) throw SyntaxError(start, "exponent below 65536");
    return static_cast<int>(v.get_si());
  }

  Polynomial<F> poly() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    Polynomial<F> acc(ring_, order_);
    while (true) {
      Polynomial<F> t = term();
      acc = negative ? acc - t : acc + t;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      return acc;
    }
  }

  Polynomial<F> term() {
    skip_ws();
    bool have = false;
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw SyntaxError(at, "nonzero denominator");
      }
      coeff = Rational(num, den);
      have = true;
    }
    Monomial mono(ring_);
    while (true) {
      skip_ws();
      if (peek() == '*') {
        if (!have) fail("coefficient or variable before '*'");
        ++pos_;
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("variable");
      }
      if (!std::isalpha(static_cast<unsigned char>(peek()))) break;
      int var = variable();
      skip_ws();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = nat();
      }
      mono.set(var, mono.exponent(var) + e);
      have = true;
    }
    if (!have) fail("term");
    return Polynomial<F>::monomial(mono, F::from_rational(coeff, cfg_), order_);
  }

  int variable() {
    std::size_t start = pos_;
    char c = text_[pos_++];
    int index = -1;
    if (c == 'x') {
      index = Ring::kX;
    } else if (c == 'y') {
      index = Ring::kY;
    } else if (c == 't') {
      index = Ring::kT;
    } else if (c == 'T' && std::isdigit(static_cast<unsigned char>(peek()))) {
      int i = nat();
      index = i >= 1 ? Ring::big_t(i) : -1;
    } else {
      while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      throw UnknownVariable("unknown variable '" + std::string(text_.substr(start, pos_ - start)) + "' at position " +
                            std::to_string(start));
    }
    if (index < 0 || index >= ring_.arity()) {
      throw UnknownVariable("variable '" + std::string(text_.substr(start, pos_ - start)) +
                            "' is not in this ring (position " + std::to_string(start) + ")");
    }
    return index;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Ring ring_;
  FieldConfig cfg_;
  MonomialOrder order_;
};

}  // namespace detail

template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, Ring ring = Ring::base(), const FieldConfig& cfg = {},
                               MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::PolyParser<F>(text, ring, cfg, order).parse_single();
}

template <Field F>
std::vector<Polynomial<F>> parse_ideal_spec(std::string_view text, Ring ring = Ring::base(),
                                            const FieldConfig& cfg = {},
                                            MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::PolyParser<F>(text, ring, cfg, order).parse_list();
}

}  // namespace agrees
