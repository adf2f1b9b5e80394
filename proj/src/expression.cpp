#include "nsg/expression.hpp"

#include <cctype>
#include <sstream>

#include "nsg/blowup.hpp"
#include "nsg/error.hpp"

namespace nsg {

namespace {

using E = IdealExpression;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  E::NodePtr parse_all() {
    E::NodePtr n = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse,
                "parse error at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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

  static E::NodePtr make(auto value) {
    return std::make_shared<const E::Node>(E::Node{std::move(value)});
  }

  E::NodePtr expr() {
    E::NodePtr lhs = term();
    while (accept(':')) lhs = make(E::Combine{E::Binary::Quotient, lhs, term()});
    return lhs;
  }

  E::NodePtr term() {
    E::NodePtr lhs = factor();
    while (accept('*')) lhs = make(E::Combine{E::Binary::Product, lhs, factor()});
    return lhs;
  }

  E::NodePtr factor() {
    E::NodePtr base = primary();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a nonnegative integer");
      }
      base = make(E::Power{base, integer()});
    }
    return base;
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 12) fail("integer literal too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  E::NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      E::NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return make(E::Shift{-integer()});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make(E::Shift{integer()});
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");

    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "H") return make(E::Atom::H);
    if (word == "K") return make(E::Atom::K);
    if (word == "C") return make(E::Atom::C);
    if (word == "M") return make(E::Atom::M);
    if (word == "N") return make(E::Atom::N);

    E::Unary op;
    if (word == "tr") op = E::Unary::Trace;
    else if (word == "B") op = E::Unary::Blowup;
    else if (word == "b") op = E::Unary::BlowupConductor;
    else if (word == "D") op = E::Unary::Dual;
    else {
      pos_ = start;
      fail("unknown name '" + std::string(word) + "'");
    }
    expect('(');
    E::NodePtr arg = expr();
    expect(')');
    return make(E::Apply{op, arg});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

RelativeIdeal eval(const E::Node& node, const SemigroupPtr& h) {
  return std::visit(
      Overloaded{
          [&](E::Atom a) -> RelativeIdeal {
            switch (a) {
              case E::Atom::H: return unit_ideal(h);
              case E::Atom::K: return canonical_ideal(h);
              case E::Atom::C: return conductor_ideal(h);
              case E::Atom::M: return maximal_ideal(h);
              case E::Atom::N: return naturals_ideal(h);
            }
            return unit_ideal(h);
          },
          [&](const E::Shift& s) { return RelativeIdeal::from_generators(h, {s.value}); },
          [&](const E::Apply& a) -> RelativeIdeal {
            RelativeIdeal arg = eval(*a.arg, h);
            switch (a.op) {
              case E::Unary::Trace: return trace(arg);
              case E::Unary::Blowup: return blowup(arg).blowup_ideal;
              case E::Unary::BlowupConductor: return blowup(arg).conductor;
              case E::Unary::Dual: return dual(arg);
            }
            return arg;
          },
          [&](const E::Combine& c) {
            RelativeIdeal lhs = eval(*c.lhs, h);
            RelativeIdeal rhs = eval(*c.rhs, h);
            return c.op == E::Binary::Product ? product(lhs, rhs) : quotient(lhs, rhs);
          },
          [&](const E::Power& p) { return power(eval(*p.base, h), p.exponent); },
      },
      node.value);
}

void render(const E::Node& node, std::ostream& os) {
  std::visit(Overloaded{
                 [&](E::Atom a) { os << "HKCMN"[static_cast<int>(a)]; },
                 [&](const E::Shift& s) { os << s.value; },
                 [&](const E::Apply& a) {
                   static constexpr const char* names[] = {"tr", "B", "b", "D"};
                   os << names[static_cast<int>(a.op)] << '(';
                   render(*a.arg, os);
                   os << ')';
                 },
                 [&](const E::Combine& c) {
                   os << '(';
                   render(*c.lhs, os);
                   os << (c.op == E::Binary::Product ? '*' : ':');
                   render(*c.rhs, os);
                   os << ')';
                 },
                 [&](const E::Power& p) {
                   os << '(';
                   render(*p.base, os);
                   os << '^' << p.exponent << ')';
                 },
             },
             node.value);
}

}  // namespace

IdealExpression IdealExpression::parse(std::string_view text) {
  return IdealExpression(Parser(text).parse_all());
}

RelativeIdeal IdealExpression::evaluate(const SemigroupPtr& h) const { return eval(*root_, h); }

std::string IdealExpression::to_string() const {
  std::ostringstream os;
  render(*root_, os);
  return os.str();
}

}  // namespace nsg
