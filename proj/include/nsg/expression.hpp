#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nsg/ideal.hpp"

namespace nsg {

/// Arithmetic over the named ideals of one semigroup.
///
///   expr    := term (':' term)*          quotient, left associative
///   term    := factor ('*' factor)*      product (setwise sum)
///   factor  := primary ('^' integer)?    power
///   primary := H | K | C | M | N | integer | '-' integer
///            | tr(expr) | B(expr) | b(expr) | D(expr) | '(' expr ')'
///
/// An integer literal x denotes the principal ideal x + H.
class IdealExpression {
 public:
  enum class Atom { H, K, C, M, N };
  enum class Unary { Trace, Blowup, BlowupConductor, Dual };
  enum class Binary { Product, Quotient };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Shift { Int value; };
  struct Apply { Unary op; NodePtr arg; };
  struct Combine { Binary op; NodePtr lhs; NodePtr rhs; };
  struct Power { NodePtr base; Int exponent; };
  struct Node {
    std::variant<Atom, Shift, Apply, Combine, Power> value;
  };

  /// Throws Error(Parse) with the offending column on malformed input.
  static IdealExpression parse(std::string_view text);

  RelativeIdeal evaluate(const SemigroupPtr& h) const;

  /// Fully parenthesized rendering; parse(to_string()) is equivalent.
  std::string to_string() const;

  const Node& root() const { return *root_; }

 private:
  explicit IdealExpression(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

}  // namespace nsg
