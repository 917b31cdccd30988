#pragma once

#include "polarize/poly.hpp"
#include "polarize/ratio.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polarize {

/// Syntax error with the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Expression tree for polynomial input text.
///
/// Grammar (whitespace insignificant, juxtaposition multiplies):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*' | nothing)? factor)*
///   factor := ('-')? atom ('^' uint)? ('/' uint)?
///   atom   := uint | var | '(' expr ')'
struct Expr {
  struct Sum {
    std::vector<std::shared_ptr<const Expr>> terms;
    std::vector<int> signs;  // +1 / -1, parallel to terms
  };
  struct Product {
    std::vector<std::shared_ptr<const Expr>> factors;
  };
  struct Power {
    std::shared_ptr<const Expr> base;
    int exponent = 0;  // nonnegative literal
  };
  struct Negate {
    std::shared_ptr<const Expr> operand;
  };
  struct Variable {
    char name = 't';
  };
  struct Constant {
    Ratio value;
  };

  std::variant<Sum, Product, Power, Negate, Variable, Constant> node;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses src admitting exactly the given variables ("t" or "uv").
ExprPtr parse_expr(std::string_view src, std::string_view variables);

/// Recursive evaluation of the tree itself (no expansion); env maps
/// variable names to values.
Ratio eval_expr(const Expr& expr, const std::map<char, Ratio>& env);

/// Parse and expand to sparse monomial form. Univariate input admits
/// only t; bivariate input admits only u and v.
Poly1 parse_poly1(std::string_view src);
Poly2 parse_poly2(std::string_view src);

}  // namespace polarize
