#include "polarize/expr.hpp"

#include <cctype>

namespace polarize {

namespace {

struct Token {
  enum class Kind { Integer, Variable, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::size_t position;
  std::string text;  // digits for Integer, letter for Variable
};

class Lexer {
public:
  Lexer(std::string_view src, std::string_view variables) : src_(src), variables_(variables) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      current_ = {Token::Kind::End, start, ""};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      current_ = {Token::Kind::Integer, start, std::string(src_.substr(pos_, end - pos_))};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (variables_.find(c) == std::string_view::npos) {
        throw ParseError(std::string("unknown variable '") + c + "' (expected one of '" +
                             std::string(variables_) + "')",
                         start);
      }
      current_ = {Token::Kind::Variable, start, std::string(1, c)};
      ++pos_;
      return;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '^': kind = Token::Kind::Caret; break;
      case '/': kind = Token::Kind::Slash; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    current_ = {kind, start, std::string(1, c)};
    ++pos_;
  }

  std::string_view src_;
  std::string_view variables_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, 0, ""};
};

ExprPtr make_expr(Expr::Sum s) { return std::make_shared<Expr>(Expr{std::move(s)}); }
ExprPtr make_expr(Expr::Product p) { return std::make_shared<Expr>(Expr{std::move(p)}); }
ExprPtr make_expr(Expr::Power p) { return std::make_shared<Expr>(Expr{std::move(p)}); }
ExprPtr make_expr(Expr::Negate n) { return std::make_shared<Expr>(Expr{std::move(n)}); }
ExprPtr make_expr(Expr::Variable v) { return std::make_shared<Expr>(Expr{v}); }
ExprPtr make_expr(Expr::Constant c) { return std::make_shared<Expr>(Expr{std::move(c)}); }

class Parser {
public:
  Parser(std::string_view src, std::string_view variables) : lexer_(src, variables) {}

  ExprPtr parse() {
    ExprPtr e = parse_sum();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::End) {
      throw ParseError("unexpected '" + t.text + "'", t.position);
    }
    return e;
  }

private:
  ExprPtr parse_sum() {
    Expr::Sum sum;
    sum.terms.push_back(parse_term());
    sum.signs.push_back(+1);
    while (true) {
      const Token& t = lexer_.peek();
      if (t.kind == Token::Kind::Plus || t.kind == Token::Kind::Minus) {
        const int sign = t.kind == Token::Kind::Plus ? +1 : -1;
        lexer_.take();
        sum.terms.push_back(parse_term());
        sum.signs.push_back(sign);
      } else {
        break;
      }
    }
    if (sum.terms.size() == 1 && sum.signs[0] == +1) return sum.terms[0];
    return make_expr(std::move(sum));
  }

  static bool starts_factor(const Token& t) {
    return t.kind == Token::Kind::Integer || t.kind == Token::Kind::Variable ||
           t.kind == Token::Kind::LParen;
  }

  ExprPtr parse_term() {
    Expr::Product prod;
    prod.factors.push_back(parse_factor());
    while (true) {
      const Token& t = lexer_.peek();
      if (t.kind == Token::Kind::Star) {
        lexer_.take();
        prod.factors.push_back(parse_factor());
      } else if (starts_factor(t)) {
        prod.factors.push_back(parse_factor());
      } else {
        break;
      }
    }
    if (prod.factors.size() == 1) return prod.factors[0];
    return make_expr(std::move(prod));
  }

  int parse_uint(const char* what) {
    const Token t = lexer_.take();
    if (t.kind == Token::Kind::Minus) {
      throw ParseError(std::string(what) + " must be a nonnegative integer", t.position);
    }
    if (t.kind != Token::Kind::Integer) {
      throw ParseError(std::string("expected ") + what, t.position);
    }
    try {
      return std::stoi(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(std::string(what) + " out of range", t.position);
    }
  }

  ExprPtr parse_factor() {
    bool negated = false;
    if (lexer_.peek().kind == Token::Kind::Minus) {
      lexer_.take();
      negated = true;
    }
    ExprPtr node = parse_atom();
    if (lexer_.peek().kind == Token::Kind::Caret) {
      lexer_.take();
      Expr::Power p;
      p.base = node;
      p.exponent = parse_uint("exponent");
      node = make_expr(std::move(p));
    }
    if (lexer_.peek().kind == Token::Kind::Slash) {
      const Token slash = lexer_.take();
      const int divisor = parse_uint("divisor");
      if (divisor == 0) throw ParseError("division by zero", slash.position);
      Expr::Product p;
      p.factors.push_back(node);
      p.factors.push_back(make_expr(Expr::Constant{Ratio(BigInt(1), BigInt(divisor))}));
      node = make_expr(std::move(p));
    }
    if (negated) node = make_expr(Expr::Negate{node});
    return node;
  }

  ExprPtr parse_atom() {
    const Token t = lexer_.take();
    switch (t.kind) {
      case Token::Kind::Integer:
        return make_expr(Expr::Constant{Ratio(BigInt(t.text))});
      case Token::Kind::Variable:
        return make_expr(Expr::Variable{t.text[0]});
      case Token::Kind::LParen: {
        ExprPtr inner = parse_sum();
        const Token close = lexer_.take();
        if (close.kind != Token::Kind::RParen) {
          throw ParseError("expected ')'", close.position);
        }
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '('", t.position);
    }
  }

  Lexer lexer_;
};

// Expansion to sparse monomial form; VarPoly maps a variable letter to
// the corresponding polynomial generator.
template <class P, class VarPoly>
P expand(const Expr& expr, const VarPoly& var_poly) {
  return std::visit(
      [&](const auto& node) -> P {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Sum>) {
          P acc;
          for (std::size_t i = 0; i < node.terms.size(); ++i) {
            if (node.signs[i] > 0) {
              acc += expand<P>(*node.terms[i], var_poly);
            } else {
              acc -= expand<P>(*node.terms[i], var_poly);
            }
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          P acc = P::constant(1);
          for (const ExprPtr& f : node.factors) acc = acc * expand<P>(*f, var_poly);
          return acc;
        } else if constexpr (std::is_same_v<T, Expr::Power>) {
          return pow(expand<P>(*node.base, var_poly), node.exponent);
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return Ratio(-1) * expand<P>(*node.operand, var_poly);
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return var_poly(node.name);
        } else {
          return P::constant(node.value);
        }
      },
      expr.node);
}

}  // namespace

ExprPtr parse_expr(std::string_view src, std::string_view variables) {
  return Parser(src, variables).parse();
}

Ratio eval_expr(const Expr& expr, const std::map<char, Ratio>& env) {
  return std::visit(
      [&](const auto& node) -> Ratio {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Sum>) {
          Ratio acc = 0;
          for (std::size_t i = 0; i < node.terms.size(); ++i) {
            const Ratio v = eval_expr(*node.terms[i], env);
            if (node.signs[i] > 0) {
              acc += v;
            } else {
              acc -= v;
            }
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          Ratio acc = 1;
          for (const ExprPtr& f : node.factors) acc *= eval_expr(*f, env);
          return acc;
        } else if constexpr (std::is_same_v<T, Expr::Power>) {
          return pow(eval_expr(*node.base, env), node.exponent);
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return -eval_expr(*node.operand, env);
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return env.at(node.name);
        } else {
          return node.value;
        }
      },
      expr.node);
}

Poly1 parse_poly1(std::string_view src) {
  ExprPtr ast = parse_expr(src, "t");
  return expand<Poly1>(*ast, [](char) { return Poly1::variable(); });
}

Poly2 parse_poly2(std::string_view src) {
  ExprPtr ast = parse_expr(src, "uv");
  return expand<Poly2>(*ast,
                       [](char name) { return name == 'u' ? Poly2::variable_u() : Poly2::variable_v(); });
}

}  // namespace polarize
