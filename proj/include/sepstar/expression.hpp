#ifndef SEPSTAR_EXPRESSION_HPP
#define SEPSTAR_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <sepstar/jet.hpp>

namespace sepstar
{

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, imaginary, variable, builtin, add, sub, mul, neg, pow };

    Kind kind = Kind::number;
    mpq_class value;        // number
    Variable var{};         // variable
    std::string name;       // builtin
    unsigned exponent = 0;  // pow
    ExprPtr lhs, rhs;       // add, sub, mul (both); neg, pow (lhs)
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-' | '+')* atom ('^' uint)?
//   atom   := rational | 'i' | 'z' uint | 'zbar' uint | '(' expr ')' | builtin
// with rationals written p/q or as integers and builtins flat, fubini-study,
// hyperbolic. Variable indices are 1-based and checked against n.
// Throws parse_error carrying the offending position.
ExprPtr parse_expression(std::string_view text, int n);

// Expands the expression to a jet of the given order; builtin potentials
// are expanded to that order too.
Jet evaluate(const Expr &e, int n, int order);
Jet evaluate_expression(std::string_view text, int n, int order);

// Total degree of a polynomial expression, ignoring builtins (which count as
// degree 2).
int expression_degree(const Expr &e);

std::string to_string(const Expr &e);

} // namespace sepstar

#endif
