#pragma once

// Surface syntax shared by the command line and the corpus files.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*          h(..)h(..) may also be juxtaposed
//   factor := "-" factor | base ("^" nat)?
//   base   := rational | var | "(" expr ")" | "{" expr "," expr "}"
//           | "[" expr "," expr "]" | "h" "(" expr ")"
//   var    := ("x" | "y" | "X" | "Y") nat
//
// What each construct means depends on the mode the text is evaluated in.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpa/core.hpp"
#include "fpa/envelope.hpp"
#include "fpa/poisson.hpp"
#include "fpa/symplectic.hpp"

namespace fpa {

enum class Mode { Poisson, Env, Symplectic, Weyl, PnEnv };

Mode parse_mode(std::string_view name);
std::string mode_name(Mode mode);

// Malformed input, or a construct not available in the requested mode.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct Expr {
    enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow, Brace, Square, Ham };

    Kind kind = Kind::Number;
    Scalar value;            // Number
    char letter = 'x';       // Variable: x, y, X or Y
    int index = 0;           // Variable
    int exponent = 0;        // Pow
    std::vector<std::shared_ptr<const Expr>> children;
    int line = 1;
    int column = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Syntax only; index ranges and mode restrictions are checked on evaluation.
ExprPtr parse_expression(std::string_view src);

// Each evaluator throws ParseError for constructs illegal in its mode and
// DomainError for variable indices outside 1..n.
PoissonElement eval_poisson(const Expr& e, int n);
EnvElement eval_env(const Expr& e, int n);
SymplecticPoly eval_symplectic(const Expr& e, int n);
WeylElement eval_weyl(const Expr& e, int n);
PnEnvElement eval_pnenv(const Expr& e, int n);

PoissonElement parse_poisson(std::string_view src, int n);
EnvElement parse_env(std::string_view src, int n);
SymplecticPoly parse_symplectic(std::string_view src, int n);
WeylElement parse_weyl(std::string_view src, int n);
PnEnvElement parse_pnenv(std::string_view src, int n);

}  // namespace fpa
