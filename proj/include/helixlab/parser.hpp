#pragma once

#include "helixlab/expr.hpp"

#include <stdexcept>
#include <string>

namespace helixlab {

// Raised for text the grammar rejects; carries a 0-based input position.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p)
      : std::runtime_error(what + " (at position " + std::to_string(p) + ")"),
        pos(p) {}
};

// Grammar:  expr  := term ('+' term)*
//           term  := '0' | [mult '*'] atom
//           atom  := ('O' | 'Sigma' | 'Omega^'p | 'wT^'p
//                     | 'psi_'j | 'psidual_'j) twist?
//           twist := '(' '-'? digits ')'      (omitted twist means 0)
// Whitespace is allowed between tokens. Atoms foreign to the variety
// (Sigma/psi on P^n, out-of-catalog psi indices) raise std::invalid_argument.
Expr parse_sheaf_expr(const std::string& text, const Variety& v);

}  // namespace helixlab
