#pragma once

#include <string>
#include <string_view>

#include "bidb/formula.hpp"
#include "bidb/signature.hpp"

namespace bidb {

// Concrete formula syntax:
//
//   formula := imp ; imp := or ("->" imp)? ; or := and ("|" and)* ;
//   and := unary ("&" unary)* ;
//   unary := "!" unary | "B@" nat unary | "D@" nat unary | "(" formula ")" | atom ;
//   atom := name "@" nat | "pre(" name ("," name)* ")@" nat
//         | "post(" name ")@" nat | "do(" name ")@" nat | "true" | "false"
//
// D, or, ->, true and false parse into the primitive connectives. Errors
// carry a byte offset into the input.
Formula parse_formula(std::string_view text, const Signature& sig);

// Canonical text with minimal parentheses under the precedence
// ! > & > | > ->. parse_formula(render_formula(f)) is structurally f.
// Diamond / or / implies node patterns are printed in their surface form;
// the true/false expansions are printed as formulas, not as constants.
std::string render_formula(const Formula& f);

// Display variant: additionally prints the conj(x, !x) expansion of the
// surface constants as "false" / "true". Not round-trip safe; CLI output only.
std::string render_pretty(const Formula& f);

}  // namespace bidb
