#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tamekit/autom.hpp"
#include "tamekit/polymap.hpp"
#include "tamekit/polynomial.hpp"

namespace tamekit {

using VarNames = std::vector<std::string>;

/// Parses a polynomial over the declared variables.
///
/// Grammar (whitespace ignored):
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := atom ('^' INTEGER)*
///   atom    := NUMBER | IDENT | '(' sum ')'
///   NUMBER  := INTEGER ('/' INTEGER)?
/// so "-x^2" is -(x^2) and "x^2^3" is (x^2)^3. Multiplication must be
/// explicit. Throws ParseError on bad syntax, unknown identifiers and
/// negative exponents.
Polynomial parse_poly(std::string_view text, std::span<const std::string> vars);

/// Canonical text: descending grevlex, explicit '*' and '^', unit
/// coefficients omitted, e.g. "x^2*y - z^2 + 1". The zero polynomial is "0".
std::string format_poly(const Polynomial& p, std::span<const std::string> vars);

std::string format_rational(const Rational& q);
/// Parses "3", "-3", "3/2"; throws ParseError.
Rational parse_rational(std::string_view text);

/// "(1,2,0)".
std::string format_exponents(const Exponents& e);

/// Every identifier occurring in the text, in order of first appearance.
VarNames identifiers_in(std::string_view text);

/// "x,y,z" -> {"x","y","z"}; checks the names are distinct identifiers.
VarNames parse_var_list(std::string_view text);

/// Word file: one generator per line, 1-based indices, '#' comments.
///   vars x,y            (optional header fixing the variable names)
///   elem 1 : y^2        x_1 -> x_1 + y^2
///   linear [[1,1],[0,1]]
///   perm (1 2)(3 4)     cycles; "perm ()" is the identity
///   scale 2 : 3/2
/// Without a header the variables are `default_vars`. Line numbers are the
/// positions reported by ParseError.
struct WordFile {
  VarNames vars;
  TameWord word;
};
WordFile parse_word(std::string_view text, std::span<const std::string> default_vars = {});
std::string format_word(const TameWord& w, std::span<const std::string> vars);
std::string format_generator(const TameGen& g, std::span<const std::string> vars);

/// "(x^2*y, x + 1)" over the given target variables.
std::string format_map(const PolyMap& f, std::span<const std::string> target_vars);

}  // namespace tamekit
