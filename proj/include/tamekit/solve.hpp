#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tamekit/groebner.hpp"
#include "tamekit/polynomial.hpp"

namespace tamekit {

/// Rational roots of a univariate polynomial (given in a ring of any arity,
/// involving at most variable `var`), ascending, without multiplicity.
std::vector<Rational> rational_roots(const Polynomial& p, std::size_t var);

struct SolveOptions {
  GroebnerOptions groebner;
  /// Values tried, in order, for a variable left free by the elimination.
  std::vector<Rational> free_values = {0, 1, -1, 2, -2};
};

/// A rational common zero of the equations, searched depth-first: a lex basis
/// exposes a univariate eliminant in the last unassigned variable, whose
/// rational roots are tried in ascending order (or `free_values` when the
/// variable is unconstrained). Sound but incomplete: nullopt means no point
/// was found within these choices, not that none exists. Returned points are
/// re-checked against the input equations.
std::optional<std::vector<Rational>> rational_point(std::span<const Polynomial> equations,
                                                    const SolveOptions& options = {});

}  // namespace tamekit
