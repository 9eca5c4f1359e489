#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamekit/autom.hpp"
#include "tamekit/coordcheck.hpp"
#include "tamekit/solve.hpp"

namespace tamekit {

/// One automorphism of K[x, y] applied to a polynomial together with the
/// total degrees before and after.
struct ReductionStep {
  TameGen gen;
  long before_degree = 0;
  long after_degree = 0;
};

struct Reduce2Options {
  /// Degree bound for the addends searched; 0 means deg p.
  unsigned search_bound = 0;
  SolveOptions solve;
};

/// Searches x -> x + f(y), then y -> y + g(x), addend degrees 1..D, for a
/// rational shear that makes every monomial of degree >= deg p vanish.
/// Returns the first hit in that order. Only rational coefficients are
/// searched, so nullopt is not a proof that no reducing shear exists.
std::optional<ReductionStep> try_reduce_degree(const Polynomial& p, const Reduce2Options& options = {});

struct Reduction {
  TameWord word;
  Polynomial result;
  std::vector<ReductionStep> steps;
};

/// Applies try_reduce_degree until it finds nothing;
/// apply_word(word, p) == result.
Reduction reduce_fully(const Polynomial& p, const Reduce2Options& options = {});

struct DominatingForm {
  TameWord word;
  Polynomial result;
  Exponents dominating;
  /// Hadas verdicts of the input and the output. The output's is always
  /// NotCoordinate (its dominating monomial is a positive vertex).
  CoordinateVerdict input_hadas;
  CoordinateVerdict output_hadas;
};

/// reduce_fully, then a single degree-preserving linear map or elementary
/// shear bringing the polynomial to a form with a dominating monomial.
/// Linear maps are searched up to rescaling and swapping the variables
/// (which never affect the dominating property), i.e. as
/// x -> x + b*y, y -> c*x + y with bc != 1. nullopt means the bounded search
/// found nothing.
std::optional<DominatingForm> to_dominating_form(const Polynomial& p, const Reduce2Options& options = {});

}  // namespace tamekit
