#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "tamekit/autom.hpp"
#include "tamekit/polymap.hpp"
#include "tamekit/polynomial.hpp"

namespace tamekit {

/// Raised when the elementary word built from an automorphism does not
/// compose to the expected closed form. The word and both maps are kept so
/// the caller can report the discrepancy.
class ClosedFormMismatch : public std::runtime_error {
 public:
  ClosedFormMismatch(const std::string& what, TameWord word, PolyMap composed, PolyMap expected)
      : std::runtime_error(what),
        word_(std::move(word)),
        composed_(std::move(composed)),
        expected_(std::move(expected)) {}

  const TameWord& word() const noexcept { return word_; }
  const PolyMap& composed() const noexcept { return composed_; }
  const PolyMap& expected() const noexcept { return expected_; }

 private:
  TameWord word_;
  PolyMap composed_;
  PolyMap expected_;
};

/// Doubling of an automorphism of K[x_1..x_n] to K[x_1..x_n, y_1..y_n];
/// variables 0..n-1 are the x block and n..2n-1 the y block.
struct StabilizationResult {
  TameWord word;
  PolyMap closed_form;
  std::size_t generator_count = 0;
};

/// Elementary word on 2n variables, in order:
///   x_i -> x_i + phi_i(y)       (n generators)
///   y_i -> y_i - phi_inv_i(x)   (n generators)
///   x_i <-> y_i                 (one block permutation)
///   y_i -> y_i + phi_i(x)       (n generators)
TameWord stabilization_word(const PolyMap& phi, const PolyMap& phi_inv);

/// x_i -> phi_i(x), y_i -> -phi_inv_i(y).
PolyMap stabilization_closed_form(const PolyMap& phi, const PolyMap& phi_inv);

/// Builds the word and checks it against the closed form exactly.
/// Throws std::invalid_argument when (phi, phi_inv) is not an inverse pair and
/// ClosedFormMismatch when the composed word differs from the closed form.
StabilizationResult stabilize(const PolyMap& phi, const PolyMap& phi_inv);

/// As stabilize, additionally requiring phi(p_i) = q_i and checking that the
/// word sends each p_i (placed in the x block) to q_i. Throws
/// std::invalid_argument when the tuple condition fails.
StabilizationResult stabilize_tuple(std::span<const Polynomial> ps, std::span<const Polynomial> qs,
                                    const PolyMap& phi, const PolyMap& phi_inv);

/// Replaces the `dropped` variables of phi's target ring by `qs` inside the
/// images of the kept variables, re-indexed to the kept variables in their
/// original order. Each q may be given over the kept variables alone or over
/// the full ring, in which case it must not involve a dropped variable.
PolyMap specialize(const PolyMap& phi, std::span<const std::size_t> dropped, std::span<const Polynomial> qs);

/// Full Jacobian rank over the rational function field (characteristic-zero
/// criterion for algebraic independence of the images).
bool is_injective(const PolyMap& f);

struct SpecializationOptions {
  /// Largest power tried when multiplying q by an image h_j.
  unsigned max_exponent = 8;
  /// Degree bound and candidate budget of the fallback search.
  unsigned fallback_degree = 3;
  std::size_t fallback_budget = 20000;
};

/// For a word on n+1 variables, a polynomial q in x_1..x_n such that
/// substituting q for x_{n+1} in the images of x_1..x_n gives an injective
/// map. Walks the word generator by generator, keeping the running q
/// injective; throws BudgetExceeded when no candidate is found.
Polynomial find_injective_specialization(const TameWord& w, const SpecializationOptions& options = {});

}  // namespace tamekit
