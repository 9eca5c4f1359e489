#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "tamekit/polymap.hpp"
#include "tamekit/polynomial.hpp"

namespace tamekit {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// x_target -> x_target + addend, every other variable fixed. The addend must
/// not involve x_target.
struct Elementary {
  std::size_t target;
  Polynomial addend;
};

/// x_i -> sum_j matrix[i][j] * x_j. The matrix must be invertible.
struct Linear {
  RationalMatrix matrix;
};

/// x_i -> x_{perm[i]}.
struct Permutation {
  std::vector<std::size_t> perm;
};

/// x_target -> factor * x_target with a nonzero factor.
struct Scale {
  std::size_t target;
  Rational factor;
};

using TameGen = std::variant<Elementary, Linear, Permutation, Scale>;

/// A tame automorphism written as an explicit product of generators.
///
/// Composition is diagrammatic (left to right): the map of [g1, g2, ..., gk]
/// sends x_i to g1(x_i) with every variable then rewritten through g2, then
/// through g3, and so on. In classical notation for ring endomorphisms that
/// is gk o ... o g2 o g1. The empty word is the identity.
class TameWord {
 public:
  explicit TameWord(std::size_t arity = 0) : arity_(arity) {}
  /// Validates every generator against the arity and the generator invariants.
  TameWord(std::size_t arity, std::vector<TameGen> gens);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<TameGen>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void push_back(TameGen g);
  /// Concatenation w1 ++ w2.
  friend TameWord operator+(const TameWord& a, const TameWord& b);

 private:
  std::size_t arity_;
  std::vector<TameGen> gens_;
};

/// Throws std::invalid_argument / ArityError when g is not a valid generator
/// of the given arity.
void validate_generator(const TameGen& g, std::size_t arity);

/// The map of a single generator.
PolyMap generator_map(const TameGen& g, std::size_t arity);
TameGen invert_generator(const TameGen& g);

PolyMap word_to_polymap(const TameWord& w);
Polynomial apply_word(const TameWord& w, const Polynomial& p);
TameWord invert_word(const TameWord& w);

/// True iff compose_maps(f, g) and compose_maps(g, f) are both exactly the identity.
bool verify_inverse_pair(const PolyMap& f, const PolyMap& g);

/// Exact inverse of a square rational matrix; throws std::domain_error when singular.
RationalMatrix invert_matrix(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Deterministic pseudo-random tame word.
///
/// `degree_bound` bounds the total degree of every image of both the word's
/// map and its inverse map: elementary generators that would push either
/// past the bound are resampled (and, after a few attempts, replaced by a
/// degree-preserving generator). The result is a pure function of the
/// arguments.
TameWord random_tame(std::size_t arity, std::size_t word_length, unsigned degree_bound,
                     std::uint64_t seed);

}  // namespace tamekit
