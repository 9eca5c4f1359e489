#pragma once

#include <cstddef>
#include <vector>

#include "tamekit/polynomial.hpp"

namespace tamekit {

/// A ring homomorphism K[x_1..x_s] -> K[x_1..x_t] given by the images of the
/// source variables. Not assumed to be invertible.
class PolyMap {
 public:
  PolyMap() = default;
  /// Each image must have arity `target_arity`.
  PolyMap(std::size_t target_arity, std::vector<Polynomial> images);

  static PolyMap identity(std::size_t arity);

  std::size_t source_arity() const noexcept { return images_.size(); }
  std::size_t target_arity() const noexcept { return target_arity_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.target_arity_ == b.target_arity_ && a.images_ == b.images_;
  }

 private:
  std::size_t target_arity_ = 0;
  std::vector<Polynomial> images_;
};

/// Replaces every variable x_i of p by map.image(i) and expands.
Polynomial substitute(const Polynomial& p, const PolyMap& map);

/// Diagrammatic composition: apply f's formulas, then rewrite every variable
/// through g. As ring homomorphisms this is g o f; on points it is f^ o g^.
/// Requires f.target_arity() == g.source_arity().
PolyMap compose_maps(const PolyMap& f, const PolyMap& g);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Entry (i, j) is the partial derivative of image i by variable j.
PolyMatrix jacobian(const PolyMap& f);

/// Rank of a polynomial matrix over the field of rational functions,
/// by fraction-free (Bareiss) elimination.
std::size_t polynomial_matrix_rank(PolyMatrix m);

}  // namespace tamekit
