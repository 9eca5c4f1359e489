#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tamekit/polynomial.hpp"

namespace tamekit {

/// A term order on exponent vectors.
///
/// - grevlex: graded reverse lexicographic (the canonical order).
/// - lex: pure lexicographic, x_1 > x_2 > ... .
/// - weighted: compare the weighted degree first, break ties with grevlex.
/// - elimination(k): block order; compare the first k variables by grevlex,
///   then the remaining ones by grevlex. Any monomial involving one of the
///   first k variables beats every monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, weighted, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  /// Weights must be positive.
  static MonomialOrder weighted(std::vector<std::uint32_t> weights);
  static MonomialOrder elimination(std::size_t block);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  std::size_t block() const noexcept { return block_; }

  /// >0 when a > b, 0 when equal, <0 when a < b.
  int compare(const Exponents& a, const Exponents& b) const;

  /// Strict "greater" predicate, handy for sorting in descending order.
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<std::uint32_t> weights_;
  std::size_t block_ = 0;
};

}  // namespace tamekit
