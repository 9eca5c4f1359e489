#pragma once

#include <optional>
#include <vector>

#include "tamekit/autom.hpp"

namespace tamekit {

/// Some x >= 0 with A x = b, or nullopt when none exists. Exact phase-one
/// simplex with Bland's rule, so it always terminates. A may have zero rows.
std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace tamekit
