#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tamekit/polynomial.hpp"

namespace tamekit {

/// Why a support point is (not) a vertex of the Newton polytope.
/// Non-vertex: weights on the other support points, nonnegative, summing to
/// one, reproducing the point. Vertex: a functional c with
/// c.(v - w) >= 1 for every other support point w.
struct HullCombination {
  std::vector<Rational> weights;  // indexed like the support; own weight 0
};
struct SeparatingFunctional {
  std::vector<Rational> c;
};
using VertexCertificate = std::variant<HullCombination, SeparatingFunctional>;

struct VertexReport {
  std::vector<Exponents> support;  // descending grevlex
  std::vector<bool> is_vertex;
  std::vector<VertexCertificate> certificates;

  std::vector<Exponents> vertices() const;
};

/// Classifies every support point of a nonzero polynomial by exact linear
/// feasibility.
VertexReport newton_vertices(const Polynomial& p);

/// Re-checks one certificate by direct substitution.
bool check_certificate(const VertexReport& report, std::size_t index);

struct PassesNecessary {};
struct NotCoordinate {
  Exponents witness;
};
using CoordinateVerdict = std::variant<PassesNecessary, NotCoordinate>;

/// Every vertex of the Newton polytope of a coordinate lies on a coordinate
/// hyperplane. Returns the first vertex (in support order) with all exponents
/// positive, if any; passing proves nothing.
CoordinateVerdict hadas_check(const Polynomial& p);

/// A support monomial with all exponents positive that dominates every other
/// support monomial coordinatewise. Any nonzero coefficient is accepted.
std::optional<Exponents> dominating_check(const Polynomial& p);

struct RigidityReport {
  CoordinateVerdict hadas;
  std::optional<Exponents> dominating;
  std::vector<std::string> conclusions;
};

RigidityReport rigidity_report(const Polynomial& p);

}  // namespace tamekit
