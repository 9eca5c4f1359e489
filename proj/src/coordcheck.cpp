#include "tamekit/coordcheck.hpp"

#include <stdexcept>

#include "tamekit/lp.hpp"
#include "tamekit/text.hpp"

namespace tamekit {

namespace {

void require_nonzero(const Polynomial& p, const char* who) {
  if (p.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
}

// Convex weights on the other points reproducing support[k].
std::optional<HullCombination> hull_combination(const std::vector<Exponents>& support, std::size_t k) {
  const std::size_t dim = support[k].size();
  const std::size_t m = support.size();
  RationalMatrix a(dim + 1, std::vector<Rational>(m - 1, 0));
  std::vector<Rational> b(dim + 1, 0);
  for (std::size_t j = 0, col = 0; j < m; ++j) {
    if (j == k) continue;
    for (std::size_t d = 0; d < dim; ++d) a[d][col] = support[j][d];
    a[dim][col] = 1;
    ++col;
  }
  for (std::size_t d = 0; d < dim; ++d) b[d] = support[k][d];
  b[dim] = 1;
  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  HullCombination h;
  h.weights.assign(m, 0);
  for (std::size_t j = 0, col = 0; j < m; ++j) {
    if (j == k) continue;
    h.weights[j] = (*x)[col++];
  }
  return h;
}

// c = c_plus - c_minus with (v - w).c - slack_w = 1 for every other point w.
std::optional<SeparatingFunctional> separating_functional(const std::vector<Exponents>& support, std::size_t k) {
  const std::size_t dim = support[k].size();
  const std::size_t m = support.size();
  const std::size_t cols = 2 * dim + (m - 1);
  RationalMatrix a;
  std::vector<Rational> b;
  for (std::size_t j = 0, slack = 0; j < m; ++j) {
    if (j == k) continue;
    std::vector<Rational> row(cols, 0);
    for (std::size_t d = 0; d < dim; ++d) {
      const Rational diff = Rational(support[k][d]) - Rational(support[j][d]);
      row[d] = diff;
      row[dim + d] = -diff;
    }
    row[2 * dim + slack++] = -1;
    a.push_back(std::move(row));
    b.push_back(1);
  }
  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  SeparatingFunctional s;
  s.c.resize(dim);
  if (a.empty()) {
    for (auto& v : s.c) v = 0;
    return s;
  }
  for (std::size_t d = 0; d < dim; ++d) s.c[d] = (*x)[d] - (*x)[dim + d];
  return s;
}

}  // namespace

std::vector<Exponents> VertexReport::vertices() const {
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (is_vertex[i]) out.push_back(support[i]);
  }
  return out;
}

VertexReport newton_vertices(const Polynomial& p) {
  require_nonzero(p, "newton_vertices");
  VertexReport r;
  for (const auto& t : p.terms()) r.support.push_back(t.exponents);
  for (std::size_t k = 0; k < r.support.size(); ++k) {
    if (auto h = hull_combination(r.support, k)) {
      r.is_vertex.push_back(false);
      r.certificates.emplace_back(std::move(*h));
    } else if (auto s = separating_functional(r.support, k)) {
      r.is_vertex.push_back(true);
      r.certificates.emplace_back(std::move(*s));
    } else {
      throw std::logic_error("newton_vertices: neither certificate exists");
    }
  }
  return r;
}

bool check_certificate(const VertexReport& report, std::size_t index) {
  const auto& support = report.support;
  const Exponents& v = support.at(index);
  const std::size_t dim = v.size();
  if (const auto* h = std::get_if<HullCombination>(&report.certificates.at(index))) {
    if (report.is_vertex[index] || h->weights.size() != support.size()) return false;
    Rational total = 0;
    std::vector<Rational> point(dim, 0);
    for (std::size_t j = 0; j < support.size(); ++j) {
      const Rational& w = h->weights[j];
      if (sgn(w) < 0 || (j == index && sgn(w) != 0)) return false;
      total += w;
      for (std::size_t d = 0; d < dim; ++d) point[d] += w * support[j][d];
    }
    if (total != 1) return false;
    for (std::size_t d = 0; d < dim; ++d) {
      if (point[d] != Rational(v[d])) return false;
    }
    return true;
  }
  const auto& s = std::get<SeparatingFunctional>(report.certificates.at(index));
  if (!report.is_vertex[index] || s.c.size() != dim) return false;
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (j == index) continue;
    Rational dot = 0;
    for (std::size_t d = 0; d < dim; ++d) dot += s.c[d] * (Rational(v[d]) - Rational(support[j][d]));
    if (dot < 1) return false;
  }
  return true;
}

CoordinateVerdict hadas_check(const Polynomial& p) {
  const VertexReport r = newton_vertices(p);
  for (std::size_t i = 0; i < r.support.size(); ++i) {
    if (!r.is_vertex[i]) continue;
    const auto& e = r.support[i];
    bool interior = e.size() > 0;
    for (auto k : e) interior = interior && k > 0;
    if (interior) return NotCoordinate{e};
  }
  return PassesNecessary{};
}

std::optional<Exponents> dominating_check(const Polynomial& p) {
  require_nonzero(p, "dominating_check");
  for (const auto& cand : p.terms()) {
    const Exponents& m = cand.exponents;
    bool positive = m.size() > 0;
    for (auto k : m) positive = positive && k > 0;
    if (!positive) continue;
    bool dominates = true;
    for (const auto& other : p.terms()) dominates = dominates && other.exponents.divides(m);
    if (dominates) return m;
  }
  return std::nullopt;
}

RigidityReport rigidity_report(const Polynomial& p) {
  RigidityReport r{hadas_check(p), dominating_check(p), {}};
  if (const auto* nc = std::get_if<NotCoordinate>(&r.hadas)) {
    r.conclusions.push_back("Hadas criterion: the Newton polytope has the vertex " + format_exponents(nc->witness) +
                            " off every coordinate hyperplane, so p is not a coordinate");
  } else {
    r.conclusions.push_back(
        "Hadas criterion: every vertex of the Newton polytope lies on a coordinate hyperplane "
        "(necessary condition only; nothing follows)");
  }
  if (r.dominating) {
    r.conclusions.push_back("dominating monomial " + format_exponents(*r.dominating) +
                            ": every polynomial stably equivalent to p is already equivalent to p");
  } else {
    r.conclusions.push_back("no dominating monomial: the stable rigidity criterion does not apply");
  }
  return r;
}

}  // namespace tamekit
