#include "tamekit/polymap.hpp"

#include <string>
#include <utility>

#include "tamekit/errors.hpp"

namespace tamekit {

PolyMap::PolyMap(std::size_t target_arity, std::vector<Polynomial> images)
    : target_arity_(target_arity), images_(std::move(images)) {
  for (const auto& img : images_) {
    if (img.arity() != target_arity_) {
      throw ArityError("PolyMap: image of arity " + std::to_string(img.arity()) +
                       " in a map with target arity " + std::to_string(target_arity_));
    }
  }
}

PolyMap PolyMap::identity(std::size_t arity) {
  std::vector<Polynomial> images;
  images.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) images.push_back(Polynomial::variable(arity, i));
  return PolyMap(arity, std::move(images));
}

namespace {

// Lazily filled table of powers image(i)^k.
class PowerCache {
 public:
  explicit PowerCache(const PolyMap& map) : map_(map), powers_(map.source_arity()) {}

  const Polynomial& get(std::size_t var, unsigned k) {
    auto& row = powers_[var];
    if (row.empty()) row.push_back(Polynomial::constant(map_.target_arity(), 1));
    while (row.size() <= k) row.push_back(row.back() * map_.image(var));
    return row[k];
  }

 private:
  const PolyMap& map_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, const PolyMap& map) {
  if (p.arity() != map.source_arity()) {
    throw ArityError("substitute: polynomial arity " + std::to_string(p.arity()) +
                     " does not match map source arity " + std::to_string(map.source_arity()));
  }
  const std::size_t n = map.target_arity();
  PowerCache cache(map);
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(n, t.coeff);
    for (std::size_t i = 0; i < p.arity() && !prod.is_zero(); ++i) {
      if (t.exponents[i] != 0) prod *= cache.get(i, t.exponents[i]);
    }
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(n, std::move(acc));
}

PolyMap compose_maps(const PolyMap& f, const PolyMap& g) {
  if (f.target_arity() != g.source_arity()) {
    throw ArityError("compose_maps: target arity of the first map (" +
                     std::to_string(f.target_arity()) + ") differs from source arity of the second (" +
                     std::to_string(g.source_arity()) + ")");
  }
  std::vector<Polynomial> images;
  images.reserve(f.source_arity());
  for (const auto& img : f.images()) images.push_back(substitute(img, g));
  return PolyMap(g.target_arity(), std::move(images));
}

PolyMatrix jacobian(const PolyMap& f) {
  PolyMatrix m;
  m.reserve(f.source_arity());
  for (const auto& img : f.images()) m.push_back(gradient(img));
  return m;
}

std::size_t polynomial_matrix_rank(PolyMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  const std::size_t arity = cols > 0 ? m.front().front().arity() : 0;
  Polynomial prev_pivot = Polynomial::constant(arity, 1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Polynomial num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
        auto q = exact_div(num, prev_pivot);
        if (!q) throw std::logic_error("Bareiss elimination: inexact division");
        m[r][c] = std::move(*q);
      }
      m[r][col] = Polynomial(arity);
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace tamekit
