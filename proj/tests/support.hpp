// Random generators and implementation-independent oracles shared by the suites.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tamekit/polymap.hpp"
#include "tamekit/text.hpp"

namespace tamekit::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational coefficient() {
    long num = 0;
    while (num == 0) num = range(-5, 5);
    Rational q(num, range(1, 3));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

inline Polynomial random_poly(Rng& rng, std::size_t arity, unsigned max_degree, std::size_t max_terms) {
  std::vector<Term> terms;
  const auto count = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < count; ++t) {
    Exponents e(arity);
    const long degree = rng.range(0, max_degree);
    for (long k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.range(0, static_cast<long>(arity) - 1))];
    terms.push_back({e, rng.coefficient()});
  }
  return Polynomial::from_terms(arity, std::move(terms));
}

inline PolyMap random_map(Rng& rng, std::size_t source, std::size_t target, unsigned max_degree) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < source; ++i) images.push_back(random_poly(rng, target, max_degree, 3));
  return PolyMap(target, std::move(images));
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t arity) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < arity; ++i) {
      pt.emplace_back(rng.range(-7, 7), rng.range(1, 4));
      pt.back().canonicalize();
    }
  return pt;
}

// Horner-free direct evaluation, term by term.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& pt) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      for (std::uint32_t k = 0; k < t.exponents[i]; ++k) v *= pt[i];
    }
    sum += v;
  }
  return sum;
}

inline std::vector<Rational> evaluate(const PolyMap& f, const std::vector<Rational>& pt) {
  std::vector<Rational> out;
  for (const auto& img : f.images()) out.push_back(evaluate(img, pt));
  return out;
}

// Dense schoolbook product keyed by exponent vectors.
using TermMap = std::map<std::vector<std::uint32_t>, Rational>;

inline TermMap as_map(const Polynomial& p) {
  TermMap m;
  for (const auto& t : p.terms()) m[std::vector<std::uint32_t>(t.exponents.begin(), t.exponents.end())] = t.coeff;
  return m;
}

inline TermMap naive_product(const Polynomial& a, const Polynomial& b) {
  TermMap out;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::vector<std::uint32_t> e(a.arity());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponents[i] + t.exponents[i];
      out[e] += s.coeff * t.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Polynomial poly(const std::string& text, const VarNames& vars) { return parse_poly(text, vars); }

}  // namespace tamekit::testing
