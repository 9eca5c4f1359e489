#include "tamekit/autom.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t max_image_degree(const PolyMap& m) {
  std::size_t d = 0;
  for (const auto& img : m.images()) {
    if (auto deg = img.total_degree()) d = std::max<std::size_t>(d, static_cast<std::size_t>(*deg));
  }
  return d;
}

}  // namespace

TameWord::TameWord(std::size_t arity, std::vector<TameGen> gens) : arity_(arity) {
  for (auto& g : gens) push_back(std::move(g));
}

void TameWord::push_back(TameGen g) {
  validate_generator(g, arity_);
  gens_.push_back(std::move(g));
}

TameWord operator+(const TameWord& a, const TameWord& b) {
  if (a.arity_ != b.arity_) throw ArityError("word concatenation: arity mismatch");
  TameWord r = a;
  r.gens_.insert(r.gens_.end(), b.gens_.begin(), b.gens_.end());
  return r;
}

void validate_generator(const TameGen& g, std::size_t arity) {
  std::visit(overloaded{
                 [&](const Elementary& e) {
                   if (e.target >= arity) throw ArityError("elementary: target out of range");
                   if (e.addend.arity() != arity) throw ArityError("elementary: addend arity mismatch");
                   if (e.addend.involves(e.target)) {
                     throw std::invalid_argument("elementary: addend involves the target variable");
                   }
                 },
                 [&](const Linear& l) {
                   if (l.matrix.size() != arity) throw ArityError("linear: matrix size mismatch");
                   for (const auto& row : l.matrix) {
                     if (row.size() != arity) throw ArityError("linear: matrix is not square");
                   }
                   if (sgn(determinant(l.matrix)) == 0) throw std::invalid_argument("linear: singular matrix");
                 },
                 [&](const Permutation& p) {
                   if (p.perm.size() != arity) throw ArityError("permutation: size mismatch");
                   std::vector<bool> seen(arity, false);
                   for (auto i : p.perm) {
                     if (i >= arity || seen[i]) throw std::invalid_argument("permutation: not a bijection");
                     seen[i] = true;
                   }
                 },
                 [&](const Scale& s) {
                   if (s.target >= arity) throw ArityError("scale: target out of range");
                   if (sgn(s.factor) == 0) throw std::invalid_argument("scale: zero factor");
                 },
             },
             g);
}

PolyMap generator_map(const TameGen& g, std::size_t arity) {
  std::vector<Polynomial> images;
  images.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) images.push_back(Polynomial::variable(arity, i));
  std::visit(overloaded{
                 [&](const Elementary& e) { images[e.target] += e.addend; },
                 [&](const Linear& l) {
                   for (std::size_t i = 0; i < arity; ++i) {
                     Polynomial img(arity);
                     for (std::size_t j = 0; j < arity; ++j) {
                       img += Polynomial::variable(arity, j) * l.matrix[i][j];
                     }
                     images[i] = std::move(img);
                   }
                 },
                 [&](const Permutation& p) {
                   for (std::size_t i = 0; i < arity; ++i) images[i] = Polynomial::variable(arity, p.perm[i]);
                 },
                 [&](const Scale& s) { images[s.target] *= s.factor; },
             },
             g);
  return PolyMap(arity, std::move(images));
}

TameGen invert_generator(const TameGen& g) {
  return std::visit(overloaded{
                        [](const Elementary& e) -> TameGen { return Elementary{e.target, -e.addend}; },
                        [](const Linear& l) -> TameGen { return Linear{invert_matrix(l.matrix)}; },
                        [](const Permutation& p) -> TameGen {
                          // x_i -> x_{p[i]}; the inverse sends x_{p[i]} -> x_i.
                          std::vector<std::size_t> inv(p.perm.size());
                          for (std::size_t i = 0; i < p.perm.size(); ++i) inv[p.perm[i]] = i;
                          return Permutation{std::move(inv)};
                        },
                        [](const Scale& s) -> TameGen { return Scale{s.target, Rational(1 / s.factor)}; },
                    },
                    g);
}

PolyMap word_to_polymap(const TameWord& w) {
  PolyMap cur = PolyMap::identity(w.arity());
  for (const auto& g : w.gens()) cur = compose_maps(cur, generator_map(g, w.arity()));
  return cur;
}

Polynomial apply_word(const TameWord& w, const Polynomial& p) {
  if (p.arity() != w.arity()) throw ArityError("apply_word: arity mismatch");
  return substitute(p, word_to_polymap(w));
}

TameWord invert_word(const TameWord& w) {
  std::vector<TameGen> gens;
  gens.reserve(w.size());
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) gens.push_back(invert_generator(*it));
  return TameWord(w.arity(), std::move(gens));
}

bool verify_inverse_pair(const PolyMap& f, const PolyMap& g) {
  const std::size_t n = f.source_arity();
  if (f.target_arity() != n || g.source_arity() != n || g.target_arity() != n) return false;
  const PolyMap id = PolyMap::identity(n);
  return compose_maps(f, g) == id && compose_maps(g, f) == id;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

RationalMatrix invert_matrix(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("invert_matrix: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= s;
      inv[col][c] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

namespace {

class WordSampler {
 public:
  WordSampler(std::size_t arity, unsigned degree_bound, std::uint64_t seed)
      : arity_(arity), degree_bound_(degree_bound), rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  Rational small_nonzero() {
    static const int values[] = {1, -1, 2, -2, 3, -3};
    return values[below(6)];
  }

  TameGen elementary() {
    const std::size_t target = below(arity_);
    std::vector<Term> terms;
    const std::size_t nterms = 1 + below(3);
    for (std::size_t k = 0; k < nterms; ++k) {
      Exponents e(arity_);
      if (arity_ > 1) {
        const unsigned deg = static_cast<unsigned>(below(degree_bound_ + 1));
        for (unsigned d = 0; d < deg; ++d) {
          std::size_t v = below(arity_ - 1);
          if (v >= target) ++v;
          ++e[v];
        }
      }
      terms.push_back(Term{std::move(e), small_nonzero()});
    }
    return Elementary{target, Polynomial::from_terms(arity_, std::move(terms))};
  }

  TameGen linear() {
    for (;;) {
      RationalMatrix m(arity_, std::vector<Rational>(arity_, 0));
      for (auto& row : m) {
        for (auto& x : row) x = static_cast<int>(below(5)) - 2;
      }
      if (sgn(determinant(m)) != 0) return Linear{std::move(m)};
    }
  }

  TameGen permutation() {
    std::vector<std::size_t> p(arity_);
    for (std::size_t i = 0; i < arity_; ++i) p[i] = i;
    for (std::size_t i = arity_; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return Permutation{std::move(p)};
  }

  TameGen scale() {
    static const int num[] = {2, -1, 1, -2, 3, -1};
    static const int den[] = {1, 1, 2, 1, 1, 3};
    const auto k = below(6);
    return Scale{below(arity_), Rational(num[k], den[k])};
  }

 private:
  std::size_t arity_;
  unsigned degree_bound_;
  std::mt19937_64 rng_;
};

}  // namespace

TameWord random_tame(std::size_t arity, std::size_t word_length, unsigned degree_bound,
                     std::uint64_t seed) {
  if (arity == 0) throw std::invalid_argument("random_tame: arity must be positive");
  WordSampler sampler(arity, std::max(degree_bound, 1u), seed);
  TameWord w(arity);
  PolyMap forward = PolyMap::identity(arity);
  PolyMap backward = PolyMap::identity(arity);
  for (std::size_t k = 0; k < word_length; ++k) {
    TameGen g;
    PolyMap next_forward;
    PolyMap next_backward;
    bool accepted = false;
    const auto kind = sampler.below(6);
    for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
      if (kind < 3) {
        g = sampler.elementary();
      } else if (kind == 3) {
        g = sampler.linear();
      } else if (kind == 4) {
        g = sampler.permutation();
      } else {
        g = sampler.scale();
      }
      next_forward = compose_maps(forward, generator_map(g, arity));
      next_backward = compose_maps(generator_map(invert_generator(g), arity), backward);
      accepted = max_image_degree(next_forward) <= degree_bound &&
                 max_image_degree(next_backward) <= degree_bound;
    }
    if (!accepted) {
      g = sampler.permutation();
      next_forward = compose_maps(forward, generator_map(g, arity));
      next_backward = compose_maps(generator_map(invert_generator(g), arity), backward);
    }
    forward = std::move(next_forward);
    backward = std::move(next_backward);
    w.push_back(std::move(g));
  }
  return w;
}

}  // namespace tamekit
