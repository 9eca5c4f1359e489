#include "tamekit/stab.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <variant>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

void require_square(const PolyMap& f, std::size_t n, const char* who) {
  if (f.source_arity() != n || f.target_arity() != n) {
    throw ArityError(std::string(who) + ": expected a map of arity " + std::to_string(n));
  }
}

// Slots 0..n-1 for the x block, n..2n-1 for the y block.
std::vector<std::size_t> block_slots(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), offset);
  return s;
}

}  // namespace

TameWord stabilization_word(const PolyMap& phi, const PolyMap& phi_inv) {
  const std::size_t n = phi.source_arity();
  require_square(phi, n, "stabilization_word");
  require_square(phi_inv, n, "stabilization_word");
  const std::size_t n2 = 2 * n;
  const auto xs = block_slots(n, 0);
  const auto ys = block_slots(n, n);
  TameWord w(n2);
  for (std::size_t i = 0; i < n; ++i) w.push_back(Elementary{i, rename_extend(phi.image(i), n2, ys)});
  for (std::size_t i = 0; i < n; ++i) w.push_back(Elementary{n + i, -rename_extend(phi_inv.image(i), n2, xs)});
  std::vector<std::size_t> swap(n2);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = n + i;
    swap[n + i] = i;
  }
  w.push_back(Permutation{std::move(swap)});
  for (std::size_t i = 0; i < n; ++i) w.push_back(Elementary{n + i, rename_extend(phi.image(i), n2, xs)});
  return w;
}

PolyMap stabilization_closed_form(const PolyMap& phi, const PolyMap& phi_inv) {
  const std::size_t n = phi.source_arity();
  require_square(phi, n, "stabilization_closed_form");
  require_square(phi_inv, n, "stabilization_closed_form");
  const std::size_t n2 = 2 * n;
  const auto xs = block_slots(n, 0);
  const auto ys = block_slots(n, n);
  std::vector<Polynomial> images;
  images.reserve(n2);
  for (std::size_t i = 0; i < n; ++i) images.push_back(rename_extend(phi.image(i), n2, xs));
  for (std::size_t i = 0; i < n; ++i) images.push_back(-rename_extend(phi_inv.image(i), n2, ys));
  return PolyMap(n2, std::move(images));
}

StabilizationResult stabilize(const PolyMap& phi, const PolyMap& phi_inv) {
  if (!verify_inverse_pair(phi, phi_inv)) {
    throw std::invalid_argument("stabilize: the given maps are not mutually inverse automorphisms");
  }
  StabilizationResult r;
  r.word = stabilization_word(phi, phi_inv);
  r.closed_form = stabilization_closed_form(phi, phi_inv);
  r.generator_count = r.word.size();
  PolyMap composed = word_to_polymap(r.word);
  if (!(composed == r.closed_form)) {
    throw ClosedFormMismatch("stabilize: composed word differs from the closed form", r.word, std::move(composed),
                             r.closed_form);
  }
  return r;
}

StabilizationResult stabilize_tuple(std::span<const Polynomial> ps, std::span<const Polynomial> qs,
                                    const PolyMap& phi, const PolyMap& phi_inv) {
  if (ps.size() != qs.size()) throw std::invalid_argument("stabilize_tuple: tuples of different length");
  const std::size_t n = phi.source_arity();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].arity() != n || qs[i].arity() != n) throw ArityError("stabilize_tuple: polynomial arity mismatch");
    if (!(substitute(ps[i], phi) == qs[i])) {
      throw std::invalid_argument("stabilize_tuple: phi(p_" + std::to_string(i + 1) + ") differs from q_" +
                                  std::to_string(i + 1));
    }
  }
  StabilizationResult r = stabilize(phi, phi_inv);
  const auto xs = block_slots(n, 0);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Polynomial lifted = rename_extend(ps[i], 2 * n, xs);
    if (!(apply_word(r.word, lifted) == rename_extend(qs[i], 2 * n, xs))) {
      throw std::logic_error("stabilize_tuple: the word does not send p_" + std::to_string(i + 1) + " to q_" +
                             std::to_string(i + 1));
    }
  }
  return r;
}

PolyMap specialize(const PolyMap& phi, std::span<const std::size_t> dropped, std::span<const Polynomial> qs) {
  const std::size_t total = phi.target_arity();
  require_square(phi, total, "specialize");
  if (dropped.size() != qs.size()) throw std::invalid_argument("specialize: one polynomial per dropped variable");
  std::vector<bool> is_dropped(total, false);
  for (auto d : dropped) {
    if (d >= total || is_dropped[d]) throw ArityError("specialize: bad dropped variable index");
    is_dropped[d] = true;
  }
  const std::size_t n = total - dropped.size();
  std::vector<std::size_t> kept;
  std::vector<std::size_t> slot(total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    if (!is_dropped[i]) {
      slot[i] = kept.size();
      kept.push_back(i);
    }
  }
  std::vector<Polynomial> sub(total, Polynomial(n));
  for (auto i : kept) sub[i] = Polynomial::variable(n, slot[i]);
  for (std::size_t j = 0; j < dropped.size(); ++j) {
    const Polynomial& q = qs[j];
    if (q.arity() == n) {
      sub[dropped[j]] = q;
    } else if (q.arity() == total) {
      for (auto d : dropped) {
        if (q.involves(d)) throw std::invalid_argument("specialize: a substituted polynomial involves a dropped variable");
      }
      std::vector<Polynomial> restrict_images = sub;
      for (auto d : dropped) restrict_images[d] = Polynomial(n);
      sub[dropped[j]] = substitute(q, PolyMap(n, std::move(restrict_images)));
    } else {
      throw ArityError("specialize: substituted polynomial has the wrong arity");
    }
  }
  const PolyMap s(n, std::move(sub));
  std::vector<Polynomial> images;
  images.reserve(n);
  for (auto i : kept) images.push_back(substitute(phi.image(i), s));
  return PolyMap(n, std::move(images));
}

bool is_injective(const PolyMap& f) {
  const std::size_t n = f.source_arity();
  require_square(f, n, "is_injective");
  return polynomial_matrix_rank(jacobian(f)) == n;
}

namespace {

class SpecializationSearch {
 public:
  SpecializationSearch(std::size_t n, const SpecializationOptions& options) : n_(n), options_(options) {}

  PolyMap at(const PolyMap& m, const Polynomial& q) const {
    const std::size_t last = n_;
    return specialize(m, std::span<const std::size_t>(&last, 1), std::span<const Polynomial>(&q, 1));
  }

  bool works(const PolyMap& m, const Polynomial& q) const { return is_injective(at(m, q)); }

  // Drops the last variable of a polynomial known not to involve it.
  Polynomial restrict(const Polynomial& p) const {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n_; ++i) images.push_back(Polynomial::variable(n_, i));
    images.push_back(Polynomial(n_));
    return substitute(p, PolyMap(n_, std::move(images)));
  }

  // The addend with x_{n+1} replaced by q.
  Polynomial plug(const Polynomial& p, const Polynomial& q) const {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n_; ++i) images.push_back(Polynomial::variable(n_, i));
    images.push_back(q);
    return substitute(p, PolyMap(n_, std::move(images)));
  }

  // Generator acting on x_1..x_n only, as a map of K[x_1..x_n].
  std::optional<PolyMap> kept_part(const TameGen& g) const {
    const PolyMap m = generator_map(g, n_ + 1);
    if (!(m.image(n_) == Polynomial::variable(n_ + 1, n_))) return std::nullopt;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m.image(i).involves(n_)) return std::nullopt;
      images.push_back(restrict(m.image(i)));
    }
    return PolyMap(n_, std::move(images));
  }

  // q * h_j^m for m = 0, 1, ..., j in index order; `guard` filters before the
  // (more expensive) Jacobian check.
  template <class Guard>
  std::optional<Polynomial> scan(const PolyMap& prev, const PolyMap& next, const Polynomial& q, Guard guard) const {
    if (guard(q) && works(next, q)) return q;
    const PolyMap h = at(prev, q);
    for (unsigned m = 1; m <= options_.max_exponent; ++m) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Polynomial cand = q * h.image(j).pow(m);
        if (guard(cand) && works(next, cand)) return cand;
      }
    }
    return std::nullopt;
  }

  std::optional<Polynomial> fallback(const PolyMap& next) const {
    std::vector<Exponents> monos;
    for (unsigned d = 0; d <= options_.fallback_degree; ++d) {
      std::vector<Exponents> layer;
      Exponents e(n_);
      enumerate(layer, e, 0, d);
      std::sort(layer.begin(), layer.end(), [](const Exponents& a, const Exponents& b) {
        return grevlex_compare(a, b) < 0;
      });
      monos.insert(monos.end(), layer.begin(), layer.end());
    }
    std::size_t budget = options_.fallback_budget;
    auto attempt = [&](const Polynomial& cand) {
      if (budget == 0) throw BudgetExceeded("find_injective_specialization: fallback search budget exhausted");
      --budget;
      return works(next, cand);
    };
    for (const auto& e : monos) {
      Polynomial cand = Polynomial::monomial(e);
      if (attempt(cand)) return cand;
    }
    for (std::size_t a = 0; a < monos.size(); ++a) {
      for (std::size_t b = a + 1; b < monos.size(); ++b) {
        for (int sign : {1, -1}) {
          Polynomial cand = Polynomial::monomial(monos[a]) + Polynomial::monomial(monos[b], sign);
          if (attempt(cand)) return cand;
        }
      }
    }
    return std::nullopt;
  }

 private:
  void enumerate(std::vector<Exponents>& out, Exponents& e, std::size_t i, unsigned left) const {
    if (i + 1 == n_) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      enumerate(out, e, i + 1, left - k);
    }
    e[i] = 0;
  }

  std::size_t n_;
  SpecializationOptions options_;
};

}  // namespace

Polynomial find_injective_specialization(const TameWord& w, const SpecializationOptions& options) {
  if (w.arity() < 2) throw ArityError("find_injective_specialization: need at least two variables");
  const std::size_t n = w.arity() - 1;
  const SpecializationSearch search(n, options);
  const auto always = [](const Polynomial&) { return true; };

  PolyMap prefix = PolyMap::identity(n + 1);
  Polynomial q = Polynomial::variable(n, 0);
  for (const auto& g : w.gens()) {
    const PolyMap next = compose_maps(prefix, generator_map(g, n + 1));
    std::optional<Polynomial> chosen;

    if (const auto* e = std::get_if<Elementary>(&g); e && e->target == n) {
      // The last variable is shifted by f(x_1..x_n): q - f keeps the images.
      Polynomial cand = q - search.restrict(e->addend);
      if (search.works(next, cand)) chosen = std::move(cand);
    } else if (e) {
      // x_t -> x_t + f: the target must not cancel after plugging q in.
      Exponents lin(n);
      lin[e->target] = 1;
      const auto guard = [&](const Polynomial& cand) {
        return sgn(search.plug(e->addend, cand).coefficient(lin)) == 0;
      };
      chosen = search.scan(prefix, next, q, guard);
    } else if (const auto* s = std::get_if<Scale>(&g); s && s->target == n) {
      Polynomial cand = q * Rational(1 / s->factor);
      if (search.works(next, cand)) chosen = std::move(cand);
    } else if (auto kept = search.kept_part(g)) {
      Polynomial cand = substitute(q, *kept);
      if (search.works(next, cand)) chosen = std::move(cand);
    }

    if (!chosen) chosen = search.scan(prefix, next, q, always);
    if (!chosen) chosen = search.fallback(next);
    if (!chosen) throw BudgetExceeded("find_injective_specialization: no candidate within the search bounds");
    q = std::move(*chosen);
    prefix = next;
  }
  if (!search.works(prefix, q)) throw std::logic_error("find_injective_specialization: final check failed");
  return q;
}

}  // namespace tamekit
