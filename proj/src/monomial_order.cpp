#include "tamekit/monomial_order.hpp"

#include <stdexcept>
#include <utility>

namespace tamekit {

namespace {

// grevlex restricted to entries [begin, end).
int grevlex_range(const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::weighted(std::vector<std::uint32_t> weights) {
  for (auto w : weights) {
    if (w == 0) throw std::invalid_argument("weighted order: weights must be positive");
  }
  MonomialOrder o(Kind::weighted);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t block) {
  MonomialOrder o(Kind::elimination);
  o.block_ = block;
  return o;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_compare(a, b);
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case Kind::weighted: {
      if (weights_.size() != a.size()) throw std::invalid_argument("weighted order: weight vector length mismatch");
      std::uint64_t wa = 0;
      std::uint64_t wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += std::uint64_t{weights_[i]} * a[i];
        wb += std::uint64_t{weights_[i]} * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      return grevlex_compare(a, b);
    }
    case Kind::elimination: {
      const std::size_t k = std::min(block_, a.size());
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

}  // namespace tamekit
