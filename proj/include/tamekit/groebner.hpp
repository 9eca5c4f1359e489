#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tamekit/monomial_order.hpp"
#include "tamekit/polynomial.hpp"

namespace tamekit {

struct GroebnerOptions {
  /// Maximum number of S-polynomial reductions before BudgetExceeded.
  std::size_t step_budget = 100000;
};

/// Term list sorted in descending order under some MonomialOrder. Internal
/// working form of the Groebner engine; exposed for the cofactor tests.
using OrderedTerms = std::vector<Term>;

/// Reduced Groebner basis of an ideal.
///
/// Every basis element is monic, no leading monomial divides a monomial of
/// another element, and the list is sorted by ascending leading monomial.
/// The basis of a fixed ideal under a fixed order is unique, so two bases
/// compare equal iff the ideals are equal.
class GroebnerBasis {
 public:
  std::size_t arity() const noexcept { return arity_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// Number of S-polynomial reductions spent building the basis.
  std::size_t steps() const noexcept { return steps_; }
  /// True when the ideal is the whole ring.
  bool is_unit() const;

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Remainder plus one cofactor per basis element with
  /// p = remainder + sum(cofactor_i * basis_i).
  struct Division {
    Polynomial remainder;
    std::vector<Polynomial> cofactors;
  };
  Division divide(const Polynomial& p) const;

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const MonomialOrder&,
                                  const GroebnerOptions&);

  std::size_t arity_ = 0;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Polynomial> basis_;
  std::vector<OrderedTerms> ordered_;
  std::vector<Polynomial> generators_;
  std::size_t steps_ = 0;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria. Throws std::invalid_argument on an empty or
/// all-zero generator list, ArityError on mixed arities and BudgetExceeded
/// when the step budget runs out.
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// p in <gens>? Uses a grevlex basis. An empty or all-zero generator list is
/// the zero ideal.
bool ideal_member(const Polynomial& p, std::span<const Polynomial> gens,
                  const GroebnerOptions& options = {});

/// <gens1> == <gens2>? Compares reduced grevlex bases.
bool ideal_equal(std::span<const Polynomial> gens1, std::span<const Polynomial> gens2,
                 const GroebnerOptions& options = {});

/// Ideal given by a possibly empty generator list; the zero ideal when empty.
/// Thin convenience used wherever presentations may have no relations.
class Ideal {
 public:
  Ideal(std::size_t arity, std::span<const Polynomial> gens,
        const MonomialOrder& order = MonomialOrder::grevlex(),
        const GroebnerOptions& options = {});

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return !gb_.has_value(); }
  const GroebnerBasis* basis() const { return gb_ ? &*gb_ : nullptr; }

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  bool equivalent(const Polynomial& a, const Polynomial& b) const { return contains(a - b); }

 private:
  std::size_t arity_;
  std::optional<GroebnerBasis> gb_;
};

}  // namespace tamekit
