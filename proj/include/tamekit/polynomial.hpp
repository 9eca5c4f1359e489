#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace tamekit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial. Its length is the arity of the ring the
/// monomial lives in.
class Exponents {
 public:
  using value_type = std::uint32_t;
  using storage_type = boost::container::small_vector<value_type, 10>;

  Exponents() = default;
  explicit Exponents(std::size_t arity) : e_(arity, 0) {}
  Exponents(std::initializer_list<value_type> init) : e_(init) {}
  explicit Exponents(std::span<const value_type> values) : e_(values.begin(), values.end()) {}

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  /// Sum of all entries.
  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept;

  /// True iff this monomial divides `other` (entrywise <=).
  bool divides(const Exponents& other) const;

  friend Exponents operator+(const Exponents& a, const Exponents& b);
  /// Entrywise difference; requires b.divides(a).
  friend Exponents operator-(const Exponents& a, const Exponents& b);
  friend Exponents lcm(const Exponents& a, const Exponents& b);
  friend bool coprime(const Exponents& a, const Exponents& b);

  friend bool operator==(const Exponents& a, const Exponents& b) { return a.e_ == b.e_; }

 private:
  storage_type e_;
};

/// Graded reverse lexicographic comparison: returns >0 when a > b, 0 when
/// equal, <0 when a < b. This is the canonical term order of Polynomial.
int grevlex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exponents;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponents == b.exponents && a.coeff == b.coeff;
  }
};

/// Total degree; std::nullopt is the minimal marker used for the zero
/// polynomial (std::optional orders nullopt below every value).
using Degree = std::optional<long>;

/// Sparse multivariate polynomial over the rationals in a ring of fixed arity.
///
/// Terms are kept sorted by descending grevlex order, with no zero
/// coefficients and no repeated exponent vectors. Values are immutable in
/// practice: every operation returns a new polynomial.
class Polynomial {
 public:
  /// The zero polynomial of the given arity.
  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational& c);
  /// The variable x_index (0-based).
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial monomial(const Exponents& e, const Rational& c = 1);
  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Leading term under grevlex. Requires a nonzero polynomial.
  const Term& leading_term() const;
  Rational coefficient(const Exponents& e) const;
  /// The constant term (0 when absent).
  Rational constant_term() const;

  Degree total_degree() const;
  /// Highest power of x_var occurring in the support (0 for the zero polynomial).
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;
  /// The same polynomial scaled so that its coefficients are coprime integers
  /// with a positive leading coefficient.
  Polynomial primitive() const;
  /// Scaled to leading coefficient 1. Requires a nonzero polynomial.
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Sorts terms into descending grevlex order, merges equal exponents and drops
/// zero coefficients.
void canonicalize(std::vector<Term>& terms);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Returns h with p = d * h when d divides p exactly, otherwise nullopt.
/// Throws std::domain_error when d is zero.
std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& d);

Degree total_degree(const Polynomial& p);

/// Formal partial derivatives, one per variable.
std::vector<Polynomial> gradient(const Polynomial& p);

/// Re-indexes p into a ring of `target_arity` variables; variable i of p
/// becomes variable slots[i]. Slots are 0-based and must be injective.
Polynomial rename_extend(const Polynomial& p, std::size_t target_arity,
                         std::span<const std::size_t> slots);

}  // namespace tamekit
