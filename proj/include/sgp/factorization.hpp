#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgp/semigroup.hpp"

namespace sgp {

/// Exponent vector over the generators of an ambient semigroup.
struct Factorization {
  std::vector<Int> exponents;

  std::size_t size() const noexcept { return exponents.size(); }
  Int operator[](std::size_t i) const { return exponents[i]; }
  bool is_zero() const;
  /// componentwise <=
  bool divides(const Factorization& other) const;
  bool shares_support(const Factorization& other) const;

  auto operator<=>(const Factorization&) const = default;
};

std::string to_string(const Factorization& f);

/// Weighted sum of the exponents against the generators.
Int nu(const Semigroup& s, const Factorization& f);

/// An element of the kernel congruence: two distinct factorizations of the
/// same element. Stored with the lexicographically larger vector first; the
/// optional label (f_3, h_0, g_1, ...) does not take part in comparisons.
class BinomialRelation {
 public:
  BinomialRelation(Factorization a, Factorization b, std::string label = {});

  const Factorization& lhs() const noexcept { return lhs_; }
  const Factorization& rhs() const noexcept { return rhs_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t num_vars() const noexcept { return lhs_.size(); }

  bool operator==(const BinomialRelation& o) const { return lhs_ == o.lhs_ && rhs_ == o.rhs_; }
  auto operator<=>(const BinomialRelation& o) const {
    if (auto c = lhs_ <=> o.lhs_; c != 0) return c;
    return rhs_ <=> o.rhs_;
  }

 private:
  Factorization lhs_;
  Factorization rhs_;
  std::string label_;
};

std::string to_string(const BinomialRelation& r);

/// Raised when a relation is not in the kernel congruence of a semigroup.
class InvalidRelationError : public Error {
 public:
  InvalidRelationError(const BinomialRelation& relation, const std::string& what)
      : Error(ErrorKind::InvalidRelation, "InvalidRelation: " + what), relation_(relation) {}

  const BinomialRelation& relation() const noexcept { return relation_; }

 private:
  BinomialRelation relation_;
};

/// Throws InvalidRelationError unless both sides have the right length and
/// the same nu value.
void check_relation(const Semigroup& s, const BinomialRelation& r);

/// Upper limit on the size of a single enumerated fiber.
struct EnumerationBudget {
  static constexpr std::size_t kDefaultMaxFiber = 1'000'000;
  std::size_t max_fiber = kDefaultMaxFiber;

  /// Default budget, overridden by the SGP_BUDGET environment variable.
  static EnumerationBudget from_environment();
};

/// All factorizations of s, in lexicographic descent order starting from the
/// highest-index generator. Empty iff s is not in the semigroup. Throws
/// InvalidInput for s < 0 and BudgetExceeded when the fiber outgrows the budget.
std::vector<Factorization> factorizations(const Semigroup& s, Int element,
                                          EnumerationBudget budget = {});

/// Connected components of the factorization graph of one fiber, where two
/// factorizations are adjacent when their supports intersect. Components are
/// ordered by their first member in `fiber`. Throws InvalidInput when the
/// fiber is empty or mixes nu values.
std::vector<std::vector<Factorization>> factorization_graph_components(
    const Semigroup& s, std::span<const Factorization> fiber);

struct BettiData {
  Int element = 0;
  std::size_t component_count = 0;
  std::vector<Factorization> witnesses;  // one per component
};

/// Every element whose factorization graph is disconnected.
///
/// The scan stops at F + 2 * max generator. Past that bound a fiber is always
/// connected: if x uses n_i and y uses n_j, then s - n_i - n_j > F lies in the
/// semigroup, and any factorization z of it gives z + e_i + e_j adjacent to both.
std::vector<BettiData> betti_elements(const Semigroup& s, EnumerationBudget budget = {});

/// Sum over Betti elements of (components - 1).
std::size_t minimal_presentation_cardinality(const Semigroup& s, EnumerationBudget budget = {});

/// F + 2 * max generator; see betti_elements.
Int betti_search_bound(const Semigroup& s);

}  // namespace sgp
