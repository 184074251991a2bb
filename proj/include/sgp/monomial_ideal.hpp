#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgp/factorization.hpp"
#include "sgp/polynomial.hpp"

namespace sgp {

/// Monomial ideal kept in interreduced form: sorted, no generator divides
/// another.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  bool contains(const Monomial& m) const;
  /// least e with x_var^e in the ideal
  std::optional<Int> pure_power(std::size_t var) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> generators_;
};

/// Number of standard monomials (dimension of the quotient as a vector
/// space), or nullopt when it is infinite because some variable has no pure
/// power in the ideal. Standard monomials all lie in the box of pure-power
/// exponents; boxes above `max_box` cells raise BudgetExceeded.
std::optional<Int> monomial_colength(const MonomialIdeal& ideal, Int max_box = 100'000'000);

/// Ideal generated by the binomials x^lhs - x^rhs together with x_var, where
/// x_var is known to be monomial. Setting x_var = 0 kills every monomial that
/// contains it. A binomial with both monomials surviving is absorbed when both
/// already lie in the ideal of the surviving monomials (the binomial is then
/// redundant); otherwise NotMonomialAfterSpecialization is raised.
MonomialIdeal specialize_binomials_at_zero(std::span<const BinomialRelation> binomials,
                                           std::size_t var, std::size_t num_vars);

}  // namespace sgp
