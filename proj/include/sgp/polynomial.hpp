#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgp/checked.hpp"

namespace sgp {

using Monomial = std::vector<Int>;

/// Sparse multivariate polynomial with exact (overflow-checked) integer
/// coefficients. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static SparsePolynomial monomial(Monomial exponents, Int coefficient = 1);
  static SparsePolynomial variable(std::size_t num_vars, std::size_t index, Int power = 1);
  static SparsePolynomial constant(std::size_t num_vars, Int value);
  /// x^plus - x^minus
  static SparsePolynomial binomial(const Monomial& plus, const Monomial& minus);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Monomial, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Int coefficient(const Monomial& m) const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial operator-() const;

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(Int k, const SparsePolynomial& p);

  bool operator==(const SparsePolynomial& other) const = default;

 private:
  void add_term(const Monomial& m, Int c);
  void require_same_vars(const SparsePolynomial& other) const;

  std::size_t num_vars_;
  std::map<Monomial, Int> terms_;
};

std::string to_string(const SparsePolynomial& p);

/// One summand multiplier * factor of an ideal-membership identity.
using PolynomialTerm = std::pair<SparsePolynomial, SparsePolynomial>;

/// True iff target + sum(multiplier * factor) is the zero polynomial.
/// Throws InvalidInput when the variable counts disagree.
bool poly_identity_zero(std::span<const PolynomialTerm> terms, const SparsePolynomial& target);

}  // namespace sgp
