#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgp/factorization.hpp"
#include "sgp/monomial_ideal.hpp"
#include "sgp/polynomial.hpp"
#include "sgp/presentation.hpp"
#include "sgp/semigroup.hpp"

namespace sgp::families {

// Parameter records. validate() throws InvalidInput on violated constraints.

/// m_i = n^2 + (e-2)n + q + i for i <= e-3, then two generators
/// n^2 + (e-1)n + q + (e-3) and n^2 + (e-1)n + q + (e-2).
struct UnboundedParams {
  Int n = 5;
  Int e = 4;
  Int q = 0;
  void validate() const;
};

/// m = e + 2q + 1 with {m, m+d} followed by (q+1)m + (q+i)d for 2 <= i <= e-1.
struct SymSParams {
  Int e = 4;
  Int q = 1;
  Int d = 1;
  Int m() const { return e + 2 * q + 1; }
  void validate() const;
};

/// m = e + 2q with {m, m+d} followed by q(m+1) + (q - (e-4)/2 + k)d + e/2 for
/// 0 <= k <= e-3. Requires e even, q even with q >= max(2, e-4), d odd.
struct SymTParams {
  Int e = 4;
  Int q = 2;
  Int d = 1;
  Int m() const { return e + 2 * q; }
  void validate() const;
};

/// q1 = q2 + 1, d1 = q2 - 1; generators q1 q2, q1 d1, q1 q2 + d1, q2 d1.
struct BresinskyParams {
  Int q2 = 4;
  void validate() const;
};

Semigroup unbounded_generators(const UnboundedParams& p);
Semigroup gamma_s_generators(const SymSParams& p);
Semigroup gamma_t_generators(const SymTParams& p);
Semigroup bresinsky_generators(const BresinskyParams& p);

/// The n + 2 binomials x0^i x1^(n+2-i) - x_{e-2}^i x_{e-1}^(n+1-i), 0 <= i <= n+1,
/// over the generators of the unbounded family with q = e - 4.
std::vector<BinomialRelation> h_relations(const UnboundedParams& p);

// Embedding dimension four, q = 0. The binomials are written with the
// orientation x^plus - x^minus used for the polynomial identities.
struct OrientedBinomial {
  std::string label;
  Monomial plus;
  Monomial minus;

  SparsePolynomial polynomial() const { return SparsePolynomial::binomial(plus, minus); }
  BinomialRelation relation() const;
};

/// f_mu = x2^(n+1-mu) x3^mu - x0^(n+1-mu) x1^(mu+1)
OrientedBinomial ed4_f(Int n, Int mu);
/// h_t = x1^(n+1-t) x3^t - x0^(n-t) x2^(t+1)
OrientedBinomial ed4_h(Int n, Int t);
/// g1 = x0^(n+1) - x3^n
OrientedBinomial ed4_g1(Int n);
/// g2 = x1 x2 - x0 x3
OrientedBinomial ed4_g2();

/// f_mu for 0 <= mu <= n+1 (or 1 <= mu <= n-1 when reduced), then h_t for
/// 0 <= t <= n, then g1 and g2. Every member is checked to be a relation of
/// the unbounded family at (n, 4, 0).
std::vector<BinomialRelation> ed4_generating_set(Int n, bool reduced);

/// target + sum(multiplier * factor) == 0 expresses target as a combination.
struct ReductionIdentity {
  std::string name;
  SparsePolynomial target;
  std::vector<PolynomialTerm> terms;
};

/// f_{n+1} = -(x3 g1 + x0^n g2 + x1 h0), f_n = -(x2 g1 + x0 h0),
/// f_0 = -(x1 g1 + h_n), each as target + terms.
std::vector<ReductionIdentity> reduction_identities(Int n);
bool verify_reduction_identities(Int n);

/// Colength of (J + <x0>) where J is the unreduced generating set, compared
/// against n^2 + 2n (the multiplicity).
std::optional<Int> eto_colength(Int n);
std::optional<Int> eto_colength(std::span<const BinomialRelation> relations);
bool eto_colength_check(Int n);

std::vector<Int> apery_closed_form_s(const SymSParams& p);
std::vector<Int> apery_closed_form_t(const SymTParams& p);
Int frobenius_closed_form(const SymSParams& p);
Int frobenius_closed_form(const SymTParams& p);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
  std::string detail;   // measured value, informational
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string name, bool pass, std::string witness = {}, std::string detail = {});
};

VerificationReport verify_symmetric_family(const SymSParams& p, EnumerationBudget budget = {});
VerificationReport verify_symmetric_family(const SymTParams& p, EnumerationBudget budget = {});

/// Minimality, h-relation balance when q = e - 4, presentation size 2(n+1)
/// when (e, q) = (4, 0), and the conjectured lower bound n + 2 otherwise.
/// With `ideal` (requires e = 4, q = 0) also certifies the binomial sets.
VerificationReport verify_unbounded_family(const UnboundedParams& p, bool ideal,
                                           EnumerationBudget budget = {});

/// Generation and minimality of the reduced set, non-minimality of the
/// unreduced one, colength and reduction identities, at (n, 4, 0).
VerificationReport verify_ed4_ideal(Int n, EnumerationBudget budget = {});

VerificationReport verify_bresinsky_family(const BresinskyParams& p, EnumerationBudget budget = {});

}  // namespace sgp::families
