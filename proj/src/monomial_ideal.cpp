#include "sgp/monomial_ideal.hpp"

#include <algorithm>

namespace sgp {
namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Monomial> interreduce(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  if (num_vars == 0) raise(ErrorKind::InvalidInput, "monomial ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.size() != num_vars) raise(ErrorKind::InvalidInput, "monomial has the wrong number of variables");
    if (std::any_of(g.begin(), g.end(), [](Int e) { return e < 0; })) {
      raise(ErrorKind::InvalidInput, "negative exponent in monomial");
    }
  }
  generators_ = interreduce(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::optional<Int> MonomialIdeal::pure_power(std::size_t var) const {
  std::optional<Int> best;
  for (const auto& g : generators_) {
    bool pure = true;
    for (std::size_t i = 0; i < num_vars_ && pure; ++i) pure = i == var || g[i] == 0;
    if (pure && (!best || g[var] < *best)) best = g[var];
  }
  return best;
}

std::optional<Int> monomial_colength(const MonomialIdeal& ideal, Int max_box) {
  const std::size_t vars = ideal.num_vars();
  std::vector<Int> box(vars);
  Int cells = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    const auto p = ideal.pure_power(i);
    if (!p) return std::nullopt;
    box[i] = *p;
    cells = checked_mul(cells, *p);
    if (cells > max_box) raise(ErrorKind::BudgetExceeded, "colength box too large");
  }
  if (cells == 0) return 0;  // the unit ideal

  // odometer over the box
  Int count = 0;
  Monomial m(vars, 0);
  while (true) {
    if (!ideal.contains(m)) ++count;
    std::size_t i = 0;
    while (i < vars && ++m[i] == box[i]) m[i++] = 0;
    if (i == vars) break;
  }
  return count;
}

MonomialIdeal specialize_binomials_at_zero(std::span<const BinomialRelation> binomials,
                                           std::size_t var, std::size_t num_vars) {
  if (var >= num_vars) raise(ErrorKind::InvalidInput, "variable index out of range");
  Monomial x(num_vars, 0);
  x[var] = 1;
  std::vector<Monomial> monomials{x};
  std::vector<const BinomialRelation*> survivors;
  for (const auto& b : binomials) {
    if (b.num_vars() != num_vars) raise(ErrorKind::InvalidInput, "binomial has the wrong number of variables");
    const bool lhs_dies = b.lhs()[var] > 0;
    const bool rhs_dies = b.rhs()[var] > 0;
    if (lhs_dies && !rhs_dies) {
      monomials.push_back(b.rhs().exponents);
    } else if (rhs_dies && !lhs_dies) {
      monomials.push_back(b.lhs().exponents);
    } else if (!lhs_dies) {
      survivors.push_back(&b);
    }
    // both sides die: the binomial vanishes
  }
  MonomialIdeal ideal(num_vars, std::move(monomials));
  for (const auto* b : survivors) {
    if (!ideal.contains(b->lhs().exponents) || !ideal.contains(b->rhs().exponents)) {
      raise(ErrorKind::NotMonomialAfterSpecialization,
            "binomial " + to_string(*b) + " survives setting x" + std::to_string(var) + " = 0");
    }
  }
  return ideal;
}

}  // namespace sgp
