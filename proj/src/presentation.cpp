#include "sgp/presentation.hpp"

#include <map>
#include <vector>

#include "sgp/union_find.hpp"

namespace sgp {
namespace {

Factorization apply_move(const Factorization& x, const Factorization& from, const Factorization& to) {
  Factorization y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y.exponents[i] += to[i] - from[i];
  return y;
}

bool fiber_connected(std::span<const Factorization> fiber,
                     std::span<const BinomialRelation> relations) {
  std::map<Factorization, std::size_t> index;
  for (std::size_t k = 0; k < fiber.size(); ++k) index.emplace(fiber[k], k);
  UnionFind uf(fiber.size());
  for (std::size_t k = 0; k < fiber.size() && uf.set_count() > 1; ++k) {
    for (const auto& r : relations) {
      if (r.lhs().divides(fiber[k])) uf.unite(k, index.at(apply_move(fiber[k], r.lhs(), r.rhs())));
      if (r.rhs().divides(fiber[k])) uf.unite(k, index.at(apply_move(fiber[k], r.rhs(), r.lhs())));
    }
  }
  return uf.set_count() == 1;
}

GenerationResult generate_checked(const Semigroup& s, std::span<const BinomialRelation> relations,
                                  Int bound, EnumerationBudget budget) {
  for (Int element = 1; element <= bound; ++element) {
    if (!contains(s, element)) continue;
    const auto fiber = factorizations(s, element, budget);
    if (fiber.size() < 2) continue;
    if (!fiber_connected(fiber, relations)) return {false, element};
  }
  return {true, std::nullopt};
}

}  // namespace

GenerationResult relations_generate_up_to(const Semigroup& s,
                                          std::span<const BinomialRelation> relations, Int bound,
                                          EnumerationBudget budget) {
  for (const auto& r : relations) check_relation(s, r);
  return generate_checked(s, relations, bound, budget);
}

MinimalityResult relations_minimal(const Semigroup& s, std::span<const BinomialRelation> relations,
                                   Int bound, EnumerationBudget budget) {
  for (const auto& r : relations) check_relation(s, r);
  if (!generate_checked(s, relations, bound, budget).generates) {
    raise(ErrorKind::InvalidInput, "relations do not generate up to " + std::to_string(bound));
  }
  std::vector<BinomialRelation> rest;
  for (std::size_t skip = 0; skip < relations.size(); ++skip) {
    rest.clear();
    for (std::size_t k = 0; k < relations.size(); ++k) {
      if (k != skip) rest.push_back(relations[k]);
    }
    if (generate_checked(s, rest, bound, budget).generates) return {false, skip};
  }
  return {true, std::nullopt};
}

}  // namespace sgp
