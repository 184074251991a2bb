#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sgp/factorization.hpp"

namespace sgp {

struct GenerationResult {
  bool generates = false;
  /// first element whose fiber is not connected by the relation moves
  std::optional<Int> failing_element;
};

/// Decides whether the congruence generated by `relations` contains every
/// pair of factorizations of every element up to `bound`. A relation (u, v)
/// moves x to x - u + v whenever u <= x, and back; the relations generate the
/// fiber of s iff those moves connect it. Throws InvalidRelationError for a
/// relation that is not in the kernel congruence.
GenerationResult relations_generate_up_to(const Semigroup& s,
                                          std::span<const BinomialRelation> relations, Int bound,
                                          EnumerationBudget budget = {});

struct MinimalityResult {
  bool minimal = false;
  /// index into the relation list of the first relation that can be dropped
  std::optional<std::size_t> redundant_index;
};

/// True iff dropping any single relation breaks generation up to `bound`.
/// Relations are tried in list order. Throws InvalidInput when the full list
/// does not generate up to `bound`.
MinimalityResult relations_minimal(const Semigroup& s, std::span<const BinomialRelation> relations,
                                   Int bound, EnumerationBudget budget = {});

}  // namespace sgp
