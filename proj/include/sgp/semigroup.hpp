#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgp/checked.hpp"

namespace sgp {

/// Least element of the semigroup in every residue class modulo `modulus`.
/// entries[r] is that element for residue r; entries[0] is always 0.
struct AperyTable {
  Int modulus = 0;
  std::vector<Int> entries;

  Int max() const;
  /// The entries as a sorted list.
  std::vector<Int> elements() const;
};

/// A numerical semigroup given by its minimal system of generators.
///
/// Construction rejects lists that are not coprime (NotNumerical), contain
/// duplicates or non-positive values, or are not minimal (InvalidInput). Use
/// Semigroup::generated_by to reduce an arbitrary generating list first.
///
/// Values are immutable; the Apery table with respect to the multiplicity is
/// computed once and shared by membership, Frobenius and genus queries.
class Semigroup {
 public:
  explicit Semigroup(std::vector<Int> generators);

  /// The semigroup generated by `candidates`, after minimal_generators().
  static Semigroup generated_by(std::span<const Int> candidates);

  const std::vector<Int>& generators() const noexcept { return generators_; }
  Int multiplicity() const noexcept { return generators_.front(); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Int max_generator() const noexcept { return generators_.back(); }

  const AperyTable& multiplicity_apery() const noexcept { return apery_; }

  bool operator==(const Semigroup& other) const { return generators_ == other.generators_; }

 private:
  struct Trusted {};
  Semigroup(std::vector<Int> generators, Trusted);

  std::vector<Int> generators_;
  AperyTable apery_;
};

/// Apery table of the monoid generated by `generators` with respect to
/// `modulus`, which must itself be one of the generators. Residues that are
/// unreachable hold -1. Generators are folded in one at a time; each one
/// relaxes every cycle of the residue graph r -> r + g (mod modulus) in a
/// single round-robin pass starting from the cycle minimum.
std::vector<Int> round_robin_apery(std::span<const Int> generators, Int modulus);

/// Unique minimal generating system of the semigroup generated by
/// `candidates`. Throws InvalidInput on an empty list or non-positive values
/// and NotNumerical when the gcd is not 1.
std::vector<Int> minimal_generators(std::span<const Int> candidates);

/// Membership; throws InvalidInput for negative x.
bool contains(const Semigroup& s, Int x);

/// Apery table with respect to a nonzero element a of the semigroup.
/// Throws InvalidInput for a <= 0 and NotMember when a is not in s.
AperyTable apery(const Semigroup& s, Int a);

/// Largest integer outside the semigroup; -1 when the semigroup is N.
Int frobenius(const Semigroup& s);

/// Number of gaps. Computed from the Apery table and cross-checked against a
/// direct gap count.
Int genus(const Semigroup& s);

/// Sorted list of positive integers outside the semigroup.
std::vector<Int> gaps(const Semigroup& s);

/// F odd and genus == (F + 1) / 2. The defining condition (x a gap implies
/// F - x in s) is checked as well. N itself is reported as not symmetric.
bool is_symmetric(const Semigroup& s);

struct SemigroupProfile {
  Int frobenius = -1;
  Int genus = 0;
  bool symmetric = false;
};

SemigroupProfile profile(const Semigroup& s);

}  // namespace sgp
