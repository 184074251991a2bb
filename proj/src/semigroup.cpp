#include "sgp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgp {
namespace {

constexpr Int kUnreached = -1;

std::string join(std::span<const Int> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

}  // namespace

Int AperyTable::max() const { return *std::max_element(entries.begin(), entries.end()); }

std::vector<Int> AperyTable::elements() const {
  std::vector<Int> out = entries;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> round_robin_apery(std::span<const Int> generators, Int modulus) {
  if (modulus <= 0) raise(ErrorKind::InvalidInput, "Apery modulus must be positive");
  const auto a = static_cast<std::size_t>(modulus);
  std::vector<Int> w(a, kUnreached);
  w[0] = 0;
  for (Int g : generators) {
    const auto step = static_cast<std::size_t>(g % modulus);
    if (step == 0) continue;
    const auto cycles = static_cast<std::size_t>(std::gcd(modulus, g));
    const std::size_t cycle_length = a / cycles;
    for (std::size_t start = 0; start < cycles; ++start) {
      // locate the cycle minimum; nothing to relax if the whole cycle is unreached
      std::size_t best = a;
      for (std::size_t r = start, k = 0; k < cycle_length; ++k, r = (r + step) % a) {
        if (w[r] != kUnreached && (best == a || w[r] < w[best])) best = r;
      }
      if (best == a) continue;
      std::size_t r = best;
      for (std::size_t k = 1; k < cycle_length; ++k) {
        const std::size_t next = (r + step) % a;
        const Int candidate = checked_add(w[r], g);
        if (w[next] == kUnreached || candidate < w[next]) w[next] = candidate;
        r = next;
      }
    }
  }
  return w;
}

std::vector<Int> minimal_generators(std::span<const Int> candidates) {
  if (candidates.empty()) raise(ErrorKind::InvalidInput, "generator list is empty");
  for (Int c : candidates) {
    if (c <= 0) raise(ErrorKind::InvalidInput, "generators must be positive, got " + std::to_string(c));
  }
  if (gcd_of(candidates) != 1) {
    raise(ErrorKind::NotNumerical, "gcd of {" + join(candidates) + "} is not 1");
  }
  std::vector<Int> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // g is redundant iff it is reached by the smaller kept generators, i.e.
  // g >= Apery entry of its residue modulo the smallest generator.
  std::vector<Int> kept{sorted.front()};
  const Int m = sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Int g = sorted[i];
    const auto w = round_robin_apery(kept, m);
    const Int entry = w[static_cast<std::size_t>(g % m)];
    if (entry == kUnreached || g < entry) kept.push_back(g);
  }
  return kept;
}

Semigroup::Semigroup(std::vector<Int> generators) {
  if (generators.empty()) raise(ErrorKind::InvalidInput, "generator list is empty");
  std::sort(generators.begin(), generators.end());
  if (std::adjacent_find(generators.begin(), generators.end()) != generators.end()) {
    raise(ErrorKind::InvalidInput, "duplicate generators in {" + join(generators) + "}");
  }
  auto minimal = minimal_generators(generators);
  if (minimal != generators) {
    raise(ErrorKind::InvalidInput, "generators {" + join(generators) +
                                       "} are not minimal; minimal system is {" + join(minimal) + "}");
  }
  *this = Semigroup(std::move(minimal), Trusted{});
}

Semigroup::Semigroup(std::vector<Int> generators, Trusted) : generators_(std::move(generators)) {
  apery_.modulus = generators_.front();
  apery_.entries = round_robin_apery(generators_, apery_.modulus);
}

Semigroup Semigroup::generated_by(std::span<const Int> candidates) {
  return Semigroup(minimal_generators(candidates), Trusted{});
}

bool contains(const Semigroup& s, Int x) {
  if (x < 0) raise(ErrorKind::InvalidInput, "membership query for negative " + std::to_string(x));
  const auto& table = s.multiplicity_apery();
  return x >= table.entries[static_cast<std::size_t>(x % table.modulus)];
}

AperyTable apery(const Semigroup& s, Int a) {
  if (a <= 0) raise(ErrorKind::InvalidInput, "Apery element must be positive");
  if (!contains(s, a)) raise(ErrorKind::NotMember, std::to_string(a) + " is not in the semigroup");
  if (a == s.multiplicity()) return s.multiplicity_apery();
  AperyTable table;
  table.modulus = a;
  table.entries = round_robin_apery(s.generators(), a);
  return table;
}

Int frobenius(const Semigroup& s) { return s.multiplicity_apery().max() - s.multiplicity(); }

std::vector<Int> gaps(const Semigroup& s) {
  std::vector<Int> out;
  const Int f = frobenius(s);
  for (Int x = 1; x <= f; ++x) {
    if (!contains(s, x)) out.push_back(x);
  }
  return out;
}

Int genus(const Semigroup& s) {
  // each residue class r holds (w_r - r) / m gaps
  const auto& table = s.multiplicity_apery();
  Int from_apery = 0;
  for (std::size_t r = 0; r < table.entries.size(); ++r) {
    from_apery = checked_add(from_apery, (table.entries[r] - static_cast<Int>(r)) / table.modulus);
  }
  const auto direct = static_cast<Int>(gaps(s).size());
  if (direct != from_apery) {
    throw std::logic_error("genus mismatch: Apery sum gives " + std::to_string(from_apery) +
                           ", gap count gives " + std::to_string(direct));
  }
  return from_apery;
}

bool is_symmetric(const Semigroup& s) {
  const Int f = frobenius(s);
  if (f < 0) return false;
  const bool by_genus = f % 2 == 1 && 2 * genus(s) == f + 1;
  bool by_definition = f % 2 == 1;
  for (Int x : gaps(s)) {
    if (!contains(s, f - x)) {
      by_definition = false;
      break;
    }
  }
  if (by_genus != by_definition) throw std::logic_error("symmetry criteria disagree");
  return by_genus;
}

SemigroupProfile profile(const Semigroup& s) { return {frobenius(s), genus(s), is_symmetric(s)}; }

}  // namespace sgp
