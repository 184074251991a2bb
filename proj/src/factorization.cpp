#include "sgp/factorization.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "sgp/union_find.hpp"

namespace sgp {

bool Factorization::is_zero() const {
  return std::all_of(exponents.begin(), exponents.end(), [](Int e) { return e == 0; });
}

bool Factorization::divides(const Factorization& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

bool Factorization::shares_support(const Factorization& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0 && other.exponents[i] > 0) return true;
  }
  return false;
}

std::string to_string(const Factorization& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ')';
  return os.str();
}

Int nu(const Semigroup& s, const Factorization& f) {
  const auto& gens = s.generators();
  if (f.size() != gens.size()) {
    raise(ErrorKind::InvalidInput, "factorization " + to_string(f) + " has length " +
                                       std::to_string(f.size()) + ", expected " +
                                       std::to_string(gens.size()));
  }
  Int total = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (f[i] < 0) raise(ErrorKind::InvalidInput, "negative exponent in " + to_string(f));
    total = checked_add(total, checked_mul(f[i], gens[i]));
  }
  return total;
}

BinomialRelation::BinomialRelation(Factorization a, Factorization b, std::string label)
    : label_(std::move(label)) {
  if (a.size() != b.size()) raise(ErrorKind::InvalidInput, "relation sides differ in length");
  if (a == b) raise(ErrorKind::InvalidInput, "relation sides are equal: " + to_string(a));
  for (Int e : a.exponents) {
    if (e < 0) raise(ErrorKind::InvalidInput, "negative exponent in " + to_string(a));
  }
  for (Int e : b.exponents) {
    if (e < 0) raise(ErrorKind::InvalidInput, "negative exponent in " + to_string(b));
  }
  if (a < b) std::swap(a, b);
  lhs_ = std::move(a);
  rhs_ = std::move(b);
}

std::string to_string(const BinomialRelation& r) {
  std::string out = r.label().empty() ? "" : r.label() + ": ";
  return out + to_string(r.lhs()) + " ~ " + to_string(r.rhs());
}

void check_relation(const Semigroup& s, const BinomialRelation& r) {
  if (r.num_vars() != s.embedding_dimension()) {
    throw InvalidRelationError(r, to_string(r) + " has the wrong number of variables");
  }
  const Int left = nu(s, r.lhs());
  const Int right = nu(s, r.rhs());
  if (left != right) {
    throw InvalidRelationError(r, to_string(r) + " is unbalanced: " + std::to_string(left) +
                                      " != " + std::to_string(right));
  }
}

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget budget;
  if (const char* env = std::getenv("SGP_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      raise(ErrorKind::InvalidInput, std::string("SGP_BUDGET is not a positive integer: ") + env);
    }
    budget.max_fiber = static_cast<std::size_t>(value);
  }
  return budget;
}

namespace {

class FiberEnumerator {
 public:
  FiberEnumerator(const Semigroup& s, EnumerationBudget budget, Int element)
      : s_(s), gens_(s.generators()), budget_(budget), element_(element), current_(gens_.size(), 0) {}

  std::vector<Factorization> run() {
    descend(gens_.size() - 1, element_);
    return std::move(out_);
  }

 private:
  void descend(std::size_t i, Int remainder) {
    if (i == 0) {
      if (remainder % gens_[0] != 0) return;
      current_[0] = remainder / gens_[0];
      if (out_.size() >= budget_.max_fiber) {
        raise(ErrorKind::BudgetExceeded, "fiber of " + std::to_string(element_) +
                                             " exceeds " + std::to_string(budget_.max_fiber) +
                                             " factorizations");
      }
      out_.push_back(Factorization{current_});
      current_[0] = 0;
      return;
    }
    for (Int c = remainder / gens_[i]; c >= 0; --c) {
      const Int rest = remainder - c * gens_[i];
      // whatever the lower generators must cover has to lie in the semigroup
      if (!contains(s_, rest)) continue;
      current_[i] = c;
      descend(i - 1, rest);
    }
    current_[i] = 0;
  }

  const Semigroup& s_;
  const std::vector<Int>& gens_;
  EnumerationBudget budget_;
  Int element_;
  std::vector<Int> current_;
  std::vector<Factorization> out_;
};

}  // namespace

std::vector<Factorization> factorizations(const Semigroup& s, Int element, EnumerationBudget budget) {
  if (element < 0) raise(ErrorKind::InvalidInput, "cannot factor negative " + std::to_string(element));
  if (!contains(s, element)) return {};
  return FiberEnumerator(s, budget, element).run();
}

std::vector<std::vector<Factorization>> factorization_graph_components(
    const Semigroup& s, std::span<const Factorization> fiber) {
  if (fiber.empty()) raise(ErrorKind::InvalidInput, "empty fiber");
  const Int element = nu(s, fiber.front());
  for (const auto& f : fiber) {
    if (nu(s, f) != element) {
      raise(ErrorKind::InvalidInput, "fiber mixes nu values " + std::to_string(element) + " and " +
                                         std::to_string(nu(s, f)));
    }
  }

  // adjacency is shared support, so joining everything that uses generator i
  // to the first such factorization yields the same components
  const std::size_t vars = s.embedding_dimension();
  UnionFind uf(fiber.size());
  for (std::size_t i = 0; i < vars; ++i) {
    std::size_t anchor = fiber.size();
    for (std::size_t k = 0; k < fiber.size(); ++k) {
      if (fiber[k][i] == 0) continue;
      if (anchor == fiber.size()) {
        anchor = k;
      } else {
        uf.unite(anchor, k);
      }
    }
  }

  std::vector<std::vector<Factorization>> components;
  std::vector<std::size_t> slot(fiber.size(), fiber.size());
  for (std::size_t k = 0; k < fiber.size(); ++k) {
    const std::size_t root = uf.find(k);
    if (slot[root] == fiber.size()) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(fiber[k]);
  }
  return components;
}

Int betti_search_bound(const Semigroup& s) {
  return checked_add(frobenius(s), checked_mul(2, s.max_generator()));
}

std::vector<BettiData> betti_elements(const Semigroup& s, EnumerationBudget budget) {
  std::vector<BettiData> out;
  const auto& gens = s.generators();
  const Int bound = betti_search_bound(s);
  for (Int element = 1; element <= bound; ++element) {
    if (!contains(s, element)) continue;
    // a disconnected fiber needs two factorizations using different generators
    int usable = 0;
    for (Int g : gens) {
      if (element >= g && contains(s, element - g)) ++usable;
    }
    if (usable < 2) continue;
    const auto fiber = factorizations(s, element, budget);
    if (fiber.size() < 2) continue;
    auto components = factorization_graph_components(s, fiber);
    if (components.size() < 2) continue;
    BettiData data;
    data.element = element;
    data.component_count = components.size();
    for (const auto& c : components) data.witnesses.push_back(c.front());
    out.push_back(std::move(data));
  }
  return out;
}

std::size_t minimal_presentation_cardinality(const Semigroup& s, EnumerationBudget budget) {
  std::size_t total = 0;
  for (const auto& b : betti_elements(s, budget)) total += b.component_count - 1;
  return total;
}

}  // namespace sgp
