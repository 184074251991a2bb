#include "sgp/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sgp::families {
namespace {

[[noreturn]] void violation(const std::string& what) { raise(ErrorKind::FamilyContractViolation, what); }

void require(bool ok, const std::string& what) {
  if (!ok) raise(ErrorKind::InvalidInput, what);
}

std::string join(const std::vector<Int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

Int square(Int x) { return checked_mul(x, x); }

std::vector<Int> unbounded_list(const UnboundedParams& p) {
  const Int base = checked_add(square(p.n), p.q);
  std::vector<Int> out;
  for (Int i = 0; i <= p.e - 3; ++i) out.push_back(checked_add(base, checked_mul(p.e - 2, p.n)) + i);
  const Int top = checked_add(base, checked_mul(p.e - 1, p.n));
  out.push_back(top + (p.e - 3));
  out.push_back(top + (p.e - 2));
  return out;
}

Int s_block(const SymSParams& p, Int i) {
  return checked_add(checked_mul(p.q + 1, p.m()), checked_mul(p.q + i, p.d));
}

std::vector<Int> sym_s_list(const SymSParams& p) {
  std::vector<Int> out{p.m(), checked_add(p.m(), p.d)};
  for (Int i = 2; i <= p.e - 1; ++i) out.push_back(s_block(p, i));
  return out;
}

Int t_block(const SymTParams& p, Int k) {
  return checked_add(checked_add(checked_mul(p.q, p.m() + 1), checked_mul(p.q - (p.e - 4) / 2 + k, p.d)),
                     p.e / 2);
}

std::vector<Int> sym_t_list(const SymTParams& p) {
  std::vector<Int> out{p.m(), checked_add(p.m(), p.d)};
  for (Int k = 0; k <= p.e - 3; ++k) out.push_back(t_block(p, k));
  return out;
}

std::vector<Int> bresinsky_list(const BresinskyParams& p) {
  const Int q1 = p.q2 + 1;
  const Int d1 = p.q2 - 1;
  std::vector<Int> out{checked_mul(q1, p.q2), checked_mul(q1, d1), checked_mul(q1, p.q2) + d1,
                       checked_mul(p.q2, d1)};
  std::sort(out.begin(), out.end());
  return out;
}

// Family constructors promise a minimal list; anything else falsifies the
// construction, so it is a contract violation rather than bad input.
Semigroup minimal_semigroup(std::vector<Int> list, const std::string& family) {
  std::sort(list.begin(), list.end());
  const auto minimal = minimal_generators(list);
  if (minimal != list) {
    violation(family + " generators {" + join(list) + "} are not minimal; minimal system is {" +
              join(minimal) + "}");
  }
  return Semigroup(list);
}

Monomial mono(Int a0, Int a1, Int a2, Int a3) { return {a0, a1, a2, a3}; }

SparsePolynomial x(std::size_t i, Int power = 1) { return SparsePolynomial::variable(4, i, power); }

std::string residue_witness(const std::vector<Int>& expected, const std::vector<Int>& actual) {
  std::vector<Int> missing;
  std::vector<Int> extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  return "closed form only {" + join(missing) + "}, computed only {" + join(extra) + "}";
}

void check_complete_residues(const std::vector<Int>& elements, Int m, const std::string& family) {
  std::set<Int> residues;
  for (Int w : elements) residues.insert(w % m);
  if (elements.size() != static_cast<std::size_t>(m) || residues.size() != elements.size()) {
    violation(family + " closed-form Apery set {" + join(elements) +
              "} is not a complete residue system modulo " + std::to_string(m));
  }
}

// Checks shared by both symmetric families. `no_sum` returns a witness for a
// forbidden sum, or an empty string.
template <class NoSum>
VerificationReport verify_symmetric(const std::vector<Int>& raw, Int m, Int e,
                                    const std::vector<Int>& closed_apery, Int closed_frobenius,
                                    NoSum&& no_sum, EnumerationBudget budget) {
  VerificationReport report;
  std::vector<Int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  const auto minimal = minimal_generators(sorted);
  report.add("generators_minimal", minimal == sorted,
             minimal == sorted ? "" : "minimal system is {" + join(minimal) + "}", join(sorted));
  const Semigroup s = Semigroup::generated_by(sorted);

  const auto computed = apery(s, m).elements();
  report.add("apery_closed_form", computed == closed_apery,
             computed == closed_apery ? "" : residue_witness(closed_apery, computed), join(computed));

  const Int f = frobenius(s);
  report.add("frobenius_closed_form", f == closed_frobenius,
             f == closed_frobenius ? ""
                                   : "computed " + std::to_string(f) + ", closed form " +
                                         std::to_string(closed_frobenius),
             std::to_string(f));

  const bool symmetric = is_symmetric(s);
  report.add("symmetric", symmetric && f % 2 != 0,
             symmetric ? "" : "genus " + std::to_string(genus(s)) + " with F " + std::to_string(f),
             "genus " + std::to_string(genus(s)));

  std::string unique_witness;
  const Int top = computed.back();
  for (Int w : computed) {
    const std::size_t count = factorizations(s, w, budget).size();
    const bool ok = w == top ? count >= 1 : count == 1;
    if (!ok && unique_witness.empty()) {
      unique_witness = std::to_string(w) + " has " + std::to_string(count) + " factorizations";
    }
  }
  report.add("apery_unique_expression", unique_witness.empty(), unique_witness);

  const std::string sum_witness = no_sum(computed);
  report.add("apery_no_sum", sum_witness.empty(), sum_witness);

  const Int expected = e * (e - 1) / 2 - 1;
  try {
    const auto mu = static_cast<Int>(minimal_presentation_cardinality(s, budget));
    report.add("presentation_cardinality", mu == expected,
               mu == expected ? "" : "computed " + std::to_string(mu) + ", expected " + std::to_string(expected),
               std::to_string(mu));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
    report.add("presentation_cardinality", false, "budget_exceeded");
  }
  return report;
}

}  // namespace

void UnboundedParams::validate() const {
  require(n >= 5, "unbounded family needs n >= 5");
  require(e >= 4, "unbounded family needs e >= 4");
  require(q >= 0, "unbounded family needs q >= 0");
}

void SymSParams::validate() const {
  require(e >= 4, "family S needs e >= 4");
  require(q >= 1, "family S needs q >= 1");
  require(d >= 1, "family S needs d >= 1");
  require(std::gcd(m(), d) == 1, "family S needs gcd(m, d) = 1, m = " + std::to_string(m()));
}

void SymTParams::validate() const {
  require(e >= 4, "family T needs e >= 4");
  require(e % 2 == 0, "family T needs e even");
  require(q >= 2 && q % 2 == 0, "family T needs q positive and even");
  require(q >= e - 4, "family T needs q >= e - 4");
  require(d >= 1 && d % 2 == 1, "family T needs d odd and positive");
  require(std::gcd(m(), d) == 1, "family T needs gcd(m, d) = 1, m = " + std::to_string(m()));
}

void BresinskyParams::validate() const {
  require(q2 >= 4 && q2 % 2 == 0, "Bresinsky family needs q2 even and >= 4");
}

Semigroup unbounded_generators(const UnboundedParams& p) {
  p.validate();
  return minimal_semigroup(unbounded_list(p), "unbounded");
}

Semigroup gamma_s_generators(const SymSParams& p) {
  p.validate();
  return minimal_semigroup(sym_s_list(p), "family S");
}

Semigroup gamma_t_generators(const SymTParams& p) {
  p.validate();
  return minimal_semigroup(sym_t_list(p), "family T");
}

Semigroup bresinsky_generators(const BresinskyParams& p) {
  p.validate();
  const auto list = bresinsky_list(p);
  if (std::accumulate(list.begin(), list.end(), Int{0}, [](Int a, Int b) { return std::gcd(a, b); }) != 1) {
    violation("Bresinsky generators {" + join(list) + "} are not coprime");
  }
  return minimal_semigroup(list, "Bresinsky");
}

std::vector<BinomialRelation> h_relations(const UnboundedParams& p) {
  p.validate();
  require(p.q == p.e - 4, "h relations need q = e - 4");
  const Semigroup s = unbounded_generators(p);
  const auto vars = static_cast<std::size_t>(p.e);
  std::vector<BinomialRelation> out;
  for (Int i = 0; i <= p.n + 1; ++i) {
    Factorization left{std::vector<Int>(vars, 0)};
    Factorization right{std::vector<Int>(vars, 0)};
    left.exponents[0] = i;
    left.exponents[1] = p.n + 2 - i;
    right.exponents[vars - 2] = i;
    right.exponents[vars - 1] = p.n + 1 - i;
    if (nu(s, left) != nu(s, right)) {
      violation("H_" + std::to_string(i) + " is unbalanced: " + std::to_string(nu(s, left)) +
                " != " + std::to_string(nu(s, right)));
    }
    out.emplace_back(std::move(left), std::move(right), "H_" + std::to_string(i));
  }
  return out;
}

BinomialRelation OrientedBinomial::relation() const {
  return BinomialRelation(Factorization{plus}, Factorization{minus}, label);
}

OrientedBinomial ed4_f(Int n, Int mu) {
  return {"f_" + std::to_string(mu), mono(0, 0, n + 1 - mu, mu), mono(n + 1 - mu, mu + 1, 0, 0)};
}

OrientedBinomial ed4_h(Int n, Int t) {
  return {"h_" + std::to_string(t), mono(0, n + 1 - t, 0, t), mono(n - t, 0, t + 1, 0)};
}

OrientedBinomial ed4_g1(Int n) { return {"g_1", mono(n + 1, 0, 0, 0), mono(0, 0, 0, n)}; }

OrientedBinomial ed4_g2() { return {"g_2", mono(0, 1, 1, 0), mono(1, 0, 0, 1)}; }

std::vector<BinomialRelation> ed4_generating_set(Int n, bool reduced) {
  require(n >= 5, "embedding dimension four family needs n >= 5");
  const Semigroup s = unbounded_generators({n, 4, 0});
  std::vector<OrientedBinomial> binomials;
  for (Int mu = reduced ? 1 : 0; mu <= (reduced ? n - 1 : n + 1); ++mu) binomials.push_back(ed4_f(n, mu));
  for (Int t = 0; t <= n; ++t) binomials.push_back(ed4_h(n, t));
  binomials.push_back(ed4_g1(n));
  binomials.push_back(ed4_g2());

  std::vector<BinomialRelation> out;
  for (const auto& b : binomials) {
    auto r = b.relation();
    try {
      check_relation(s, r);
    } catch (const InvalidRelationError& err) {
      violation(err.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ReductionIdentity> reduction_identities(Int n) {
  require(n >= 5, "embedding dimension four family needs n >= 5");
  const auto g1 = ed4_g1(n).polynomial();
  const auto g2 = ed4_g2().polynomial();
  const auto h0 = ed4_h(n, 0).polynomial();
  const auto hn = ed4_h(n, n).polynomial();
  const auto one = SparsePolynomial::constant(4, 1);
  std::vector<ReductionIdentity> out;
  out.push_back({"f_{n+1} = -(x3 g1 + x0^n g2 + x1 h0)", ed4_f(n, n + 1).polynomial(),
                 {{x(3), g1}, {x(0, n), g2}, {x(1), h0}}});
  out.push_back({"f_n = -(x2 g1 + x0 h0)", ed4_f(n, n).polynomial(), {{x(2), g1}, {x(0), h0}}});
  out.push_back({"f_0 = -(x1 g1 + h_n)", ed4_f(n, 0).polynomial(), {{x(1), g1}, {one, hn}}});
  return out;
}

bool verify_reduction_identities(Int n) {
  const auto identities = reduction_identities(n);
  return std::all_of(identities.begin(), identities.end(),
                     [](const ReductionIdentity& id) { return poly_identity_zero(id.terms, id.target); });
}

std::optional<Int> eto_colength(std::span<const BinomialRelation> relations) {
  return monomial_colength(specialize_binomials_at_zero(relations, 0, 4));
}

std::optional<Int> eto_colength(Int n) { return eto_colength(ed4_generating_set(n, false)); }

bool eto_colength_check(Int n) {
  const auto colength = eto_colength(n);
  return colength && *colength == checked_add(square(n), 2 * n);
}

std::vector<Int> apery_closed_form_s(const SymSParams& p) {
  p.validate();
  const Int m = p.m();
  const Int step = m + p.d;
  const Int top_generator = s_block(p, p.e - 1);
  std::vector<Int> out;
  for (Int k = 0; k <= p.q + 1; ++k) out.push_back(checked_mul(k, step));
  for (Int k = 0; k <= p.q + 1; ++k) out.push_back(checked_add(checked_mul(k, step), top_generator));
  for (Int i = 2; i <= p.e - 2; ++i) out.push_back(s_block(p, i));
  std::sort(out.begin(), out.end());
  check_complete_residues(out, m, "family S");
  return out;
}

std::vector<Int> apery_closed_form_t(const SymTParams& p) {
  p.validate();
  const Int m = p.m();
  std::vector<Int> out;
  for (Int k = 0; k <= p.e - 3; ++k) out.push_back(t_block(p, k));
  for (Int k = 0; k <= 2 * p.q + 1; ++k) out.push_back(checked_mul(k, m + p.d));
  std::sort(out.begin(), out.end());
  check_complete_residues(out, m, "family T");
  return out;
}

Int frobenius_closed_form(const SymSParams& p) {
  p.validate();
  const Int e = p.e, q = p.q, d = p.d;
  return 4 * square(q) + checked_mul(2 * e + 2 * d + 4, q) + checked_mul(e, d + 1) + 1;
}

Int frobenius_closed_form(const SymTParams& p) {
  p.validate();
  return checked_mul(p.e + 2 * p.q + p.d, 2 * p.q) + p.d;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string witness, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(witness), std::move(detail)});
}

VerificationReport verify_symmetric_family(const SymSParams& p, EnumerationBudget budget) {
  p.validate();
  const Int m = p.m();
  const Int step = m + p.d;
  const Int top_generator = s_block(p, p.e - 1);
  auto no_sum = [&](const std::vector<Int>& ap) -> std::string {
    for (Int alpha : ap) {
      if (alpha == 0) continue;
      for (Int i = 2; i <= p.e - 2; ++i) {
        for (Int k = 1; k <= p.q; ++k) {
          if (alpha + s_block(p, i) == k * step + top_generator) {
            return std::to_string(alpha) + " + n_" + std::to_string(i) + " = " +
                   std::to_string(k) + "(m+d) + n_" + std::to_string(p.e - 1);
          }
        }
      }
    }
    return {};
  };
  return verify_symmetric(sym_s_list(p), m, p.e, apery_closed_form_s(p), frobenius_closed_form(p),
                          no_sum, budget);
}

VerificationReport verify_symmetric_family(const SymTParams& p, EnumerationBudget budget) {
  p.validate();
  const Int m = p.m();
  const Int step = m + p.d;
  auto no_sum = [&](const std::vector<Int>& ap) -> std::string {
    for (Int beta : ap) {
      if (beta == 0) continue;
      for (Int i = 0; i <= p.e - 3; ++i) {
        for (Int k = 2; k <= 2 * p.q; ++k) {
          if (beta + t_block(p, i) == k * step) {
            return std::to_string(beta) + " + n_" + std::to_string(i) + " = " + std::to_string(k) + "(m+d)";
          }
        }
      }
    }
    return {};
  };
  return verify_symmetric(sym_t_list(p), m, p.e, apery_closed_form_t(p), frobenius_closed_form(p),
                          no_sum, budget);
}

VerificationReport verify_ed4_ideal(Int n, EnumerationBudget budget) {
  VerificationReport report;
  const Semigroup s = unbounded_generators({n, 4, 0});
  const Int bound = betti_search_bound(s);
  const auto reduced = ed4_generating_set(n, true);
  const auto full = ed4_generating_set(n, false);
  const auto expected = static_cast<std::size_t>(2 * (n + 1));

  report.add("reduced_set_size", reduced.size() == expected, "", std::to_string(reduced.size()));

  const auto gen = relations_generate_up_to(s, reduced, bound, budget);
  report.add("reduced_generates", gen.generates,
             gen.failing_element ? "fiber of " + std::to_string(*gen.failing_element) + " disconnected" : "",
             "bound " + std::to_string(bound));
  if (gen.generates) {
    const auto min = relations_minimal(s, reduced, bound, budget);
    report.add("reduced_minimal", min.minimal,
               min.redundant_index ? reduced[*min.redundant_index].label() + " is redundant" : "");
  } else {
    report.add("reduced_minimal", false, "reduced set does not generate");
  }

  const std::size_t mu = minimal_presentation_cardinality(s, budget);
  report.add("reduced_size_matches_betti", reduced.size() == mu,
             reduced.size() == mu ? "" : "Betti count " + std::to_string(mu), std::to_string(mu));

  const auto full_gen = relations_generate_up_to(s, full, bound, budget);
  report.add("unreduced_generates", full_gen.generates,
             full_gen.failing_element
                 ? "fiber of " + std::to_string(*full_gen.failing_element) + " disconnected"
                 : "");
  if (full_gen.generates) {
    const auto min = relations_minimal(s, full, bound, budget);
    const std::set<std::string> allowed{"f_0", "f_" + std::to_string(n), "f_" + std::to_string(n + 1)};
    const std::string label = min.redundant_index ? full[*min.redundant_index].label() : "";
    const bool ok = !min.minimal && allowed.count(label) > 0;
    report.add("unreduced_redundant_f", ok, ok ? "" : (min.minimal ? "set is minimal" : label),
               label);
  } else {
    report.add("unreduced_redundant_f", false, "unreduced set does not generate");
  }

  const auto colength = eto_colength(n);
  const Int target = checked_add(square(n), 2 * n);
  report.add("colength_specialization", colength && *colength == target,
             colength && *colength == target ? ""
                                             : (colength ? std::to_string(*colength) : "infinite"),
             colength ? std::to_string(*colength) : "infinite");
  report.add("reduction_identities", verify_reduction_identities(n));
  return report;
}

VerificationReport verify_unbounded_family(const UnboundedParams& p, bool ideal, EnumerationBudget budget) {
  p.validate();
  if (ideal) require(p.e == 4 && p.q == 0, "the ideal certificate needs e = 4 and q = 0");
  VerificationReport report;
  const auto list = unbounded_list(p);
  const auto minimal = minimal_generators(list);
  report.add("generators_minimal", minimal == list,
             minimal == list ? "" : "minimal system is {" + join(minimal) + "}", join(list));
  const Semigroup s = Semigroup::generated_by(list);

  if (p.q == p.e - 4) {
    std::string witness;
    std::size_t count = 0;
    try {
      const auto hs = h_relations(p);
      count = hs.size();
      std::set<BinomialRelation> distinct(hs.begin(), hs.end());
      if (distinct.size() != hs.size()) witness = "duplicate relations";
      if (hs.size() != static_cast<std::size_t>(p.n + 2)) witness = "expected n + 2 relations";
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::FamilyContractViolation) throw;
      witness = err.what();
    }
    report.add("h_relations_balanced", witness.empty(), witness, std::to_string(count));
  }

  try {
    const auto mu = static_cast<Int>(minimal_presentation_cardinality(s, budget));
    if (p.e == 4 && p.q == 0) {
      const Int expected = 2 * (p.n + 1);
      report.add("presentation_cardinality", mu == expected,
                 mu == expected ? "" : "computed " + std::to_string(mu) + ", expected " + std::to_string(expected),
                 std::to_string(mu));
    } else if (p.q == p.e - 4) {
      report.add("presentation_at_least_n_plus_2", mu >= p.n + 2,
                 mu >= p.n + 2 ? "" : "computed " + std::to_string(mu), std::to_string(mu));
    } else {
      report.add("presentation_cardinality", true, "", std::to_string(mu));
    }
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
    report.add("presentation_cardinality", false, "budget_exceeded");
  }

  if (ideal) {
    for (auto& c : verify_ed4_ideal(p.n, budget).checks) report.checks.push_back(std::move(c));
  }
  return report;
}

VerificationReport verify_bresinsky_family(const BresinskyParams& p, EnumerationBudget budget) {
  p.validate();
  VerificationReport report;
  const auto list = bresinsky_list(p);
  const Int g = std::accumulate(list.begin(), list.end(), Int{0}, [](Int a, Int b) { return std::gcd(a, b); });
  report.add("gcd_one", g == 1, g == 1 ? "" : "gcd " + std::to_string(g), join(list));
  if (g != 1) return report;
  const auto minimal = minimal_generators(list);
  report.add("generators_minimal", minimal == list,
             minimal == list ? "" : "minimal system is {" + join(minimal) + "}");
  const Semigroup s = Semigroup::generated_by(list);
  try {
    const auto mu = minimal_presentation_cardinality(s, budget);
    report.add("presentation_cardinality", true, "", std::to_string(mu));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
    report.add("presentation_cardinality", false, "budget_exceeded");
  }
  return report;
}

}  // namespace sgp::families
