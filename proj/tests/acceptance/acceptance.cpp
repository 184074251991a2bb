// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgp/cli/cli.hpp"
#include "sgp/families.hpp"
#include "sgp/scan.hpp"

using namespace sgp;
using namespace sgp::families;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string list(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<SymSParams> s_grid() {
  std::vector<SymSParams> out;
  for (Int e : {4, 5, 6})
    for (Int q : {1, 2, 3})
      for (Int d : {1, 2, 3, 5}) {
        const SymSParams p{e, q, d};
        if (std::gcd(p.m(), d) == 1) out.push_back(p);
      }
  return out;
}

std::vector<SymTParams> t_grid() {
  std::vector<SymTParams> out;
  for (Int e : {4, 6})
    for (Int q : {2, 4})
      for (Int d : {1, 3}) {
        const SymTParams p{e, q, d};
        try {
          p.validate();
        } catch (const Error&) {
          continue;
        }
        out.push_back(p);
      }
  return out;
}

template <class Params>
std::string tag(const Params& p) {
  return "(e=" + std::to_string(p.e) + ",q=" + std::to_string(p.q) + ",d=" + std::to_string(p.d) + ")";
}

// brute-force Apery set, closed-form Frobenius number, symmetry, presentation size
template <class Params, class Gen, class Closed>
void check_symmetric_point(const Params& p, Gen generators, Closed closed_apery, Outcome& out) {
  const Semigroup s = generators(p);
  const auto brute = oracle::sorted(oracle::apery(s.generators(), p.m()));
  out.expect(brute == closed_apery(p), tag(p) + " Apery " + list(brute) + " != closed form");
  out.expect(apery(s, p.m()).elements() == brute, tag(p) + " library Apery disagrees with scan");
  const Int f = oracle::frobenius(s.generators());
  out.expect(f == frobenius_closed_form(p), tag(p) + " Frobenius " + std::to_string(f));
  out.expect(frobenius(s) == f, tag(p) + " library Frobenius disagrees");
  out.expect(is_symmetric(s), tag(p) + " not symmetric");
  const auto mu = minimal_presentation_cardinality(s);
  out.expect(static_cast<Int>(mu) == p.e * (p.e - 1) / 2 - 1, tag(p) + " mu " + std::to_string(mu));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion_1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto grid = s_grid();
  for (const auto& p : grid) check_symmetric_point(p, gamma_s_generators, apery_closed_form_s, out);
  const double t = seconds_since(start);
  out.expect(t < 60.0, "took " + std::to_string(t) + " s");
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(grid.size()) + " points";
  return out;
}

Outcome criterion_2() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto grid = t_grid();
  for (const auto& p : grid) check_symmetric_point(p, gamma_t_generators, apery_closed_form_t, out);
  const double t = seconds_since(start);
  out.expect(t < 30.0, "took " + std::to_string(t) + " s");
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(grid.size()) + " points";
  return out;
}

Outcome criterion_3() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Int> mus;
  for (Int n : {5, 6, 7, 8}) {
    const auto mu = static_cast<Int>(minimal_presentation_cardinality(unbounded_generators({n, 4, 0}),
                                                                      EnumerationBudget::from_environment()));
    mus.push_back(mu);
    out.expect(mu == 2 * (n + 1), "n=" + std::to_string(n) + " mu " + std::to_string(mu));
  }
  const double t = seconds_since(start);
  out.expect(t < 300.0, "took " + std::to_string(t) + " s");
  if (out.pass) out.note = "mu = " + list(mus);
  return out;
}

Outcome criterion_4() {
  Outcome out;
  for (Int n : {5, 6}) {
    const Semigroup s = unbounded_generators({n, 4, 0});
    const Int bound = frobenius(s) + 2 * s.max_generator();
    const auto reduced = ed4_generating_set(n, true);
    out.expect(relations_generate_up_to(s, reduced, bound).generates, "reduced set does not generate");
    out.expect(relations_minimal(s, reduced, bound).minimal, "reduced set not minimal");
    // every drop-one fails, checked directly
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      std::vector<BinomialRelation> rest;
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        if (j != k) rest.push_back(reduced[j]);
      }
      out.expect(!relations_generate_up_to(s, rest, bound).generates,
                 "n=" + std::to_string(n) + ": dropping " + reduced[k].label() + " still generates");
    }
    const auto full = ed4_generating_set(n, false);
    out.expect(relations_generate_up_to(s, full, bound).generates, "unreduced set does not generate");
    const auto m = relations_minimal(s, full, bound);
    const std::set<std::string> allowed{"f_0", "f_" + std::to_string(n), "f_" + std::to_string(n + 1)};
    out.expect(!m.minimal && m.redundant_index && allowed.count(full[*m.redundant_index].label()),
               "unreduced set: unexpected minimality witness");
    if (out.pass && m.redundant_index) {
      out.note += "n=" + std::to_string(n) + " witness " + full[*m.redundant_index].label() + " ";
    }
  }
  return out;
}

Outcome criterion_5() {
  Outcome out;
  std::vector<Int> got;
  for (Int n : {5, 6, 7}) {
    const auto c = eto_colength(n);
    out.expect(c.has_value() && *c == n * n + 2 * n, "n=" + std::to_string(n) + " colength mismatch");
    if (c) got.push_back(*c);
  }
  if (out.pass) out.note = "colength = " + list(got);
  return out;
}

Outcome criterion_6() {
  Outcome out;
  for (Int n = 5; n <= 10; ++n) {
    for (const auto& id : reduction_identities(n)) {
      out.expect(poly_identity_zero(id.terms, id.target), "n=" + std::to_string(n) + ": " + id.name);
    }
  }
  return out;
}

Outcome criterion_7() {
  Outcome out;
  for (Int n : {5, 6}) {
    for (Int e : {4, 5, 6}) {
      const UnboundedParams p{n, e, e - 4};
      const Semigroup s = unbounded_generators(p);
      const auto hs = h_relations(p);
      out.expect(hs.size() == static_cast<std::size_t>(n + 2), "wrong count");
      for (const auto& h : hs) out.expect(nu(s, h.lhs()) == nu(s, h.rhs()), h.label() + " unbalanced");
      out.expect(std::set<BinomialRelation>(hs.begin(), hs.end()).size() == hs.size(), "duplicate relations");
    }
  }
  return out;
}

template <class Params, class Gen>
void check_unique_expressions(const Params& p, Gen generators, Outcome& out) {
  const Semigroup s = generators(p);
  const auto ap = apery(s, p.m()).elements();
  for (Int w : ap) {
    const auto count = factorizations(s, w).size();
    if (w == ap.back()) {
      out.expect(count >= 1, tag(p) + " maximum has no factorization");
    } else {
      out.expect(count == 1, tag(p) + " " + std::to_string(w) + " has " + std::to_string(count));
    }
  }
}

Outcome criterion_8() {
  Outcome out;
  for (const auto& p : s_grid()) check_unique_expressions(p, gamma_s_generators, out);
  for (const auto& p : t_grid()) check_unique_expressions(p, gamma_t_generators, out);
  return out;
}

Outcome criterion_9() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Int> mus;
  for (Int q2 : {4, 6, 8}) {
    mus.push_back(static_cast<Int>(minimal_presentation_cardinality(bresinsky_generators({q2}))));
  }
  out.expect(mus[0] < mus[1] && mus[1] < mus[2], "mu not strictly increasing: " + list(mus));
  const double t = seconds_since(start);
  out.expect(t < 300.0, "took " + std::to_string(t) + " s");
  if (out.pass) out.note = "mu(q2=4,6,8) = " + list(mus);
  return out;
}

Outcome criterion_10() {
  Outcome out;
  std::ostringstream cells;
  for (const auto& r : conjecture_scan({5, 6}, {4, 5}, EnumerationBudget::from_environment())) {
    const bool ok = r.status == ScanStatus::BudgetExceeded || meets_conjectured_bound(r);
    out.expect(ok, "violation at n=" + std::to_string(*r.n) + ", e=" + std::to_string(*r.e));
    cells << "(" << *r.n << "," << *r.e << ")=" << (r.mu ? std::to_string(*r.mu) : "budget") << " ";
  }
  if (out.pass) out.note = cells.str();
  return out;
}

std::vector<std::vector<Int>> random_semigroups(std::size_t count) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> value(2, 35);
  std::uniform_int_distribution<int> size(2, 5);
  std::vector<std::vector<Int>> out;
  while (out.size() < count) {
    std::vector<Int> g(static_cast<std::size_t>(size(rng)));
    for (auto& x : g) x = value(rng);
    if (std::accumulate(g.begin(), g.end(), Int{0}, [](Int a, Int b) { return std::gcd(a, b); }) != 1) continue;
    out.push_back(oracle::minimal(g));
  }
  return out;
}

Outcome criterion_11() {
  Outcome out;
  for (const auto& g : random_semigroups(120)) {
    const Semigroup s(g);
    for (Int a : g) {
      const auto table = apery(s, a);
      std::set<Int> residues;
      for (Int w : table.entries) {
        residues.insert(w % a);
        out.expect(contains(s, w) && (w < a || !contains(s, w - a)), "Apery entry not minimal");
      }
      out.expect(residues.size() == static_cast<std::size_t>(a), "Apery residues incomplete");
    }
    out.expect(frobenius(s) == s.multiplicity_apery().max() - s.multiplicity(), "Frobenius vs Apery max");
    out.expect(static_cast<std::size_t>(genus(s)) == oracle::gaps(g).size(), "genus routes disagree");
    const Int limit = frobenius(s) + 2 * s.multiplicity();
    const auto r = oracle::reachable(g, limit);
    for (Int x = 0; x <= limit; ++x) {
      out.expect(contains(s, x) == r[static_cast<std::size_t>(x)], "membership vs DP");
    }
  }
  for (Int a = 2; a <= 12; ++a) {
    for (Int b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) == 1) {
        out.expect(minimal_presentation_cardinality(Semigroup({a, b})) == 1, "two-generator presentation");
      }
    }
  }
  // scan determinism through the CLI surface
  auto scan_output = [](const std::string& jobs) {
    std::ostringstream o, e;
    sgp::cli::run({"scan", "--family", "sym-s", "--e", "4..5", "--q", "1..2", "--d", "1..3", "--jobs", jobs}, o, e);
    std::string text = o.str();
    // drop the timing line
    const auto pos = text.find("time: ");
    return text.erase(pos, text.find('\n', pos) - pos + 1);
  };
  out.expect(scan_output("1") == scan_output("4"), "scan output depends on --jobs");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  family S grid: Apery, Frobenius, symmetry, presentation", criterion_1},
      {"2  family T grid: Apery, Frobenius, symmetry, presentation", criterion_2},
      {"3  unbounded e=4 q=0 n=5..8: mu = 2(n+1)", criterion_3},
      {"4  ideal certificate n=5,6: generation and minimality", criterion_4},
      {"5  colength of the specialization = n^2 + 2n, n=5..7", criterion_5},
      {"6  reduction identities, n=5..10", criterion_6},
      {"7  h relations balanced and distinct", criterion_7},
      {"8  unique expression of non-maximal Apery elements", criterion_8},
      {"9  Bresinsky mu strictly increasing in q2", criterion_9},
      {"10 conjecture scan n=5,6 e=4,5: mu >= n+2", criterion_10},
      {"11 property suites", criterion_11},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    std::printf("[%s] %s (%.2f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), t,
                outcome.note.empty() ? "" : " -- ", outcome.note.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
