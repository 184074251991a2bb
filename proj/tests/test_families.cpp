#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sgp/families.hpp"
#include "test_util.hpp"

using namespace sgp;
using namespace sgp::families;

namespace {

std::vector<Int> gens(const Semigroup& s) { return s.generators(); }

const CheckResult& check_named(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("no check named " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("unbounded_generators") {
  CHECK(gens(unbounded_generators({5, 4, 0})) == std::vector<Int>{35, 36, 41, 42});
  CHECK(gens(unbounded_generators({6, 4, 0})) == std::vector<Int>{48, 49, 55, 56});
  // m_0..m_2 = 25 + 15 + 1 + i, then 25 + 20 + 1 + 2 and + 3
  CHECK(gens(unbounded_generators({5, 5, 1})) == std::vector<Int>{41, 42, 43, 48, 49});
  CHECK(oracle::minimal({41, 42, 43, 48, 49}) == std::vector<Int>{41, 42, 43, 48, 49});
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { unbounded_generators({4, 4, 0}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { unbounded_generators({5, 3, 0}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { unbounded_generators({5, 4, -1}); }));
}

TEST_CASE("h_relations") {
  const auto hs = h_relations({5, 4, 0});
  CHECK(hs.size() == 7);
  const Semigroup s = unbounded_generators({5, 4, 0});
  // H_0: x1^7 - x3^6, 7 * 36 = 252 = 6 * 42
  const BinomialRelation h0(Factorization{{0, 7, 0, 0}}, Factorization{{0, 0, 0, 6}});
  CHECK(hs[0] == h0);
  CHECK(nu(s, hs[0].lhs()) == 252);
  // H_6: x0^6 x1 - x2^6, 6 * 35 + 36 = 246 = 6 * 41
  const BinomialRelation h6(Factorization{{6, 1, 0, 0}}, Factorization{{0, 0, 6, 0}});
  CHECK(hs[6] == h6);
  CHECK(nu(s, hs[6].lhs()) == 246);

  for (Int e : {4, 5, 6}) {
    const UnboundedParams p{6, e, e - 4};
    const auto rel = h_relations(p);
    CHECK(rel.size() == 8);
    const Semigroup se = unbounded_generators(p);
    for (const auto& r : rel) CHECK(nu(se, r.lhs()) == nu(se, r.rhs()));
    CHECK(std::set<BinomialRelation>(rel.begin(), rel.end()).size() == rel.size());
  }
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { h_relations({5, 5, 0}); }));
}

TEST_CASE("ed4_generating_set") {
  CHECK(ed4_generating_set(5, true).size() == 12);
  CHECK(ed4_generating_set(5, false).size() == 15);
  CHECK(ed4_generating_set(7, true).size() == 16);
  const auto g2 = ed4_g2().relation();
  CHECK(g2.lhs() == Factorization{{1, 0, 0, 1}});
  CHECK(g2.rhs() == Factorization{{0, 1, 1, 0}});
  CHECK(nu(unbounded_generators({5, 4, 0}), g2.lhs()) == 77);
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { ed4_generating_set(4, true); }));
}

TEST_CASE("verify_reduction_identities") {
  CHECK(verify_reduction_identities(5));
  CHECK(verify_reduction_identities(6));

  // g1 with the wrong sign: x0^(n+1) + x3^n
  const Int n = 5;
  const auto bad_g1 = SparsePolynomial::variable(4, 0, n + 1) + SparsePolynomial::variable(4, 3, n);
  auto ids = reduction_identities(n);
  bool all = true;
  for (auto& id : ids) {
    id.terms[0].second = bad_g1;
    all = all && poly_identity_zero(id.terms, id.target);
  }
  CHECK_FALSE(all);
}

TEST_CASE("gamma_s_generators") {
  CHECK(gens(gamma_s_generators({4, 1, 1})) == std::vector<Int>{7, 8, 17, 18});
  const auto s = gamma_s_generators({5, 2, 3});
  CHECK(gens(s) == std::vector<Int>{10, 13, 42, 45, 48});
  CHECK(oracle::minimal({10, 13, 42, 45, 48}) == gens(s));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_s_generators({4, 1, 7}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_s_generators({3, 1, 1}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_s_generators({4, 0, 1}); }));
}

TEST_CASE("gamma_t_generators") {
  CHECK(gens(gamma_t_generators({4, 2, 1})) == std::vector<Int>{8, 9, 22, 23});
  CHECK(gens(gamma_t_generators({6, 2, 1})) == std::vector<Int>{10, 11, 26, 27, 28, 29});
  CHECK(oracle::minimal({10, 11, 26, 27, 28, 29}) == std::vector<Int>{10, 11, 26, 27, 28, 29});
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_t_generators({4, 1, 1}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_t_generators({5, 2, 1}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_t_generators({4, 2, 2}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { gamma_t_generators({8, 2, 1}); }));
}

TEST_CASE("concatenation shape of the symmetric families") {
  for (Int e : {4, 5, 6, 7}) {
    for (Int q : {1, 2, 3}) {
      for (Int d : {1, 2, 3, 5}) {
        const SymSParams p{e, q, d};
        if (std::gcd(p.m(), d) != 1) continue;
        const auto g = gens(gamma_s_generators(p));
        REQUIRE(g.size() == static_cast<std::size_t>(e));
        CHECK(g[1] - g[0] == d);
        for (std::size_t i = 3; i < g.size(); ++i) CHECK(g[i] - g[i - 1] == d);
      }
    }
  }
  for (Int e : {4, 6, 8}) {
    for (Int q : {2, 4, 6}) {
      for (Int d : {1, 3, 5}) {
        const SymTParams p{e, q, d};
        if (std::gcd(p.m(), d) != 1 || q < e - 4) continue;
        const auto g = gens(gamma_t_generators(p));
        REQUIRE(g.size() == static_cast<std::size_t>(e));
        CHECK(g[1] - g[0] == d);
        for (std::size_t i = 3; i < g.size(); ++i) CHECK(g[i] - g[i - 1] == d);
      }
    }
  }
}

TEST_CASE("Apery closed forms") {
  const auto s = apery_closed_form_s({4, 1, 1});
  CHECK(s == std::vector<Int>{0, 8, 16, 17, 18, 26, 34});
  CHECK(s == oracle::sorted(oracle::apery({7, 8, 17, 18}, 7)));
  CHECK(s.back() - 7 == 27);

  const auto t = apery_closed_form_t({4, 2, 1});
  CHECK(t == std::vector<Int>{0, 9, 18, 22, 23, 27, 36, 45});
  CHECK(t == oracle::sorted(oracle::apery({8, 9, 22, 23}, 8)));
  CHECK(t.back() - 8 == 37);
}

TEST_CASE("Frobenius closed forms") {
  CHECK(frobenius_closed_form(SymSParams{4, 1, 1}) == 27);
  CHECK(frobenius_closed_form(SymTParams{4, 2, 1}) == 37);
  CHECK(frobenius_closed_form(SymSParams{5, 2, 3}) == 77);
  CHECK(oracle::frobenius({10, 13, 42, 45, 48}) == 77);
}

TEST_CASE("verify_symmetric_family") {
  const auto s = verify_symmetric_family(SymSParams{4, 1, 1});
  CHECK(s.passed());
  CHECK(check_named(s, "presentation_cardinality").detail == "5");
  CHECK(s.checks.size() == 7);

  const auto t = verify_symmetric_family(SymTParams{4, 2, 1});
  CHECK(t.passed());
  CHECK(check_named(t, "presentation_cardinality").detail == "5");

  const auto big = verify_symmetric_family(SymSParams{6, 2, 5});
  CHECK(big.passed());
  CHECK(check_named(big, "presentation_cardinality").detail == "14");
}

TEST_CASE("bresinsky_generators") {
  CHECK(gens(bresinsky_generators({4})) == std::vector<Int>{12, 15, 20, 23});
  CHECK(gens(bresinsky_generators({6})) == std::vector<Int>{30, 35, 42, 47});
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { bresinsky_generators({5}); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { bresinsky_generators({2}); }));
  CHECK(verify_bresinsky_family({4}).passed());
}

TEST_CASE("eto_colength_check") {
  CHECK(eto_colength_check(5));
  CHECK(eto_colength(5) == 35);
  CHECK(eto_colength_check(6));
  CHECK(eto_colength(6) == 48);

  // without g1 the pure power x3^n is gone and f_{n+1} = x3^6 - x1^7 survives
  std::vector<BinomialRelation> no_g1;
  for (const auto& r : ed4_generating_set(5, false)) {
    if (r.label() != "g_1") no_g1.push_back(r);
  }
  CHECK(throws_kind(ErrorKind::NotMonomialAfterSpecialization, [&] { eto_colength(no_g1); }));
}

TEST_CASE("verify_unbounded_family") {
  const auto plain = verify_unbounded_family({5, 4, 0}, false);
  CHECK(plain.passed());
  CHECK(check_named(plain, "presentation_cardinality").detail == "12");

  const auto with_ideal = verify_unbounded_family({5, 4, 0}, true);
  CHECK(with_ideal.passed());
  CHECK(check_named(with_ideal, "colength_specialization").detail == "35");

  const auto conj = verify_unbounded_family({5, 5, 1}, false);
  CHECK(conj.passed());
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { verify_unbounded_family({5, 5, 1}, true); }));
}
