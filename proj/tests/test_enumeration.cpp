#include <doctest.h>

#include <algorithm>
#include <set>

#include "arfsemi/arf.hpp"
#include "arfsemi/enumeration.hpp"
#include "arfsemi/errors.hpp"
#include "arfsemi/oracle.hpp"
#include "corpus.hpp"

using namespace arfsemi;
using V = std::vector<integer>;

namespace {

  NumericalSemigroup gens(V v) {
    return NumericalSemigroup::from_generators(v);
  }

  NumericalSemigroup small(V v) {
    return NumericalSemigroup::from_small_elements(v);
  }

  std::set<V> generator_sets(std::vector<NumericalSemigroup> const& family) {
    std::set<V> out;
    for (auto const& S : family) {
      out.insert(minimal_generators(S));
    }
    return out;
  }

  NumericalSemigroup const example_h = gens({6, 9, 11, 13, 14, 16});

}  // namespace

TEST_CASE("arf_oversemigroups") {
  auto const all = arf_oversemigroups(example_h);
  CHECK(all.size() == 19);
  std::set<V> const expected{{1},
                             {2, 3},
                             {2, 5},
                             {2, 7},
                             {2, 9},
                             {3, 4, 5},
                             {3, 5, 7},
                             {3, 7, 8},
                             {3, 8, 10},
                             {3, 10, 11},
                             {3, 11, 13},
                             {4, 5, 6, 7},
                             {4, 6, 7, 9},
                             {4, 6, 9, 11},
                             {5, 6, 7, 8, 9},
                             {6, 7, 8, 9, 10, 11},
                             {6, 8, 9, 10, 11, 13},
                             {6, 9, 10, 11, 13, 14},
                             {6, 9, 11, 13, 14, 16}};
  CHECK(generator_sets(all) == expected);
  CHECK(all.front() == example_h);
  CHECK(all.back().is_naturals());
  CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));

  auto const N = arf_oversemigroups(NumericalSemigroup());
  REQUIRE(N.size() == 1);
  CHECK(N[0].is_naturals());

  CHECK(arf_oversemigroups(small({0, 4})).size() == 5);

  CHECK_THROWS_AS(arf_oversemigroups(gens({4, 7})), domain_error);
  CHECK_THROWS_AS(arf_oversemigroups(small({0, 50})), limit_error);
  CHECK(arf_oversemigroups(small({0, 50}), 60).size() > 1);
}

TEST_CASE("over_graph") {
  auto const g = over_graph(example_h);
  CHECK(g.nodes.size() == 19);
  CHECK(g.nodes[0] == example_h);

  auto const n = over_graph(NumericalSemigroup());
  CHECK(n.nodes.size() == 1);
  CHECK(n.edges.empty());

  auto const b = over_graph(small({0, 10, 17, 20}));
  auto const root_edges =
      std::count_if(b.edges.begin(), b.edges.end(), [](auto const& e) { return e.from == 0; });
  CHECK(root_edges == 1);

  SUBCASE("structure") {
    for (auto const& H : testing::half_line_corpus(10)) {
      auto const G = over_graph(H);
      std::vector<std::size_t> out_degree(G.nodes.size(), 0);
      for (auto const& e : G.edges) {
        REQUIRE(e.to < G.nodes.size());
        CHECK(genus(G.nodes[e.from]) == genus(G.nodes[e.to]) + 1);
        CHECK(G.nodes[e.to] == adjoin_arf(G.nodes[e.from], e.gap));
        ++out_degree[e.from];
      }
      // Reachability from the root.
      std::vector<bool> seen(G.nodes.size(), false);
      seen[0] = true;
      for (auto const& e : G.edges) {  // edges are sorted by source, sources precede targets
        if (seen[e.from]) {
          seen[e.to] = true;
        }
      }
      for (std::size_t i = 0; i < G.nodes.size(); ++i) {
        CHECK(out_degree[i] == arf_special_gaps(G.nodes[i]).size());
        CHECK((out_degree[i] == 0) == G.nodes[i].is_naturals());
        CHECK(seen[i]);
        CHECK(G.index_of(G.nodes[i]) == i);
      }
    }
  }
}

TEST_CASE("chain_between") {
  auto const same = chain_between(example_h, example_h);
  CHECK(same == std::vector<NumericalSemigroup>{example_h});

  auto const up = chain_between(example_h, NumericalSemigroup());
  CHECK(up.size() == genus(example_h) + 1);
  for (std::size_t t = 0; t < up.size(); ++t) {
    CHECK(is_arf(up[t]));
    CHECK(genus(up[t]) == genus(example_h) - t);
  }

  auto const a = small({0, 10, 18, 20});
  auto const b = small({0, 10, 14, 18, 20});
  CHECK(chain_between(a, b) == std::vector<NumericalSemigroup>{a, b});

  CHECK_THROWS_AS(chain_between(b, a), domain_error);
  CHECK_THROWS_AS(chain_between(gens({4, 7}), NumericalSemigroup()), domain_error);
}

TEST_CASE("arf_irreducible_oversemigroups") {
  auto const qa = arf_irreducible_oversemigroups(example_h);
  CHECK(qa.size() == 11);
  std::set<NumericalSemigroup> expected;
  for (V added : {V{3}, V{3, 10}, V{3, 8, 10}, V{3, 7, 8, 10}, V{3, 5, 7, 8, 10},
                  V{3, 4, 5, 7, 8, 10}, V{2, 4, 8, 10}, V{2, 4, 7, 8, 10},
                  V{2, 4, 5, 7, 8, 10}, V{2, 3, 4, 5, 7, 8, 10},
                  V{1, 2, 3, 4, 5, 7, 8, 10}}) {
    V e{0, 6, 9, 11};
    e.insert(e.end(), added.begin(), added.end());
    expected.insert(small(e));
  }
  CHECK(std::set<NumericalSemigroup>(qa.begin(), qa.end()) == expected);

  auto const n = arf_irreducible_oversemigroups(NumericalSemigroup());
  REQUIRE(n.size() == 1);
  CHECK(n[0].is_naturals());

  auto const two = arf_irreducible_oversemigroups(gens({2, 9}));
  CHECK(std::set<NumericalSemigroup>(two.begin(), two.end())
        == std::set<NumericalSemigroup>{gens({2, 9}), gens({2, 7}), gens({2, 5}),
                                        gens({2, 3}), NumericalSemigroup()});
}

TEST_CASE("decompose_arf_irreducible") {
  auto const d = decompose_arf_irreducible(example_h);
  REQUIRE(d.factors.size() == 2);
  CHECK(minimal_generators(d.factors[0]) == V{2, 9});
  CHECK(minimal_generators(d.factors[1]) == V{3, 11, 13});
  CHECK(intersect(d.factors[0], d.factors[1]) == example_h);

  auto const irr = small({0, 10, 17, 20});
  CHECK(decompose_arf_irreducible(irr).factors == std::vector<NumericalSemigroup>{irr});
  CHECK(decompose_arf_irreducible(NumericalSemigroup()).factors.size() == 1);

  auto const t  = small({0, 10, 18, 20});
  auto const dt = decompose_arf_irreducible(t);
  CHECK(dt.factors.size() == 2);
  CHECK(intersect(dt.factors[0], dt.factors[1]) == t);

  SUBCASE("invariants over the corpus") {
    for (auto const& H : testing::half_line_corpus(12)) {
      auto const f  = decompose_arf_irreducible(H).factors;
      auto const ag = arf_special_gaps(H);
      NumericalSemigroup meet;
      for (auto const& S : f) {
        CHECK(is_arf_irreducible(S));
        CHECK(is_subset(H, S));
        meet = intersect(meet, S);
      }
      CHECK(meet == H);
      CHECK(f.size() <= std::max<std::size_t>(ag.size(), 1));
      for (integer x : ag) {
        CHECK(std::any_of(f.begin(), f.end(), [x](auto const& S) { return !S.contains(x); }));
      }
      for (std::size_t k = 0; k < f.size() && f.size() > 1; ++k) {
        NumericalSemigroup rest;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != k) {
            rest = intersect(rest, f[i]);
          }
        }
        CHECK(rest != H);
      }
    }
  }
}

TEST_CASE("A(H) is closed under intersection and adjoining the Frobenius number") {
  for (auto const& H : testing::half_line_corpus(10)) {
    auto const                         all = arf_oversemigroups(H);
    std::set<NumericalSemigroup> const members(all.begin(), all.end());
    for (auto const& S : all) {
      if (!S.is_naturals()) {
        CHECK(members.count(adjoin(S, S.frobenius())) == 1);
      }
      for (auto const& T : all) {
        CHECK(members.count(intersect(S, T)) == 1);
      }
    }
    CHECK(all == [&] {
      auto brute = oracle::brute_arf_oversemigroups(H);
      std::sort(brute.begin(), brute.end(), canonical_less);
      return brute;
    }());
  }
}
