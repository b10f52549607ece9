#include <doctest.h>

#include "arfsemi/errors.hpp"
#include "arfsemi/oracle.hpp"

using namespace arfsemi;
using namespace arfsemi::oracle;
using V = std::vector<integer>;

namespace {

  NumericalSemigroup gens(V v) {
    return NumericalSemigroup::from_generators(v);
  }

  NumericalSemigroup small(V v) {
    return NumericalSemigroup::from_small_elements(v);
  }

}  // namespace

TEST_CASE("brute_is_semigroup") {
  CHECK(brute_is_semigroup({0, 2}, 2));
  // {0, 3, 5, 7, ->}: 3 + 3 = 6 is missing.
  CHECK_FALSE(brute_is_semigroup({0, 3, 5}, 7));
  CHECK(brute_is_semigroup({0, 10, 20}, 24));
  CHECK_FALSE(brute_is_semigroup({3, 5}, 7));
  CHECK(brute_is_semigroup({0}, 0));
}

TEST_CASE("brute_is_arf") {
  CHECK(brute_is_arf(gens({6, 9, 11, 13, 14, 16})));
  CHECK_FALSE(brute_is_arf(gens({4, 7})));
  CHECK(brute_is_arf(NumericalSemigroup()));
  // (7, 7, 4) gives 10.
  CHECK_FALSE(brute_is_arf({0, 4, 7, 8, 11, 12, 14, 15, 16}, 18));
  CHECK(brute_is_arf({0, 4}, 7));
}

TEST_CASE("brute_arf_special_gaps") {
  CHECK(brute_arf_special_gaps(gens({10, 24, 25, 26, 27, 28, 29, 31, 32, 33})) == V{15, 22, 23});
  CHECK(brute_arf_special_gaps(NumericalSemigroup()).empty());
  CHECK(brute_arf_special_gaps(small({0, 9})) == V{5, 6, 7, 8});
}

TEST_CASE("brute_special_gaps and brute_pseudo_frobenius") {
  CHECK(brute_special_gaps(gens({6, 9, 11, 13, 14, 16})) == V{3, 7, 8, 10});
  CHECK(brute_pseudo_frobenius(gens({2, 3})) == V{1});
  CHECK(brute_pseudo_frobenius(NumericalSemigroup()).empty());
  CHECK(brute_apery_set(gens({2, 3}), 2) == V{0, 3});
  CHECK_THROWS_AS(brute_apery_set(gens({2, 3}), 1), domain_error);
}

TEST_CASE("brute_arf_oversemigroups") {
  CHECK(brute_arf_oversemigroups(gens({6, 9, 11, 13, 14, 16})).size() == 19);
  auto const n = brute_arf_oversemigroups(NumericalSemigroup());
  REQUIRE(n.size() == 1);
  CHECK(n[0].is_naturals());

  auto const b = brute_arf_oversemigroups(small({0, 10, 17, 20}));
  // {0, 10, 17, 19, ->} is the only oversemigroup that differs in one element.
  CHECK(std::count(b.begin(), b.end(), small({0, 10, 17, 19})) == 1);
  CHECK(std::count_if(b.begin(), b.end(), [](auto const& S) {
          return genus(S) == 16;
        }) == 1);

  CHECK_THROWS_AS(brute_arf_oversemigroups(small({0, 30})), limit_error);
}

TEST_CASE("brute_minimal_arf_generators") {
  CHECK(brute_minimal_arf_generators(gens({8, 20, 27, 29, 30, 31, 33, 34})) == V{8, 20, 27});
  CHECK(brute_minimal_arf_generators(small({0, 5, 8, 10})) == V{5, 8});
  CHECK(brute_minimal_arf_generators(gens({2, 3})) == V{2, 3});
}

TEST_CASE("brute_arf_closure") {
  CHECK(brute_arf_closure(V{4, 7}) == small({0, 4, 7}));
  CHECK(brute_arf_closure(V{6, 9, 11, 13, 14, 16}) == gens({6, 9, 11, 13, 14, 16}));
  CHECK(brute_arf_closure(V{1}).is_naturals());
  CHECK_THROWS_AS(brute_arf_closure(V{4, 6}), input_error);
  CHECK_THROWS_AS(brute_arf_closure(V{11, 13}), limit_error);
}
