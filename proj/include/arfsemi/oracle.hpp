#ifndef ARFSEMI_ORACLE_HPP_
#define ARFSEMI_ORACLE_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "arfsemi/semigroup.hpp"

// Exhaustive, definition-level implementations used to cross-check the fast
// algorithms.  Nothing here calls into arf.hpp or enumeration.hpp; the only
// shared pieces are NumericalSemigroup::contains, small_elements and
// from_small_elements.
namespace arfsemi::oracle {

  //! Largest genus for which the subset enumerations below will run.
  inline constexpr std::size_t max_brute_genus = 22;

  //! \p elems are the members below \p bound; every integer >= bound is
  //! taken to be a member.  True when 0 is a member and every sum of two
  //! members below the bound is a member.
  bool brute_is_semigroup(std::set<integer> const& elems, integer bound);

  //! Triple form: a + b - c in the set for all members a >= b >= c.
  bool brute_is_arf(std::set<integer> const& elems, integer bound);
  bool brute_is_arf(NumericalSemigroup const& H);

  //! Gaps g such that no gap y satisfies y - g in H \ {0}.
  std::vector<integer> brute_pseudo_frobenius(NumericalSemigroup const& H);

  //! {x in H : x - h not in H}, sorted.  Throws domain_error unless h is a
  //! positive element of H.
  std::vector<integer> brute_apery_set(NumericalSemigroup const& H, integer h);

  //! Gaps x with H u {x} a numerical semigroup.
  std::vector<integer> brute_special_gaps(NumericalSemigroup const& H);

  //! Gaps x with H u {x} an Arf numerical semigroup.
  std::vector<integer> brute_arf_special_gaps(NumericalSemigroup const& H);

  //! H u T for every subset T of the gaps, kept when it passes both brute
  //! checks.  Sorted by small elements.  Throws limit_error when genus(H)
  //! exceeds max_brute_genus.
  std::vector<NumericalSemigroup>
  brute_arf_oversemigroups(NumericalSemigroup const& H);

  //! Candidates a among the positive small elements and F(H) + 2, kept when
  //! H \ {a} is an Arf numerical semigroup.
  std::vector<integer> brute_minimal_arf_generators(NumericalSemigroup const& H);

  //! Intersection of every Arf semigroup lying between <gens> and the
  //! naturals.  Throws input_error for gcd != 1 and limit_error when the
  //! genus of <gens> exceeds max_brute_genus.
  NumericalSemigroup brute_arf_closure(std::span<integer const> gens);

}  // namespace arfsemi::oracle

#endif  // ARFSEMI_ORACLE_HPP_
