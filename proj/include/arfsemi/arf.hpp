#ifndef ARFSEMI_ARF_HPP_
#define ARFSEMI_ARF_HPP_

#include <span>
#include <vector>

#include "arfsemi/semigroup.hpp"

namespace arfsemi {

  //! Consecutive differences x_j = h_j - h_{j-1} of the small elements of an
  //! Arf semigroup other than the naturals.
  //!
  //! A sequence of positive integers describes an Arf semigroup exactly when
  //! each x_j is one of the partial sums x_{j+1} + ... + x_k (j < k <= n) or
  //! is at least the full tail sum x_{j+1} + ... + x_n.
  struct ArfSequence {
    std::vector<integer> diffs;

    //! True when every entry is positive and the partial-sum condition holds.
    bool is_valid() const;

    //! {0, x_1, x_1 + x_2, ..., x_1 + ... + x_n, ->}.  Throws domain_error
    //! for an invalid sequence.
    NumericalSemigroup to_semigroup() const;

    friend bool operator==(ArfSequence const&, ArfSequence const&) = default;
  };

  //! 2a - b in H for all a >= b in H.
  bool is_arf(NumericalSemigroup const& H);

  //! Smallest Arf semigroup containing every element of \p gens.  Throws
  //! input_error under the same conditions as from_generators.
  NumericalSemigroup arf_closure(std::span<integer const> gens);

  //! Throws domain_error when H is not Arf or is the naturals.
  ArfSequence arf_sequence(NumericalSemigroup const& H);

  //! Gaps x for which H u {x} is again Arf.  Empty for the naturals.
  //! Throws domain_error when H is not Arf.
  std::vector<integer> arf_special_gaps(NumericalSemigroup const& H);

  //! H u {x}.  Throws domain_error unless x is an Arf special gap of H.
  NumericalSemigroup adjoin_arf(NumericalSemigroup const& H, integer x);

  //! Exactly one Arf special gap.  The naturals count as Arf-irreducible.
  //! Throws domain_error when H is not Arf.
  bool is_arf_irreducible(NumericalSemigroup const& H);

  //! The unique minimal set X with arf_closure(X) == H.  Every member is
  //! either a small element or F(H) + 2.  Throws domain_error when H is not
  //! Arf or is the naturals.
  std::vector<integer> minimal_arf_generators(NumericalSemigroup const& H);

  //! Leaf of the tree of Arf semigroups: no minimal Arf generator exceeds
  //! F(H).  Throws domain_error when H is not Arf or is the naturals.
  bool is_leaf(NumericalSemigroup const& H);

  //! The partial-sum form of the leaf test, exposed for cross-checking:
  //! some x_i equals its tail sum and some x_j equals its tail sum plus one.
  bool is_leaf_by_sequence(ArfSequence const& seq);

  enum class IrreducibleOverlap {
    both,                  // irreducible and Arf-irreducible
    arf_irreducible_only,  // Arf-irreducible but not irreducible
    not_arf_irreducible,   // neither (irreducible implies Arf-irreducible)
  };

  //! Where an Arf semigroup sits relative to the two irreducibility notions.
  //! `both` holds exactly for <3,4,5>, <3,5,7> and <2,m> with m odd.
  //! Throws domain_error when H is not Arf.
  IrreducibleOverlap classify_arf_irreducible_overlap(NumericalSemigroup const& H);

  char const* to_string(IrreducibleOverlap v) noexcept;

}  // namespace arfsemi

#endif  // ARFSEMI_ARF_HPP_
