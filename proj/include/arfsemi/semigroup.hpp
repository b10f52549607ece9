#ifndef ARFSEMI_SEMIGROUP_HPP_
#define ARFSEMI_SEMIGROUP_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace arfsemi {

  using integer = std::int64_t;

  // Inputs at or above this value are rejected so that every intermediate
  // product stays inside 64 bits.
  inline constexpr integer max_input_value = integer(1) << 31;

  // Largest conductor we are willing to materialise as a small-element list.
  inline constexpr integer max_conductor = integer(1) << 24;

  //! A numerical semigroup H, stored as its small elements
  //! 0 = h_0 < h_1 < ... < h_n = c(H).
  //!
  //! Every integer >= c(H) belongs to H.  The list for the naturals is [0].
  //! Two semigroups are equal exactly when their small-element lists are
  //! equal, so the defaulted comparisons are set equality.  Ordering is
  //! lexicographic on the small elements.
  class NumericalSemigroup {
   public:
    //! The naturals, {0, ->}.
    NumericalSemigroup() : _small{0} {}

    //! <gens>.  Order and duplicates in \p gens do not matter.
    //!
    //! Throws input_error when \p gens is empty, has an entry <= 0 or
    //! >= max_input_value, or has gcd != 1.
    static NumericalSemigroup from_generators(std::span<integer const> gens);

    //! Validates and canonicalises a list of small elements.  The implied
    //! set is elems together with every integer >= max(elems).  The list is
    //! sorted and deduplicated first; a tail of consecutive integers ending
    //! at the maximum is trimmed to the true conductor.
    //!
    //! Throws input_error when 0 is missing, an entry is negative, or the
    //! set is not closed under addition.
    static NumericalSemigroup from_small_elements(std::span<integer const> elems);

    std::span<integer const> small_elements() const noexcept {
      return _small;
    }

    integer conductor() const noexcept {
      return _small.back();
    }

    integer frobenius() const noexcept {
      return _small.back() - 1;
    }

    //! Least positive element; 1 for the naturals.
    integer multiplicity() const noexcept {
      return _small.size() == 1 ? 1 : _small[1];
    }

    bool is_naturals() const noexcept {
      return _small.size() == 1;
    }

    bool contains(integer x) const noexcept;

    friend bool operator==(NumericalSemigroup const&,
                           NumericalSemigroup const&) = default;
    friend auto operator<=>(NumericalSemigroup const&,
                            NumericalSemigroup const&) = default;

   private:
    struct trusted_tag {};
    NumericalSemigroup(trusted_tag, std::vector<integer> small)
        : _small(std::move(small)) {}

    friend NumericalSemigroup
    semigroup_from_membership(std::vector<bool> const& member);

    std::vector<integer> _small;
  };

  //! Builds a semigroup from a membership table: x belongs to the result iff
  //! x >= member.size() or member[x].  The caller guarantees that the table
  //! describes a numerical semigroup; only the conductor is recomputed.
  NumericalSemigroup semigroup_from_membership(std::vector<bool> const& member);

  //! Membership table of H over [0, bound).
  std::vector<bool> membership(NumericalSemigroup const& H, integer bound);

  //! Apéry set of H with respect to a positive element.
  struct AperySet {
    integer              modulus;
    std::vector<integer> witnesses;  // witnesses[i] = least element = i mod modulus
  };

  struct GapReport {
    integer              frobenius;
    std::vector<integer> gaps;
    std::vector<integer> pseudo_frobenius;
    std::vector<integer> special_gaps;
    std::size_t          genus;
  };

  //! H \ {a} failed additive closure: first + second == a with both in H \ {a}.
  struct ClosureFailure {
    integer removed;
    integer first;
    integer second;

    friend bool operator==(ClosureFailure const&, ClosureFailure const&) = default;
  };

  using RemovalResult = std::variant<NumericalSemigroup, ClosureFailure>;

  std::vector<integer> minimal_generators(NumericalSemigroup const& H);
  std::size_t          embedding_dimension(NumericalSemigroup const& H);
  std::size_t          genus(NumericalSemigroup const& H);
  std::vector<integer> gaps(NumericalSemigroup const& H);

  //! Throws domain_error unless h is a positive element of H.
  AperySet apery_set(NumericalSemigroup const& H, integer h);

  //! Maximal gaps under x <=_H y iff y - x in H.  Empty for the naturals.
  std::vector<integer> pseudo_frobenius(NumericalSemigroup const& H);

  //! Pseudo-Frobenius numbers x with 2x in H; exactly the gaps x for which
  //! H u {x} is again a numerical semigroup.
  std::vector<integer> special_gaps(NumericalSemigroup const& H);

  GapReport gap_report(NumericalSemigroup const& H);

  NumericalSemigroup intersect(NumericalSemigroup const& H1,
                               NumericalSemigroup const& H2);

  //! H1 is a subset of H2.
  bool is_subset(NumericalSemigroup const& H1, NumericalSemigroup const& H2);

  //! H u {x}.  Throws domain_error unless x is a special gap of H.
  NumericalSemigroup adjoin(NumericalSemigroup const& H, integer x);

  //! H \ {a}, or the pair of elements whose sum a is no longer reachable.
  //! Throws domain_error when a is 0 or not in H.
  RemovalResult remove_element(NumericalSemigroup const& H, integer a);

  bool is_symmetric(NumericalSemigroup const& H);
  bool is_pseudo_symmetric(NumericalSemigroup const& H);
  bool is_irreducible(NumericalSemigroup const& H);

}  // namespace arfsemi

#endif  // ARFSEMI_SEMIGROUP_HPP_
