#ifndef ARFSEMI_ENUMERATION_HPP_
#define ARFSEMI_ENUMERATION_HPP_

#include <cstddef>
#include <vector>

#include "arfsemi/semigroup.hpp"

namespace arfsemi {

  inline constexpr std::size_t default_genus_cap = 40;

  //! Strict weak order used for every list of semigroups this module
  //! returns: genus descending, then small elements lexicographically.
  bool canonical_less(NumericalSemigroup const& a, NumericalSemigroup const& b);

  //! Directed graph on the Arf semigroups containing a root H.  There is an
  //! edge S -> S u {x} for every Arf special gap x of S.
  struct OverGraph {
    struct Edge {
      std::size_t from;
      std::size_t to;
      integer     gap;

      friend bool operator==(Edge const&, Edge const&) = default;
    };

    std::vector<NumericalSemigroup> nodes;  // canonical order; nodes[0] is the root
    std::vector<Edge>               edges;  // sorted by (from, gap)

    //! Index of \p S in nodes, or nodes.size() when absent.
    std::size_t index_of(NumericalSemigroup const& S) const;
  };

  struct Decomposition {
    std::vector<NumericalSemigroup> factors;
  };

  //! Every Arf semigroup containing H, including H and the naturals, in
  //! canonical order.  Throws domain_error when H is not Arf and limit_error
  //! when genus(H) > genus_cap.
  std::vector<NumericalSemigroup>
  arf_oversemigroups(NumericalSemigroup const& H,
                     std::size_t               genus_cap = default_genus_cap);

  OverGraph over_graph(NumericalSemigroup const& H,
                       std::size_t               genus_cap = default_genus_cap);

  //! H1 = K_0 < K_1 < ... < K_r = H2 where K_{t+1} = K_t u {max(H2 \ K_t)}.
  //! Throws domain_error unless both are Arf and H1 is contained in H2.
  std::vector<NumericalSemigroup> chain_between(NumericalSemigroup const& H1,
                                                NumericalSemigroup const& H2);

  //! The Arf-irreducible members of arf_oversemigroups(H).
  std::vector<NumericalSemigroup>
  arf_irreducible_oversemigroups(NumericalSemigroup const& H,
                                 std::size_t genus_cap = default_genus_cap);

  //! Irredundant Arf-irreducible oversemigroups of H whose intersection is
  //! H, drawn from the inclusion-minimal ones.  Factors are ordered by their
  //! minimal generating sets, lexicographically.
  Decomposition
  decompose_arf_irreducible(NumericalSemigroup const& H,
                            std::size_t               genus_cap = default_genus_cap);

}  // namespace arfsemi

#endif  // ARFSEMI_ENUMERATION_HPP_
