#include "arfsemi/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "arfsemi/arf.hpp"
#include "arfsemi/errors.hpp"

namespace arfsemi {

  namespace {

    void check_cap(NumericalSemigroup const& H, std::size_t genus_cap) {
      if (!is_arf(H)) {
        throw domain_error("enumeration requires an Arf semigroup");
      }
      if (genus(H) > genus_cap) {
        throw limit_error("refusing to enumerate oversemigroups: genus "
                          + std::to_string(genus(H)) + " exceeds the cap "
                          + std::to_string(genus_cap));
      }
    }

    NumericalSemigroup
    intersect_all(std::vector<NumericalSemigroup> const& family) {
      NumericalSemigroup result;
      for (auto const& S : family) {
        result = intersect(result, S);
      }
      return result;
    }

  }  // namespace

  bool canonical_less(NumericalSemigroup const& a, NumericalSemigroup const& b) {
    auto const ga = genus(a), gb = genus(b);
    if (ga != gb) {
      return ga > gb;
    }
    return a < b;
  }

  std::size_t OverGraph::index_of(NumericalSemigroup const& S) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), S, canonical_less);
    if (it == nodes.end() || *it != S) {
      return nodes.size();
    }
    return static_cast<std::size_t>(it - nodes.begin());
  }

  OverGraph over_graph(NumericalSemigroup const& H, std::size_t genus_cap) {
    check_cap(H, genus_cap);

    // Breadth-first closure under adjoining Arf special gaps; every Arf
    // oversemigroup is reached because max(S \ K) is always an Arf special
    // gap of K.
    std::map<NumericalSemigroup, std::vector<integer>> seen;
    std::deque<NumericalSemigroup>                     frontier{H};
    seen.emplace(H, arf_special_gaps(H));
    while (!frontier.empty()) {
      NumericalSemigroup const S = std::move(frontier.front());
      frontier.pop_front();
      for (integer x : seen.at(S)) {
        NumericalSemigroup T = adjoin(S, x);
        if (seen.find(T) == seen.end()) {
          seen.emplace(T, arf_special_gaps(T));
          frontier.push_back(std::move(T));
        }
      }
    }

    OverGraph g;
    g.nodes.reserve(seen.size());
    for (auto const& [S, _] : seen) {
      g.nodes.push_back(S);
    }
    std::sort(g.nodes.begin(), g.nodes.end(), canonical_less);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      for (integer x : seen.at(g.nodes[i])) {
        g.edges.push_back({i, g.index_of(adjoin(g.nodes[i], x)), x});
      }
    }
    return g;
  }

  std::vector<NumericalSemigroup>
  arf_oversemigroups(NumericalSemigroup const& H, std::size_t genus_cap) {
    return over_graph(H, genus_cap).nodes;
  }

  std::vector<NumericalSemigroup> chain_between(NumericalSemigroup const& H1,
                                                NumericalSemigroup const& H2) {
    if (!is_arf(H1) || !is_arf(H2)) {
      throw domain_error("chain_between requires Arf semigroups");
    }
    if (!is_subset(H1, H2)) {
      throw domain_error("chain_between: the first semigroup is not "
                         "contained in the second");
    }
    std::vector<integer> missing;  // H2 \ H1, descending
    for (integer x : gaps(H1)) {
      if (H2.contains(x)) {
        missing.push_back(x);
      }
    }
    std::reverse(missing.begin(), missing.end());

    std::vector<NumericalSemigroup> chain{H1};
    for (integer x : missing) {
      chain.push_back(adjoin(chain.back(), x));
    }
    return chain;
  }

  std::vector<NumericalSemigroup>
  arf_irreducible_oversemigroups(NumericalSemigroup const& H,
                                 std::size_t               genus_cap) {
    auto all = arf_oversemigroups(H, genus_cap);
    std::erase_if(all, [](auto const& S) { return !is_arf_irreducible(S); });
    return all;
  }

  Decomposition decompose_arf_irreducible(NumericalSemigroup const& H,
                                          std::size_t genus_cap) {
    auto const qa = arf_irreducible_oversemigroups(H, genus_cap);

    std::vector<NumericalSemigroup> minimals;
    for (auto const& S : qa) {
      bool const has_smaller = std::any_of(qa.begin(), qa.end(), [&S](auto const& T) {
        return T != S && is_subset(T, S);
      });
      if (!has_smaller) {
        minimals.push_back(S);
      }
    }

    // Greedy removal, last canonical member first.
    for (std::size_t k = minimals.size(); k-- > 0 && minimals.size() > 1;) {
      auto trial = minimals;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
      if (intersect_all(trial) == H) {
        minimals = std::move(trial);
      }
    }

    std::vector<std::pair<std::vector<integer>, NumericalSemigroup>> keyed;
    for (auto& S : minimals) {
      keyed.emplace_back(minimal_generators(S), std::move(S));
    }
    std::sort(keyed.begin(), keyed.end());
    Decomposition d;
    for (auto& [_, S] : keyed) {
      d.factors.push_back(std::move(S));
    }
    return d;
  }

}  // namespace arfsemi
