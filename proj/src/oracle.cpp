#include "arfsemi/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arfsemi/errors.hpp"

namespace arfsemi::oracle {

  namespace {

    // table[x] for x < table.size(); everything beyond is a member.
    using Table = std::vector<bool>;

    bool in(Table const& t, integer x) {
      return x >= static_cast<integer>(t.size()) || (x >= 0 && t[x]);
    }

    std::vector<integer> members(Table const& t) {
      std::vector<integer> out;
      for (integer x = 0; x < static_cast<integer>(t.size()); ++x) {
        if (t[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool semigroup_axioms(Table const& t) {
      if (!in(t, 0)) {
        return false;
      }
      auto const e = members(t);
      for (integer a : e) {
        for (integer b : e) {
          if (!in(t, a + b)) {
            return false;
          }
        }
      }
      return true;
    }

    bool arf_axiom(Table const& t) {
      auto const e = members(t);
      for (integer a : e) {
        for (integer b : e) {
          for (integer c : e) {
            if (a >= b && b >= c && !in(t, a + b - c)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    integer scan_bound(NumericalSemigroup const& H) {
      return 2 * H.conductor() + 2;
    }

    Table table_of(NumericalSemigroup const& H, integer bound) {
      Table t(bound, false);
      for (integer x = 0; x < bound; ++x) {
        t[x] = H.contains(x);
      }
      return t;
    }

    Table table_of(std::set<integer> const& elems, integer bound) {
      Table t(std::max<integer>(bound, 0), false);
      for (integer x : elems) {
        if (x >= 0 && x < bound) {
          t[x] = true;
        }
      }
      return t;
    }

    NumericalSemigroup to_semigroup(Table const& t) {
      std::vector<integer> small = members(t);
      small.push_back(static_cast<integer>(t.size()));
      return NumericalSemigroup::from_small_elements(small);
    }

    std::vector<integer> gaps_of(Table const& t) {
      std::vector<integer> g;
      for (integer x = 0; x < static_cast<integer>(t.size()); ++x) {
        if (!t[x]) {
          g.push_back(x);
        }
      }
      return g;
    }

    void check_genus(std::size_t g) {
      if (g > max_brute_genus) {
        throw limit_error("brute-force enumeration refused: genus "
                          + std::to_string(g) + " exceeds "
                          + std::to_string(max_brute_genus));
      }
    }

    // Calls f(table) for every superset of `base` obtained by switching on a
    // subset of `free`.
    template <typename F>
    void for_each_extension(Table const&                base,
                            std::vector<integer> const& free,
                            F&&                         f) {
      std::uint64_t const count = std::uint64_t(1) << free.size();
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        Table t = base;
        for (std::size_t k = 0; k < free.size(); ++k) {
          if (mask >> k & 1) {
            t[free[k]] = true;
          }
        }
        f(t);
      }
    }

  }  // namespace

  bool brute_is_semigroup(std::set<integer> const& elems, integer bound) {
    return semigroup_axioms(table_of(elems, bound));
  }

  bool brute_is_arf(std::set<integer> const& elems, integer bound) {
    return arf_axiom(table_of(elems, bound));
  }

  bool brute_is_arf(NumericalSemigroup const& H) {
    return arf_axiom(table_of(H, scan_bound(H)));
  }

  std::vector<integer> brute_pseudo_frobenius(NumericalSemigroup const& H) {
    Table const          t = table_of(H, H.conductor());
    auto const           g = gaps_of(t);
    std::vector<integer> out;
    for (integer x : g) {
      bool maximal = true;
      for (integer y : g) {
        if (y > x && in(t, y - x)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<integer> brute_apery_set(NumericalSemigroup const& H, integer h) {
    if (h <= 0 || !H.contains(h)) {
      throw domain_error(std::to_string(h) + " is not a positive element");
    }
    // Beyond c(H) + h every x has x - h in H.
    std::vector<integer> out;
    for (integer x = 0; x < H.conductor() + h; ++x) {
      if (H.contains(x) && !H.contains(x - h)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<integer> brute_special_gaps(NumericalSemigroup const& H) {
    Table const          t = table_of(H, scan_bound(H));
    std::vector<integer> out;
    for (integer x = 1; x < H.conductor(); ++x) {
      if (!t[x]) {
        Table u = t;
        u[x]    = true;
        if (semigroup_axioms(u)) {
          out.push_back(x);
        }
      }
    }
    return out;
  }

  std::vector<integer> brute_arf_special_gaps(NumericalSemigroup const& H) {
    Table const          t = table_of(H, scan_bound(H));
    std::vector<integer> out;
    for (integer x = 1; x < H.conductor(); ++x) {
      if (!t[x]) {
        Table u = t;
        u[x]    = true;
        if (semigroup_axioms(u) && arf_axiom(u)) {
          out.push_back(x);
        }
      }
    }
    return out;
  }

  std::vector<NumericalSemigroup>
  brute_arf_oversemigroups(NumericalSemigroup const& H) {
    Table const base = table_of(H, H.conductor());
    auto const  free = gaps_of(base);
    check_genus(free.size());
    std::vector<NumericalSemigroup> out;
    for_each_extension(base, free, [&out](Table const& t) {
      if (semigroup_axioms(t) && arf_axiom(t)) {
        out.push_back(to_semigroup(t));
      }
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<integer> brute_minimal_arf_generators(NumericalSemigroup const& H) {
    Table const          t = table_of(H, scan_bound(H) + 2);
    std::vector<integer> candidates(H.small_elements().begin() + 1,
                                    H.small_elements().end());
    candidates.push_back(H.frobenius() + 2);
    std::vector<integer> out;
    for (integer a : candidates) {
      Table u = t;
      u[a]    = false;
      if (semigroup_axioms(u) && arf_axiom(u)) {
        out.push_back(a);
      }
    }
    return out;
  }

  NumericalSemigroup brute_arf_closure(std::span<integer const> gens) {
    if (gens.empty()) {
      throw input_error("empty generator list");
    }
    integer d = 0, lo = gens.front(), hi = gens.front();
    for (integer g : gens) {
      if (g <= 0) {
        throw input_error("generators must be positive");
      }
      d  = std::gcd(d, g);
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
    if (d != 1) {
      throw input_error("generators have gcd " + std::to_string(d));
    }

    // The Frobenius number of <gens> is below lo * hi.
    integer const bound = lo * hi + 1;
    Table         reach(bound, false);
    reach[0] = true;
    for (integer x = 1; x < bound; ++x) {
      for (integer g : gens) {
        if (g <= x && reach[x - g]) {
          reach[x] = true;
          break;
        }
      }
    }
    integer c = bound;
    while (c > 0 && reach[c - 1]) {
      --c;
    }
    reach.resize(c);

    auto const free = gaps_of(reach);
    check_genus(free.size());
    Table closure(c, true);
    for_each_extension(reach, free, [&closure](Table const& t) {
      if (semigroup_axioms(t) && arf_axiom(t)) {
        for (std::size_t x = 0; x < t.size(); ++x) {
          closure[x] = closure[x] && t[x];
        }
      }
    });
    return to_semigroup(closure);
  }

}  // namespace arfsemi::oracle
