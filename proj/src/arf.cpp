#include "arfsemi/arf.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "arfsemi/errors.hpp"

namespace arfsemi {

  namespace {

    void require_arf(NumericalSemigroup const& H, char const* op) {
      if (!is_arf(H)) {
        throw domain_error(std::string(op) + ": the semigroup is not Arf");
      }
    }

    void require_arf_proper(NumericalSemigroup const& H, char const* op) {
      require_arf(H, op);
      if (H.is_naturals()) {
        throw domain_error(std::string(op)
                           + ": not defined for the naturals");
      }
    }

    integer effective_conductor(std::vector<bool> const& member) {
      integer c = static_cast<integer>(member.size());
      while (c > 0 && member[c - 1]) {
        --c;
      }
      return c;
    }

  }  // namespace

  bool ArfSequence::is_valid() const {
    integer tail = 0;  // x_{j+1} + ... + x_n
    for (std::size_t j = diffs.size(); j-- > 0;) {
      integer const x = diffs[j];
      if (x <= 0) {
        return false;
      }
      if (x < tail) {
        integer partial = 0;
        bool    hit     = false;
        for (std::size_t k = j + 1; k < diffs.size() && partial < x; ++k) {
          partial += diffs[k];
          hit = (partial == x);
        }
        if (!hit) {
          return false;
        }
      }
      tail += x;
    }
    return true;
  }

  NumericalSemigroup ArfSequence::to_semigroup() const {
    if (!is_valid()) {
      throw domain_error("not a valid Arf sequence");
    }
    std::vector<integer> small{0};
    for (integer x : diffs) {
      small.push_back(small.back() + x);
    }
    return NumericalSemigroup::from_small_elements(small);
  }

  bool is_arf(NumericalSemigroup const& H) {
    auto const s = H.small_elements();
    // Pairs with a >= c(H) give 2a - b >= a, always in H.
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (!H.contains(2 * s[i] - s[j])) {
          return false;
        }
      }
    }
    return true;
  }

  NumericalSemigroup arf_closure(std::span<integer const> gens) {
    NumericalSemigroup const start = NumericalSemigroup::from_generators(gens);
    std::vector<bool>        member = membership(start, start.conductor());

    // Everything added here is forced in any Arf semigroup containing the
    // current set, and all additions are gaps of `start`, so this reaches the
    // least Arf container after finitely many passes.
    bool changed = true;
    while (changed) {
      changed         = false;
      integer const c = effective_conductor(member);
      std::vector<integer> elems;
      for (integer x = 0; x < c; ++x) {
        if (member[x]) {
          elems.push_back(x);
        }
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          integer const a = elems[i], b = elems[j];
          for (integer y : {a + b, 2 * a - b}) {
            if (y < c && !member[y]) {
              member[y] = true;
              changed   = true;
            }
          }
        }
      }
    }
    return semigroup_from_membership(member);
  }

  ArfSequence arf_sequence(NumericalSemigroup const& H) {
    require_arf_proper(H, "arf_sequence");
    auto const  s = H.small_elements();
    ArfSequence seq;
    for (std::size_t i = 1; i < s.size(); ++i) {
      seq.diffs.push_back(s[i] - s[i - 1]);
    }
    return seq;
  }

  std::vector<integer> arf_special_gaps(NumericalSemigroup const& H) {
    require_arf(H, "arf_special_gaps");
    auto const           s = H.small_elements();
    std::vector<integer> result;
    // Each special gap lies strictly between two consecutive small elements
    // h_i < x < h_{i+1}; keep it when 2x - h_i and 2h_{i+1} - x are in H.
    std::size_t i = 0;
    for (integer x : special_gaps(H)) {
      while (s[i + 1] < x) {
        ++i;
      }
      if (H.contains(2 * x - s[i]) && H.contains(2 * s[i + 1] - x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  NumericalSemigroup adjoin_arf(NumericalSemigroup const& H, integer x) {
    auto const ag = arf_special_gaps(H);
    if (!std::binary_search(ag.begin(), ag.end(), x)) {
      throw domain_error(std::to_string(x)
                         + " is not an Arf special gap of the semigroup");
    }
    return adjoin(H, x);
  }

  bool is_arf_irreducible(NumericalSemigroup const& H) {
    require_arf(H, "is_arf_irreducible");
    return H.is_naturals() || arf_special_gaps(H).size() == 1;
  }

  std::vector<integer> minimal_arf_generators(NumericalSemigroup const& H) {
    require_arf_proper(H, "minimal_arf_generators");
    // h[0..n] are the small elements and x[0] = 0 is a sentinel, so the
    // tail sum x_{j+1} + ... + x_i equals h[i] - h[j].
    auto const           h = H.small_elements();
    std::size_t const    n = h.size() - 1;
    std::vector<integer> x(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      x[i] = h[i] - h[i - 1];
    }

    std::vector<integer> result;
    for (std::size_t i = 1; i <= n; ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < i && keep; ++j) {
        keep = x[j] != h[i] - h[j];
      }
      if (keep) {
        result.push_back(h[i]);
      }
    }
    bool keep_last = true;
    for (std::size_t j = 0; j <= n && keep_last; ++j) {
      keep_last = x[j] != h[n] - h[j] + 1;
    }
    if (keep_last) {
      result.push_back(h[n] + 1);
    }
    return result;
  }

  bool is_leaf_by_sequence(ArfSequence const& seq) {
    auto const& x         = seq.diffs;
    bool        equal     = false;
    bool        off_by_1  = false;
    integer     tail      = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
      equal    = equal || x[i] == tail;
      off_by_1 = off_by_1 || x[i] == tail + 1;
      tail += x[i];
    }
    return equal && off_by_1;
  }

  bool is_leaf(NumericalSemigroup const& H) {
    bool const by_sequence = is_leaf_by_sequence(arf_sequence(H));
#ifndef NDEBUG
    auto const gens = minimal_arf_generators(H);
    assert(by_sequence == (gens.back() <= H.frobenius()));
#endif
    return by_sequence;
  }

  IrreducibleOverlap
  classify_arf_irreducible_overlap(NumericalSemigroup const& H) {
    bool const arf_irreducible = is_arf_irreducible(H);
    bool const irreducible     = is_irreducible(H);

    static NumericalSemigroup const s345 = NumericalSemigroup::from_small_elements(
        std::vector<integer>{0, 3});
    static NumericalSemigroup const s357 = NumericalSemigroup::from_small_elements(
        std::vector<integer>{0, 3, 5});
    bool const listed = H.multiplicity() <= 2 || H == s345 || H == s357;

    if (listed != (irreducible && arf_irreducible)
        || (irreducible && !arf_irreducible)) {
      throw std::logic_error("irreducibility classification is inconsistent");
    }
    if (listed) {
      return IrreducibleOverlap::both;
    }
    return arf_irreducible ? IrreducibleOverlap::arf_irreducible_only
                           : IrreducibleOverlap::not_arf_irreducible;
  }

  char const* to_string(IrreducibleOverlap v) noexcept {
    switch (v) {
      case IrreducibleOverlap::both:
        return "both";
      case IrreducibleOverlap::arf_irreducible_only:
        return "arf_irreducible_only";
      case IrreducibleOverlap::not_arf_irreducible:
        return "not_arf_irreducible";
    }
    return "unknown";
  }

}  // namespace arfsemi
