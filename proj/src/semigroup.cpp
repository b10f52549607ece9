#include "arfsemi/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arfsemi/errors.hpp"

namespace arfsemi {

  namespace {

    std::vector<integer> normalised(std::span<integer const> values) {
      std::vector<integer> out(values.begin(), values.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

  }  // namespace

  NumericalSemigroup
  NumericalSemigroup::from_generators(std::span<integer const> gens) {
    if (gens.empty()) {
      throw input_error("empty generator list");
    }
    std::vector<integer> g = normalised(gens);
    if (g.front() <= 0) {
      throw input_error("generators must be positive, got "
                        + std::to_string(g.front()));
    }
    if (g.back() >= max_input_value) {
      throw input_error("generator " + std::to_string(g.back())
                        + " is too large");
    }
    integer d = 0;
    for (integer x : g) {
      d = std::gcd(d, x);
    }
    if (d != 1) {
      throw input_error("not a numerical semigroup (infinite complement): "
                        "generators have gcd "
                        + std::to_string(d));
    }
    integer const m = g.front();
    // c(H) <= (m - 1)(max - 1) for gcd 1.
    if ((m - 1) * (g.back() - 1) > max_conductor) {
      throw input_error("conductor of the generated semigroup may exceed "
                        + std::to_string(max_conductor));
    }

    // Sieve until a run of m consecutive members certifies the conductor.
    std::vector<bool> member;
    integer           run = 0;
    integer           x   = 0;
    for (;; ++x) {
      bool in = (x == 0);
      for (auto it = g.begin(); !in && it != g.end() && *it <= x; ++it) {
        in = member[x - *it];
      }
      member.push_back(in);
      run = in ? run + 1 : 0;
      if (run == m) {
        break;
      }
    }
    member.resize(x - m + 1);
    return semigroup_from_membership(member);
  }

  NumericalSemigroup
  NumericalSemigroup::from_small_elements(std::span<integer const> elems) {
    if (elems.empty()) {
      throw input_error("empty small-element list");
    }
    std::vector<integer> s = normalised(elems);
    if (s.front() < 0) {
      throw input_error("negative element " + std::to_string(s.front()));
    }
    if (s.front() != 0) {
      throw input_error("0 must be an element");
    }
    if (s.back() > max_conductor) {
      throw input_error("element " + std::to_string(s.back())
                        + " is too large");
    }
    // Trim the consecutive tail down to the conductor.
    std::size_t last = s.size() - 1;
    while (last > 0 && s[last - 1] == s[last] - 1) {
      --last;
    }
    s.resize(last + 1);
    integer const c = s.back();

    std::vector<bool> member(c, false);
    for (integer x : s) {
      if (x < c) {
        member[x] = true;
      }
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
      for (std::size_t j = i; j < s.size() && s[i] + s[j] < c; ++j) {
        if (!member[s[i] + s[j]]) {
          throw input_error("not closed under addition: "
                            + std::to_string(s[i]) + " + "
                            + std::to_string(s[j]) + " is missing");
        }
      }
    }
    return NumericalSemigroup(trusted_tag{}, std::move(s));
  }

  bool NumericalSemigroup::contains(integer x) const noexcept {
    if (x < 0) {
      return false;
    }
    if (x >= conductor()) {
      return true;
    }
    return std::binary_search(_small.begin(), _small.end(), x);
  }

  NumericalSemigroup semigroup_from_membership(std::vector<bool> const& member) {
    integer c = static_cast<integer>(member.size());
    while (c > 0 && member[c - 1]) {
      --c;
    }
    std::vector<integer> small;
    for (integer x = 0; x < c; ++x) {
      if (member[x]) {
        small.push_back(x);
      }
    }
    small.push_back(c);
    return NumericalSemigroup(NumericalSemigroup::trusted_tag{},
                              std::move(small));
  }

  std::vector<bool> membership(NumericalSemigroup const& H, integer bound) {
    std::vector<bool> member(std::max<integer>(bound, 0), false);
    for (integer x : H.small_elements()) {
      if (x >= bound) {
        return member;
      }
      member[x] = true;
    }
    for (integer x = H.conductor(); x < bound; ++x) {
      member[x] = true;
    }
    return member;
  }

  std::vector<integer> minimal_generators(NumericalSemigroup const& H) {
    // Every minimal generator is below c(H) + m(H).
    integer const     bound  = std::max<integer>(H.conductor() + H.multiplicity(), 2);
    std::vector<bool> member = membership(H, bound);
    std::vector<integer> result;
    for (integer x = 1; x < bound; ++x) {
      if (!member[x]) {
        continue;
      }
      bool decomposable = false;
      for (integer a = 1; 2 * a <= x && !decomposable; ++a) {
        decomposable = member[a] && member[x - a];
      }
      if (!decomposable) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::size_t embedding_dimension(NumericalSemigroup const& H) {
    return minimal_generators(H).size();
  }

  std::size_t genus(NumericalSemigroup const& H) {
    return static_cast<std::size_t>(H.conductor())
           - (H.small_elements().size() - 1);
  }

  std::vector<integer> gaps(NumericalSemigroup const& H) {
    std::vector<integer> result;
    result.reserve(genus(H));
    auto const small = H.small_elements();
    for (std::size_t i = 0; i + 1 < small.size(); ++i) {
      for (integer x = small[i] + 1; x < small[i + 1]; ++x) {
        result.push_back(x);
      }
    }
    return result;
  }

  AperySet apery_set(NumericalSemigroup const& H, integer h) {
    if (h <= 0 || !H.contains(h)) {
      throw domain_error("Apery set modulus " + std::to_string(h)
                         + " is not a positive element of the semigroup");
    }
    AperySet ap{h, std::vector<integer>(h, -1)};
    integer  found = 0;
    for (integer x = 0; found < h; ++x) {
      if (H.contains(x) && ap.witnesses[x % h] < 0) {
        ap.witnesses[x % h] = x;
        ++found;
      }
    }
    return ap;
  }

  std::vector<integer> pseudo_frobenius(NumericalSemigroup const& H) {
    auto const small = H.small_elements();
    std::vector<integer> result;
    for (integer g : gaps(H)) {
      bool maximal = true;
      for (std::size_t i = 1; i < small.size() && maximal; ++i) {
        maximal = H.contains(g + small[i]);
      }
      if (maximal) {
        result.push_back(g);
      }
    }
    return result;
  }

  std::vector<integer> special_gaps(NumericalSemigroup const& H) {
    std::vector<integer> result;
    for (integer x : pseudo_frobenius(H)) {
      if (H.contains(2 * x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  GapReport gap_report(NumericalSemigroup const& H) {
    GapReport r;
    r.frobenius        = H.frobenius();
    r.gaps             = gaps(H);
    r.pseudo_frobenius = pseudo_frobenius(H);
    r.special_gaps     = special_gaps(H);
    r.genus            = r.gaps.size();
    return r;
  }

  NumericalSemigroup intersect(NumericalSemigroup const& H1,
                               NumericalSemigroup const& H2) {
    integer const     c = std::max(H1.conductor(), H2.conductor());
    std::vector<bool> member(c);
    for (integer x = 0; x < c; ++x) {
      member[x] = H1.contains(x) && H2.contains(x);
    }
    return semigroup_from_membership(member);
  }

  bool is_subset(NumericalSemigroup const& H1, NumericalSemigroup const& H2) {
    if (H1.conductor() < H2.conductor()) {
      for (integer x = H1.conductor(); x < H2.conductor(); ++x) {
        if (!H2.contains(x)) {
          return false;
        }
      }
    }
    return std::all_of(H1.small_elements().begin(),
                       H1.small_elements().end(),
                       [&H2](integer x) { return H2.contains(x); });
  }

  NumericalSemigroup adjoin(NumericalSemigroup const& H, integer x) {
    auto const sg = special_gaps(H);
    if (!std::binary_search(sg.begin(), sg.end(), x)) {
      throw domain_error(std::to_string(x)
                         + " is not a special gap of the semigroup");
    }
    std::vector<bool> member = membership(H, H.conductor());
    member[x]                = true;
    return semigroup_from_membership(member);
  }

  RemovalResult remove_element(NumericalSemigroup const& H, integer a) {
    if (a == 0 || !H.contains(a)) {
      throw domain_error(std::to_string(a)
                         + " is not a nonzero element of the semigroup");
    }
    // Only the sums equal to a can be lost.
    for (integer x = 1; 2 * x <= a; ++x) {
      if (H.contains(x) && H.contains(a - x)) {
        return ClosureFailure{a, x, a - x};
      }
    }
    std::vector<bool> member = membership(H, std::max(a, H.conductor()) + 1);
    member[a]                = false;
    return semigroup_from_membership(member);
  }

  bool is_symmetric(NumericalSemigroup const& H) {
    integer const f = H.frobenius();
    for (integer x : gaps(H)) {
      if (!H.contains(f - x)) {
        return false;
      }
    }
    return true;
  }

  bool is_pseudo_symmetric(NumericalSemigroup const& H) {
    integer const f = H.frobenius();
    if (f < 0 || f % 2 != 0) {
      return false;
    }
    for (integer x : gaps(H)) {
      if (!H.contains(f - x) && 2 * x != f) {
        return false;
      }
    }
    return true;
  }

  bool is_irreducible(NumericalSemigroup const& H) {
    return is_symmetric(H) || is_pseudo_symmetric(H);
  }

}  // namespace arfsemi
