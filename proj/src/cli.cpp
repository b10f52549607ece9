#include "arfsemi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arfsemi/arf.hpp"
#include "arfsemi/enumeration.hpp"
#include "arfsemi/errors.hpp"
#include "arfsemi/oracle.hpp"

namespace arfsemi::cli {

  namespace {

    using json = nlohmann::ordered_json;

    // Raised for grammar problems detected after CLI11 has parsed argv.
    class usage_error : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    // Raised when --verify finds the fast path and the oracle disagree.
    class verify_error : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::string gens;
      std::string small;
      std::string to;
      std::string format = "text";
      integer     modulus = 0;
      bool        verify  = false;
    };

    struct Context {
      Options const&     opts;
      NumericalSemigroup H;
      std::ostream&      out;
      std::ostream&      err;
    };

    std::string join(std::span<integer const> v, char const* sep = " ") {
      std::ostringstream os;
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? sep : "") << v[i];
      }
      return os.str();
    }

    json semigroup_json(NumericalSemigroup const& S) {
      auto const small = S.small_elements();
      json       j;
      j["small"]    = std::vector<integer>(small.begin(), small.end());
      j["min_gens"] = minimal_generators(S);
      j["frobenius"] = S.frobenius();
      j["genus"]     = genus(S);
      return j;
    }

    json semigroups_json(std::vector<NumericalSemigroup> const& family) {
      json arr = json::array();
      for (auto const& S : family) {
        arr.push_back(semigroup_json(S));
      }
      return arr;
    }

    std::string generators_label(NumericalSemigroup const& S) {
      return "<" + join(minimal_generators(S), ",") + ">";
    }

    void emit_json(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

    template <typename T>
    void check_equal(char const*   what,
                     T const&      fast,
                     T const&      brute,
                     std::ostream& err) {
      if (fast == brute) {
        err << "verify: " << what << " ok\n";
        return;
      }
      std::ostringstream os;
      os << "verify: mismatch in " << what << '\n';
      if constexpr (std::is_same_v<T, std::vector<integer>>) {
        os << "  fast:   " << join(fast) << '\n'
           << "  oracle: " << join(brute) << '\n';
      } else if constexpr (std::is_same_v<T, bool>) {
        os << "  fast:   " << std::boolalpha << fast << '\n'
           << "  oracle: " << brute << '\n';
      } else {
        os << "  fast:   " << fast.size() << " semigroups\n"
           << "  oracle: " << brute.size() << " semigroups\n";
        for (auto const& S : fast) {
          if (std::find(brute.begin(), brute.end(), S) == brute.end()) {
            os << "  only fast:   " << join(S.small_elements()) << '\n';
          }
        }
        for (auto const& S : brute) {
          if (std::find(fast.begin(), fast.end(), S) == fast.end()) {
            os << "  only oracle: " << join(S.small_elements()) << '\n';
          }
        }
      }
      throw verify_error(os.str());
    }

    std::size_t genus_cap_from_env() {
      char const* v = std::getenv("ARFSEMI_GENUS_CAP");
      if (v == nullptr || *v == '\0') {
        return default_genus_cap;
      }
      std::size_t       cap = 0;
      std::string const s(v);
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
      if (ec != std::errc() || p != s.data() + s.size()) {
        throw usage_error("ARFSEMI_GENUS_CAP must be a non-negative integer, got '"
                          + s + "'");
      }
      return cap;
    }

    bool oracle_arf_irreducible(NumericalSemigroup const& S) {
      return S.is_naturals() || oracle::brute_arf_special_gaps(S).size() == 1;
    }

    void print_list(Context const&              ctx,
                    char const*                 key,
                    std::vector<integer> const& v) {
      if (ctx.opts.format == "json") {
        json j;
        j["semigroup"] = semigroup_json(ctx.H);
        j[key]         = v;
        emit_json(ctx.out, j);
      } else {
        ctx.out << join(v) << '\n';
      }
    }

    void print_bool(Context const& ctx, char const* key, bool value) {
      if (ctx.opts.format == "json") {
        json j;
        j["semigroup"] = semigroup_json(ctx.H);
        j[key]         = value;
        emit_json(ctx.out, j);
      } else {
        ctx.out << (value ? "true" : "false") << '\n';
      }
    }

    void print_family(Context const&                         ctx,
                      char const*                            key,
                      std::vector<NumericalSemigroup> const& family) {
      if (ctx.opts.format == "json") {
        json j;
        j["semigroup"] = semigroup_json(ctx.H);
        j[key]         = semigroups_json(family);
        emit_json(ctx.out, j);
      } else {
        for (auto const& S : family) {
          ctx.out << join(minimal_generators(S)) << '\n';
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_info(Context const& ctx) {
      auto const&  H   = ctx.H;
      bool const   arf = is_arf(H);
      if (ctx.opts.verify) {
        check_equal("is_arf", arf, oracle::brute_is_arf(H), ctx.err);
      }
      auto const gens = minimal_generators(H);
      if (ctx.opts.format == "json") {
        json j;
        j["semigroup"]           = semigroup_json(H);
        j["multiplicity"]        = H.multiplicity();
        j["embedding_dimension"] = gens.size();
        j["frobenius"]           = H.frobenius();
        j["conductor"]           = H.conductor();
        j["genus"]               = genus(H);
        j["min_gens"]            = gens;
        j["is_arf"]              = arf;
        j["is_symmetric"]        = is_symmetric(H);
        j["is_pseudo_symmetric"] = is_pseudo_symmetric(H);
        emit_json(ctx.out, j);
        return ok;
      }
      auto& out = ctx.out;
      out << "small: " << join(H.small_elements()) << '\n'
          << "min_gens: " << join(gens) << '\n'
          << "multiplicity: " << H.multiplicity() << '\n'
          << "embedding_dimension: " << gens.size() << '\n'
          << "frobenius: " << H.frobenius() << '\n'
          << "conductor: " << H.conductor() << '\n'
          << "genus: " << genus(H) << '\n'
          << std::boolalpha << "is_arf: " << arf << '\n'
          << "is_symmetric: " << is_symmetric(H) << '\n'
          << "is_pseudo_symmetric: " << is_pseudo_symmetric(H) << '\n'
          << std::noboolalpha;
      return ok;
    }

    int cmd_special_gaps(Context const& ctx) {
      auto const v = special_gaps(ctx.H);
      if (ctx.opts.verify) {
        check_equal("special_gaps", v, oracle::brute_special_gaps(ctx.H), ctx.err);
      }
      print_list(ctx, "special_gaps", v);
      return ok;
    }

    int cmd_arf_special_gaps(Context const& ctx) {
      auto const v = arf_special_gaps(ctx.H);
      if (ctx.opts.verify) {
        check_equal("arf_special_gaps",
                    v,
                    oracle::brute_arf_special_gaps(ctx.H),
                    ctx.err);
      }
      print_list(ctx, "arf_special_gaps", v);
      return ok;
    }

    int cmd_pseudo_frobenius(Context const& ctx) {
      auto const v = pseudo_frobenius(ctx.H);
      if (ctx.opts.verify) {
        check_equal("pseudo_frobenius",
                    v,
                    oracle::brute_pseudo_frobenius(ctx.H),
                    ctx.err);
      }
      print_list(ctx, "pseudo_frobenius", v);
      return ok;
    }

    int cmd_apery(Context const& ctx) {
      AperySet const ap = apery_set(ctx.H, ctx.opts.modulus);
      if (ctx.opts.verify) {
        auto sorted = ap.witnesses;
        std::sort(sorted.begin(), sorted.end());
        check_equal("apery_set",
                    sorted,
                    oracle::brute_apery_set(ctx.H, ctx.opts.modulus),
                    ctx.err);
      }
      if (ctx.opts.format == "json") {
        json j;
        j["semigroup"] = semigroup_json(ctx.H);
        j["modulus"]   = ap.modulus;
        j["witnesses"] = ap.witnesses;
        emit_json(ctx.out, j);
      } else {
        ctx.out << join(ap.witnesses) << '\n';
      }
      return ok;
    }

    int cmd_is_arf(Context const& ctx) {
      bool const v = is_arf(ctx.H);
      if (ctx.opts.verify) {
        check_equal("is_arf", v, oracle::brute_is_arf(ctx.H), ctx.err);
      }
      print_bool(ctx, "is_arf", v);
      return ok;
    }

    int cmd_is_arf_irreducible(Context const& ctx) {
      bool const v = is_arf_irreducible(ctx.H);
      if (ctx.opts.verify) {
        check_equal("is_arf_irreducible", v, oracle_arf_irreducible(ctx.H), ctx.err);
      }
      print_bool(ctx, "is_arf_irreducible", v);
      return ok;
    }

    int cmd_is_irreducible(Context const& ctx) {
      bool const v = is_irreducible(ctx.H);
      if (ctx.opts.verify) {
        // Irreducible exactly when at most one gap can be adjoined.
        check_equal("is_irreducible",
                    v,
                    oracle::brute_special_gaps(ctx.H).size() <= 1,
                    ctx.err);
      }
      print_bool(ctx, "is_irreducible", v);
      return ok;
    }

    int cmd_is_leaf(Context const& ctx) {
      bool const v = is_leaf(ctx.H);
      if (ctx.opts.verify) {
        auto const gens = oracle::brute_minimal_arf_generators(ctx.H);
        check_equal("is_leaf",
                    v,
                    !gens.empty() && gens.back() <= ctx.H.frobenius(),
                    ctx.err);
      }
      print_bool(ctx, "is_leaf", v);
      return ok;
    }

    int cmd_min_arf_gens(Context const& ctx) {
      auto const v = minimal_arf_generators(ctx.H);
      if (ctx.opts.verify) {
        check_equal("minimal_arf_generators",
                    v,
                    oracle::brute_minimal_arf_generators(ctx.H),
                    ctx.err);
      }
      print_list(ctx, "min_arf_gens", v);
      return ok;
    }

    int cmd_over(Context const& ctx) {
      OverGraph const g = over_graph(ctx.H, genus_cap_from_env());
      if (ctx.opts.verify) {
        auto fast = g.nodes;
        std::sort(fast.begin(), fast.end());
        check_equal("arf_oversemigroups",
                    fast,
                    oracle::brute_arf_oversemigroups(ctx.H),
                    ctx.err);
      }
      if (ctx.opts.format == "dot") {
        auto& out = ctx.out;
        out << "digraph arf_oversemigroups {\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
          out << "  n" << i << " [label=\"" << generators_label(g.nodes[i])
              << "\"];\n";
        }
        for (auto const& e : g.edges) {
          out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.gap
              << "\"];\n";
        }
        out << "}\n";
      } else if (ctx.opts.format == "json") {
        json j;
        j["semigroup"] = semigroup_json(ctx.H);
        j["nodes"]     = semigroups_json(g.nodes);
        json edges     = json::array();
        for (auto const& e : g.edges) {
          edges.push_back({{"from", e.from}, {"to", e.to}, {"gap", e.gap}});
        }
        j["edges"] = edges;
        emit_json(ctx.out, j);
      } else {
        print_family(ctx, "nodes", g.nodes);
      }
      return ok;
    }

    int cmd_qa(Context const& ctx) {
      auto const qa = arf_irreducible_oversemigroups(ctx.H, genus_cap_from_env());
      if (ctx.opts.verify) {
        auto brute = oracle::brute_arf_oversemigroups(ctx.H);
        std::erase_if(brute, [](auto const& S) { return !oracle_arf_irreducible(S); });
        auto fast = qa;
        std::sort(fast.begin(), fast.end());
        check_equal("arf_irreducible_oversemigroups", fast, brute, ctx.err);
      }
      print_family(ctx, "members", qa);
      return ok;
    }

    int cmd_decompose(Context const& ctx) {
      auto const d = decompose_arf_irreducible(ctx.H, genus_cap_from_env());
      if (ctx.opts.verify) {
        // Intersection by set membership, factor by factor.
        std::vector<integer> meet;
        for (integer x = 0; x <= ctx.H.conductor(); ++x) {
          if (std::all_of(d.factors.begin(), d.factors.end(), [x](auto const& S) {
                return S.contains(x);
              })) {
            meet.push_back(x);
          }
        }
        check_equal("decomposition intersection",
                    NumericalSemigroup::from_small_elements(meet) == ctx.H,
                    true,
                    ctx.err);
        for (auto const& S : d.factors) {
          check_equal("factor is Arf-irreducible",
                      oracle::brute_is_arf(S) && oracle_arf_irreducible(S),
                      true,
                      ctx.err);
        }
      }
      print_family(ctx, "factors", d.factors);
      return ok;
    }

    int cmd_arf_closure(Context const& ctx) {
      auto const gens    = parse_list(ctx.opts.gens);
      auto const closure = arf_closure(gens);
      if (ctx.opts.verify) {
        check_equal("arf_closure",
                    std::vector<NumericalSemigroup>{closure},
                    std::vector<NumericalSemigroup>{oracle::brute_arf_closure(gens)},
                    ctx.err);
      }
      if (ctx.opts.format == "json") {
        json j;
        j["generators"] = gens;
        j["closure"]    = semigroup_json(closure);
        emit_json(ctx.out, j);
      } else {
        ctx.out << join(minimal_generators(closure)) << '\n';
      }
      return ok;
    }

    NumericalSemigroup parse_to(Options const& opts) {
      std::string       spec = opts.to;
      std::string const gens_prefix  = "gens:";
      std::string const small_prefix = "small:";
      bool              as_gens      = !opts.gens.empty();
      if (spec.rfind(gens_prefix, 0) == 0) {
        spec    = spec.substr(gens_prefix.size());
        as_gens = true;
      } else if (spec.rfind(small_prefix, 0) == 0) {
        spec    = spec.substr(small_prefix.size());
        as_gens = false;
      }
      auto const v = parse_list(spec);
      return as_gens ? NumericalSemigroup::from_generators(v)
                     : NumericalSemigroup::from_small_elements(v);
    }

    int cmd_chain(Context const& ctx) {
      if (ctx.opts.to.empty()) {
        throw usage_error("chain requires --to");
      }
      auto const target = parse_to(ctx.opts);
      auto const chain  = chain_between(ctx.H, target);
      if (ctx.opts.verify) {
        bool steps_ok = chain.front() == ctx.H && chain.back() == target;
        for (std::size_t t = 0; t < chain.size() && steps_ok; ++t) {
          steps_ok = oracle::brute_is_arf(chain[t]);
          if (t > 0) {
            steps_ok = steps_ok
                       && genus(chain[t - 1]) == genus(chain[t]) + 1
                       && is_subset(chain[t - 1], chain[t]);
          }
        }
        check_equal("chain steps", steps_ok, true, ctx.err);
      }
      if (ctx.opts.format == "json") {
        json j;
        j["from"]  = semigroup_json(ctx.H);
        j["to"]    = semigroup_json(target);
        j["chain"] = semigroups_json(chain);
        emit_json(ctx.out, j);
      } else {
        for (auto const& S : chain) {
          ctx.out << join(minimal_generators(S)) << '\n';
        }
      }
      return ok;
    }

    struct Command {
      char const*                        name;
      char const*                        help;
      std::function<int(Context const&)> body;
      bool                               gens_only = false;
      bool                               dot       = false;
      bool                               modulus   = false;
      bool                               target    = false;
    };

    std::vector<Command> const& commands() {
      static std::vector<Command> const list = {
          {"info", "basic invariants", cmd_info},
          {"special-gaps", "special gaps", cmd_special_gaps},
          {"arf-special-gaps", "Arf special gaps", cmd_arf_special_gaps},
          {"pseudo-frobenius", "pseudo-Frobenius numbers", cmd_pseudo_frobenius},
          {"apery", "Apery set with respect to --mod", cmd_apery, false, false, true},
          {"is-arf", "Arf test", cmd_is_arf},
          {"is-arf-irreducible", "Arf-irreducibility test", cmd_is_arf_irreducible},
          {"is-irreducible", "irreducibility test", cmd_is_irreducible},
          {"is-leaf", "leaf test in the tree of Arf semigroups", cmd_is_leaf},
          {"arf-closure", "Arf closure of --gens", cmd_arf_closure, true},
          {"min-arf-gens", "minimal Arf system of generators", cmd_min_arf_gens},
          {"over", "all Arf oversemigroups", cmd_over, false, true},
          {"qa", "Arf-irreducible oversemigroups", cmd_qa},
          {"decompose", "decomposition into Arf-irreducibles", cmd_decompose},
          {"chain", "max-gap chain up to --to", cmd_chain, false, false, false, true},
      };
      return list;
    }

    int report(std::ostream& err, char const* kind, std::string const& what, int code) {
      err << "arfsemi: " << kind << ": " << what;
      if (what.empty() || what.back() != '\n') {
        err << '\n';
      }
      return code;
    }

  }  // namespace

  std::vector<integer> parse_list(std::string const& text) {
    std::string compact;
    std::copy_if(text.begin(), text.end(), std::back_inserter(compact), [](char c) {
      return !std::isspace(static_cast<unsigned char>(c));
    });
    if (compact.empty()) {
      throw input_error("empty integer list");
    }
    std::vector<integer> out;
    std::size_t          pos = 0;
    while (true) {
      std::size_t const end  = compact.find(',', pos);
      std::string const item = compact.substr(pos, end - pos);
      integer           v    = 0;
      auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
        throw input_error("not an integer: '" + item + "'");
      }
      out.push_back(v);
      if (end == std::string::npos) {
        break;
      }
      pos = end + 1;
    }
    return out;
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Arf numerical semigroup toolkit", "arfsemi"};
    app.require_subcommand(1);
    Options opts;

    std::map<CLI::App*, Command const*> by_sub;
    for (auto const& cmd : commands()) {
      CLI::App* sub    = app.add_subcommand(cmd.name, cmd.help);
      auto*     gens   = sub->add_option("--gens", opts.gens, "generators a,b,c");
      if (!cmd.gens_only) {
        auto* small = sub->add_option("--small", opts.small, "small elements 0,a,b");
        gens->excludes(small);
      }
      std::vector<std::string> formats{"text", "json"};
      if (cmd.dot) {
        formats.emplace_back("dot");
      }
      sub->add_option("--format", opts.format, "output format")
          ->check(CLI::IsMember(formats));
      sub->add_flag("--verify", opts.verify, "cross-check against the brute-force oracle");
      if (cmd.modulus) {
        sub->add_option("--mod", opts.modulus, "modulus h")->required();
      }
      if (cmd.target) {
        sub->add_option("--to", opts.to, "target semigroup: [gens:|small:]a,b,c")
            ->required();
      }
      by_sub[sub] = &cmd;
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, out, err);
        return ok;
      }
      return report(err, "usage error", e.what(), usage_failure);
    }

    Command const* cmd = by_sub.at(app.get_subcommands().front());
    try {
      if (opts.gens.empty() && opts.small.empty()) {
        throw usage_error(std::string(cmd->name) + " requires --gens"
                          + (cmd->gens_only ? "" : " or --small"));
      }
      NumericalSemigroup H;
      if (!opts.gens.empty()) {
        H = NumericalSemigroup::from_generators(parse_list(opts.gens));
      } else {
        H = NumericalSemigroup::from_small_elements(parse_list(opts.small));
      }
      return cmd->body(Context{opts, std::move(H), out, err});
    } catch (usage_error const& e) {
      return report(err, "usage error", e.what(), usage_failure);
    } catch (input_error const& e) {
      return report(err, "input error", e.what(), usage_failure);
    } catch (verify_error const& e) {
      return report(err, "verify failed", e.what(), domain_failure);
    } catch (domain_error const& e) {
      return report(err, "domain error", e.what(), domain_failure);
    } catch (limit_error const& e) {
      return report(err, "limit", e.what(), domain_failure);
    }
  }

}  // namespace arfsemi::cli
