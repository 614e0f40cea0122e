// formcheck: group queries and verification sweeps from the command line.

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "formcheck/catalog.hpp"
#include "formcheck/construct.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/formation.hpp"
#include "formcheck/group_io.hpp"
#include "formcheck/lattice.hpp"
#include "formcheck/report.hpp"
#include "formcheck/subgroups.hpp"
#include "formcheck/subnormal.hpp"
#include "formcheck/verify.hpp"

using namespace formcheck;

namespace {

  constexpr int exit_config = 3;

  struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::string              source;
    std::string              formation;
    std::string              sigma;
    std::string              format = "text";
    std::string              kind   = "kf";
    std::string              gens;
    std::string              claim;
    std::vector<std::string> inputs;
    std::size_t              max_order      = 48;
    std::size_t              order_cap      = default_order_cap;
    std::uint64_t            budget         = default_search_budget;
    std::size_t              lattice_budget = default_lattice_budget;
    unsigned                 threads        = 0;
    std::uint32_t            seed           = 1;
    bool                     timing         = false;
  };

  bool json_out(Options const& o) {
    return o.format == "json";
  }

  std::optional<SigmaPartition> sigma_of(Options const& o) {
    if (o.sigma.empty()) {
      return std::nullopt;
    }
    try {
      return SigmaPartition::parse(o.sigma);
    } catch (Error const& e) {
      throw ConfigError(std::string("bad --sigma: ") + e.what());
    }
  }

  // sigma goes with sigma-nilpotent and nothing else
  std::optional<Formation> formation_of(Options const& o, bool required) {
    auto sigma = sigma_of(o);
    if (o.formation.empty()) {
      if (required) {
        throw ConfigError("--formation is required");
      }
      return std::nullopt;
    }
    bool is_sigma = o.formation == "sigma-nilpotent";
    if (is_sigma && !sigma) {
      throw ConfigError("--formation sigma-nilpotent needs --sigma");
    }
    if (!is_sigma && sigma) {
      throw ConfigError("--sigma only applies to --formation sigma-nilpotent");
    }
    try {
      return formation_from_selector(o.formation, sigma);
    } catch (UnknownFormation const& e) {
      throw ConfigError(e.what());
    }
  }

  Group load(Options const& o) {
    std::string src = o.source.empty() && !o.inputs.empty() ? o.inputs.front()
                                                            : o.source;
    if (src.empty()) {
      throw ConfigError("no group given (selector, file, or --input)");
    }
    return load_group(src, o.order_cap);
  }

  std::vector<Elem> parse_gens(std::string const& text, Group const& g) {
    std::vector<Elem> out;
    std::string       tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) {
        continue;
      }
      unsigned long v   = 0;
      auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ConfigError("bad generator index '" + tok + "'");
      }
      if (v >= g.order()) {
        throw ConfigError("generator index " + tok + " out of range (order "
                          + std::to_string(g.order()) + ")");
      }
      out.push_back(Elem(v));
    }
    return out;
  }

  std::string element_name(Group const& g, Elem x) {
    if (g.has_permutations()) {
      return cycle_notation(g.permutation(x));
    }
    return "e" + std::to_string(x);
  }

  std::string list_members(Subgroup const& h) {
    std::string out = "{";
    for (std::size_t i = 0; i < h.members().size(); ++i) {
      out += (i ? " " : "") + std::to_string(h.members()[i]);
    }
    return out + "}";
  }

  std::string join_sizes(std::vector<std::size_t> const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
  }

  int cmd_group_show(Options const& o) {
    auto g       = load(o);
    auto normals = normal_subgroups(g);
    auto chief   = chief_series_through(g, normals, Subgroup::trivial(g.order()));
    std::vector<std::size_t> chief_orders;
    for (auto const& t : chief.terms) {
      chief_orders.push_back(t.order());
    }
    auto z    = center(g);
    auto phi  = frattini(g);
    bool nil  = is_nilpotent(g);
    bool sup  = is_supersoluble(g);
    bool sol  = is_soluble(g);

    std::optional<SubgroupLattice> lattice;
    if (g.order() <= o.lattice_budget) {
      lattice = all_subgroups(g, o.lattice_budget);
    }

    if (json_out(o)) {
      ojson j;
      j["group"]        = g.label();
      j["order"]        = g.order();
      j["center_order"] = z.order();
      j["normal_subgroups"] = ojson::array();
      for (auto const& n : normals) {
        j["normal_subgroups"].push_back(n.members());
      }
      j["chief_series_orders"] = chief_orders;
      j["chief_factor_orders"] = chief.factor_orders();
      j["frattini"]            = phi.members();
      j["nilpotent"]           = nil;
      j["supersoluble"]        = sup;
      j["soluble"]             = sol;
      if (lattice) {
        j["lattice"] = {{"subgroups", lattice->size()},
                        {"conjugacy_classes", lattice->conjugacy_classes().size()}};
      } else {
        j["lattice"] = nullptr;
      }
      j["elements"] = ojson::array();
      for (Elem x = 0; x < g.order(); ++x) {
        j["elements"].push_back({{"index", x},
                                 {"order", g.element_order(x)},
                                 {"name", element_name(g, x)}});
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << "group: " << g.label() << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "center size: " << z.order() << "\n";
    std::cout << "normal subgroups: " << normals.size() << "\n";
    for (auto const& n : normals) {
      std::cout << "  " << n.order() << " " << list_members(n) << "\n";
    }
    std::cout << "chief series: " << join_sizes(chief_orders) << "\n";
    std::cout << "chief factors: " << join_sizes(chief.factor_orders()) << "\n";
    std::cout << "frattini: " << phi.order() << " " << list_members(phi) << "\n";
    std::cout << "nilpotent: " << std::boolalpha << nil << "\n";
    std::cout << "supersoluble: " << sup << "\n";
    std::cout << "soluble: " << sol << "\n";
    if (lattice) {
      std::cout << "lattice: " << lattice->size() << " subgroups in "
                << lattice->conjugacy_classes().size() << " conjugacy classes\n";
    } else {
      std::cout << "lattice: not built (order above lattice budget "
                << o.lattice_budget << ")\n";
    }
    std::cout << "elements:\n";
    for (Elem x = 0; x < g.order(); ++x) {
      std::cout << "  " << x << "  order " << g.element_order(x) << "  "
                << element_name(g, x) << "\n";
    }
    return 0;
  }

  int cmd_group_dump(Options const& o) {
    std::cout << dump_table(load(o));
    return 0;
  }

  void print_subgroup(Options const&     o,
                      std::string const& what,
                      Group const&       g,
                      Subgroup const&    h) {
    if (json_out(o)) {
      ojson j;
      j["group"]     = g.label();
      j[what]        = h.members();
      j["order"]     = h.order();
      j["formation"] = o.formation;
      std::cout << j.dump() << "\n";
      return;
    }
    std::cout << what << ": order " << h.order() << " " << list_members(h)
              << "\n";
  }

  int cmd_residual(Options const& o) {
    auto f = *formation_of(o, true);
    auto g = load(o);
    print_subgroup(o, "residual", g, residual(g, f));
    return 0;
  }

  int cmd_hypercentre(Options const& o) {
    auto f = *formation_of(o, true);
    auto g = load(o);
    print_subgroup(o, "hypercentre", g, f_hypercentre(g, f));
    return 0;
  }

  int cmd_subnormal(Options const& o) {
    auto g = load(o);
    auto a = generate(g, parse_gens(o.gens, g));
    std::optional<WitnessChain> chain;
    if (o.kind == "subnormal") {
      chain = is_subnormal(g, a);
    } else if (o.kind == "sigma") {
      auto sigma = sigma_of(o);
      if (!sigma) {
        throw ConfigError("--kind sigma needs --sigma");
      }
      chain = is_sigma_subnormal(g, a, *sigma, o.lattice_budget);
    } else {
      auto f = *formation_of(o, true);
      chain  = o.kind == "kf" ? is_k_f_subnormal(g, a, f, o.lattice_budget)
                              : is_f_subnormal(g, a, f, o.lattice_budget);
    }
    if (json_out(o)) {
      ojson j;
      j["group"]    = g.label();
      j["subgroup"] = a.members();
      j["kind"]     = o.kind;
      j["chain"]    = chain ? ojson(chain->to_string()) : ojson(nullptr);
      j["orders"]   = ojson::array();
      if (chain) {
        for (auto const& t : chain->terms) {
          j["orders"].push_back(t.order());
        }
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    std::cout << (chain ? chain->to_string() : std::string("NEGATIVE")) << "\n";
    return 0;
  }

  int cmd_verify(Options const& o) {
    RunConfig cfg;
    cfg.formation = formation_of(o, false);
    cfg.sigma     = sigma_of(o);
    cfg.timing    = o.timing;
    cfg.opts.lattice_budget = o.lattice_budget;
    cfg.opts.search_budget  = o.budget;
    cfg.opts.order_cap      = o.order_cap;
    cfg.opts.threads        = o.threads;
    cfg.opts.seed           = o.seed;
    if (o.max_order > o.order_cap) {
      throw ConfigError("--max-order exceeds --order-cap");
    }
    std::vector<std::filesystem::path> files(o.inputs.begin(), o.inputs.end());
    auto catalog = catalog_generate(o.max_order, files, o.order_cap);
    auto reports = run_claim(o.claim, catalog, cfg);
    if (json_out(o)) {
      std::cout << reports_to_json(reports).dump(2) << "\n";
    } else {
      std::cout << reports_to_text(reports);
    }
    return exit_code(reports);
  }

  void add_common(CLI::App* sub, Options& o, bool with_source) {
    if (with_source) {
      sub->add_option("source", o.source, "family selector or group file");
    }
    sub->add_option("--formation", o.formation,
                    "nilpotent | supersoluble | soluble | sigma-nilpotent");
    sub->add_option("--sigma", o.sigma, "prime partition, e.g. [[2,3],[5]]");
    sub->add_option("--order-cap", o.order_cap, "largest group order built")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "isomorphism search node budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--lattice-budget", o.lattice_budget,
                    "largest order whose subgroup lattice is built")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--input", o.inputs, "group file (repeatable)");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formcheck: formations, residuals, hypercentres and "
               "subnormality on small finite groups"};
  app.require_subcommand(1);
  Options o;
  std::function<int(Options const&)> run;

  auto* group = app.add_subcommand("group", "inspect a group");
  group->require_subcommand(1);
  auto* show = group->add_subcommand("show", "structure summary");
  add_common(show, o, true);
  show->callback([&] { run = cmd_group_show; });
  auto* dump = group->add_subcommand("dump", "Cayley table in file format");
  add_common(dump, o, true);
  dump->callback([&] { run = cmd_group_dump; });

  auto* res = app.add_subcommand("residual", "F-residual");
  add_common(res, o, true);
  res->callback([&] { run = cmd_residual; });

  auto* hyp = app.add_subcommand("hypercentre", "F-hypercentre");
  add_common(hyp, o, true);
  hyp->callback([&] { run = cmd_hypercentre; });

  auto* sub = app.add_subcommand("subnormal", "witness chain or NEGATIVE");
  add_common(sub, o, true);
  sub->add_option("--gens", o.gens, "comma-separated element indices")
      ->required();
  sub->add_option("--kind", o.kind, "subnormal | kf | f | sigma")
      ->check(CLI::IsMember({"subnormal", "kf", "f", "sigma"}));
  sub->callback([&] { run = cmd_subnormal; });

  auto* ver = app.add_subcommand("verify", "run a verification sweep");
  add_common(ver, o, false);
  std::vector<std::string> claims(std::begin(claim_names), std::end(claim_names));
  ver->add_option("claim", o.claim, "claim to verify")
      ->required()
      ->check(CLI::IsMember(claims));
  ver->add_option("--max-order", o.max_order, "catalog bound")
      ->check(CLI::PositiveNumber);
  ver->add_option("--threads", o.threads, "worker threads (0: hardware)");
  ver->add_option("--seed", o.seed, "relabelling seed for the lemma sweep");
  ver->add_flag("--timing", o.timing, "record elapsed_ms");
  ver->callback([&] { run = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_config;
  }

  try {
    return run(o);
  } catch (ConfigError const& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_config;
  } catch (InvalidArgument const& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return exit_config;
  } catch (NotAGroup const& e) {
    std::cerr << "not a group: " << e.what() << "\n";
    return exit_config;
  } catch (UnknownFormation const& e) {
    std::cerr << "unknown formation: " << e.what() << "\n";
    return exit_config;
  } catch (OrderCapExceeded const& e) {
    std::cerr << "order cap: " << e.what() << "\n";
    return 2;
  } catch (LatticeBudgetExceeded const& e) {
    std::cerr << "lattice budget: " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
