#include <doctest.h>

#include "formcheck/catalog.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/isomorphism.hpp"
#include "formcheck/verify.hpp"
#include "support.hpp"

using namespace formcheck;

namespace {
  Catalog catalog_of(std::vector<char const*> selectors) {
    Catalog c;
    c.max_order = 0;
    for (auto s : selectors) {
      auto g = group_from_selector(s);
      c.max_order = std::max(c.max_order, g.order());
      c.entries.push_back(CatalogEntry{g, s, {}});
    }
    return c;
  }

  VerifyOptions serial() {
    VerifyOptions o;
    o.threads = 1;
    return o;
  }

  bool has_provenance(Catalog const& c, std::string const& p) {
    for (auto const& e : c.entries) {
      if (e.provenance == p
          || std::find(e.aliases.begin(), e.aliases.end(), p) != e.aliases.end()) {
        return true;
      }
    }
    return false;
  }
}

TEST_CASE("catalog") {
  auto one = catalog_generate(1);
  REQUIRE(one.size() == 1);
  CHECK(one.entries[0].group.order() == 1);

  auto six = catalog_generate(6);
  // 1, C2, C3, C4, V4, C5, C6, S3
  CHECK(six.size() == 8);
  CHECK(has_provenance(six, "sym:3"));
  CHECK(has_provenance(six, "dihedral:3"));
  CHECK(has_provenance(six, "prod(cyclic:2,cyclic:3)"));
  for (std::size_t i = 0; i < six.size(); ++i) {
    for (std::size_t j = i + 1; j < six.size(); ++j) {
      CHECK_FALSE(
          is_isomorphic(six.entries[i].group, six.entries[j].group).has_value());
    }
  }
  auto big = catalog_generate(24);
  CHECK(has_provenance(big, "sym:4"));
  CHECK(has_provenance(big, "alt:4"));
  CHECK(has_provenance(big, "quaternion:8"));
  CHECK(has_provenance(big, "dihedral:6"));
  for (std::size_t i = 0; i + 1 < big.size(); ++i) {
    CHECK(big.entries[i].group.order() <= big.entries[i + 1].group.order());
  }
  CHECK(big.coverage().find("not every group") != std::string::npos);
  CHECK_THROWS_AS(catalog_generate(0), InvalidArgument);
  CHECK_THROWS_AS(catalog_generate(600), OrderCapExceeded);
}

TEST_CASE("theorem B instances") {
  auto c = catalog_of({"sym:3", "sym:4", "dihedral:4"});
  auto r = verify_theorem_b(c, nilpotent_formation(), serial());
  CHECK(r.passed());
  CHECK(r.groups == 3);
  CHECK(r.checked == 3);
  // S3 and S4 satisfy the hypothesis; D4 is nilpotent
  CHECK(r.hypothesis_satisfied == 2);
  CHECK(r.skipped.at(skip_reason::hypothesis_failed) == 1);
  CHECK(r.counters.at("product-form-checked") == 3);
}

TEST_CASE("theorem A instances") {
  auto c = catalog_of({"sym:4"});
  auto r = verify_theorem_a(c, nilpotent_formation(), serial());
  CHECK(r.passed());
  CHECK(r.hypothesis_satisfied >= 2);  // A4 and S4 at least
  CHECK(r.checked == r.hypothesis_satisfied + r.skipped_total());
}

TEST_CASE("schenkman") {
  auto r = verify_schenkman_classic(catalog_generate(24), serial());
  CHECK(r.passed());
  CHECK(r.hypothesis_satisfied > 0);
  CHECK(r.counters.at("bridging-checked") > 0);
}

TEST_CASE("holomorph bound on S3 is tight") {
  auto c = catalog_of({"sym:3"});
  auto r = verify_holomorph_bound(c, nilpotent_formation(), serial());
  CHECK(r.passed());
  CHECK(r.counters.at("tight") == 1);
  REQUIRE(r.details.size() == 1);
  CHECK(r.details[0]["G/Z_F"] == 6);
  CHECK(r.details[0]["|Hol(U)|"] == 6);
}

TEST_CASE("section 3 sweeps") {
  auto r = verify_section3_corollaries(catalog_generate(12),
                                       SigmaPartition::parse("[[2,3]]"), serial());
  CHECK(r.passed());
  CHECK(r.counters.at("agreement-checked") > 0);
  CHECK(r.sigma == std::optional<std::string>("[[2,3]]"));
}

TEST_CASE("lemma suite") {
  auto cat = catalog_generate(8);
  for (auto const& f : builtin_formations(SigmaPartition::parse("[[2,3]]"))) {
    CAPTURE(f.name());
    auto r = verify_lemma_suite(cat, f, serial());
    CHECK(r.passed());
    CHECK(r.counters.at("lemma-1:checked") > 0);
    CHECK(r.counters.at("lemma-6(i):checked") > 0);
  }
}

TEST_CASE("a bogus formation is caught by the lemma sweep") {
  // cyclic groups: not closed under products, so not a formation, and its
  // residual computations break down
  Formation bogus("cyclic-only", FormationKind::soluble,
                  [](Group const& g) {
                    for (auto o : g.element_orders()) {
                      if (o == g.order()) {
                        return true;
                      }
                    }
                    return false;
                  },
                  true, true);
  auto r = verify_lemma_suite(catalog_generate(8), bogus, serial());
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  auto const& f = r.failures.front();
  CHECK_FALSE(f.cayley.empty());
  // the artifact carries the whole table, so it rebuilds without the catalog
  std::vector<std::vector<Elem>> rows = f.cayley;
  CHECK(from_cayley_table(rows).order() == rows.size());

  RunConfig cfg;
  cfg.formation   = bogus;
  cfg.opts.threads = 1;
  auto all = run_claim("all", catalog_generate(8), cfg);
  bool skipped = false;
  for (auto const& rep : all) {
    if (rep.claim == "theorem-b") {
      skipped = rep.skipped.count(skip_reason::formation_sweep) > 0;
    }
  }
  CHECK(skipped);
  CHECK(exit_code(all) == 1);
}

TEST_CASE("budgets become skips") {
  VerifyOptions o = serial();
  o.lattice_budget = 6;
  auto r = verify_theorem_a(catalog_of({"sym:3", "sym:4"}), nilpotent_formation(), o);
  CHECK(r.skipped.at(skip_reason::lattice_budget) == 1);
  CHECK(r.passed());
  CHECK(exit_code({r}) == 2);
}

TEST_CASE("reports are deterministic across thread counts") {
  auto cat = catalog_generate(16);
  RunConfig a;
  a.opts.threads = 1;
  RunConfig b;
  b.opts.threads = 4;
  auto ja = reports_to_json(run_claim("theorem-a", cat, a)).dump();
  auto jb = reports_to_json(run_claim("theorem-a", cat, b)).dump();
  CHECK(ja == jb);
  CHECK(ja.find("\"elapsed_ms\":null") != std::string::npos);
}

TEST_CASE("text and json agree") {
  auto reps = run_claim("theorem-b", catalog_generate(12), RunConfig{});
  auto j    = reports_to_json(reps);
  auto t    = reports_to_text(reps);
  for (auto const& r : j["reports"]) {
    CHECK(t.find("checked: " + std::to_string(r["checked"].get<int>()))
          != std::string::npos);
    CHECK(t.find("verdict: " + r["verdict"].get<std::string>()) != std::string::npos);
  }
  CHECK(t.find("overall: PASS (exit 0)") != std::string::npos);
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("schema fields") {
  auto r = verify_theorem_b(catalog_generate(4), soluble_formation(), serial());
  auto j = r.to_json();
  for (auto key : {"claim", "formation", "sigma", "checked", "skipped",
                   "failures", "elapsed_ms"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("unknown claim") {
  CHECK_THROWS_AS(run_claim("theorem-z", catalog_generate(2), RunConfig{}),
                  InvalidArgument);
}
