#include <doctest.h>

#include "formcheck/catalog.hpp"
#include "formcheck/formation.hpp"
#include "formcheck/lattice.hpp"
#include "formcheck/subnormal.hpp"
#include "support.hpp"

using namespace formcheck;

namespace {
  std::vector<std::size_t> orders(WitnessChain const& c) {
    std::vector<std::size_t> out;
    for (auto const& t : c.terms) {
      out.push_back(t.order());
    }
    return out;
  }
}

TEST_CASE("subnormal chains") {
  auto s4 = symmetric(4);
  auto w  = is_subnormal(s4, Subgroup::whole(24));
  REQUIRE(w.has_value());
  CHECK(w->length() == 0);

  auto a4 = gen(s4, {"(0 1 2)", "(0 1)(2 3)"});
  auto c  = is_subnormal(s4, a4);
  REQUIRE(c.has_value());
  CHECK(orders(*c) == std::vector<std::size_t>{12, 24});

  auto s3 = symmetric(3);
  CHECK_FALSE(is_subnormal(s3, gen(s3, {"(0 1)"})).has_value());

  auto dd = is_subnormal(s4, gen(s4, {"(0 1)(2 3)"}));
  REQUIRE(dd.has_value());
  CHECK(validate_chain(s4, *dd, [](Group const&) { return false; }));
}

TEST_CASE("subnormality matches the oracle") {
  for (auto const& [name, g] : permutation_groups()) {
    CAPTURE(name);
    auto og  = as_perms(g);
    auto lat = all_subgroups(g);
    for (auto const& h : lat.subgroups()) {
      CHECK(is_subnormal(g, h).has_value()
            == oracle::is_subnormal(og, as_perms(g, h)));
    }
  }
}

TEST_CASE("K-F-subnormal") {
  auto s4 = symmetric(4);
  auto d4 = gen(s4, {"(0 1 2 3)", "(0 2)"});
  auto u  = supersoluble_formation();
  auto c  = is_k_f_subnormal(s4, d4, u);
  REQUIRE(c.has_value());
  CHECK(c->to_string() == "8 --f-step--> 24");
  CHECK(c->kinds == std::vector<StepKind>{StepKind::f_step});
  CHECK(validate_chain(s4, *c, [&](Group const& q) { return u.contains(q); }));
  CHECK(is_k_f_subnormal(s4, Subgroup::whole(24), u)->length() == 0);

  CHECK_FALSE(is_k_f_subnormal(s4, d4, nilpotent_formation()).has_value());

  auto s3 = symmetric(3);
  CHECK_FALSE(
      is_k_f_subnormal(s3, gen(s3, {"(0 1)"}), nilpotent_formation()).has_value());
}

TEST_CASE("F-subnormal") {
  auto s4 = symmetric(4);
  auto d4 = gen(s4, {"(0 1 2 3)", "(0 2)"});
  auto c  = is_f_subnormal(s4, d4, supersoluble_formation());
  REQUIRE(c.has_value());
  CHECK(c->to_string() == "8 --f-step--> 24");
  CHECK(is_f_subnormal(s4, Subgroup::whole(24), nilpotent_formation())->length()
        == 0);
  auto a4 = gen(s4, {"(0 1 2)", "(0 1)(2 3)"});
  auto n  = is_f_subnormal(s4, a4, nilpotent_formation());
  REQUIRE(n.has_value());
  CHECK(n->length() == 1);
  CHECK(n->kinds[0] == StepKind::f_step);
}

TEST_CASE("sigma-subnormal") {
  auto s23 = SigmaPartition::parse("[[2,3]]");
  auto s4  = symmetric(4);
  auto lat = all_subgroups(s4);
  for (auto const& h : lat.subgroups()) {
    auto c = is_sigma_subnormal(s4, h, s23);
    REQUIRE(c.has_value());
    CHECK(c->length() <= 1);
  }
  auto s3 = symmetric(3);
  CHECK(is_sigma_subnormal(s3, Subgroup::whole(6), SigmaPartition{})->length()
        == 0);
  CHECK_FALSE(
      is_sigma_subnormal(s3, gen(s3, {"(0 1)"}), SigmaPartition{}).has_value());
}

TEST_CASE("sigma-subnormal agrees with K-N_sigma-subnormal") {
  auto cat = catalog_generate(16);
  for (auto text : {"[[2,3]]", "[]", "[[2,5],[3,7]]"}) {
    auto sigma = SigmaPartition::parse(text);
    auto f     = sigma_nilpotent_formation(sigma);
    for (auto const& e : cat.entries) {
      auto lat = all_subgroups(e.group);
      for (auto const& h : lat.subgroups()) {
        CHECK(is_sigma_subnormal(e.group, h, sigma).has_value()
              == is_k_f_subnormal(e.group, h, f).has_value());
      }
    }
  }
}

TEST_CASE("implications between the subnormality notions") {
  auto cat = catalog_generate(16);
  for (auto const& f : builtin_formations()) {
    for (auto const& e : cat.entries) {
      auto lat = all_subgroups(e.group);
      for (auto const& h : lat.subgroups()) {
        bool sn = is_subnormal(e.group, h).has_value();
        bool fs = is_f_subnormal(e.group, h, f).has_value();
        bool kf = is_k_f_subnormal(e.group, h, f).has_value();
        CHECK((!sn || kf));
        CHECK((!fs || kf));
      }
    }
  }
}

TEST_CASE("chain search is shortest and persistent") {
  auto        s4  = symmetric(4);
  auto        lat = all_subgroups(s4);
  ChainSearch search(s4, lat, kf_rule(nilpotent_formation()));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    auto c = search.find(i);
    if (!c) {
      continue;
    }
    CHECK(validate_chain(s4, *c, [](Group const& q) { return is_nilpotent(q); }));
    CHECK(c->terms.front() == lat[i]);
    CHECK(c->terms.back().is_whole());
    // the chain from an intermediate term stays a chain
    for (std::size_t j = 1; j < c->terms.size(); ++j) {
      auto k = lat.index_of(c->terms[j]);
      REQUIRE(k.has_value());
      auto rest = search.find(*k);
      REQUIRE(rest.has_value());
      CHECK(rest->length() <= c->length() - j);
    }
  }
}

TEST_CASE("validate_chain rejects a bad step") {
  auto         s3 = symmetric(3);
  WitnessChain c;
  c.terms = {gen(s3, {"(0 1)"}), Subgroup::whole(6)};
  c.kinds = {StepKind::normal};
  CHECK_FALSE(validate_chain(s3, c, [](Group const&) { return true; }));
  c.kinds = {StepKind::f_step};
  CHECK_FALSE(validate_chain(s3, c, [](Group const& q) { return is_nilpotent(q); }));
  CHECK(validate_chain(s3, c, [](Group const& q) { return is_supersoluble(q); }));
}
