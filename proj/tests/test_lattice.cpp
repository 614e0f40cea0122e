#include <doctest.h>

#include "formcheck/errors.hpp"
#include "formcheck/lattice.hpp"
#include "support.hpp"

using namespace formcheck;

namespace {
  std::set<oracle::PSet> engine_normals(Group const& g) {
    std::set<oracle::PSet> out;
    for (auto const& n : normal_subgroups(g)) {
      out.insert(as_perms(g, n));
    }
    return out;
  }

  std::set<oracle::PSet> oracle_normals(Group const& g) {
    auto v = oracle::normal_subgroups(as_perms(g));
    return {v.begin(), v.end()};
  }
}

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(cyclic(1)).size() == 1);
  CHECK(all_subgroups(symmetric(3)).size() == 6);
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(all_subgroups(alternating(4)).size() == 10);
  CHECK(all_subgroups(dihedral(4)).size() == 10);
  CHECK(all_subgroups(quaternion(8)).size() == 6);
  CHECK(all_subgroups(elementary_abelian(2, 3)).size() == 16);
  CHECK(all_subgroups(cyclic(12)).size() == 6);
}

TEST_CASE("lattice matches the oracle on permutation groups") {
  for (auto const& [name, g] : permutation_groups()) {
    CAPTURE(name);
    auto lat = all_subgroups(g);
    std::set<oracle::PSet> mine;
    for (auto const& h : lat.subgroups()) {
      mine.insert(as_perms(g, h));
    }
    CHECK(mine == oracle::subgroups(as_perms(g)));
    CHECK(engine_normals(g) == oracle_normals(g));
  }
}

TEST_CASE("lattice order and inclusion") {
  auto g   = symmetric(4);
  auto lat = all_subgroups(g);
  CHECK(lat[lat.trivial_index()].is_trivial());
  CHECK(lat[lat.whole_index()].is_whole());
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
    CHECK(lat[i] < lat[i + 1]);
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (std::size_t j = 0; j < lat.size(); ++j) {
      CHECK(lat.contains(i, j) == lat[j].is_subgroup_of(lat[i]));
    }
  }
  // S4 has 11 conjugacy classes of subgroups
  CHECK(lat.conjugacy_classes().size() == 11);
  // S4 maximal subgroups: A4, three D4, four S3
  CHECK(lat.maximal_subgroups_of(lat.whole_index()).size() == 8);
  CHECK(lat.index_of(Subgroup::whole(24)) == lat.whole_index());
}

TEST_CASE("lattice budget") {
  CHECK_THROWS_AS(all_subgroups(symmetric(4), 20), LatticeBudgetExceeded);
}

TEST_CASE("normal subgroups") {
  auto s4 = symmetric(4);
  auto ns = normal_subgroups(s4);
  REQUIRE(ns.size() == 4);
  CHECK(ns[1].order() == 4);
  CHECK(ns[2].order() == 12);
  CHECK(normal_subgroups(alternating(4)).size() == 3);
  auto c12 = cyclic(12);
  CHECK(normal_subgroups(c12).size() == all_subgroups(c12).size());
  CHECK(normal_subgroups(alternating(5)).size() == 2);
}

TEST_CASE("minimal normal subgroups") {
  CHECK(minimal_normal_subgroups(symmetric(4)).size() == 1);
  CHECK(minimal_normal_subgroups(symmetric(4))[0].order() == 4);
  auto m = minimal_normal_subgroups(cyclic(6));
  REQUIRE(m.size() == 2);
  CHECK(m[0].order() == 2);
  CHECK(m[1].order() == 3);
  auto a5 = minimal_normal_subgroups(alternating(5));
  REQUIRE(a5.size() == 1);
  CHECK(a5[0].is_whole());
  CHECK(minimal_normal_subgroups(elementary_abelian(2, 2)).size() == 3);
}

TEST_CASE("chief series") {
  auto s4 = symmetric(4);
  auto cs = chief_series_through(s4, Subgroup::trivial(24));
  CHECK(cs.factor_orders() == std::vector<std::size_t>{4, 3, 2});
  CHECK(cs.factor_orders() == oracle::chief_factor_orders(as_perms(s4)));
  CHECK(chief_series_through(s4, Subgroup::whole(24)).factor_orders()
        == std::vector<std::size_t>{4, 3, 2});

  auto a4 = alternating(4);
  auto v4 = gen(a4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  auto ca = chief_series_through(a4, v4);
  REQUIRE(ca.terms.size() == 3);
  CHECK(ca.terms[1] == v4);

  // the series passes through a chosen normal subgroup
  auto c12 = cyclic(12);
  for (auto const& n : normal_subgroups(c12)) {
    auto s = chief_series_through(c12, n);
    CHECK(std::find(s.terms.begin(), s.terms.end(), n) != s.terms.end());
    auto const& ns = normal_subgroups(c12);
    for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
      CHECK(is_chief_factor(ns, s.terms[i + 1], s.terms[i]));
    }
  }
  CHECK(chief_factors(normal_subgroups(s4)).size() == 3);
}

TEST_CASE("frattini") {
  CHECK(frattini(symmetric(4)).is_trivial());
  CHECK(frattini(dihedral(4)).order() == 2);
  CHECK(frattini(quaternion(8)).order() == 2);
  CHECK(frattini(cyclic(8)).order() == 4);
  CHECK(frattini(cyclic(12)).order() == 2);
  CHECK(frattini(elementary_abelian(3, 2)).is_trivial());
  auto g = dihedral(6);
  CHECK(frattini(g) == frattini(g, all_subgroups(g)));
}

TEST_CASE("normal hall subgroups") {
  auto s3 = symmetric(3);
  CHECK(normal_hall_subgroup(s3, {2, 3})->is_whole());
  CHECK(normal_hall_subgroup(s3, {2, 3, 5})->is_whole());
  auto h = normal_hall_subgroup(s3, {3});
  REQUIRE(h.has_value());
  CHECK(h->order() == 3);
  CHECK_FALSE(normal_hall_subgroup(s3, {2}).has_value());
  CHECK(normal_hall_subgroup(s3, {5})->is_trivial());
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(60) == std::vector<unsigned>{2, 3, 5});
  CHECK(prime_divisors(49) == std::vector<unsigned>{7});
}
