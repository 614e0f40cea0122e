#include <doctest.h>

#include <algorithm>
#include <random>

#include "formcheck/construct.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/group_io.hpp"
#include "formcheck/isomorphism.hpp"
#include "formcheck/subgroups.hpp"
#include "support.hpp"

using namespace formcheck;

namespace {
  std::vector<unsigned> sorted_orders(Group const& g) {
    auto v = g.element_orders();
    std::sort(v.begin(), v.end());
    return v;
  }

  std::size_t involutions(Group const& g) {
    auto const& v = g.element_orders();
    return std::size_t(std::count(v.begin(), v.end(), 2u));
  }
}

TEST_CASE("tables") {
  CHECK(from_cayley_table({{0}}).order() == 1);
  CHECK(from_cayley_table({{0, 1}, {1, 0}}).order() == 2);

  // S3 from composing all permutations of three points
  std::vector<Permutation> perms;
  Permutation p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Elem>> table(6, std::vector<Elem>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      auto c = oracle::compose(perms[i], perms[j]);
      table[i][j] = Elem(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  auto s3 = from_cayley_table(table);
  CHECK(sorted_orders(s3) == std::vector<unsigned>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS_AS(from_cayley_table({{0, 1}, {0, 1}}), NotAGroup);
  // closed, has identity, not associative
  CHECK_THROWS_AS(
      from_cayley_table({{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}), NotAGroup);
  CHECK_THROWS_AS(from_cayley_table({{0, 1}}), NotAGroup);
}

TEST_CASE("identity moved to index 0") {
  auto g = from_cayley_table({{1, 0}, {0, 1}});
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("permutation generators") {
  CHECK(from_permutation_gens(3, {parse_cycles("(0 1 2)", 3)}).order() == 3);
  CHECK(from_permutation_gens(
            3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)})
            .order()
        == 6);
  auto v4 = from_permutation_gens(4, {parse_cycles("(0 1)(2 3)", 4),
                                      parse_cycles("(0 2)(1 3)", 4)});
  CHECK(sorted_orders(v4) == std::vector<unsigned>{1, 2, 2, 2});
  CHECK_THROWS_AS(from_permutation_gens(6, {parse_cycles("(0 1)", 6),
                                            parse_cycles("(0 1 2 3 4 5)", 6)},
                                        100),
                  OrderCapExceeded);
}

TEST_CASE("families") {
  CHECK(cyclic(1).order() == 1);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(5).order() == 60);
  CHECK(dihedral(4).order() == 8);
  CHECK(quaternion(8).order() == 8);
  CHECK(involutions(quaternion(8)) == 1);
  CHECK(involutions(quaternion(12)) == 1);
  CHECK(elementary_abelian(3, 2).order() == 9);
  CHECK(involutions(direct_product(cyclic(2), cyclic(2))) == 3);
  auto c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(std::count(c6.element_orders().begin(), c6.element_orders().end(), 6u)
        > 0);
  CHECK(standard_family(Family::dihedral, {5}).order() == 10);
  CHECK_THROWS_AS(quaternion(6), InvalidArgument);
}

TEST_CASE("selectors") {
  CHECK(group_from_selector("trivial").order() == 1);
  CHECK(group_from_selector("sym:4").order() == 24);
  CHECK(group_from_selector("prod(cyclic:2,prod(cyclic:3,elab:2^2))").order()
        == 24);
  CHECK(group_from_selector("quaternion:8").order() == 8);
  CHECK_THROWS_AS(group_from_selector("cyclic:"), ParseError);
  CHECK_THROWS_AS(group_from_selector("nope:3"), ParseError);
  CHECK_THROWS_AS(group_from_selector("sym:7"), OrderCapExceeded);
}

TEST_CASE("group file parsing") {
  auto g = parse_group_text("# S3\nperm 3\n(0 1)\n(0 1 2)\n");
  CHECK(g.order() == 6);
  auto t = parse_group_text("table 2\n0 1\n1 0\n");
  CHECK(t.order() == 2);
  try {
    parse_group_text("perm 3\n(0 1)\n(0 7)\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_group_text("table 2\n0 1\n0 1\n"), NotAGroup);
  CHECK_THROWS_AS(parse_group_text("blob 3\n"), ParseError);
}

TEST_CASE("dump round trip") {
  for (auto sel : {"sym:4", "quaternion:12", "prod(sym:3,cyclic:4)"}) {
    auto g    = group_from_selector(sel);
    auto back = parse_group_text(dump_table(g));
    CHECK(back.order() == g.order());
    CHECK(is_isomorphic(g, back).has_value());
  }
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation(parse_cycles("(0 2 1)(3 4)", 5)) == "(0 2 1)(3 4)");
  CHECK(cycle_notation(parse_cycles("", 3)) == "()");
}

TEST_CASE("sections and quotients") {
  auto s3 = symmetric(3);
  auto a3 = gen(s3, {"(0 1 2)"});
  auto d  = semidirect_section(s3, a3, Subgroup::trivial(6),
                               centralizer(s3, a3));
  CHECK(d.order() == 6);
  CHECK(is_isomorphic(d, s3).has_value());

  auto s4 = symmetric(4);
  auto v4 = gen(s4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  auto e  = semidirect_section(s4, v4, Subgroup::trivial(24), v4);
  CHECK(e.order() == 24);
  CHECK(is_isomorphic(e, s4).has_value());

  // a trivial section collapses to G/L
  auto f = semidirect_section(s4, v4, v4, v4);
  CHECK(f.order() == 6);

  CHECK(quotient(s3, a3).first.order() == 2);
  auto [q, proj] = quotient(s4, v4);
  CHECK(q.order() == 6);
  CHECK(proj.is_homomorphism());
  CHECK(proj.kernel() == v4);
  bool commutes = true;
  for (Elem a = 0; a < q.order(); ++a) {
    for (Elem b = 0; b < q.order(); ++b) {
      commutes = commutes && q.mul(a, b) == q.mul(b, a);
    }
  }
  CHECK_FALSE(commutes);

  auto t = gen(s3, {"(0 1)"});
  CHECK_THROWS_AS(quotient(s3, t), NotNormal);
  CHECK_THROWS_AS(semidirect_section(s4, v4, Subgroup::trivial(24),
                                     Subgroup::whole(24)),
                  NotCentralized);
}

TEST_CASE("centralizers, cores, closures against the oracle") {
  auto s4 = symmetric(4);
  auto os = as_perms(s4);
  auto d4 = gen(s4, {"(0 1 2 3)", "(0 2)"});
  CHECK(as_perms(s4, centralizer(s4, d4)) == oracle::centralizer(os, as_perms(s4, d4)));
  CHECK(core(s4, Subgroup::whole(24), d4).order() == 4);
  auto t = gen(s4, {"(0 1)"});
  CHECK(normal_closure(s4, t.members()).order() == 24);
  auto v4 = gen(s4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(centralizer_of_section(s4, v4, v4).order() == 24);
  CHECK(centralizer_of_section(s4, v4, Subgroup::trivial(24)) == v4);
  CHECK(center(s4).order() == 1);
  CHECK(derived_subgroup(s4, Subgroup::whole(24)).order() == 12);
}

TEST_CASE("isomorphism") {
  auto c4 = cyclic(4);
  CHECK(is_isomorphic(c4, c4).has_value());
  CHECK_FALSE(is_isomorphic(c4, elementary_abelian(2, 2)).has_value());
  CHECK_FALSE(is_isomorphic(dihedral(4), quaternion(8)).has_value());
  CHECK(is_isomorphic(dihedral(3), symmetric(3)).has_value());
  CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6))
            .has_value());
  auto iso = is_isomorphic(dihedral(6), direct_product(symmetric(3), cyclic(2)));
  REQUIRE(iso.has_value());
  CHECK(iso->is_homomorphism());
  CHECK(iso->is_injective());
}

TEST_CASE("relabelling keeps the isomorphism type") {
  auto         g = group_from_selector("prod(sym:3,cyclic:2)");
  std::mt19937 rng(7);
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  auto h = relabel_elements(g, perm);
  CHECK(h.order() == g.order());
  CHECK(is_isomorphic(g, h).has_value());
}

TEST_CASE("automorphisms and holomorph") {
  CHECK(count_automorphisms(cyclic(3)) == 2);
  CHECK(count_automorphisms(symmetric(3)) == 6);
  CHECK(count_automorphisms(elementary_abelian(2, 2)) == 6);
  CHECK(count_automorphisms(quaternion(8)) == 24);
  CHECK(count_automorphisms(dihedral(4)) == 8);
  CHECK(automorphism_group(symmetric(3)).group.order() == 6);
  auto hol = holomorph(cyclic(3));
  CHECK(hol.order() == 6);
  CHECK(is_isomorphic(hol, symmetric(3)).has_value());
  CHECK_THROWS_AS(count_automorphisms(elementary_abelian(2, 4), 50),
                  SearchBudgetExceeded);
}
