// Reference values computed by the brute-force oracle alone, frozen here
// before any engine comparison.

#include <doctest.h>

#include "oracle.hpp"

using namespace oracle;

namespace {
  PSet const s3 = sym(3);
  PSet const s4 = sym(4);
  PSet const a3 = alt(3);
  PSet const v4 = closure(4, {cycles(4, {{0, 1}, {2, 3}}),
                              cycles(4, {{0, 2}, {1, 3}})});
  PSet const one3{identity(3)};
}

TEST_CASE("oracle group orders") {
  CHECK(s3.size() == 6);
  CHECK(s4.size() == 24);
  CHECK(alt(4).size() == 12);
  CHECK(dihedral(4).size() == 8);
  CHECK(v4.size() == 4);
}

TEST_CASE("oracle subgroup counts") {
  CHECK(subgroups(s3).size() == 6);
  CHECK(subgroups(s4).size() == 30);
  CHECK(subgroups(alt(4)).size() == 10);
  CHECK(subgroups(dihedral(4)).size() == 10);
  CHECK(normal_subgroups(s4).size() == 4);
  CHECK(normal_subgroups(alt(4)).size() == 3);
}

TEST_CASE("oracle residuals") {
  CHECK(residual(s3, quotient_nilpotent) == a3);
  CHECK(residual(s4, quotient_supersoluble) == v4);
  CHECK(residual(s4, quotient_nilpotent) == alt(4));
  CHECK(residual(s4, quotient_soluble).size() == 1);
}

TEST_CASE("oracle hypercentres") {
  CHECK(hypercentre_supersoluble(s3) == s3);
  CHECK(hypercentre_nilpotent(s3) == one3);
  CHECK(hypercentre_supersoluble(s4).size() == 1);
  CHECK(hypercentre_nilpotent(dihedral(4)) == dihedral(4));
}

TEST_CASE("oracle centralizer and chief series") {
  CHECK(centralizer(s4, v4) == v4);
  CHECK(chief_factor_orders(s4) == std::vector<std::size_t>{4, 3, 2});
  CHECK(chief_factor_orders(alt(4)) == std::vector<std::size_t>{4, 3});
}

TEST_CASE("oracle class membership") {
  CHECK(is_nilpotent(dihedral(4)));
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(is_supersoluble(s3));
  CHECK_FALSE(is_supersoluble(s4));
  CHECK(is_soluble(s4));
  CHECK_FALSE(is_soluble(alt(5)));
}

TEST_CASE("oracle subnormality") {
  CHECK(is_subnormal(s4, v4));
  CHECK_FALSE(is_subnormal(s3, closure(3, {cycles(3, {{0, 1}})})));
  CHECK(is_subnormal(s4, closure(4, {cycles(4, {{0, 1}, {2, 3}})})));
}
