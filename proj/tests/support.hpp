#pragma once

#include <string>
#include <utility>
#include <vector>

#include "formcheck/construct.hpp"
#include "formcheck/group.hpp"
#include "formcheck/group_io.hpp"
#include "formcheck/subgroups.hpp"
#include "oracle.hpp"

// Moving between engine subgroups and oracle permutation sets.
inline oracle::PSet as_perms(formcheck::Group const&    g,
                             formcheck::Subgroup const& h) {
  oracle::PSet out;
  for (auto x : h.members()) {
    out.insert(g.permutation(x));
  }
  return out;
}

inline oracle::PSet as_perms(formcheck::Group const& g) {
  return as_perms(g, formcheck::Subgroup::whole(g.order()));
}

inline formcheck::Subgroup from_perms(formcheck::Group const& g,
                                      oracle::PSet const&     s) {
  formcheck::ElementSet mask(g.order());
  for (formcheck::Elem x = 0; x < g.order(); ++x) {
    if (s.count(g.permutation(x))) {
      mask.set(x);
    }
  }
  return formcheck::Subgroup(mask);
}

inline formcheck::Subgroup gen(formcheck::Group const&  g,
                               std::vector<std::string> cyc) {
  std::vector<formcheck::Elem> gens;
  for (auto const& c : cyc) {
    auto p = formcheck::parse_cycles(c, g.degree());
    for (formcheck::Elem x = 0; x < g.order(); ++x) {
      if (g.permutation(x) == p) {
        gens.push_back(x);
      }
    }
  }
  return formcheck::generate(g, gens);
}

// Small groups built from permutations, so the oracle can see them.
inline std::vector<std::pair<std::string, formcheck::Group>> permutation_groups() {
  using formcheck::parse_cycles;
  auto perm = [](std::size_t n, std::vector<char const*> cs) {
    std::vector<formcheck::Permutation> gens;
    for (auto c : cs) {
      gens.push_back(parse_cycles(c, n));
    }
    return formcheck::from_permutation_gens(n, gens);
  };
  return {
      {"S3", formcheck::symmetric(3)},
      {"S4", formcheck::symmetric(4)},
      {"A4", formcheck::alternating(4)},
      {"D4", perm(4, {"(0 1 2 3)", "(0 2)"})},
      {"D5", perm(5, {"(0 1 2 3 4)", "(1 4)(2 3)"})},
      {"D6", perm(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"})},
      {"Q8", perm(8, {"(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"})},
      {"C2^3", perm(6, {"(0 1)", "(2 3)", "(4 5)"})},
      {"C6", perm(5, {"(0 1)(2 3 4)"})},
      {"C3xS3", perm(6, {"(0 1 2)", "(3 4 5)", "(3 4)"})},
      {"C2xA4", perm(6, {"(0 1 2)", "(0 1)(2 3)", "(4 5)"})},
  };
}
