#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "formcheck/group.hpp"

namespace formcheck {

  inline constexpr std::uint64_t default_search_budget = 10'000'000;

  // Isomorphism invariants. Equal fingerprints are necessary for
  // isomorphism; any difference certifies a negative.
  struct Fingerprint {
    std::size_t                order = 0;
    // sorted (element order, class size, number of square roots)
    std::vector<std::uint64_t> element_profile;
    std::size_t                center_order = 0;
    std::vector<std::size_t>   derived_orders;

    bool operator==(Fingerprint const&) const = default;
    auto operator<=>(Fingerprint const&) const = default;
  };

  Fingerprint fingerprint(Group const& g);

  // An isomorphism g -> h, or nothing. Throws SearchBudgetExceeded when
  // the backtracking search visits more than `budget` nodes.
  std::optional<Homomorphism>
  is_isomorphic(Group const&  g,
                Group const&  h,
                std::uint64_t budget = default_search_budget);

  // All automorphisms, each as an image table on g's elements; the first
  // is the identity.
  std::vector<std::vector<Elem>>
  automorphisms(Group const& g, std::uint64_t budget = default_search_budget);

  // |Aut(g)| without storing the maps.
  std::uint64_t count_automorphisms(Group const&  g,
                                    std::uint64_t budget
                                    = default_search_budget);

  struct AutomorphismGroup {
    Group                          group;
    // action[a] is the image table of automorphism a on the base group
    std::vector<std::vector<Elem>> action;
  };

  // Aut(g) under composition ((a b)(x) = a(b(x))), identity first.
  AutomorphismGroup
  automorphism_group(Group const&  g,
                     std::size_t   order_cap = default_order_cap,
                     std::uint64_t budget    = default_search_budget);

  // g x| Aut(g).
  Group holomorph(Group const&  g,
                  std::size_t   order_cap = default_order_cap,
                  std::uint64_t budget    = default_search_budget);

}  // namespace formcheck
