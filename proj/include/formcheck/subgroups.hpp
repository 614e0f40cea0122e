#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "formcheck/group.hpp"

namespace formcheck {

  Subgroup generate(Group const& g, std::span<Elem const> gens);

  // Greedy generating set of h, in increasing index order.
  std::vector<Elem> generators_of(Group const& g, Subgroup const& h);

  Subgroup join(Group const& g, Subgroup const& a, Subgroup const& b);
  Subgroup meet(Subgroup const& a, Subgroup const& b);

  // True iff the element set is closed under multiplication and contains
  // the identity (finite, so inverses follow).
  bool is_closed(Group const& g, ElementSet const& s);

  // A pair (y, x) with y^-1 x y outside x's subgroup, or nothing when x is
  // normal in y.
  std::optional<std::pair<Elem, Elem>>
  normality_witness(Group const& g, Subgroup const& y, Subgroup const& x);

  bool is_normal_in(Group const& g, Subgroup const& y, Subgroup const& x);
  bool is_normal(Group const& g, Subgroup const& n);

  // Throws NotNormal with the conjugation witness.
  void require_normal(Group const& g, Subgroup const& n, char const* what);

  Subgroup conjugate(Group const& g, Subgroup const& h, Elem by);

  Subgroup centralizer(Group const& g, Subgroup const& s);
  Subgroup center(Group const& g);

  // { g : g^-1 h g K = h K for all h in H }.
  Subgroup centralizer_of_section(Group const&    g,
                                  Subgroup const& h,
                                  Subgroup const& k);

  // Largest subgroup of x normal in y, for x <= y.
  Subgroup core(Group const& g, Subgroup const& y, Subgroup const& x);

  Subgroup normal_closure(Group const& g, std::span<Elem const> xs);
  Subgroup normal_closure_in(Group const&          g,
                             Subgroup const&       y,
                             std::span<Elem const> xs);

  Subgroup derived_subgroup(Group const& g, Subgroup const& y);

  // Derived series of the whole group, from G down to the point where it
  // stabilises.
  std::vector<Subgroup> derived_series(Group const& g);

  // |A B| = |A||B|/|A meet B|, for a product-set size check.
  std::size_t product_size(Subgroup const& a, Subgroup const& b);

}  // namespace formcheck
