#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "formcheck/group.hpp"

namespace formcheck {

  using Permutation = std::vector<std::uint32_t>;

  // Validates the table (associativity, identity, inverses) and moves the
  // identity to index 0 if necessary. Throws NotAGroup with a witness.
  Group from_cayley_table(std::vector<std::vector<Elem>> const& table,
                          std::string label = "table");

  // Closes the generators under composition. Elements are numbered in
  // breadth-first order from the identity; (a * b)(x) = b(a(x)).
  Group from_permutation_gens(std::size_t                     degree,
                              std::vector<Permutation> const& gens,
                              std::size_t    order_cap = default_order_cap,
                              std::string    label     = "perm");

  enum class Family {
    cyclic,
    dihedral,
    symmetric,
    alternating,
    quaternion,
    elem_abelian
  };

  // cyclic(n), dihedral(n) of order 2n, symmetric(n), alternating(n),
  // quaternion(n) the dicyclic group of order n (n divisible by 4, n >= 8;
  // generalised quaternion when n is a power of two), elem_abelian(p, k).
  Group standard_family(Family                       kind,
                        std::vector<unsigned> const& params,
                        std::size_t order_cap = default_order_cap);

  Group cyclic(std::size_t n);
  Group dihedral(std::size_t n);
  Group symmetric(std::size_t n, std::size_t order_cap = default_order_cap);
  Group alternating(std::size_t n, std::size_t order_cap = default_order_cap);
  Group quaternion(std::size_t n);
  Group elementary_abelian(unsigned p, unsigned k,
                           std::size_t order_cap = default_order_cap);

  Group direct_product(Group const& g,
                       Group const& h,
                       std::size_t  order_cap = default_order_cap);

  // M x| A where a acts on M by action[a][m] (a left action, so
  // (m1, a1)(m2, a2) = (m1 action[a1][m2], a1 a2)). Element (m, a) has index
  // m * |A| + a. With `validate`, checks that every action[a] is an
  // automorphism and that a -> action[a] is a homomorphism.
  Group semidirect_product(Group const&                          m,
                           Group const&                          a,
                           std::vector<std::vector<Elem>> const& action,
                           std::size_t order_cap = default_order_cap,
                           bool        validate  = true,
                           std::string label     = "");

  // Cosets of k in h, numbered by first appearance along h's member list.
  struct CosetTable {
    std::vector<Elem> coset_of;  // indexed by element of the parent; npos
                                 // outside h
    std::vector<Elem> rep;       // representative of each coset
    std::size_t       count() const {
      return rep.size();
    }
  };
  CosetTable coset_table(Group const& g, Subgroup const& h, Subgroup const& k);

  // The section group h/k (k normal in h).
  Group section_group(Group const&    g,
                      Subgroup const& h,
                      Subgroup const& k,
                      std::string     label = "");

  // [H/K](G/L): the section H/K extended by G/L acting by conjugation.
  // Requires K normal in H, both normal in G, L normal in G and L
  // centralising H/K. Throws NotNormal or NotCentralized.
  Group semidirect_section(Group const&    g,
                           Subgroup const& h,
                           Subgroup const& k,
                           Subgroup const& l,
                           std::size_t     order_cap = default_order_cap);

  // G/N with the projection. Throws NotNormal.
  std::pair<Group, Homomorphism> quotient(Group const& g, Subgroup const& n);

  // The subgroup h as a group of its own (elements in increasing parent
  // index order, so the identity stays at 0).
  Embedding as_group(Group const& g, Subgroup const& h, std::string label = "");

  // Table dump helper, rows of the multiplication table.
  std::vector<std::vector<Elem>> cayley_rows(Group const& g);

  // The same group with element x renamed to perm[x]. perm must be a
  // bijection fixing 0.
  Group relabel_elements(Group const& g, std::vector<Elem> const& perm);

}  // namespace formcheck
