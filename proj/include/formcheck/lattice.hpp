#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "formcheck/group.hpp"

namespace formcheck {

  inline constexpr std::size_t default_lattice_budget = 200;

  // Every subgroup of a group, sorted by (order, member list).
  class SubgroupLattice {
   public:
    SubgroupLattice() = default;

    std::size_t size() const noexcept {
      return subgroups_.size();
    }
    Subgroup const& operator[](std::size_t i) const {
      return subgroups_[i];
    }
    std::vector<Subgroup> const& subgroups() const noexcept {
      return subgroups_;
    }
    std::optional<std::size_t> index_of(Subgroup const& h) const;
    std::size_t                trivial_index() const noexcept {
      return 0;
    }
    std::size_t whole_index() const noexcept {
      return subgroups_.size() - 1;
    }

    // contains(i, j): subgroup j is a subgroup of subgroup i.
    bool contains(std::size_t i, std::size_t j) const {
      return inclusion_[i].test(Elem(j));
    }
    std::vector<std::size_t> overgroups(std::size_t i) const;
    std::vector<std::size_t> subgroups_of(std::size_t i) const;
    std::vector<std::size_t> maximal_subgroups_of(std::size_t i) const;

    std::vector<std::vector<std::size_t>> const&
    conjugacy_classes() const noexcept {
      return classes_;
    }

    friend SubgroupLattice all_subgroups(Group const& g, std::size_t budget);

   private:
    std::vector<Subgroup>                                   subgroups_;
    std::vector<ElementSet>                                 inclusion_;
    std::vector<std::vector<std::size_t>>                   classes_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  };

  // Cyclic subgroups joined with one another until nothing new appears.
  // Throws LatticeBudgetExceeded when |g| > budget.
  SubgroupLattice all_subgroups(Group const& g,
                                std::size_t  budget = default_lattice_budget);

  // Sorted by (order, member list). Seeds are normal closures of single
  // elements; no lattice is built.
  std::vector<Subgroup> normal_subgroups(Group const& g);

  std::vector<Subgroup> minimal_normal_subgroups(Group const& g);
  std::vector<Subgroup> minimal_normal_subgroups(
      std::vector<Subgroup> const& normals);

  struct ChiefSeries {
    std::vector<Subgroup> terms;  // 1 = terms[0] < ... < terms.back() = G

    std::vector<std::size_t> factor_orders() const;
  };

  // A chief series with n as a term; each step takes the least (by order,
  // then member list) normal subgroup strictly above the current term.
  ChiefSeries chief_series_through(Group const& g, Subgroup const& n);
  ChiefSeries chief_series_through(Group const&                 g,
                                   std::vector<Subgroup> const& normals,
                                   Subgroup const&              n);

  // True iff h/k is a chief factor: k < h, both normal, no normal subgroup
  // strictly between (checked against `normals`).
  bool is_chief_factor(std::vector<Subgroup> const& normals,
                       Subgroup const&              h,
                       Subgroup const&              k);

  // All chief factors (h, k) as index pairs into `normals`.
  std::vector<std::pair<std::size_t, std::size_t>>
  chief_factors(std::vector<Subgroup> const& normals);

  Subgroup frattini(Group const& g, SubgroupLattice const& lattice);
  Subgroup frattini(Group const& g);

  // The normal subgroup of order |g|_primes, if it exists.
  std::optional<Subgroup> normal_hall_subgroup(Group const&              g,
                                               std::set<unsigned> const& primes);

  std::vector<unsigned> prime_divisors(std::size_t n);

}  // namespace formcheck
