#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formcheck/formation.hpp"
#include "formcheck/group.hpp"
#include "formcheck/lattice.hpp"

namespace formcheck {

  enum class StepKind { normal, f_step };

  // A = terms[0] <= terms[1] <= ... <= terms.back() = G, with kinds[i]
  // describing the step terms[i] -> terms[i + 1].
  struct WitnessChain {
    std::vector<Subgroup> terms;
    std::vector<StepKind> kinds;

    std::size_t length() const noexcept {
      return kinds.size();
    }
    // "8 --f-step--> 24"
    std::string to_string() const;
  };

  // Re-checks every step of the chain inside g: containment, and either
  // normality or core quotient membership according to its tag.
  bool validate_chain(Group const&                                g,
                      WitnessChain const&                         chain,
                      std::function<bool(Group const&)> const&    in_class);

  // Iterated normal closure descent.
  std::optional<WitnessChain> is_subnormal(Group const& g, Subgroup const& a);

  // Which edges a chain may use. An f-step X -> Y means Y / core_Y(X) is in
  // the class.
  struct ChainRule {
    bool                                 allow_normal = true;
    std::function<bool(Group const&)>    in_class;  // core quotient test
    // optional shortcut deciding class membership from the order alone
    std::function<bool(std::size_t)>     by_order;
  };

  ChainRule kf_rule(Formation const& f);
  ChainRule f_rule(Formation const& f);
  ChainRule sigma_rule(SigmaPartition const& sigma);

  // Shortest-chain search over the subgroup lattice of g, with edge
  // results cached across queries.
  class ChainSearch {
   public:
    ChainSearch(Group const& g, SubgroupLattice const& lattice, ChainRule rule);

    // Shortest chain from subgroup `from` up to subgroup `to` through
    // subgroups between them (by lattice index). Ties go to the lowest
    // lattice index.
    std::optional<WitnessChain> find(std::size_t from, std::size_t to);
    std::optional<WitnessChain> find(std::size_t from) {
      return find(from, lattice_.whole_index());
    }

    // Edge kind for x < y, if any.
    std::optional<StepKind> edge(std::size_t x, std::size_t y);

   private:
    Group const&                                     g_;
    SubgroupLattice const&                           lattice_;
    ChainRule                                        rule_;
    std::map<std::pair<std::size_t, std::size_t>, std::optional<StepKind>>
        edges_;
    std::map<std::pair<std::size_t, std::size_t>, bool> quotient_memo_;
  };

  std::optional<WitnessChain>
  is_k_f_subnormal(Group const&     g,
                   Subgroup const&  a,
                   Formation const& f,
                   std::size_t      lattice_budget = default_lattice_budget);

  std::optional<WitnessChain>
  is_f_subnormal(Group const&     g,
                 Subgroup const&  a,
                 Formation const& f,
                 std::size_t      lattice_budget = default_lattice_budget);

  std::optional<WitnessChain>
  is_sigma_subnormal(Group const&          g,
                     Subgroup const&       a,
                     SigmaPartition const& sigma,
                     std::size_t lattice_budget = default_lattice_budget);

}  // namespace formcheck
