#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "formcheck/group.hpp"
#include "formcheck/lattice.hpp"

namespace formcheck {

  // A partition of the primes: the listed classes are disjoint, every
  // unlisted prime forms a class on its own.
  class SigmaPartition {
   public:
    SigmaPartition() = default;  // all singletons
    explicit SigmaPartition(std::vector<std::vector<unsigned>> classes);

    // Accepts "[[2,3],[5]]", optionally prefixed by "sigma =".
    static SigmaPartition parse(std::string_view text);

    std::vector<std::vector<unsigned>> const& classes() const noexcept {
      return classes_;
    }
    bool is_singletons() const noexcept;

    // Class of p: the listed prime set, or {p}.
    std::set<unsigned> class_of(unsigned p) const;
    // The classes meeting the prime divisors of n, each cut down to those
    // divisors.
    std::vector<std::set<unsigned>> classes_meeting(std::size_t n) const;
    bool                            same_class(unsigned p, unsigned q) const;

    std::string to_string() const;

    bool operator==(SigmaPartition const&) const = default;

   private:
    std::vector<std::vector<unsigned>> classes_;
  };

  bool is_soluble(Group const& g);
  bool is_supersoluble(Group const& g);
  bool is_nilpotent(Group const& g);
  // pi(n) lies in a single class.
  bool is_sigma_primary_order(std::size_t n, SigmaPartition const& sigma);
  bool is_sigma_primary(Group const& g, SigmaPartition const& sigma);
  bool is_sigma_nilpotent(Group const& g, SigmaPartition const& sigma);

  enum class FormationKind { nilpotent, supersoluble, soluble, sigma_nilpotent };

  class Formation {
   public:
    Formation(std::string                            name,
              FormationKind                          kind,
              std::function<bool(Group const&)>      membership,
              bool                                   hereditary,
              bool                                   saturated,
              std::optional<SigmaPartition>          sigma = std::nullopt);

    std::string const& name() const noexcept {
      return name_;
    }
    FormationKind kind() const noexcept {
      return kind_;
    }
    bool contains(Group const& g) const {
      return membership_(g);
    }
    bool hereditary() const noexcept {
      return hereditary_;
    }
    bool saturated() const noexcept {
      return saturated_;
    }
    std::optional<SigmaPartition> const& sigma() const noexcept {
      return sigma_;
    }

   private:
    std::string                       name_;
    FormationKind                     kind_;
    std::function<bool(Group const&)> membership_;
    bool                              hereditary_;
    bool                              saturated_;
    std::optional<SigmaPartition>     sigma_;
  };

  Formation nilpotent_formation();
  Formation supersoluble_formation();
  Formation soluble_formation();
  Formation sigma_nilpotent_formation(SigmaPartition sigma);

  // N, U, S and, when sigma is given, N_sigma.
  std::vector<Formation>
  builtin_formations(std::optional<SigmaPartition> sigma = std::nullopt);

  // "nilpotent" | "supersoluble" | "soluble" | "sigma-nilpotent". Throws
  // UnknownFormation; sigma-nilpotent without a partition is rejected.
  Formation formation_from_selector(std::string_view                     name,
                                    std::optional<SigmaPartition> const& sigma);

  // Intersection of the normal subgroups with quotient in f. Throws
  // FormationLawViolated if g / result is not in f.
  Subgroup residual(Group const& g, Formation const& f);
  Subgroup residual(Group const&                 g,
                    std::vector<Subgroup> const& normals,
                    Formation const&             f);

  // Decides whether the normal section h/k is f-central by testing
  // [h/k](g / C_g(h/k)) for membership.
  bool is_f_central(Group const&     g,
                    Subgroup const&  h,
                    Subgroup const&  k,
                    Formation const& f);

  // [h/k](g / C_g(h/k)) is sigma-primary.
  bool is_sigma_central(Group const&          g,
                        Subgroup const&       h,
                        Subgroup const&       k,
                        SigmaPartition const& sigma);

  // Centrality test for a chief factor h/k of g.
  using CentralityTest = std::function<bool(
      Group const& g, Subgroup const& h, Subgroup const& k)>;

  CentralityTest f_centrality(Formation f);
  // Chief factor of prime order.
  CentralityTest cyclic_centrality();
  CentralityTest sigma_centrality(SigmaPartition sigma);

  // Every chief factor of g below n passes `central` (true for n = 1).
  bool is_hypercentral(Group const&          g,
                       Subgroup const&       n,
                       CentralityTest const& central);
  bool is_f_hypercentral(Group const&     g,
                         Subgroup const&  n,
                         Formation const& f);

  // Product of all hypercentral normal subgroups, re-verified to be
  // hypercentral itself (HypercentreNotHypercentral otherwise).
  Subgroup hypercentre(Group const& g, CentralityTest const& central);
  Subgroup hypercentre(Group const&                 g,
                       std::vector<Subgroup> const& normals,
                       CentralityTest const&        central);
  Subgroup f_hypercentre(Group const& g, Formation const& f);

  // C_g(n) <= n, for n normal. Throws NotNormal.
  bool is_large(Group const& g, Subgroup const& n);

}  // namespace formcheck
