#include "formcheck/formation.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "formcheck/construct.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/subgroups.hpp"

namespace formcheck {

  namespace {
    bool is_prime(unsigned p) {
      if (p < 2) {
        return false;
      }
      for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SigmaPartition
  ////////////////////////////////////////////////////////////////////////

  SigmaPartition::SigmaPartition(std::vector<std::vector<unsigned>> classes)
      : classes_(std::move(classes)) {
    std::set<unsigned> seen;
    for (auto& c : classes_) {
      if (c.empty()) {
        throw InvalidArgument("sigma partition has an empty class");
      }
      std::sort(c.begin(), c.end());
      for (auto p : c) {
        if (!is_prime(p)) {
          throw InvalidArgument("sigma partition entry " + std::to_string(p)
                                + " is not prime");
        }
        if (!seen.insert(p).second) {
          throw InvalidArgument("sigma partition lists " + std::to_string(p)
                                + " twice");
        }
      }
    }
    std::sort(classes_.begin(), classes_.end());
  }

  SigmaPartition SigmaPartition::parse(std::string_view text) {
    std::string s(text);
    if (auto eq = s.find('='); eq != std::string::npos) {
      auto head = s.substr(0, eq);
      head.erase(std::remove_if(head.begin(), head.end(), ::isspace),
                 head.end());
      if (head != "sigma") {
        throw ParseError("expected 'sigma = [[...]]'", 0);
      }
      s = s.substr(eq + 1);
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (nlohmann::json::exception const&) {
      throw ParseError("malformed sigma partition: " + std::string(text), 0);
    }
    if (!j.is_array()) {
      throw ParseError("sigma partition must be a list of prime lists", 0);
    }
    std::vector<std::vector<unsigned>> classes;
    for (auto const& c : j) {
      if (!c.is_array()) {
        throw ParseError("sigma partition must be a list of prime lists", 0);
      }
      std::vector<unsigned> cls;
      for (auto const& p : c) {
        if (!p.is_number_unsigned()) {
          throw ParseError("sigma partition entries must be primes", 0);
        }
        cls.push_back(p.get<unsigned>());
      }
      classes.push_back(std::move(cls));
    }
    return SigmaPartition(std::move(classes));
  }

  bool SigmaPartition::is_singletons() const noexcept {
    return std::all_of(classes_.begin(), classes_.end(),
                       [](auto const& c) { return c.size() == 1; });
  }

  std::set<unsigned> SigmaPartition::class_of(unsigned p) const {
    for (auto const& c : classes_) {
      if (std::find(c.begin(), c.end(), p) != c.end()) {
        return {c.begin(), c.end()};
      }
    }
    return {p};
  }

  bool SigmaPartition::same_class(unsigned p, unsigned q) const {
    return class_of(p).contains(q);
  }

  std::vector<std::set<unsigned>>
  SigmaPartition::classes_meeting(std::size_t n) const {
    std::vector<std::set<unsigned>> out;
    for (auto p : prime_divisors(n)) {
      bool placed = false;
      for (auto& c : out) {
        if (same_class(*c.begin(), p)) {
          c.insert(p);
          placed = true;
          break;
        }
      }
      if (!placed) {
        out.push_back({p});
      }
    }
    return out;
  }

  std::string SigmaPartition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < classes_[i].size(); ++j) {
        out += (j ? "," : "") + std::to_string(classes_[i][j]);
      }
      out += "]";
    }
    return out + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Membership predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_soluble(Group const& g) {
    return derived_series(g).back().is_trivial();
  }

  bool is_supersoluble(Group const& g) {
    // Grow a normal series with factors of prime order. A supersoluble
    // quotient G/K always has a normal subgroup of prime order, and it is the
    // normal closure of K and any of its elements outside K.
    std::size_t const n   = g.order();
    auto              cur = Subgroup::trivial(n);
    while (!cur.is_whole()) {
      auto gens  = generators_of(g, cur);
      bool grown = false;
      for (Elem x = 1; x < n && !grown; ++x) {
        if (cur.contains(x)) {
          continue;
        }
        unsigned k = 1;
        for (Elem y = x; !cur.contains(y); y = g.mul(y, x)) {
          ++k;
        }
        if (!is_prime(k)) {
          continue;
        }
        gens.push_back(x);
        auto m = normal_closure(g, gens);
        gens.pop_back();
        if (is_prime(unsigned(m.order() / cur.order()))) {
          cur   = std::move(m);
          grown = true;
        }
      }
      if (!grown) {
        return false;
      }
    }
    return true;
  }

  bool is_sigma_primary_order(std::size_t n, SigmaPartition const& sigma) {
    return sigma.classes_meeting(n).size() <= 1;
  }

  bool is_sigma_primary(Group const& g, SigmaPartition const& sigma) {
    return is_sigma_primary_order(g.order(), sigma);
  }

  bool is_sigma_nilpotent(Group const& g, SigmaPartition const& sigma) {
    auto classes = sigma.classes_meeting(g.order());
    if (classes.size() <= 1) {
      return true;
    }
    for (auto const& c : classes) {
      if (!normal_hall_subgroup(g, c)) {
        return false;
      }
    }
    return true;
  }

  bool is_nilpotent(Group const& g) {
    return is_sigma_nilpotent(g, SigmaPartition());
  }

  ////////////////////////////////////////////////////////////////////////
  // Formation
  ////////////////////////////////////////////////////////////////////////

  Formation::Formation(std::string                       name,
                       FormationKind                     kind,
                       std::function<bool(Group const&)> membership,
                       bool                              hereditary,
                       bool                              saturated,
                       std::optional<SigmaPartition>     sigma)
      : name_(std::move(name)),
        kind_(kind),
        membership_(std::move(membership)),
        hereditary_(hereditary),
        saturated_(saturated),
        sigma_(std::move(sigma)) {}

  Formation nilpotent_formation() {
    return Formation("nilpotent", FormationKind::nilpotent, is_nilpotent,
                     true, true);
  }

  Formation supersoluble_formation() {
    return Formation("supersoluble", FormationKind::supersoluble,
                     is_supersoluble, true, true);
  }

  Formation soluble_formation() {
    return Formation("soluble", FormationKind::soluble, is_soluble, true,
                     true);
  }

  Formation sigma_nilpotent_formation(SigmaPartition sigma) {
    return Formation(
        "sigma-nilpotent", FormationKind::sigma_nilpotent,
        [sigma](Group const& g) { return is_sigma_nilpotent(g, sigma); }, true,
        true, sigma);
  }

  std::vector<Formation>
  builtin_formations(std::optional<SigmaPartition> sigma) {
    std::vector<Formation> out{nilpotent_formation(),
                               supersoluble_formation(),
                               soluble_formation()};
    if (sigma) {
      out.push_back(sigma_nilpotent_formation(*sigma));
    }
    return out;
  }

  Formation formation_from_selector(std::string_view                     name,
                                    std::optional<SigmaPartition> const& sigma) {
    if (name == "nilpotent") {
      return nilpotent_formation();
    }
    if (name == "supersoluble") {
      return supersoluble_formation();
    }
    if (name == "soluble") {
      return soluble_formation();
    }
    if (name == "sigma-nilpotent") {
      if (!sigma) {
        throw InvalidArgument("sigma-nilpotent needs a sigma partition");
      }
      return sigma_nilpotent_formation(*sigma);
    }
    throw UnknownFormation("unknown formation '" + std::string(name)
                           + "' (expected nilpotent, supersoluble, soluble "
                             "or sigma-nilpotent)");
  }

  ////////////////////////////////////////////////////////////////////////
  // Residuals and centrality
  ////////////////////////////////////////////////////////////////////////

  Subgroup residual(Group const&                 g,
                    std::vector<Subgroup> const& normals,
                    Formation const&             f) {
    auto result = Subgroup::whole(g.order());
    for (auto const& n : normals) {
      // n containing the running intersection cannot shrink it
      if (!result.is_subgroup_of(n) && f.contains(quotient(g, n).first)) {
        result = meet(result, n);
      }
    }
    if (!f.contains(quotient(g, result).first)) {
      throw FormationLawViolated("quotient by the " + f.name()
                                 + " residual of " + g.label()
                                 + " is not in the class");
    }
    return result;
  }

  Subgroup residual(Group const& g, Formation const& f) {
    return residual(g, normal_subgroups(g), f);
  }

  bool is_f_central(Group const&     g,
                    Subgroup const&  h,
                    Subgroup const&  k,
                    Formation const& f) {
    // a trivial section gives G / G
    if (h == k) {
      return true;
    }
    // h/k embeds as a normal subgroup of the semidirect product, so a
    // non-soluble section is never central for a class of soluble groups
    if (f.kind() != FormationKind::sigma_nilpotent) {
      auto d = h;
      while (!d.is_subgroup_of(k)) {
        auto next = derived_subgroup(g, d);
        if (next == d) {
          return false;
        }
        d = std::move(next);
      }
    }
    auto c = centralizer_of_section(g, h, k);
    return f.contains(semidirect_section(g, h, k, c));
  }

  bool is_sigma_central(Group const&          g,
                        Subgroup const&       h,
                        Subgroup const&       k,
                        SigmaPartition const& sigma) {
    auto              c = centralizer_of_section(g, h, k);
    std::size_t const n = (h.order() / k.order()) * (g.order() / c.order());
    return is_sigma_primary_order(n, sigma);
  }

  CentralityTest f_centrality(Formation f) {
    return [f = std::move(f)](Group const&    g,
                              Subgroup const& h,
                              Subgroup const& k) {
      return is_f_central(g, h, k, f);
    };
  }

  CentralityTest cyclic_centrality() {
    return [](Group const&, Subgroup const& h, Subgroup const& k) {
      auto n = h.order() / k.order();
      return is_prime(unsigned(n));
    };
  }

  CentralityTest sigma_centrality(SigmaPartition sigma) {
    return [sigma = std::move(sigma)](Group const&    g,
                                      Subgroup const& h,
                                      Subgroup const& k) {
      return is_sigma_central(g, h, k, sigma);
    };
  }

  namespace {
    class HypercentralityCheck {
     public:
      HypercentralityCheck(Group const&                 g,
                           std::vector<Subgroup> const& normals,
                           CentralityTest const&        central)
          : g_(g), normals_(normals), central_(central) {}

      bool operator()(Subgroup const& n) {
        if (n.is_trivial()) {
          return true;
        }
        auto cs = chief_series_through(g_, normals_, n);
        for (std::size_t i = 1; i < cs.terms.size(); ++i) {
          auto const& k = cs.terms[i - 1];
          auto const& h = cs.terms[i];
          if (!h.is_subgroup_of(n)) {
            break;
          }
          if (!factor_central(h, k)) {
            return false;
          }
        }
        return true;
      }

     private:
      bool factor_central(Subgroup const& h, Subgroup const& k) {
        auto key = std::make_pair(h, k);
        auto it  = memo_.find(key);
        if (it != memo_.end()) {
          return it->second;
        }
        bool r = central_(g_, h, k);
        memo_.emplace(std::move(key), r);
        return r;
      }

      Group const&                                   g_;
      std::vector<Subgroup> const&                   normals_;
      CentralityTest const&                          central_;
      std::map<std::pair<Subgroup, Subgroup>, bool> memo_;
    };
  }  // namespace

  bool is_hypercentral(Group const&          g,
                       Subgroup const&       n,
                       CentralityTest const& central) {
    auto normals = normal_subgroups(g);
    return HypercentralityCheck(g, normals, central)(n);
  }

  bool is_f_hypercentral(Group const&     g,
                         Subgroup const&  n,
                         Formation const& f) {
    return is_hypercentral(g, n, f_centrality(f));
  }

  Subgroup hypercentre(Group const&                 g,
                       std::vector<Subgroup> const& normals,
                       CentralityTest const&        central) {
    HypercentralityCheck check(g, normals, central);
    auto                 z = Subgroup::trivial(g.order());
    for (auto const& n : normals) {
      if (!n.is_subgroup_of(z) && check(n)) {
        z = join(g, z, n);
      }
    }
    if (!check(z)) {
      throw HypercentreNotHypercentral("hypercentre of " + g.label()
                                       + " is not hypercentral");
    }
    return z;
  }

  Subgroup hypercentre(Group const& g, CentralityTest const& central) {
    return hypercentre(g, normal_subgroups(g), central);
  }

  Subgroup f_hypercentre(Group const& g, Formation const& f) {
    return hypercentre(g, f_centrality(f));
  }

  bool is_large(Group const& g, Subgroup const& n) {
    require_normal(g, n, "subgroup");
    return centralizer(g, n).is_subgroup_of(n);
  }

}  // namespace formcheck
