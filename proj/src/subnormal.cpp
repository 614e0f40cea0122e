#include "formcheck/subnormal.hpp"

#include <algorithm>
#include <deque>

#include "formcheck/construct.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/subgroups.hpp"

namespace formcheck {

  std::string WitnessChain::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i > 0) {
        out += kinds[i - 1] == StepKind::normal ? " --normal-step--> "
                                                : " --f-step--> ";
      }
      out += std::to_string(terms[i].order());
    }
    return out;
  }

  namespace {
    bool core_quotient_in(Group const&                             g,
                          Subgroup const&                          y,
                          Subgroup const&                          x,
                          std::function<bool(Group const&)> const& in_class) {
      auto c   = core(g, y, x);
      auto emb = as_group(g, y);
      return in_class(quotient(emb.group, emb.restrict(c)).first);
    }
  }  // namespace

  bool validate_chain(Group const&                             g,
                      WitnessChain const&                      chain,
                      std::function<bool(Group const&)> const& in_class) {
    if (chain.terms.empty() || chain.kinds.size() + 1 != chain.terms.size()
        || !chain.terms.back().is_whole()) {
      return false;
    }
    for (std::size_t i = 0; i < chain.kinds.size(); ++i) {
      auto const& x = chain.terms[i];
      auto const& y = chain.terms[i + 1];
      if (!x.is_subgroup_of(y)) {
        return false;
      }
      if (chain.kinds[i] == StepKind::normal) {
        if (!is_normal_in(g, y, x)) {
          return false;
        }
      } else if (!core_quotient_in(g, y, x, in_class)) {
        return false;
      }
    }
    return true;
  }

  std::optional<WitnessChain> is_subnormal(Group const& g, Subgroup const& a) {
    std::vector<Subgroup> descent{Subgroup::whole(g.order())};
    auto                  gens = generators_of(g, a);
    while (true) {
      auto next = normal_closure_in(g, descent.back(), gens);
      if (next == descent.back()) {
        break;
      }
      descent.push_back(std::move(next));
    }
    if (!(descent.back() == a)) {
      return std::nullopt;
    }
    WitnessChain chain;
    chain.terms.assign(descent.rbegin(), descent.rend());
    chain.kinds.assign(chain.terms.size() - 1, StepKind::normal);
    return chain;
  }

  ChainRule kf_rule(Formation const& f) {
    return ChainRule{true, [f](Group const& q) { return f.contains(q); }, {}};
  }

  ChainRule f_rule(Formation const& f) {
    return ChainRule{false, [f](Group const& q) { return f.contains(q); }, {}};
  }

  ChainRule sigma_rule(SigmaPartition const& sigma) {
    return ChainRule{
        true,
        [sigma](Group const& q) { return is_sigma_primary(q, sigma); },
        [sigma](std::size_t n) { return is_sigma_primary_order(n, sigma); }};
  }

  ChainSearch::ChainSearch(Group const&           g,
                           SubgroupLattice const& lattice,
                           ChainRule              rule)
      : g_(g), lattice_(lattice), rule_(std::move(rule)) {}

  std::optional<StepKind> ChainSearch::edge(std::size_t x, std::size_t y) {
    auto key = std::make_pair(x, y);
    if (auto it = edges_.find(key); it != edges_.end()) {
      return it->second;
    }
    std::optional<StepKind> result;
    auto const&             X = lattice_[x];
    auto const&             Y = lattice_[y];
    if (rule_.allow_normal && is_normal_in(g_, Y, X)) {
      result = StepKind::normal;
    } else {
      auto c  = core(g_, Y, X);
      auto ci = *lattice_.index_of(c);
      auto qk = std::make_pair(y, ci);
      bool in;
      if (auto it = quotient_memo_.find(qk); it != quotient_memo_.end()) {
        in = it->second;
      } else {
        if (rule_.by_order) {
          in = rule_.by_order(Y.order() / c.order());
        } else {
          auto emb = as_group(g_, Y);
          in = rule_.in_class(quotient(emb.group, emb.restrict(c)).first);
        }
        quotient_memo_.emplace(qk, in);
      }
      if (in) {
        result = StepKind::f_step;
      }
    }
    edges_.emplace(key, result);
    return result;
  }

  std::optional<WitnessChain> ChainSearch::find(std::size_t from,
                                                std::size_t to) {
    if (!lattice_.contains(to, from)) {
      return std::nullopt;
    }
    if (from == to) {
      return WitnessChain{{lattice_[from]}, {}};
    }
    std::vector<std::size_t> between;
    for (std::size_t j = from; j <= to; ++j) {
      if (lattice_.contains(j, from) && lattice_.contains(to, j)) {
        between.push_back(j);
      }
    }
    constexpr std::size_t none = std::size_t(-1);
    std::map<std::size_t, std::pair<std::size_t, StepKind>> parent;
    std::deque<std::size_t>                                 queue{from};
    parent.emplace(from, std::make_pair(none, StepKind::normal));
    while (!queue.empty() && !parent.contains(to)) {
      auto cur = queue.front();
      queue.pop_front();
      for (auto j : between) {
        if (j == cur || parent.contains(j) || !lattice_.contains(j, cur)) {
          continue;
        }
        if (auto k = edge(cur, j)) {
          parent.emplace(j, std::make_pair(cur, *k));
          queue.push_back(j);
        }
      }
    }
    if (!parent.contains(to)) {
      return std::nullopt;
    }
    WitnessChain chain;
    for (auto cur = to; cur != none;) {
      auto [p, kind] = parent.at(cur);
      chain.terms.push_back(lattice_[cur]);
      if (p != none) {
        chain.kinds.push_back(kind);
      }
      cur = p;
    }
    std::reverse(chain.terms.begin(), chain.terms.end());
    std::reverse(chain.kinds.begin(), chain.kinds.end());
    return chain;
  }

  namespace {
    std::optional<WitnessChain> search_once(Group const&    g,
                                            Subgroup const& a,
                                            ChainRule       rule,
                                            std::size_t     budget) {
      auto lattice = all_subgroups(g, budget);
      auto idx     = lattice.index_of(a);
      if (!idx) {
        throw InvalidArgument("element set is not a subgroup");
      }
      ChainSearch search(g, lattice, std::move(rule));
      return search.find(*idx);
    }
  }  // namespace

  std::optional<WitnessChain> is_k_f_subnormal(Group const&     g,
                                               Subgroup const&  a,
                                               Formation const& f,
                                               std::size_t lattice_budget) {
    return search_once(g, a, kf_rule(f), lattice_budget);
  }

  std::optional<WitnessChain> is_f_subnormal(Group const&     g,
                                             Subgroup const&  a,
                                             Formation const& f,
                                             std::size_t      lattice_budget) {
    return search_once(g, a, f_rule(f), lattice_budget);
  }

  std::optional<WitnessChain>
  is_sigma_subnormal(Group const&          g,
                     Subgroup const&       a,
                     SigmaPartition const& sigma,
                     std::size_t           lattice_budget) {
    return search_once(g, a, sigma_rule(sigma), lattice_budget);
  }

}  // namespace formcheck
