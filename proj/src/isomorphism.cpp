#include "formcheck/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "formcheck/construct.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/subgroups.hpp"

namespace formcheck {

  namespace {
    constexpr Elem npos = Embedding::npos;

    std::vector<std::size_t> class_sizes(Group const& g) {
      std::size_t const        n = g.order();
      std::vector<std::size_t> size(n, 0);
      std::vector<Elem>        cls(n, npos);
      for (Elem x = 0; x < n; ++x) {
        if (cls[x] != npos) {
          continue;
        }
        std::vector<Elem> orbit{x};
        cls[x] = x;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (auto t : g.generators()) {
            Elem y = g.conj(orbit[i], t);
            if (cls[y] == npos) {
              cls[y] = x;
              orbit.push_back(y);
            }
          }
        }
        for (auto y : orbit) {
          size[y] = orbit.size();
        }
      }
      return size;
    }

    std::vector<std::uint64_t> signatures(Group const& g) {
      std::size_t const          n = g.order();
      auto const                 cs = class_sizes(g);
      std::vector<std::uint64_t> roots(n, 0);
      for (Elem x = 0; x < n; ++x) {
        ++roots[g.mul(x, x)];
      }
      std::vector<std::uint64_t> sig(n);
      for (Elem x = 0; x < n; ++x) {
        sig[x] = (std::uint64_t(g.element_order(x)) << 42)
                 | (std::uint64_t(cs[x]) << 21) | roots[x];
      }
      return sig;
    }

    // Backtracking over generator images. `on_found` returns true to stop.
    class IsoSearch {
     public:
      IsoSearch(Group const& g, Group const& h, std::uint64_t budget)
          : g_(g),
            h_(h),
            budget_(budget),
            sig_g_(signatures(g)),
            sig_h_(signatures(h)) {
        choose_generators();
      }

      void run(std::function<bool(std::vector<Elem> const&)> const& on_found) {
        on_found_ = &on_found;
        if (g_.order() != h_.order()) {
          return;
        }
        {
          auto a = sig_g_, b = sig_h_;
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          if (a != b) {
            return;
          }
        }
        images_.clear();
        fmap_.assign(g_.order(), npos);
        stop_ = false;
        if (gens_.empty()) {
          std::vector<Elem> id{0};
          (*on_found_)(id);
          return;
        }
        search(0);
      }

     private:
      void choose_generators() {
        std::size_t const                       n = g_.order();
        std::unordered_map<std::uint64_t, std::size_t> freq;
        for (auto s : sig_h_) {
          ++freq[s];
        }
        std::vector<Elem> order(n);
        for (Elem x = 0; x < n; ++x) {
          order[x] = x;
        }
        std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
          auto fa = freq[sig_g_[a]], fb = freq[sig_g_[b]];
          if (fa != fb) {
            return fa < fb;
          }
          return g_.element_order(a) > g_.element_order(b);
        });
        ElementSet span(n);
        span.set(0);
        std::size_t span_size = 1;
        for (auto x : order) {
          if (span_size == n) {
            break;
          }
          if (span.test(x)) {
            continue;
          }
          gens_.push_back(x);
          auto s    = generate(g_, gens_);
          span      = s.mask();
          span_size = s.order();
        }
        // breadth-first trees of each prefix subgroup
        for (std::size_t i = 1; i <= gens_.size(); ++i) {
          std::vector<Node> tree{{0, 0, 0}};
          std::vector<bool> seen(n, false);
          seen[0] = true;
          for (std::size_t p = 0; p < tree.size(); ++p) {
            for (std::size_t j = 0; j < i; ++j) {
              Elem y = g_.mul(tree[p].elem, gens_[j]);
              if (!seen[y]) {
                seen[y] = true;
                tree.push_back({y, p, j});
              }
            }
          }
          trees_.push_back(std::move(tree));
        }
      }

      struct Node {
        Elem        elem;
        std::size_t parent;
        std::size_t gen;
      };

      bool extend(std::size_t level) {
        auto const& tree = trees_[level];
        for (auto const& nd : tree) {
          fmap_[nd.elem] = npos;
        }
        std::vector<bool> used(h_.order(), false);
        fmap_[0] = 0;
        used[0]  = true;
        for (std::size_t p = 1; p < tree.size(); ++p) {
          auto const& nd = tree[p];
          Elem y = h_.mul(fmap_[tree[nd.parent].elem], images_[nd.gen]);
          if (used[y] || sig_h_[y] != sig_g_[nd.elem]) {
            return false;
          }
          used[y]        = true;
          fmap_[nd.elem] = y;
        }
        for (auto const& nd : tree) {
          for (std::size_t j = 0; j <= level; ++j) {
            Elem x = g_.mul(nd.elem, gens_[j]);
            if (fmap_[x] != h_.mul(fmap_[nd.elem], images_[j])) {
              return false;
            }
          }
        }
        return true;
      }

      void search(std::size_t level) {
        auto const target = sig_g_[gens_[level]];
        for (Elem y = 0; y < h_.order() && !stop_; ++y) {
          if (sig_h_[y] != target) {
            continue;
          }
          if (++nodes_ > budget_) {
            throw SearchBudgetExceeded("isomorphism search exceeded "
                                       + std::to_string(budget_) + " nodes");
          }
          images_.resize(level);
          images_.push_back(y);
          if (!extend(level)) {
            continue;
          }
          if (level + 1 == gens_.size()) {
            stop_ = (*on_found_)(fmap_);
          } else {
            search(level + 1);
            // the deeper levels overwrote fmap_ beyond this prefix; it is
            // rebuilt on the next extend
          }
        }
      }

      Group const&                     g_;
      Group const&                     h_;
      std::uint64_t                    budget_;
      std::uint64_t                    nodes_ = 0;
      std::vector<std::uint64_t>       sig_g_, sig_h_;
      std::vector<Elem>                gens_;
      std::vector<std::vector<Node>>   trees_;
      std::vector<Elem>                images_;
      std::vector<Elem>                fmap_;
      bool                             stop_ = false;
      std::function<bool(std::vector<Elem> const&)> const* on_found_
          = nullptr;
    };
  }  // namespace

  Fingerprint fingerprint(Group const& g) {
    Fingerprint fp;
    fp.order           = g.order();
    fp.element_profile = signatures(g);
    std::sort(fp.element_profile.begin(), fp.element_profile.end());
    fp.center_order = center(g).order();
    for (auto const& d : derived_series(g)) {
      fp.derived_orders.push_back(d.order());
    }
    return fp;
  }

  std::optional<Homomorphism>
  is_isomorphic(Group const& g, Group const& h, std::uint64_t budget) {
    if (g.order() != h.order() || fingerprint(g) != fingerprint(h)) {
      return std::nullopt;
    }
    std::optional<Homomorphism> result;
    IsoSearch                   s(g, h, budget);
    s.run([&](std::vector<Elem> const& f) {
      result = Homomorphism{g, h, f};
      return true;
    });
    return result;
  }

  std::vector<std::vector<Elem>> automorphisms(Group const&  g,
                                               std::uint64_t budget) {
    std::vector<std::vector<Elem>> out;
    IsoSearch                      s(g, g, budget);
    s.run([&](std::vector<Elem> const& f) {
      out.push_back(f);
      return false;
    });
    auto is_identity = [](std::vector<Elem> const& f) {
      for (Elem x = 0; x < f.size(); ++x) {
        if (f[x] != x) {
          return false;
        }
      }
      return true;
    };
    auto it = std::find_if(out.begin(), out.end(), is_identity);
    if (it != out.end()) {
      std::rotate(out.begin(), it, it + 1);
    }
    return out;
  }

  std::uint64_t count_automorphisms(Group const& g, std::uint64_t budget) {
    std::uint64_t count = 0;
    IsoSearch     s(g, g, budget);
    s.run([&](std::vector<Elem> const&) {
      ++count;
      return false;
    });
    return count;
  }

  AutomorphismGroup automorphism_group(Group const&  g,
                                       std::size_t   order_cap,
                                       std::uint64_t budget) {
    auto auts = automorphisms(g, budget);
    if (auts.size() > order_cap) {
      throw OrderCapExceeded("automorphism group has order "
                             + std::to_string(auts.size())
                             + ", above the cap "
                             + std::to_string(order_cap));
    }
    std::map<std::vector<Elem>, Elem> index;
    for (Elem i = 0; i < auts.size(); ++i) {
      index.emplace(auts[i], i);
    }
    std::size_t const n = auts.size();
    std::vector<Elem> table(n * n);
    std::vector<Elem> comp(g.order());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (Elem x = 0; x < g.order(); ++x) {
          comp[x] = auts[a][auts[b][x]];
        }
        table[a * n + b] = index.at(comp);
      }
    }
    auto grp = Group::from_trusted_table(n, std::move(table),
                                         "Aut(" + g.label() + ")");
    return AutomorphismGroup{std::move(grp), std::move(auts)};
  }

  Group holomorph(Group const& g, std::size_t order_cap, std::uint64_t budget) {
    auto aut = automorphism_group(g, order_cap, budget);
    return semidirect_product(g, aut.group, aut.action, order_cap, false,
                              "Hol(" + g.label() + ")");
  }

}  // namespace formcheck
