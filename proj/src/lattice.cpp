#include "formcheck/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "formcheck/errors.hpp"
#include "formcheck/subgroups.hpp"

namespace formcheck {

  namespace {
    // Closure of `seeds` under pairwise joins, where each new subgroup is a
    // join of an existing one with a seed. Seeds come with one generating
    // list each.
    std::vector<Subgroup>
    join_closure(Group const&                          g,
                 std::vector<Subgroup> const&          seeds,
                 std::vector<std::vector<Elem>> const& seed_gens) {
      std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
      std::vector<Subgroup>                                       subs;
      std::vector<std::vector<Elem>>                              gens;
      auto add = [&](Subgroup s, std::vector<Elem> gs) {
        if (index.emplace(s.mask(), subs.size()).second) {
          subs.push_back(std::move(s));
          gens.push_back(std::move(gs));
        }
      };
      add(Subgroup::trivial(g.order()), {});
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        add(seeds[i], seed_gens[i]);
      }
      for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t s = 0; s < seeds.size(); ++s) {
          if (seeds[s].is_subgroup_of(subs[i])) {
            continue;
          }
          auto gs = gens[i];
          gs.insert(gs.end(), seed_gens[s].begin(), seed_gens[s].end());
          auto j = generate(g, gs);
          if (!index.contains(j.mask())) {
            add(std::move(j), std::move(gs));
          }
        }
      }
      std::sort(subs.begin(), subs.end());
      return subs;
    }

    std::vector<Elem> conjugacy_class_reps(Group const& g) {
      std::vector<bool> seen(g.order(), false);
      std::vector<Elem> reps;
      for (Elem x = 0; x < g.order(); ++x) {
        if (seen[x]) {
          continue;
        }
        reps.push_back(x);
        std::vector<Elem> orbit{x};
        seen[x] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (auto t : g.generators()) {
            Elem y = g.conj(orbit[i], t);
            if (!seen[y]) {
              seen[y] = true;
              orbit.push_back(y);
            }
          }
        }
      }
      return reps;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SubgroupLattice
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t>
  SubgroupLattice::index_of(Subgroup const& h) const {
    auto it = index_.find(h.mask());
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::size_t> SubgroupLattice::overgroups(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = i; j < subgroups_.size(); ++j) {
      if (contains(j, i)) {
        out.push_back(j);
      }
    }
    return out;
  }

  std::vector<std::size_t> SubgroupLattice::subgroups_of(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j <= i; ++j) {
      if (contains(i, j)) {
        out.push_back(j);
      }
    }
    return out;
  }

  std::vector<std::size_t>
  SubgroupLattice::maximal_subgroups_of(std::size_t i) const {
    auto                     below = subgroups_of(i);
    std::vector<std::size_t> out;
    for (auto j : below) {
      if (j == i) {
        continue;
      }
      bool maximal = true;
      for (auto k : below) {
        if (k != i && k != j && contains(k, j)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(j);
      }
    }
    return out;
  }

  SubgroupLattice all_subgroups(Group const& g, std::size_t budget) {
    if (g.order() > budget) {
      throw LatticeBudgetExceeded("group of order " + std::to_string(g.order())
                                  + " exceeds the lattice budget "
                                  + std::to_string(budget));
    }
    std::vector<Subgroup>          seeds;
    std::vector<std::vector<Elem>> seed_gens;
    {
      std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
      for (Elem x = 1; x < g.order(); ++x) {
        Elem gen[] = {x};
        auto c     = generate(g, gen);
        if (seen.emplace(c.mask(), seeds.size()).second) {
          seeds.push_back(std::move(c));
          seed_gens.push_back({x});
        }
      }
    }
    SubgroupLattice lat;
    lat.subgroups_ = join_closure(g, seeds, seed_gens);
    std::size_t const m = lat.subgroups_.size();
    for (std::size_t i = 0; i < m; ++i) {
      lat.index_.emplace(lat.subgroups_[i].mask(), i);
    }
    lat.inclusion_.assign(m, ElementSet(m));
    for (std::size_t i = 0; i < m; ++i) {
      auto const& si = lat.subgroups_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        auto const& sj = lat.subgroups_[j];
        if (si.order() % sj.order() == 0 && sj.is_subgroup_of(si)) {
          lat.inclusion_[i].set(Elem(j));
        }
      }
    }
    // conjugacy classes by union-find over generator conjugation
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (auto t : g.generators()) {
        auto j  = lat.index_.at(conjugate(g, lat.subgroups_[i], t).mask());
        auto ri = find(i), rj = find(j);
        if (ri != rj) {
          parent[std::max(ri, rj)] = std::min(ri, rj);
        }
      }
    }
    std::vector<std::size_t> class_of(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      auto r = find(i);
      if (class_of[r] == m) {
        class_of[r] = lat.classes_.size();
        lat.classes_.emplace_back();
      }
      lat.classes_[class_of[r]].push_back(i);
    }
    return lat;
  }

  namespace {
    std::vector<Subgroup> compute_normal_subgroups(Group const& g) {
      std::vector<Subgroup>          seeds;
      std::vector<std::vector<Elem>> seed_gens;
      std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
      for (auto x : conjugacy_class_reps(g)) {
        if (x == 0) {
          continue;
        }
        Elem gen[] = {x};
        auto n     = normal_closure(g, gen);
        if (seen.emplace(n.mask(), seeds.size()).second) {
          seed_gens.push_back(generators_of(g, n));
          seeds.push_back(std::move(n));
        }
      }
      return join_closure(g, seeds, seed_gens);
    }
  }  // namespace

  std::vector<Subgroup> normal_subgroups(Group const& g) {
    auto& memo = g.memo();
    std::call_once(memo.normals_once,
                   [&] { memo.normals = compute_normal_subgroups(g); });
    return memo.normals;
  }

  std::vector<Subgroup>
  minimal_normal_subgroups(std::vector<Subgroup> const& normals) {
    std::vector<Subgroup> out;
    for (auto const& n : normals) {
      if (n.is_trivial()) {
        continue;
      }
      bool minimal = true;
      for (auto const& m : normals) {
        if (!m.is_trivial() && m.order() < n.order() && m.is_subgroup_of(n)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(n);
      }
    }
    return out;
  }

  std::vector<Subgroup> minimal_normal_subgroups(Group const& g) {
    return minimal_normal_subgroups(normal_subgroups(g));
  }

  std::vector<std::size_t> ChiefSeries::factor_orders() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      out.push_back(terms[i].order() / terms[i - 1].order());
    }
    return out;
  }

  ChiefSeries chief_series_through(Group const&                 g,
                                   std::vector<Subgroup> const& normals,
                                   Subgroup const&              n) {
    require_normal(g, n, "chief series term");
    ChiefSeries cs;
    cs.terms.push_back(Subgroup::trivial(g.order()));
    auto climb = [&](Subgroup const& top) {
      while (!(cs.terms.back() == top)) {
        auto const& cur = cs.terms.back();
        for (auto const& x : normals) {
          if (x.order() > cur.order() && cur.is_subgroup_of(x)
              && x.is_subgroup_of(top)) {
            cs.terms.push_back(x);
            break;
          }
        }
      }
    };
    climb(n);
    climb(Subgroup::whole(g.order()));
    return cs;
  }

  ChiefSeries chief_series_through(Group const& g, Subgroup const& n) {
    return chief_series_through(g, normal_subgroups(g), n);
  }

  bool is_chief_factor(std::vector<Subgroup> const& normals,
                       Subgroup const&              h,
                       Subgroup const&              k) {
    if (k.order() >= h.order() || !k.is_subgroup_of(h)) {
      return false;
    }
    bool h_normal = false, k_normal = false;
    for (auto const& m : normals) {
      h_normal = h_normal || m == h;
      k_normal = k_normal || m == k;
      if (m.order() > k.order() && m.order() < h.order()
          && k.is_subgroup_of(m) && m.is_subgroup_of(h)) {
        return false;
      }
    }
    return h_normal && k_normal;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  chief_factors(std::vector<Subgroup> const& normals) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      for (std::size_t j = 0; j < normals.size(); ++j) {
        auto const& h = normals[i];
        auto const& k = normals[j];
        if (k.order() >= h.order() || !k.is_subgroup_of(h)) {
          continue;
        }
        bool between = false;
        for (auto const& m : normals) {
          if (m.order() > k.order() && m.order() < h.order()
              && k.is_subgroup_of(m) && m.is_subgroup_of(h)) {
            between = true;
            break;
          }
        }
        if (!between) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  Subgroup frattini(Group const& g, SubgroupLattice const& lattice) {
    auto maximals = lattice.maximal_subgroups_of(lattice.whole_index());
    auto phi      = Subgroup::whole(g.order());
    for (auto i : maximals) {
      phi = meet(phi, lattice[i]);
    }
    return phi;
  }

  Subgroup frattini(Group const& g) {
    return frattini(g, all_subgroups(g));
  }

  std::vector<unsigned> prime_divisors(std::size_t n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; std::size_t(p) * p <= n; ++p) {
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) {
          n /= p;
        }
      }
    }
    if (n > 1) {
      out.push_back(unsigned(n));
    }
    return out;
  }

  std::optional<Subgroup> normal_hall_subgroup(Group const&              g,
                                               std::set<unsigned> const& primes) {
    std::size_t part = 1, rest = g.order();
    for (auto p : prime_divisors(g.order())) {
      if (primes.contains(p)) {
        while (rest % p == 0) {
          rest /= p;
          part *= p;
        }
      }
    }
    // a normal Hall subgroup is exactly the set of its primes' elements
    std::vector<Elem> pi_elements;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (auto p : prime_divisors(g.element_order(x))) {
        if (!primes.contains(p)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pi_elements.push_back(x);
      }
    }
    if (pi_elements.size() != part) {
      return std::nullopt;
    }
    auto h = generate(g, pi_elements);
    if (h.order() != part) {
      return std::nullopt;
    }
    return h;
  }

}  // namespace formcheck
