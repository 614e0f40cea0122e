#include "formcheck/subgroups.hpp"

#include <algorithm>

#include "formcheck/errors.hpp"

namespace formcheck {

  Subgroup generate(Group const& g, std::span<Elem const> gens) {
    ElementSet        mask(g.order());
    std::vector<Elem> queue{0};
    mask.set(0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : gens) {
        Elem y = g.mul(queue[i], s);
        if (!mask.test(y)) {
          mask.set(y);
          queue.push_back(y);
        }
      }
    }
    return Subgroup(std::move(mask));
  }

  std::vector<Elem> generators_of(Group const& g, Subgroup const& h) {
    std::vector<Elem> gens;
    ElementSet        span(g.order());
    std::vector<Elem> queue{0};
    span.set(0);
    for (auto x : h.members()) {
      if (queue.size() == h.order()) {
        break;
      }
      if (span.test(x)) {
        continue;
      }
      gens.push_back(x);
      // the old span is closed under the old generators, so it only needs
      // multiplying by x; new elements get every generator
      std::size_t const old = queue.size();
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto step = [&](Elem s) {
          Elem y = g.mul(queue[i], s);
          if (!span.test(y)) {
            span.set(y);
            queue.push_back(y);
          }
        };
        if (i < old) {
          step(x);
        } else {
          for (auto s : gens) {
            step(s);
          }
        }
      }
    }
    return gens;
  }

  Subgroup join(Group const& g, Subgroup const& a, Subgroup const& b) {
    if (a.is_subgroup_of(b)) {
      return b;
    }
    if (b.is_subgroup_of(a)) {
      return a;
    }
    auto gens = generators_of(g, a);
    for (auto x : generators_of(g, b)) {
      gens.push_back(x);
    }
    return generate(g, gens);
  }

  Subgroup meet(Subgroup const& a, Subgroup const& b) {
    auto m = a.mask();
    m &= b.mask();
    return Subgroup(std::move(m));
  }

  bool is_closed(Group const& g, ElementSet const& s) {
    if (!s.test(0)) {
      return false;
    }
    auto members = s.to_vector();
    for (auto a : members) {
      for (auto b : members) {
        if (!s.test(g.mul(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::pair<Elem, Elem>>
  normality_witness(Group const& g, Subgroup const& y, Subgroup const& x) {
    if (x.order() == y.order() || x.is_trivial()) {
      return std::nullopt;
    }
    auto ygens = generators_of(g, y);
    for (auto t : ygens) {
      for (auto a : x.members()) {
        if (!x.contains(g.conj(a, t))) {
          return std::make_pair(t, a);
        }
      }
    }
    return std::nullopt;
  }

  bool is_normal_in(Group const& g, Subgroup const& y, Subgroup const& x) {
    return !normality_witness(g, y, x).has_value();
  }

  bool is_normal(Group const& g, Subgroup const& n) {
    if (n.is_trivial() || n.is_whole()) {
      return true;
    }
    for (auto t : g.generators()) {
      for (auto a : n.members()) {
        if (!n.contains(g.conj(a, t))) {
          return false;
        }
      }
    }
    return true;
  }

  void require_normal(Group const& g, Subgroup const& n, char const* what) {
    if (n.is_trivial() || n.is_whole()) {
      return;
    }
    for (auto t : g.generators()) {
      for (auto a : n.members()) {
        if (!n.contains(g.conj(a, t))) {
          throw NotNormal(std::string(what) + " is not normal", long(t),
                          long(a));
        }
      }
    }
  }

  Subgroup conjugate(Group const& g, Subgroup const& h, Elem by) {
    ElementSet m(g.order());
    for (auto a : h.members()) {
      m.set(g.conj(a, by));
    }
    return Subgroup(std::move(m));
  }

  Subgroup centralizer(Group const& g, Subgroup const& s) {
    auto       gens = generators_of(g, s);
    ElementSet m(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (auto a : gens) {
        if (g.mul(x, a) != g.mul(a, x)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        m.set(x);
      }
    }
    return Subgroup(std::move(m));
  }

  Subgroup center(Group const& g) {
    return centralizer(g, Subgroup::whole(g.order()));
  }

  Subgroup centralizer_of_section(Group const&    g,
                                  Subgroup const& h,
                                  Subgroup const& k) {
    ElementSet m(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (auto a : h.members()) {
        // x^-1 a x K == a K  <=>  a^-1 x^-1 a x in K
        if (!k.contains(g.mul(g.inv(a), g.conj(a, x)))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        m.set(x);
      }
    }
    return Subgroup(std::move(m));
  }

  Subgroup core(Group const& g, Subgroup const& y, Subgroup const& x) {
    if (x.order() == y.order() || x.is_trivial()) {
      return x;
    }
    ElementSet m(g.order());
    for (auto a : x.members()) {
      bool ok = true;
      for (auto t : y.members()) {
        if (!x.contains(g.conj(a, t))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        m.set(a);
      }
    }
    return Subgroup(std::move(m));
  }

  Subgroup normal_closure_in(Group const&          g,
                             Subgroup const&       y,
                             std::span<Elem const> xs) {
    auto const ygens = y.is_whole() ? g.generators() : generators_of(g, y);
    // conjugates of the newest generators are added until the generated
    // subgroup is invariant under the generators of y
    std::vector<Elem> gens;
    for (auto x : xs) {
      if (x != 0) {
        gens.push_back(x);
      }
    }
    auto        current = generate(g, gens);
    std::size_t fresh   = 0;
    while (fresh < gens.size()) {
      std::size_t const before = gens.size();
      for (std::size_t i = fresh; i < before; ++i) {
        for (auto t : ygens) {
          Elem c = g.conj(gens[i], t);
          if (!current.contains(c)) {
            gens.push_back(c);
            current = generate(g, gens);
          }
        }
      }
      fresh = before;
    }
    return current;
  }

  Subgroup normal_closure(Group const& g, std::span<Elem const> xs) {
    return normal_closure_in(g, Subgroup::whole(g.order()), xs);
  }

  Subgroup derived_subgroup(Group const& g, Subgroup const& y) {
    auto              gens = generators_of(g, y);
    std::vector<Elem> comms;
    for (auto a : gens) {
      for (auto b : gens) {
        Elem c = g.commutator(a, b);
        if (c != 0) {
          comms.push_back(c);
        }
      }
    }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return normal_closure_in(g, y, comms);
  }

  std::vector<Subgroup> derived_series(Group const& g) {
    std::vector<Subgroup> series{Subgroup::whole(g.order())};
    while (true) {
      auto next = derived_subgroup(g, series.back());
      if (next == series.back()) {
        return series;
      }
      series.push_back(std::move(next));
    }
  }

  std::size_t product_size(Subgroup const& a, Subgroup const& b) {
    return a.order() * b.order() / meet(a, b).order();
  }

}  // namespace formcheck
