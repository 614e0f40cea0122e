#include "formcheck/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "formcheck/errors.hpp"
#include "formcheck/subgroups.hpp"

namespace formcheck {

  namespace {
    constexpr Elem npos = Embedding::npos;

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

    void check_cap(std::size_t n, std::size_t cap, std::string const& what) {
      if (n > cap) {
        throw OrderCapExceeded(what + " has order " + std::to_string(n)
                               + ", above the cap " + std::to_string(cap));
      }
    }
  }  // namespace

  Group from_cayley_table(std::vector<std::vector<Elem>> const& table,
                          std::string                           label) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw NotAGroup("empty table", {-1, -1, -1});
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw NotAGroup("table is not square", {long(a), -1, -1});
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw NotAGroup("entry out of range", {long(a), long(b), -1});
        }
      }
    }
    long identity = -1;
    for (std::size_t e = 0; e < n && identity < 0; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) {
        ok = table[e][g] == g && table[g][e] == g;
      }
      if (ok) {
        identity = long(e);
      }
    }
    if (identity < 0) {
      throw NotAGroup("no identity element", {-1, -1, -1});
    }
    // swap identity into slot 0
    auto relabel = [&](Elem x) -> Elem {
      if (x == 0) {
        return Elem(identity);
      }
      if (x == Elem(identity)) {
        return 0;
      }
      return x;
    };
    std::vector<Elem> flat(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        flat[std::size_t(relabel(a)) * n + relabel(b)]
            = relabel(table[a][b]);
      }
    }
    for (Elem a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (Elem b = 0; b < n && !has_inverse; ++b) {
        has_inverse = flat[std::size_t(a) * n + b] == 0
                      && flat[std::size_t(b) * n + a] == 0;
      }
      if (!has_inverse) {
        throw NotAGroup("element has no inverse", {long(relabel(a)), -1, -1});
      }
    }
    auto g = Group::from_trusted_table(n, std::move(flat), std::move(label));
    try {
      g.validate();
    } catch (NotAGroup const& e) {
      auto w = e.witness();
      for (auto& x : w) {
        if (x >= 0) {
          x = long(relabel(Elem(x)));
        }
      }
      throw NotAGroup(e.what(), w);
    }
    return g;
  }

  Group from_permutation_gens(std::size_t                     degree,
                              std::vector<Permutation> const& gens,
                              std::size_t                     order_cap,
                              std::string                     label) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& p = gens[i];
      if (p.size() != degree) {
        throw InvalidArgument("generator " + std::to_string(i)
                              + " has the wrong degree");
      }
      std::vector<bool> hit(degree, false);
      for (auto x : p) {
        if (x >= degree || hit[x]) {
          throw InvalidArgument("generator " + std::to_string(i)
                                + " is not a bijection");
        }
        hit[x] = true;
      }
    }
    Permutation identity(degree);
    std::iota(identity.begin(), identity.end(), 0u);

    std::vector<Permutation>     elems{identity};
    std::map<Permutation, Elem>  index{{identity, 0}};
    std::vector<Elem>            parent{0};
    std::vector<std::size_t>     via{0};
    std::vector<std::vector<Elem>> right(1, std::vector<Elem>(gens.size()));

    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Permutation y(degree);
        for (std::size_t j = 0; j < degree; ++j) {
          y[j] = gens[k][elems[i][j]];
        }
        auto [it, inserted] = index.emplace(y, Elem(elems.size()));
        if (inserted) {
          check_cap(elems.size() + 1, order_cap, label);
          elems.push_back(std::move(y));
          parent.push_back(Elem(i));
          via.push_back(k);
          right.emplace_back(gens.size());
        }
        right[i][k] = it->second;
      }
    }
    std::size_t const n = elems.size();
    std::vector<Elem> table(n * n);
    for (Elem a = 0; a < n; ++a) {
      table[std::size_t(a) * n] = a;
      for (Elem b = 1; b < n; ++b) {
        table[std::size_t(a) * n + b]
            = right[table[std::size_t(a) * n + parent[b]]][via[b]];
      }
    }
    return Group::from_trusted_table(
        n, std::move(table), std::move(label), std::move(elems), degree);
  }

  Group cyclic(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("cyclic group needs n >= 1");
    }
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = Elem((a + b) % n);
      }
    }
    return Group::from_trusted_table(n, std::move(t),
                                     n == 1 ? "1" : "C" + std::to_string(n));
  }

  Group dihedral(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("dihedral group needs n >= 1");
    }
    // r^i s^e has index i + n e
    std::size_t const N = 2 * n;
    std::vector<Elem> t(N * N);
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
        std::size_t k = a == 0 ? (i + j) % n : (i + n - j) % n;
        t[x * N + y]  = Elem(k + n * ((a + b) % 2));
      }
    }
    return Group::from_trusted_table(N, std::move(t), "D" + std::to_string(n));
  }

  Group symmetric(std::size_t n, std::size_t order_cap) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      Permutation t(n), c(n);
      std::iota(t.begin(), t.end(), 0u);
      std::swap(t[0], t[1]);
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = std::uint32_t((i + 1) % n);
      }
      gens = {t, c};
    }
    return from_permutation_gens(n, gens, order_cap, "S" + std::to_string(n));
  }

  Group alternating(std::size_t n, std::size_t order_cap) {
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < n; ++i) {
      Permutation c(n);
      std::iota(c.begin(), c.end(), 0u);
      c[0] = 1;
      c[1] = std::uint32_t(i);
      c[i] = 0;
      gens.push_back(c);
    }
    return from_permutation_gens(n, gens, order_cap, "A" + std::to_string(n));
  }

  Group quaternion(std::size_t n) {
    if (n < 8 || n % 4 != 0) {
      throw InvalidArgument("quaternion group needs order n >= 8, 4 | n");
    }
    // a^i x^e has index i + 2m e; x^2 = a^m, x a x^-1 = a^-1
    std::size_t const m  = n / 4;
    std::size_t const tm = 2 * m;
    std::vector<Elem> t(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t i = u % tm, e = u / tm, j = v % tm, f = v / tm;
        std::size_t k, g;
        if (e == 0) {
          k = (i + j) % tm;
          g = f;
        } else if (f == 0) {
          k = (i + tm - j) % tm;
          g = 1;
        } else {
          k = (i + tm - j + m) % tm;
          g = 0;
        }
        t[u * n + v] = Elem(k + tm * g);
      }
    }
    return Group::from_trusted_table(n, std::move(t), "Q" + std::to_string(n));
  }

  Group elementary_abelian(unsigned p, unsigned k, std::size_t order_cap) {
    if (!is_prime(p)) {
      throw InvalidArgument("elementary abelian group needs a prime p");
    }
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
      n *= p;
      check_cap(n, order_cap, "elementary abelian group");
    }
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t x = a, y = b, r = 0, place = 1;
        for (unsigned i = 0; i < k; ++i) {
          r += ((x % p + y % p) % p) * place;
          x /= p;
          y /= p;
          place *= p;
        }
        t[a * n + b] = Elem(r);
      }
    }
    std::string label = k == 0 ? "1"
                        : k == 1
                            ? "C" + std::to_string(p)
                            : "C" + std::to_string(p) + "^" + std::to_string(k);
    return Group::from_trusted_table(n, std::move(t), label);
  }

  Group standard_family(Family                       kind,
                        std::vector<unsigned> const& params,
                        std::size_t                  order_cap) {
    auto need = [&](std::size_t count) {
      if (params.size() != count) {
        throw InvalidArgument("wrong number of family parameters");
      }
    };
    switch (kind) {
      case Family::cyclic:
        need(1);
        check_cap(params[0], order_cap, "cyclic group");
        return cyclic(params[0]);
      case Family::dihedral:
        need(1);
        check_cap(2 * std::size_t(params[0]), order_cap, "dihedral group");
        return dihedral(params[0]);
      case Family::symmetric:
        need(1);
        return symmetric(params[0], order_cap);
      case Family::alternating:
        need(1);
        return alternating(params[0], order_cap);
      case Family::quaternion:
        need(1);
        check_cap(params[0], order_cap, "quaternion group");
        return quaternion(params[0]);
      case Family::elem_abelian:
        need(2);
        return elementary_abelian(params[0], params[1], order_cap);
    }
    throw InvalidArgument("unknown family");
  }

  Group direct_product(Group const& g, Group const& h, std::size_t order_cap) {
    std::size_t const a = g.order(), b = h.order(), n = a * b;
    check_cap(n, order_cap, "direct product");
    std::vector<Elem> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x * n + y] = Elem(g.mul(Elem(x / b), Elem(y / b)) * b
                            + h.mul(Elem(x % b), Elem(y % b)));
      }
    }
    return Group::from_trusted_table(n, std::move(t),
                                     g.label() + " x " + h.label());
  }

  Group semidirect_product(Group const&                          m,
                           Group const&                          a,
                           std::vector<std::vector<Elem>> const& action,
                           std::size_t                           order_cap,
                           bool                                  validate,
                           std::string                           label) {
    std::size_t const M = m.order(), A = a.order(), n = M * A;
    check_cap(n, order_cap, "semidirect product");
    if (action.size() != A) {
      throw InvalidArgument("action table has the wrong size");
    }
    if (validate) {
      for (Elem s = 0; s < A; ++s) {
        auto const& phi = action[s];
        if (phi.size() != M) {
          throw InvalidArgument("action row has the wrong size");
        }
        std::vector<bool> hit(M, false);
        for (auto y : phi) {
          if (y >= M || hit[y]) {
            throw InvalidArgument("action is not a bijection");
          }
          hit[y] = true;
        }
        for (Elem x = 0; x < M; ++x) {
          for (Elem y = 0; y < M; ++y) {
            if (phi[m.mul(x, y)] != m.mul(phi[x], phi[y])) {
              throw InvalidArgument("action is not by automorphisms");
            }
          }
        }
      }
      for (Elem s = 0; s < A; ++s) {
        for (Elem r = 0; r < A; ++r) {
          auto const& st = action[a.mul(s, r)];
          for (Elem x = 0; x < M; ++x) {
            if (st[x] != action[s][action[r][x]]) {
              throw InvalidArgument("action is not a homomorphism");
            }
          }
        }
      }
    }
    std::vector<Elem> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      Elem m1 = Elem(x / A), a1 = Elem(x % A);
      auto const& phi = action[a1];
      for (std::size_t y = 0; y < n; ++y) {
        Elem m2 = Elem(y / A), a2 = Elem(y % A);
        t[x * n + y] = Elem(m.mul(m1, phi[m2]) * A + a.mul(a1, a2));
      }
    }
    if (label.empty()) {
      label = m.label() + " : " + a.label();
    }
    return Group::from_trusted_table(n, std::move(t), std::move(label));
  }

  CosetTable coset_table(Group const& g, Subgroup const& h, Subgroup const& k) {
    CosetTable ct;
    ct.coset_of.assign(g.order(), npos);
    for (auto x : h.members()) {
      if (ct.coset_of[x] != npos) {
        continue;
      }
      Elem c = Elem(ct.rep.size());
      ct.rep.push_back(x);
      for (auto y : k.members()) {
        ct.coset_of[g.mul(x, y)] = c;
      }
    }
    return ct;
  }

  namespace {
    Group section_from_cosets(Group const&      g,
                              CosetTable const& ct,
                              std::string       label) {
      std::size_t const n = ct.count();
      std::vector<Elem> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = ct.coset_of[g.mul(ct.rep[a], ct.rep[b])];
        }
      }
      return Group::from_trusted_table(n, std::move(t), std::move(label));
    }
  }  // namespace

  Group section_group(Group const&    g,
                      Subgroup const& h,
                      Subgroup const& k,
                      std::string     label) {
    if (!k.is_subgroup_of(h)) {
      throw InvalidArgument("section bottom is not contained in its top");
    }
    if (auto w = normality_witness(g, h, k)) {
      throw NotNormal("section bottom is not normal in its top",
                      long(w->first), long(w->second));
    }
    if (label.empty()) {
      label = g.label() + " section " + std::to_string(h.order()) + "/"
              + std::to_string(k.order());
    }
    return section_from_cosets(g, coset_table(g, h, k), std::move(label));
  }

  Group semidirect_section(Group const&    g,
                           Subgroup const& h,
                           Subgroup const& k,
                           Subgroup const& l,
                           std::size_t     order_cap) {
    if (!k.is_subgroup_of(h)) {
      throw InvalidArgument("section bottom is not contained in its top");
    }
    require_normal(g, h, "section top");
    require_normal(g, k, "section bottom");
    require_normal(g, l, "acting kernel");
    auto const hk = coset_table(g, h, k);
    for (auto x : generators_of(g, l)) {
      for (auto a : h.members()) {
        if (hk.coset_of[g.conj(a, x)] != hk.coset_of[a]) {
          throw NotCentralized("kernel does not centralise the section",
                               long(x), long(a));
        }
      }
    }
    auto const gl = coset_table(g, Subgroup::whole(g.order()), l);
    check_cap(hk.count() * gl.count(), order_cap, "semidirect section");

    auto m = section_from_cosets(g, hk, "");
    auto q = section_from_cosets(g, gl, "");
    std::vector<std::vector<Elem>> action(q.order(),
                                          std::vector<Elem>(m.order()));
    for (Elem s = 0; s < q.order(); ++s) {
      Elem r = gl.rep[s];
      for (Elem c = 0; c < m.order(); ++c) {
        // left conjugation r h r^-1
        action[s][c] = hk.coset_of[g.conj(hk.rep[c], g.inv(r))];
      }
    }
    std::string label = "[" + std::to_string(h.order()) + "/"
                        + std::to_string(k.order()) + "](" + g.label() + "/"
                        + std::to_string(l.order()) + ")";
    return semidirect_product(m, q, action, order_cap, false, label);
  }

  std::pair<Group, Homomorphism> quotient(Group const& g, Subgroup const& n) {
    require_normal(g, n, "quotient kernel");
    auto ct = coset_table(g, Subgroup::whole(g.order()), n);
    auto q  = section_from_cosets(
        g, ct, g.label() + "/" + std::to_string(n.order()));
    Homomorphism pi{g, q, ct.coset_of};
    return {std::move(q), std::move(pi)};
  }

  Embedding as_group(Group const& g, Subgroup const& h, std::string label) {
    auto const&       mem = h.members();
    std::size_t const n   = mem.size();
    std::vector<Elem> from(g.order(), npos);
    for (std::size_t i = 0; i < n; ++i) {
      from[mem[i]] = Elem(i);
    }
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto y = from[g.mul(mem[a], mem[b])];
        if (y == npos) {
          throw InvalidArgument("element set is not a subgroup");
        }
        t[a * n + b] = y;
      }
    }
    std::vector<std::vector<std::uint32_t>> perms;
    if (g.has_permutations()) {
      for (auto x : mem) {
        perms.push_back(g.permutation(x));
      }
    }
    if (label.empty()) {
      label = g.label() + " subgroup of order " + std::to_string(n);
    }
    auto sub = Group::from_trusted_table(
        n, std::move(t), std::move(label), std::move(perms), g.degree());
    return Embedding{std::move(sub), mem, std::move(from)};
  }

  std::vector<std::vector<Elem>> cayley_rows(Group const& g) {
    std::vector<std::vector<Elem>> rows(g.order(),
                                        std::vector<Elem>(g.order()));
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) {
        rows[a][b] = g.mul(a, b);
      }
    }
    return rows;
  }

  Group relabel_elements(Group const& g, std::vector<Elem> const& perm) {
    std::size_t const n = g.order();
    if (perm.size() != n || (n > 0 && perm[0] != 0)) {
      throw InvalidArgument("relabelling must be a bijection fixing 0");
    }
    ElementSet seen(n);
    for (auto x : perm) {
      if (x >= n || seen.test(x)) {
        throw InvalidArgument("relabelling is not a bijection");
      }
      seen.set(x);
    }
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[std::size_t(perm[a]) * n + perm[b]] = perm[g.mul(a, b)];
      }
    }
    return Group::from_trusted_table(n, std::move(t), g.label());
  }

}  // namespace formcheck
