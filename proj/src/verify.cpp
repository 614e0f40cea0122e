#include "formcheck/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include "formcheck/construct.hpp"
#include "formcheck/errors.hpp"
#include "formcheck/subgroups.hpp"
#include "formcheck/subnormal.hpp"

namespace formcheck {

  namespace sr = skip_reason;

  namespace {

    // Lazily computed data for one catalog group.
    class GroupContext {
     public:
      GroupContext(CatalogEntry const& entry, VerifyOptions const& opts)
          : entry_(entry), opts_(opts) {}

      Group const& g() const {
        return entry_.group;
      }
      std::string const& provenance() const {
        return entry_.provenance;
      }

      std::vector<Subgroup> const& normals() {
        if (!normals_) {
          normals_ = normal_subgroups(g());
        }
        return *normals_;
      }

      SubgroupLattice const& lattice() {
        if (!lattice_) {
          lattice_ = all_subgroups(g(), opts_.lattice_budget);
        }
        return *lattice_;
      }

      Embedding const& embed(std::size_t i) {
        auto it = embeddings_.find(i);
        if (it == embeddings_.end()) {
          it = embeddings_.emplace(i, as_group(g(), lattice()[i])).first;
        }
        return it->second;
      }

      Failure failure(std::string       property,
                      std::string       detail,
                      std::vector<Elem> subgroup = {}) const {
        return make_failure(std::move(property), g(), provenance(),
                            std::move(detail), std::move(subgroup));
      }

     private:
      CatalogEntry const&                  entry_;
      VerifyOptions const&                 opts_;
      std::optional<std::vector<Subgroup>> normals_;
      std::optional<SubgroupLattice>       lattice_;
      std::map<std::size_t, Embedding>     embeddings_;
    };

    std::string orders(Subgroup const& a, Subgroup const& b) {
      return std::to_string(a.order()) + " vs " + std::to_string(b.order());
    }

    ojson members(Subgroup const& s) {
      return ojson(s.members());
    }

    // Runs fn on every catalog entry, possibly in parallel, and merges the
    // per-group reports in catalog order.
    VerificationReport sweep(
        Catalog const&                                          catalog,
        VerifyOptions const&                                    opts,
        VerificationReport                                      header,
        std::function<void(GroupContext&, VerificationReport&)> fn) {
      std::size_t const               n = catalog.size();
      std::vector<VerificationReport> parts(n);
      std::atomic<std::size_t>        next{0};
      std::exception_ptr              error;
      std::mutex                      error_mutex;

      auto worker = [&] {
        while (true) {
          auto i = next.fetch_add(1);
          if (i >= n) {
            return;
          }
          auto& r = parts[i];
          r.groups = 1;
          GroupContext ctx(catalog.entries[i], opts);
          try {
            fn(ctx, r);
          } catch (LatticeBudgetExceeded const&) {
            r.skip(sr::lattice_budget);
          } catch (SearchBudgetExceeded const&) {
            r.skip(sr::budget_exceeded);
          } catch (OrderCapExceeded const&) {
            r.skip(sr::order_cap);
          } catch (HypercentreNotHypercentral const& e) {
            r.failures.push_back(ctx.failure("lemma-4(i)", e.what()));
          } catch (FormationLawViolated const& e) {
            r.failures.push_back(ctx.failure("formation:residual", e.what()));
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      };

      unsigned threads = opts.threads != 0
                             ? opts.threads
                             : std::max(1u, std::thread::hardware_concurrency());
      threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
      if (threads <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back(worker);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      header.coverage = catalog.coverage();
      for (auto const& part : parts) {
        header.merge(part);
      }
      return header;
    }

    VerificationReport header(std::string claim, Formation const* f) {
      VerificationReport r;
      r.claim = std::move(claim);
      if (f != nullptr) {
        r.formation = f->name();
        if (f->sigma()) {
          r.sigma = f->sigma()->to_string();
        }
      }
      return r;
    }

    Subgroup zf(Group const&                 g,
                std::vector<Subgroup> const& normals,
                Formation const&             f) {
      return hypercentre(g, normals, f_centrality(f));
    }

    // One theorem A style sweep inside a single group.
    struct ChainClaim {
      std::string    name;
      ChainRule      rule;
      Formation      residual_class;
      CentralityTest central;
    };

    void chain_claim_group(GroupContext&       ctx,
                           ChainClaim const&   claim,
                           VerificationReport& r) {
      auto const& g = ctx.g();
      auto const& L = ctx.lattice();
      ChainSearch search(g, L, claim.rule);
      // Z(E) = 1 for the subgroup at each lattice index, computed once
      std::vector<int> trivial_hc(L.size(), -1);
      auto             hc_trivial = [&](std::size_t j) {
        if (trivial_hc[j] < 0) {
          auto const& e = ctx.embed(j);
          trivial_hc[j] = hypercentre(e.group, claim.central).is_trivial();
        }
        return trivial_hc[j] == 1;
      };
      auto const prefix = claim.name + ":";
      for (std::size_t i = 0; i < L.size(); ++i) {
        auto chain = search.find(i);
        if (!chain) {
          r.count(prefix + "not-subnormal");
          continue;
        }
        ++r.checked;
        r.count(prefix + "instances");
        auto const& s = L[i];
        if (!validate_chain(g, *chain, claim.rule.in_class)) {
          r.failures.push_back(ctx.failure(
              prefix + "chain-validation", chain->to_string(), s.members()));
        }
        bool hyp = true;
        for (auto j : L.overgroups(i)) {
          if (!hc_trivial(j)) {
            hyp = false;
            break;
          }
        }
        if (!hyp) {
          r.skip(sr::hypothesis_failed);
          continue;
        }
        ++r.hypothesis_satisfied;
        r.count(prefix + "hypothesis-satisfied");
        auto const& e = ctx.embed(i);
        auto d        = e.lift(residual(e.group, claim.residual_class));
        auto c        = centralizer(g, d);
        if (!c.is_subgroup_of(d)) {
          auto fail = ctx.failure(prefix + "conclusion",
                                  "centralizer of the residual is not "
                                  "contained in it ("
                                      + orders(c, d) + ")",
                                  s.members());
          fail.data["residual"]    = members(d);
          fail.data["centralizer"] = members(c);
          fail.data["chain"]       = chain->to_string();
          r.failures.push_back(std::move(fail));
        }
      }
    }

    bool hereditary_saturated(Formation const& f, VerificationReport& r) {
      if (f.hereditary() && f.saturated()) {
        return true;
      }
      r.skip(sr::not_applicable);
      return false;
    }

  }  // namespace

  VerificationReport verify_theorem_b(Catalog const&       catalog,
                                      Formation const&     f,
                                      VerifyOptions const& opts) {
    return sweep(
        catalog, opts, header("theorem-b", &f),
        [&](GroupContext& ctx, VerificationReport& r) {
          ++r.checked;
          if (!f.saturated()) {
            r.skip(sr::not_applicable);
            return;
          }
          auto const& g  = ctx.g();
          auto const& ns = ctx.normals();
          auto        z  = zf(g, ns, f);
          auto        d  = residual(g, ns, f);
          auto        c  = centralizer(g, d);
          // the argument shows C_G(G^F) <= G^F Z_F(G) for every group
          r.count("product-form-checked");
          if (!c.is_subgroup_of(join(g, d, z))) {
            auto fail = ctx.failure("product-form",
                                    "C_G(G^F) is not inside G^F Z_F(G)");
            fail.data["residual"]    = members(d);
            fail.data["centralizer"] = members(c);
            fail.data["hypercentre"] = members(z);
            r.failures.push_back(std::move(fail));
          }
          if (!z.is_trivial()) {
            r.skip(sr::hypothesis_failed);
            return;
          }
          ++r.hypothesis_satisfied;
          if (!c.is_subgroup_of(d)) {
            auto fail = ctx.failure("conclusion",
                                    "residual is not large (" + orders(c, d)
                                        + ")");
            fail.data["residual"]    = members(d);
            fail.data["centralizer"] = members(c);
            r.failures.push_back(std::move(fail));
          }
        });
  }

  VerificationReport verify_theorem_a(Catalog const&       catalog,
                                      Formation const&     f,
                                      VerifyOptions const& opts) {
    ChainClaim claim{"K-F-subnormal", kf_rule(f), f, f_centrality(f)};
    return sweep(catalog, opts, header("theorem-a", &f),
                 [&](GroupContext& ctx, VerificationReport& r) {
                   if (!hereditary_saturated(f, r)) {
                     return;
                   }
                   chain_claim_group(ctx, claim, r);
                 });
  }

  VerificationReport verify_schenkman_classic(Catalog const&       catalog,
                                              VerifyOptions const& opts) {
    auto n = nilpotent_formation();
    return sweep(
        catalog, opts, header("schenkman", &n),
        [&](GroupContext& ctx, VerificationReport& r) {
          auto const&      g = ctx.g();
          auto const&      L = ctx.lattice();
          std::vector<int> trivial_zn(L.size(), -1);
          for (std::size_t i = 0; i < L.size(); ++i) {
            auto const& s = L[i];
            if (!is_subnormal(g, s)) {
              r.count("not-subnormal");
              continue;
            }
            ++r.checked;
            if (!centralizer(g, s).is_trivial()) {
              r.skip(sr::hypothesis_failed);
              continue;
            }
            ++r.hypothesis_satisfied;
            auto const& e = ctx.embed(i);
            auto        d = e.lift(residual(e.group, n));
            auto        c = centralizer(g, d);
            if (!c.is_subgroup_of(d)) {
              auto fail = ctx.failure("conclusion",
                                      "C_G(S^N) not inside S^N ("
                                          + orders(c, d) + ")",
                                      s.members());
              fail.data["residual"]    = members(d);
              fail.data["centralizer"] = members(c);
              r.failures.push_back(std::move(fail));
            }
            // C_G(S) = 1 should force Z_N(E) = 1 for every E >= S
            for (auto j : L.overgroups(i)) {
              r.count("bridging-checked");
              if (trivial_zn[j] < 0) {
                auto const& ej = ctx.embed(j);
                trivial_zn[j]  = f_hypercentre(ej.group, n).is_trivial();
              }
              if (trivial_zn[j] == 0) {
                auto fail = ctx.failure("bridging",
                                        "overgroup with non-trivial "
                                        "nilpotent hypercentre",
                                        s.members());
                fail.data["overgroup"] = members(L[j]);
                r.failures.push_back(std::move(fail));
              }
            }
          }
        });
  }

  VerificationReport verify_holomorph_bound(Catalog const&       catalog,
                                            Formation const&     f,
                                            VerifyOptions const& opts) {
    return sweep(
        catalog, opts, header("holomorph-bound", &f),
        [&](GroupContext& ctx, VerificationReport& r) {
          ++r.checked;
          if (!f.saturated()) {
            r.skip(sr::not_applicable);
            return;
          }
          auto const& g  = ctx.g();
          auto const& ns = ctx.normals();
          auto        z  = zf(g, ns, f);
          auto        u  = residual(g, ns, f);
          if (!meet(u, z).is_trivial()) {
            r.skip(sr::hypothesis_failed);
            return;
          }
          std::uint64_t aut = 0;
          try {
            aut = count_automorphisms(as_group(g, u).group, opts.search_budget);
          } catch (SearchBudgetExceeded const&) {
            r.skip(sr::budget_exceeded);
            return;
          }
          ++r.hypothesis_satisfied;
          std::uint64_t const lhs = g.order() / z.order();
          std::uint64_t const rhs = u.order() * aut;
          if (u.is_trivial()) {
            r.count("trivial-residual");
          } else {
            r.count(lhs == rhs ? "tight" : "slack");
            ojson row;
            row["group"]      = g.label();
            row["provenance"] = ctx.provenance();
            row["G/Z_F"]      = lhs;
            row["|Hol(U)|"]   = rhs;
            row["slack"]      = rhs - std::min(lhs, rhs);
            r.details.push_back(std::move(row));
          }
          if (lhs > rhs) {
            auto fail = ctx.failure("conclusion",
                                    std::to_string(lhs) + " > "
                                        + std::to_string(rhs));
            fail.data["residual"]    = members(u);
            fail.data["hypercentre"] = members(z);
            fail.data["aut_order"]   = aut;
            r.failures.push_back(std::move(fail));
          }
        });
  }

  VerificationReport verify_section3_corollaries(Catalog const&        catalog,
                                                 SigmaPartition const& sigma,
                                                 VerifyOptions const&  opts) {
    auto u  = supersoluble_formation();
    auto ns = sigma_nilpotent_formation(sigma);
    std::vector<ChainClaim> claims{
        {"U:K-U-subnormal", kf_rule(u), u, cyclic_centrality()},
        {"U:U-subnormal", f_rule(u), u, cyclic_centrality()},
        {"N_sigma:sigma-subnormal", sigma_rule(sigma), ns,
         sigma_centrality(sigma)},
        {"N_sigma:N_sigma-subnormal", f_rule(ns), ns, sigma_centrality(sigma)},
    };
    auto h = header("section3", nullptr);
    h.formation = "supersoluble, sigma-nilpotent";
    h.sigma     = sigma.to_string();
    return sweep(
        catalog, opts, std::move(h),
        [&](GroupContext& ctx, VerificationReport& r) {
          for (auto const& claim : claims) {
            chain_claim_group(ctx, claim, r);
          }
          // sigma-subnormal and K-N_sigma-subnormal must agree everywhere
          auto const& L = ctx.lattice();
          ChainSearch by_sigma(ctx.g(), L, sigma_rule(sigma));
          ChainSearch by_kf(ctx.g(), L, kf_rule(ns));
          for (std::size_t i = 0; i < L.size(); ++i) {
            r.count("agreement-checked");
            bool a = by_sigma.find(i).has_value();
            bool b = by_kf.find(i).has_value();
            if (a != b) {
              r.failures.push_back(ctx.failure(
                  "sigma-kf-agreement",
                  std::string("sigma-subnormal ") + (a ? "yes" : "no")
                      + ", K-N_sigma-subnormal " + (b ? "yes" : "no"),
                  L[i].members()));
            }
          }
        });
  }

  namespace {

    class LemmaSweep {
     public:
      LemmaSweep(GroupContext&       ctx,
                 Formation const&    f,
                 VerificationReport& r,
                 std::uint32_t       seed,
                 std::size_t         index,
                 std::uint64_t       budget,
                 std::size_t         cap)
          : ctx_(ctx),
            g_(ctx.g()),
            f_(f),
            r_(r),
            central_(f_centrality(f)),
            seed_(seed),
            index_(index),
            budget_(budget),
            cap_(cap) {}

      void run() {
        ++r_.checked;
        normals_ = ctx_.normals();
        residual_ = residual(g_, normals_, f_);
        in_f_     = f_.contains(g_);
        z_        = hypercentre(g_, normals_, central_);
        check("lemma-4(i)", is_hypercentral(g_, z_, central_),
              "Z_F(G) is not hypercentral");
        chief_ = chief_factors(normals_);
        covers_.assign(normals_.size(), {});
        for (auto [h, k] : chief_) {
          chief_central_.push_back(central_(g_, normals_[h], normals_[k]));
          covers_[k].push_back(h);
        }
        formation_laws();
        lemma_1();
        lemma_2();
        lemma_3();
        lemma_4();
        lemma_5();
        lemma_6();
        if (f_.kind() == FormationKind::sigma_nilpotent) {
          sigma_coherence();
        }
        subnormality();
      }

     private:
      void check(std::string const& property,
                 bool               ok,
                 std::string const& detail,
                 std::vector<Elem>  subgroup = {}) {
        r_.count(property + ":checked");
        if (!ok) {
          r_.failures.push_back(
              ctx_.failure(property, detail, std::move(subgroup)));
        }
      }

      // [normals h / normals k](G / normals l) in F, or nothing when the
      // section is above the order cap
      std::optional<bool> central_at(std::size_t h, std::size_t k, std::size_t l) {
        auto key = std::array{h, k, l};
        if (auto it = central_memo_.find(key); it != central_memo_.end()) {
          return it->second;
        }
        auto const& H = normals_[h];
        auto const& K = normals_[k];
        auto const& L = normals_[l];
        std::optional<bool> out;
        if ((H.order() / K.order()) * (g_.order() / L.order()) <= cap_) {
          out = f_.contains(semidirect_section(g_, H, K, L, cap_));
        }
        central_memo_.emplace(key, out);
        return out;
      }

      std::size_t normal_index(Subgroup const& n) const {
        auto it = std::lower_bound(normals_.begin(), normals_.end(), n);
        return std::size_t(it - normals_.begin());
      }

      Subgroup const& zf_of(std::size_t i) {
        auto it = zf_memo_.find(i);
        if (it == zf_memo_.end()) {
          auto const& e = ctx_.embed(i);
          it = zf_memo_.emplace(i, e.lift(hypercentre(e.group, central_)))
                   .first;
        }
        return it->second;
      }

      bool sub_in_f(std::size_t i) {
        auto it = in_f_memo_.find(i);
        if (it == in_f_memo_.end()) {
          it = in_f_memo_.emplace(i, f_.contains(ctx_.embed(i).group)).first;
        }
        return it->second;
      }

      void formation_laws() {
        for (auto const& m : normals_) {
          if (residual_.is_subgroup_of(m)) {
            check("formation:quotient-closure",
                  f_.contains(quotient(g_, m).first),
                  "quotient of G/G^F outside F", m.members());
          }
        }
        auto const& L = ctx_.lattice();
        if (in_f_ && f_.hereditary()) {
          for (std::size_t i = 0; i < L.size(); ++i) {
            check("formation:hereditary", sub_in_f(i),
                  "subgroup of an F-group outside F", L[i].members());
          }
        }
        if (!in_f_) {
          auto phi = frattini(g_, L);
          check("formation:saturated", !residual_.is_subgroup_of(phi),
                "G outside F with G^F inside the Frattini subgroup",
                residual_.members());
        }
        if (in_f_) {
          for (std::size_t c = 0; c < chief_.size(); ++c) {
            check("barnes-kegel", chief_central_[c],
                  "chief factor of an F-group is F-eccentric",
                  normals_[chief_[c].first].members());
          }
        }
      }

      // equivalent pairs give isomorphic semidirect products
      void lemma_1() {
        std::seed_seq      seq{seed_, std::uint32_t(index_)};
        std::mt19937       rng(seq);
        std::size_t const  n = g_.order();
        std::vector<Elem>  perm(n);
        std::iota(perm.begin(), perm.end(), Elem(0));
        if (n > 2) {
          std::shuffle(perm.begin() + 1, perm.end(), rng);
        }
        auto g2 = relabel_elements(g_, perm);
        auto map = [&](Subgroup const& s) {
          ElementSet m(n);
          for (auto x : s.members()) {
            m.set(perm[x]);
          }
          return Subgroup(std::move(m));
        };
        for (auto [h, k] : chief_) {
          auto const& H  = normals_[h];
          auto const& K  = normals_[k];
          check_same("lemma-1", same_section(g_, H, K, g2, map(H), map(K)),
                     "relabelled section is not isomorphic", H);
        }
      }

      void lemma_2() {
        auto const& L  = ctx_.lattice();
        auto const  nn = normals_.size();
        for (std::size_t s = 0; s < nn; ++s) {
          for (std::size_t rr = s + 1; rr < nn; ++rr) {
            auto const& R = normals_[rr];
            auto const& S = normals_[s];
            if (!S.is_subgroup_of(R)) {
              continue;
            }
            auto c = normal_index(centralizer_of_section(g_, R, S));
            // (i): the admissible K below C are closed upwards. Every
            // K <= L <= C is joined by a chain of chief factors, so the
            // covering pairs are enough.
            for (std::size_t k = 0; k < nn; ++k) {
              if (!normals_[k].is_subgroup_of(normals_[c])) {
                continue;
              }
              auto at_k = central_at(rr, s, k);
              if (!at_k) {
                r_.count("lemma-2(i):over-cap");
                continue;
              }
              if (!*at_k) {
                continue;
              }
              for (auto l : covers_[k]) {
                if (normals_[l].is_subgroup_of(normals_[c])) {
                  check("lemma-2(i)", central_at(rr, s, l).value(),
                        "[R/S](G/L) outside F", R.members());
                }
              }
            }
            auto at_c = central_at(rr, s, c);
            if (!at_c) {
              r_.count("lemma-2:over-cap");
              continue;
            }
            if (!*at_c) {
              continue;
            }
            // (ii)
            for (std::size_t e = 0; e < L.size(); ++e) {
              auto er = meet(L[e], R);
              auto es = meet(L[e], S);
              auto key = std::make_tuple(e, er.members(), es.members());
              auto it  = restricted_memo_.find(key);
              if (it == restricted_memo_.end()) {
                auto const& emb = ctx_.embed(e);
                it = restricted_memo_
                         .emplace(key, is_f_central(emb.group, emb.restrict(er),
                                                    emb.restrict(es), f_))
                         .first;
              }
              check("lemma-2(ii)", it->second,
                    "(E meet R)/(E meet S) is F-eccentric in E",
                    L[e].members());
            }
            // (iii)
            for (std::size_t t = s; t <= rr; ++t) {
              auto const& T = normals_[t];
              if (S.is_subgroup_of(T) && T.is_subgroup_of(R)) {
                check("lemma-2(iii)",
                      central_at(t, s, c).value() && central_at(rr, t, c).value(),
                      "refinement of a central section is eccentric",
                      T.members());
              }
            }
          }
        }
      }

      // nothing when either section is above the order cap
      std::optional<bool> same_section(Group const&    g1,
                                       Subgroup const& h1,
                                       Subgroup const& k1,
                                       Group const&    g2,
                                       Subgroup const& h2,
                                       Subgroup const& k2) {
        auto c1 = centralizer_of_section(g1, h1, k1);
        auto c2 = centralizer_of_section(g2, h2, k2);
        if ((h1.order() / k1.order()) * (g1.order() / c1.order()) > cap_
            || (h2.order() / k2.order()) * (g2.order() / c2.order()) > cap_) {
          return std::nullopt;
        }
        auto d1 = semidirect_section(g1, h1, k1, c1, cap_);
        auto d2 = semidirect_section(g2, h2, k2, c2, cap_);
        return is_isomorphic(d1, d2, budget_).has_value();
      }

      void check_same(std::string const&         property,
                      std::optional<bool> const& same,
                      std::string const&         detail,
                      Subgroup const&            witness) {
        if (same) {
          check(property, *same, detail, witness.members());
        } else {
          r_.count(property + ":over-cap");
        }
      }

      void lemma_3() {
        // (i): passing to G/N for N <= K
        for (auto [h, k] : chief_) {
          auto const& H = normals_[h];
          auto const& K = normals_[k];
          for (auto const& N : normals_) {
            if (N.is_trivial() || !N.is_subgroup_of(K)) {
              continue;
            }
            auto [q, proj] = quotient(g_, N);
            check_same("lemma-3(i)",
                       same_section(g_, H, K, q, proj.image_of(H),
                                    proj.image_of(K)),
                       "section changes under the quotient by N", N);
          }
        }
        // (iii): MN/N against M/(M meet N)
        for (auto const& M : normals_) {
          for (auto const& N : normals_) {
            if (M.is_subgroup_of(N)) {
              continue;
            }
            auto mn = join(g_, M, N);
            auto mm = meet(M, N);
            check_same("lemma-3(iii)", same_section(g_, mn, N, g_, M, mm),
                       "[MN/N] and [M/(M meet N)] differ", M);
          }
        }
      }

      void lemma_4() {
        // (ii)
        for (auto const& N : normals_) {
          if (!N.is_subgroup_of(z_)) {
            continue;
          }
          auto [q, proj] = quotient(g_, N);
          check("lemma-4(ii)",
                proj.image_of(z_) == hypercentre(q, central_),
                "Z_F(G)/N differs from Z_F(G/N)", N.members());
        }
        // (iii)
        auto const& L = ctx_.lattice();
        for (std::size_t b = 0; b < L.size(); ++b) {
          for (std::size_t a = 0; a < L.size(); ++a) {
            auto ab = *L.index_of(meet(L[a], L[b]));
            check("lemma-4(iii)",
                  meet(zf_of(b), L[a]).is_subgroup_of(zf_of(ab)),
                  "Z_F(B) meet A not inside Z_F(B meet A)", L[a].members());
          }
        }
        // (iv)
        for (auto const& B : normals_) {
          if (!is_hypercentral(g_, B, central_)) {
            continue;
          }
          for (auto const& N : normals_) {
            if (N.is_trivial()) {
              continue;
            }
            auto [q, proj] = quotient(g_, N);
            check("lemma-4(iv)",
                  is_hypercentral(q, proj.image_of(B), central_),
                  "BN/N is not hypercentral in G/N", B.members());
          }
        }
      }

      void lemma_5() {
        bool all_central = std::all_of(chief_central_.begin(),
                                       chief_central_.end(),
                                       [](bool b) { return b; });
        check("lemma-5(i<=>ii)", all_central == in_f_,
              "membership disagrees with centrality of the chief factors");
        for (auto const& N : normals_) {
          if (is_hypercentral(g_, N, central_)
              && f_.contains(quotient(g_, N).first)) {
            check("lemma-5(iii=>i)", in_f_,
                  "hypercentral N with G/N in F, but G outside F",
                  N.members());
          }
        }
      }

      void lemma_6() {
        auto const& L     = ctx_.lattice();
        auto const  whole = g_.order();
        for (auto const& N : normals_) {
          std::vector<std::size_t> supplements;
          for (std::size_t i = 0; i < L.size(); ++i) {
            if (product_size(L[i], N) == whole) {
              supplements.push_back(i);
            }
          }
          // (i)
          if (f_.contains(quotient(g_, N).first)) {
            for (auto i : supplements) {
              bool minimal = std::none_of(
                  supplements.begin(), supplements.end(),
                  [&](std::size_t j) { return j != i && L.contains(i, j); });
              if (minimal) {
                check("lemma-6(i)", sub_in_f(i),
                      "minimal supplement outside F", L[i].members());
              }
            }
          }
          // (ii)
          auto cn = centralizer(g_, N);
          for (auto i : supplements) {
            if (!sub_in_f(i)) {
              continue;
            }
            auto zz = meet(L[i], cn);
            check("lemma-6(ii)",
                  is_normal(g_, zz) && zz.is_subgroup_of(z_),
                  "U meet C_G(N) not a normal subgroup of Z_F(G)",
                  L[i].members());
          }
        }
      }

      void sigma_coherence() {
        auto const& sigma = *f_.sigma();
        for (std::size_t c = 0; c < chief_.size(); ++c) {
          auto const& H = normals_[chief_[c].first];
          auto const& K = normals_[chief_[c].second];
          check("sigma-coherence",
                is_sigma_central(g_, H, K, sigma) == chief_central_[c],
                "sigma-central and N_sigma-central disagree", H.members());
        }
        check("sigma-coherence:hypercentre",
              hypercentre(g_, normals_, sigma_centrality(sigma)) == z_,
              "Z_sigma differs from the N_sigma hypercentre");
      }

      void subnormality() {
        auto const& L = ctx_.lattice();
        ChainSearch kf(g_, L, kf_rule(f_));
        ChainSearch fs(g_, L, f_rule(f_));
        auto        in_class = [&](Group const& q) { return f_.contains(q); };
        for (std::size_t i = 0; i < L.size(); ++i) {
          auto const& a     = L[i];
          auto        k     = kf.find(i);
          auto        fchain = fs.find(i);
          if (is_subnormal(g_, a)) {
            check("subnormal=>K-F-subnormal", k.has_value(),
                  "subnormal but not K-F-subnormal", a.members());
          }
          if (fchain) {
            check("F-subnormal=>K-F-subnormal", k.has_value(),
                  "F-subnormal but not K-F-subnormal", a.members());
            check("chain-validation", validate_chain(g_, *fchain, in_class),
                  fchain->to_string(), a.members());
          }
          if (!k) {
            continue;
          }
          check("chain-validation", validate_chain(g_, *k, in_class),
                k->to_string(), a.members());
          if (f_.hereditary()) {
            for (auto w : L.overgroups(i)) {
              check("persistence", kf.find(i, w).has_value(),
                    "K-F-subnormal in G but not in an intermediate W",
                    L[w].members());
            }
          }
        }
      }

      GroupContext&                          ctx_;
      Group const&                           g_;
      Formation const&                       f_;
      VerificationReport&                    r_;
      CentralityTest                         central_;
      std::uint32_t                          seed_;
      std::size_t                            index_;
      std::uint64_t                          budget_;
      std::vector<Subgroup>                  normals_;
      Subgroup                               residual_ = Subgroup::trivial(1);
      Subgroup                               z_        = Subgroup::trivial(1);
      bool                                   in_f_     = false;
      std::vector<std::pair<std::size_t, std::size_t>> chief_;
      std::vector<bool>                      chief_central_;
      std::size_t                            cap_;
      std::vector<std::vector<std::size_t>>  covers_;  // chief factors above
      std::map<std::array<std::size_t, 3>, std::optional<bool>> central_memo_;
      std::map<std::tuple<std::size_t, std::vector<Elem>, std::vector<Elem>>,
               bool>
                                             restricted_memo_;
      std::map<std::size_t, Subgroup>        zf_memo_;
      std::map<std::size_t, bool>            in_f_memo_;
    };

  }  // namespace

  VerificationReport verify_lemma_suite(Catalog const&       catalog,
                                        Formation const&     f,
                                        VerifyOptions const& opts) {
    auto h = header("lemmas", &f);
    h.count("formation:trivial:checked");
    if (!f.contains(cyclic(1))) {
      h.failures.push_back(make_failure("formation:trivial", cyclic(1),
                                        "trivial", "trivial group outside F"));
    }
    // index of each entry, for the per-group relabelling seed
    std::map<Group const*, std::size_t> index;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      index.emplace(&catalog.entries[i].group, i);
    }
    return sweep(catalog, opts, std::move(h),
                 [&](GroupContext& ctx, VerificationReport& r) {
                   LemmaSweep(ctx, f, r, opts.seed, index.at(&ctx.g()),
                              opts.search_budget, opts.order_cap)
                       .run();
                 });
  }

  namespace {
    using Clock = std::chrono::steady_clock;

    template <class Fn>
    VerificationReport timed(bool timing, Fn&& fn) {
      auto t0 = Clock::now();
      auto r  = fn();
      if (timing) {
        r.elapsed_ms
            = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                  .count();
      }
      return r;
    }

    VerificationReport skipped_run(std::string       claim,
                                   Formation const&  f,
                                   Catalog const&    catalog) {
      auto r = header(std::move(claim), &f);
      r.coverage = catalog.coverage();
      r.groups   = catalog.size();
      r.skip(sr::formation_sweep, catalog.size());
      return r;
    }
  }  // namespace

  std::vector<VerificationReport> run_claim(std::string_view claim,
                                            Catalog const&   catalog,
                                            RunConfig const& config) {
    if (std::find(std::begin(claim_names), std::end(claim_names), claim)
        == std::end(claim_names)) {
      throw InvalidArgument("unknown claim '" + std::string(claim) + "'");
    }
    std::vector<Formation> formations;
    if (config.formation) {
      formations.push_back(*config.formation);
    } else {
      formations = builtin_formations(config.sigma);
    }
    auto const&                     opts = config.opts;
    bool const                      all  = claim == "all";
    std::vector<VerificationReport> out;
    std::vector<bool>               sound(formations.size(), true);

    if (all || claim == "lemmas") {
      for (std::size_t i = 0; i < formations.size(); ++i) {
        out.push_back(timed(config.timing, [&] {
          return verify_lemma_suite(catalog, formations[i], opts);
        }));
        sound[i] = all ? out.back().passed() : true;
      }
    }
    auto per_formation = [&](char const* name, auto verify) {
      for (std::size_t i = 0; i < formations.size(); ++i) {
        if (!sound[i]) {
          out.push_back(skipped_run(name, formations[i], catalog));
          continue;
        }
        out.push_back(timed(config.timing, [&] {
          return verify(catalog, formations[i], opts);
        }));
      }
    };
    if (all || claim == "theorem-b") {
      per_formation("theorem-b", verify_theorem_b);
    }
    if (all || claim == "theorem-a") {
      per_formation("theorem-a", verify_theorem_a);
    }
    if (all || claim == "schenkman") {
      out.push_back(timed(config.timing, [&] {
        return verify_schenkman_classic(catalog, opts);
      }));
    }
    if (all || claim == "holomorph-bound") {
      per_formation("holomorph-bound", verify_holomorph_bound);
    }
    if (all || claim == "section3") {
      auto sigma = config.sigma.value_or(SigmaPartition{});
      out.push_back(timed(config.timing, [&] {
        return verify_section3_corollaries(catalog, sigma, opts);
      }));
    }
    return out;
  }

}  // namespace formcheck
