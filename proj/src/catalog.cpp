#include "formcheck/catalog.hpp"

#include <algorithm>
#include <map>

#include "formcheck/errors.hpp"
#include "formcheck/group_io.hpp"
#include "formcheck/isomorphism.hpp"
#include "formcheck/lattice.hpp"

namespace formcheck {

  std::string Catalog::coverage() const {
    return "generated families up to order " + std::to_string(max_order)
           + " (cyclic, elementary abelian, symmetric S3 S4, alternating A4 "
             "A5, dihedral, dicyclic, pairwise direct products) plus "
           + std::to_string(user_files) + " user file(s); "
           + std::to_string(entries.size())
           + " groups up to isomorphism; this is not every group of these "
             "orders";
  }

  namespace {
    struct Pending {
      std::string selector;
      Group       group;
      bool        base;
    };

    bool is_prime_power(std::size_t n, unsigned& p, unsigned& k) {
      auto primes = prime_divisors(n);
      if (primes.size() != 1) {
        return false;
      }
      p = primes[0];
      k = 0;
      for (; n > 1; n /= p) {
        ++k;
      }
      return true;
    }

    class Deduper {
     public:
      // Returns false if an isomorphic group is already present.
      bool add(Group const& g, std::string const& selector, bool base) {
        auto fp     = fingerprint(g);
        auto& bucket = buckets_[fp];
        for (auto i : bucket) {
          if (is_isomorphic(entries_[i].group, g)) {
            entries_[i].aliases.push_back(selector);
            return false;
          }
        }
        bucket.push_back(entries_.size());
        entries_.push_back(CatalogEntry{g, selector, {}});
        base_.push_back(base);
        return true;
      }

      std::vector<CatalogEntry>& entries() {
        return entries_;
      }
      std::vector<bool> const& base() const {
        return base_;
      }

     private:
      std::map<Fingerprint, std::vector<std::size_t>> buckets_;
      std::vector<CatalogEntry>                       entries_;
      std::vector<bool>                               base_;
    };
  }  // namespace

  Catalog catalog_generate(std::size_t                               max_order,
                           std::vector<std::filesystem::path> const& files,
                           std::size_t                               order_cap) {
    if (max_order == 0) {
      throw InvalidArgument("max_order must be positive");
    }
    if (max_order > order_cap) {
      throw OrderCapExceeded("max_order " + std::to_string(max_order)
                             + " exceeds the order cap "
                             + std::to_string(order_cap));
    }
    std::vector<std::string> selectors;
    for (std::size_t n = 1; n <= max_order; ++n) {
      selectors.push_back(n == 1 ? "trivial" : "cyclic:" + std::to_string(n));
    }
    for (std::size_t n = 4; n <= max_order; ++n) {
      unsigned p = 0, k = 0;
      if (is_prime_power(n, p, k) && k >= 2) {
        selectors.push_back("elab:" + std::to_string(p) + "^"
                            + std::to_string(k));
      }
    }
    for (auto [sel, order] : {std::pair{"sym:3", 6}, std::pair{"sym:4", 24},
                              std::pair{"alt:4", 12}, std::pair{"alt:5", 60}}) {
      if (std::size_t(order) <= max_order) {
        selectors.push_back(sel);
      }
    }
    for (std::size_t n = 3; 2 * n <= max_order; ++n) {
      selectors.push_back("dihedral:" + std::to_string(n));
    }
    for (std::size_t n = 8; n <= max_order; n += 4) {
      selectors.push_back("quaternion:" + std::to_string(n));
    }

    Deduper dedup;
    for (auto const& sel : selectors) {
      dedup.add(group_from_selector(sel, order_cap), sel, true);
    }
    // pairwise products of the non-trivial base groups
    std::vector<CatalogEntry> base;
    for (std::size_t i = 0; i < dedup.entries().size(); ++i) {
      if (dedup.base()[i] && dedup.entries()[i].group.order() > 1) {
        base.push_back(dedup.entries()[i]);
      }
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i; j < base.size(); ++j) {
        auto const& a = base[i];
        auto const& b = base[j];
        if (a.group.order() * b.group.order() > max_order) {
          continue;
        }
        auto sel = "prod(" + a.provenance + "," + b.provenance + ")";
        dedup.add(group_from_selector(sel, order_cap), sel, false);
      }
    }
    Catalog out;
    out.max_order = max_order;
    for (auto const& path : files) {
      auto g = load_group_file(path, order_cap);
      if (g.order() > max_order) {
        continue;
      }
      ++out.user_files;
      dedup.add(g, path.string(), false);
    }
    out.entries = std::move(dedup.entries());
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](CatalogEntry const& a, CatalogEntry const& b) {
                       return a.group.order() < b.group.order();
                     });
    return out;
  }

}  // namespace formcheck
