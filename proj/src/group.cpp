#include "formcheck/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "formcheck/errors.hpp"

namespace formcheck {

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  std::size_t ElementSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
      c += std::popcount(w);
    }
    return c;
  }

  bool ElementSet::is_subset_of(ElementSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) {
        return false;
      }
    }
    return true;
  }

  ElementSet& ElementSet::operator&=(ElementSet const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
    }
    return *this;
  }

  ElementSet& ElementSet::operator|=(ElementSet const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  std::vector<Elem> ElementSet::to_vector() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<Elem>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t ElementSet::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  Group::Group() {
    auto d  = std::make_shared<Data>();
    d->memo = std::make_shared<GroupMemo>();
    data_   = std::move(d);
  }

  Elem Group::power(Elem x, std::uint64_t k) const noexcept {
    Elem result = 0;
    Elem base   = x;
    while (k != 0) {
      if (k & 1u) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  namespace {
    std::vector<Elem> greedy_generators(std::size_t              n,
                                        std::vector<Elem> const& table) {
      std::vector<Elem> gens;
      std::vector<bool> in_span(n, false);
      in_span[0] = true;
      std::size_t span_size = 1;
      for (Elem x = 1; x < n && span_size < n; ++x) {
        if (in_span[x]) {
          continue;
        }
        gens.push_back(x);
        // recompute span of gens
        std::fill(in_span.begin(), in_span.end(), false);
        std::vector<Elem> queue{0};
        in_span[0] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (auto g : gens) {
            Elem y = table[std::size_t(queue[i]) * n + g];
            if (!in_span[y]) {
              in_span[y] = true;
              queue.push_back(y);
            }
          }
        }
        span_size = queue.size();
      }
      return gens;
    }
  }  // namespace

  Group Group::from_trusted_table(std::size_t                             n,
                                  std::vector<Elem>                       table,
                                  std::string                             label,
                                  std::vector<std::vector<std::uint32_t>> perms,
                                  std::size_t degree) {
    if (n == 0 || table.size() != n * n) {
      throw InvalidArgument("table has wrong shape");
    }
    auto d    = std::make_shared<Data>();
    d->n      = n;
    d->table  = std::move(table);
    d->label  = std::move(label);
    d->perms  = std::move(perms);
    d->degree = degree;
    d->memo   = std::make_shared<GroupMemo>();
    d->inv.assign(n, 0);
    d->orders.assign(n, 1);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (d->table[std::size_t(a) * n + b] == 0) {
          d->inv[a] = b;
          break;
        }
      }
      unsigned k = 1;
      Elem     x = a;
      while (x != 0) {
        x = d->table[std::size_t(x) * n + a];
        ++k;
      }
      d->orders[a] = (a == 0) ? 1 : k;
    }
    d->gens = greedy_generators(n, d->table);
    return Group(std::move(d));
  }

  Group Group::relabelled(std::string label) const {
    auto d   = std::make_shared<Data>(*data_);
    d->label = std::move(label);
    return Group(std::move(d));
  }

  void Group::validate() const {
    auto const n = order();
    for (Elem g = 0; g < n; ++g) {
      if (mul(0, g) != g || mul(g, 0) != g) {
        throw NotAGroup("index 0 is not an identity", {0, long(g), -1});
      }
      if (mul(g, inv(g)) != 0 || mul(inv(g), g) != 0) {
        throw NotAGroup("element has no inverse", {long(g), -1, -1});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ab = mul(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw NotAGroup("multiplication is not associative",
                            {long(a), long(b), long(c)});
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup
  ////////////////////////////////////////////////////////////////////////

  Subgroup::Subgroup(ElementSet mask)
      : mask_(std::move(mask)), members_(mask_.to_vector()) {}

  Subgroup Subgroup::trivial(std::size_t parent_order) {
    ElementSet m(parent_order);
    m.set(0);
    return Subgroup(std::move(m));
  }

  Subgroup Subgroup::whole(std::size_t parent_order) {
    ElementSet m(parent_order);
    for (Elem x = 0; x < parent_order; ++x) {
      m.set(x);
    }
    return Subgroup(std::move(m));
  }

  std::strong_ordering
  Subgroup::operator<=>(Subgroup const& other) const noexcept {
    if (auto c = order() <=> other.order(); c != 0) {
      return c;
    }
    return members_ <=> other.members_;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism
  ////////////////////////////////////////////////////////////////////////

  bool Homomorphism::is_homomorphism() const {
    auto const n = source.order();
    if (image.size() != n) {
      return false;
    }
    for (Elem a = 0; a < n; ++a) {
      if (image[a] >= target.order()) {
        return false;
      }
      for (Elem b = 0; b < n; ++b) {
        if (image[source.mul(a, b)] != target.mul(image[a], image[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool Homomorphism::is_injective() const {
    std::vector<bool> seen(target.order(), false);
    for (auto y : image) {
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  bool Homomorphism::is_surjective() const {
    std::vector<bool> seen(target.order(), false);
    std::size_t       hit = 0;
    for (auto y : image) {
      if (!seen[y]) {
        seen[y] = true;
        ++hit;
      }
    }
    return hit == target.order();
  }

  Subgroup Homomorphism::kernel() const {
    ElementSet m(source.order());
    for (Elem x = 0; x < image.size(); ++x) {
      if (image[x] == 0) {
        m.set(x);
      }
    }
    return Subgroup(std::move(m));
  }

  Subgroup Homomorphism::image_of(Subgroup const& h) const {
    ElementSet m(target.order());
    for (auto x : h.members()) {
      m.set(image[x]);
    }
    return Subgroup(std::move(m));
  }

  Subgroup Homomorphism::preimage_of(Subgroup const& h) const {
    ElementSet m(source.order());
    for (Elem x = 0; x < image.size(); ++x) {
      if (h.contains(image[x])) {
        m.set(x);
      }
    }
    return Subgroup(std::move(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // Embedding
  ////////////////////////////////////////////////////////////////////////

  Subgroup Embedding::restrict(Subgroup const& in_parent) const {
    ElementSet m(group.order());
    for (auto x : in_parent.members()) {
      auto y = from_parent[x];
      if (y == npos) {
        throw InvalidArgument("subgroup is not contained in the embedded one");
      }
      m.set(y);
    }
    return Subgroup(std::move(m));
  }

  Subgroup Embedding::lift(Subgroup const& in_sub) const {
    ElementSet m(from_parent.size());
    for (auto x : in_sub.members()) {
      m.set(to_parent[x]);
    }
    return Subgroup(std::move(m));
  }

}  // namespace formcheck
