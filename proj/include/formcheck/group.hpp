#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace formcheck {

  using Elem = std::uint32_t;

  inline constexpr std::size_t default_order_cap = 512;

  // Fixed-size bitset over element indices 0..size-1.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe() const noexcept {
      return n_;
    }
    bool test(Elem x) const noexcept {
      return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void set(Elem x) noexcept {
      words_[x >> 6] |= std::uint64_t(1) << (x & 63);
    }
    void reset(Elem x) noexcept {
      words_[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
    }
    std::size_t count() const noexcept;
    bool is_subset_of(ElementSet const& other) const noexcept;
    ElementSet& operator&=(ElementSet const& other) noexcept;
    ElementSet& operator|=(ElementSet const& other) noexcept;
    std::vector<Elem> to_vector() const;
    std::size_t hash() const noexcept;

    std::vector<std::uint64_t> const& words() const noexcept {
      return words_;
    }

    bool operator==(ElementSet const&) const = default;

   private:
    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

  // A finite group given by its full multiplication table. Index 0 is the
  // identity. Copies share the immutable table.
  struct GroupMemo;

  class Group {
   public:
    Group();

    std::size_t order() const noexcept {
      return data_->n;
    }
    Elem mul(Elem a, Elem b) const noexcept {
      return data_->table[std::size_t(a) * data_->n + b];
    }
    Elem inv(Elem a) const noexcept {
      return data_->inv[a];
    }
    Elem conj(Elem x, Elem g) const noexcept {  // g^-1 x g
      return mul(inv(g), mul(x, g));
    }
    Elem commutator(Elem a, Elem b) const noexcept {  // a^-1 b^-1 a b
      return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    Elem power(Elem x, std::uint64_t k) const noexcept;

    unsigned element_order(Elem x) const noexcept {
      return data_->orders[x];
    }
    std::vector<unsigned> const& element_orders() const noexcept {
      return data_->orders;
    }
    std::string const& label() const noexcept {
      return data_->label;
    }
    // A small generating set, chosen greedily in index order.
    std::vector<Elem> const& generators() const noexcept {
      return data_->gens;
    }
    std::span<Elem const> table() const noexcept {
      return data_->table;
    }

    // Permutation images of each element, present only for groups built
    // from permutation generators.
    bool has_permutations() const noexcept {
      return !data_->perms.empty();
    }
    std::size_t degree() const noexcept {
      return data_->degree;
    }
    std::vector<std::uint32_t> const& permutation(Elem x) const {
      return data_->perms.at(x);
    }

    Group relabelled(std::string label) const;

    // Builds a group from a table that is already known to satisfy the
    // axioms with identity at index 0. No validation beyond shape.
    static Group from_trusted_table(std::size_t               n,
                                    std::vector<Elem>         table,
                                    std::string               label,
                                    std::vector<std::vector<std::uint32_t>>
                                        perms  = {},
                                    std::size_t degree = 0);

    // Full axiom check; throws NotAGroup with a witness.
    void validate() const;

    // Derived data computed once and shared between copies.
    GroupMemo& memo() const noexcept {
      return *data_->memo;
    }

   private:
    struct Data {
      std::size_t                             n = 1;
      std::vector<Elem>                       table{0};
      std::vector<Elem>                       inv{0};
      std::vector<unsigned>                   orders{1};
      std::vector<Elem>                       gens;
      std::string                             label = "1";
      std::vector<std::vector<std::uint32_t>> perms;
      std::size_t                             degree = 0;
      std::shared_ptr<GroupMemo>              memo;
    };
    explicit Group(std::shared_ptr<Data const> d) : data_(std::move(d)) {}
    std::shared_ptr<Data const> data_;
  };

  // A subgroup as a set of element indices of some parent group. The parent
  // is supplied alongside at every call site.
  class Subgroup {
   public:
    Subgroup() = default;
    explicit Subgroup(ElementSet mask);

    static Subgroup trivial(std::size_t parent_order);
    static Subgroup whole(std::size_t parent_order);

    std::size_t order() const noexcept {
      return members_.size();
    }
    bool contains(Elem x) const noexcept {
      return mask_.test(x);
    }
    std::vector<Elem> const& members() const noexcept {
      return members_;
    }
    ElementSet const& mask() const noexcept {
      return mask_;
    }
    std::size_t parent_order() const noexcept {
      return mask_.universe();
    }
    bool is_trivial() const noexcept {
      return members_.size() == 1;
    }
    bool is_whole() const noexcept {
      return members_.size() == mask_.universe();
    }
    bool is_subgroup_of(Subgroup const& other) const noexcept {
      return order() <= other.order() && mask_.is_subset_of(other.mask_);
    }

    bool operator==(Subgroup const& other) const noexcept {
      return mask_ == other.mask_;
    }
    // (order, member list) lexicographic.
    std::strong_ordering operator<=>(Subgroup const& other) const noexcept;

   private:
    ElementSet        mask_;
    std::vector<Elem> members_;
  };

  struct GroupMemo {
    std::once_flag        normals_once;
    std::vector<Subgroup> normals;
  };

  struct SubgroupHash {
    std::size_t operator()(Subgroup const& s) const noexcept {
      return s.mask().hash();
    }
  };

  struct Homomorphism {
    Group             source;
    Group             target;
    std::vector<Elem> image;

    Elem operator()(Elem x) const {
      return image[x];
    }
    bool is_homomorphism() const;
    bool is_injective() const;
    bool is_surjective() const;
    Subgroup kernel() const;
    Subgroup image_of(Subgroup const& h) const;
    Subgroup preimage_of(Subgroup const& h) const;
  };

  // A subgroup H of G realised as a group in its own right; element i of
  // `group` is `to_parent[i]` in G.
  struct Embedding {
    static constexpr Elem npos = static_cast<Elem>(-1);

    Group             group;
    std::vector<Elem> to_parent;
    std::vector<Elem> from_parent;  // npos outside H

    // Subgroup of `group` for a subgroup of G contained in H.
    Subgroup restrict(Subgroup const& in_parent) const;
    // Subgroup of G for a subgroup of `group`.
    Subgroup lift(Subgroup const& in_sub) const;
  };

}  // namespace formcheck
