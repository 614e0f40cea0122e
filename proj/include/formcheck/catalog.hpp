#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "formcheck/group.hpp"

namespace formcheck {

  struct CatalogEntry {
    Group       group;
    std::string provenance;  // selector or file path that rebuilds the group
    std::vector<std::string> aliases;  // dropped isomorphic duplicates
  };

  struct Catalog {
    std::vector<CatalogEntry> entries;
    std::size_t               max_order = 0;
    std::size_t               user_files = 0;

    std::size_t size() const noexcept {
      return entries.size();
    }
    // One line saying what the catalog does and does not cover.
    std::string coverage() const;
  };

  // Cyclic, elementary abelian, S3, S4, A4, A5, dihedral and dicyclic
  // groups, then pairwise direct products of those, then the user files.
  // Isomorphic duplicates are dropped (the first one generated is kept) and
  // entries are sorted by order, then generation sequence.
  Catalog catalog_generate(std::size_t                               max_order,
                           std::vector<std::filesystem::path> const& files = {},
                           std::size_t order_cap = default_order_cap);

}  // namespace formcheck
