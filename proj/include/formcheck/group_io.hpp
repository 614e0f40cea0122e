#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "formcheck/construct.hpp"
#include "formcheck/group.hpp"

namespace formcheck {

  // Group file format:
  //
  //   # comment
  //   perm <degree>
  //   (0 1 2)(3 4)        one generator per line, disjoint cycles
  //
  // or
  //
  //   table <n>
  //   <n rows of n space-separated indices>
  //
  // Throws ParseError carrying the 1-based line number, or NotAGroup.
  Group parse_group_text(std::string_view text,
                         std::string      label     = "file",
                         std::size_t      order_cap = default_order_cap);

  Group load_group_file(std::filesystem::path const& path,
                        std::size_t order_cap = default_order_cap);

  // "table <n>" followed by the rows.
  std::string dump_table(Group const& g);

  Permutation parse_cycles(std::string_view text,
                           std::size_t      degree,
                           std::size_t      line = 0);
  std::string cycle_notation(Permutation const& p);

  // trivial | cyclic:n | dihedral:n | sym:n | alt:n | quaternion:n |
  // elab:p^k | prod(a,b)
  Group group_from_selector(std::string_view selector,
                            std::size_t      order_cap = default_order_cap);

  // A selector if it parses as one, otherwise a group file path.
  Group load_group(std::string_view source,
                   std::size_t      order_cap = default_order_cap);

}  // namespace formcheck
