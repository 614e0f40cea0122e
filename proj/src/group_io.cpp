#include "formcheck/group_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "formcheck/errors.hpp"

namespace formcheck {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::optional<unsigned long> to_number(std::string_view s) {
      s = trim(s);
      unsigned long v   = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
      }
      return v;
    }

    std::vector<std::string_view> split_ws(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size()
               && (std::isspace(static_cast<unsigned char>(s[i]))
                   || s[i] == ',')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))
               && s[j] != ',') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace

  Permutation parse_cycles(std::string_view text,
                           std::size_t      degree,
                           std::size_t      line) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<bool> moved(degree, false);
    text = trim(text);
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(') {
        throw ParseError("expected '(' in cycle notation", line);
      }
      auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated cycle", line);
      }
      std::vector<std::uint32_t> cycle;
      for (auto tok : split_ws(text.substr(i + 1, close - i - 1))) {
        auto v = to_number(tok);
        if (!v) {
          throw ParseError("bad point '" + std::string(tok) + "'", line);
        }
        if (*v >= degree) {
          throw ParseError("point " + std::to_string(*v)
                               + " out of range for degree "
                               + std::to_string(degree),
                           line);
        }
        if (moved[*v]) {
          throw ParseError("cycles are not disjoint", line);
        }
        moved[*v] = true;
        cycle.push_back(std::uint32_t(*v));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        p[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      i = close + 1;
    }
    return p;
  }

  std::string cycle_notation(Permutation const& p) {
    std::string       out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (seen[x] || p[x] == x) {
        continue;
      }
      out += "(";
      for (std::size_t y = x; !seen[y]; y = p[y]) {
        seen[y] = true;
        if (y != x) {
          out += " ";
        }
        out += std::to_string(y);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  Group parse_group_text(std::string_view text,
                         std::string      label,
                         std::size_t      order_cap) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
      std::istringstream in{std::string(text)};
      std::string        raw;
      std::size_t        no = 0;
      while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        auto t = trim(raw);
        if (!t.empty()) {
          lines.emplace_back(no, std::string(t));
        }
      }
    }
    if (lines.empty()) {
      throw ParseError("empty group description", 0);
    }
    auto header = split_ws(lines[0].second);
    if (header.size() != 2) {
      throw ParseError("expected 'perm <degree>' or 'table <n>'",
                       lines[0].first);
    }
    auto size = to_number(header[1]);
    if (!size) {
      throw ParseError("bad size '" + std::string(header[1]) + "'",
                       lines[0].first);
    }
    if (header[0] == "perm") {
      std::vector<Permutation> gens;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        gens.push_back(parse_cycles(lines[i].second, *size, lines[i].first));
      }
      return from_permutation_gens(*size, gens, order_cap, std::move(label));
    }
    if (header[0] == "table") {
      if (*size == 0) {
        throw ParseError("table size must be positive", lines[0].first);
      }
      if (*size > order_cap) {
        throw OrderCapExceeded("table of order " + std::to_string(*size)
                               + " exceeds the cap "
                               + std::to_string(order_cap));
      }
      if (lines.size() - 1 != *size) {
        throw ParseError("expected " + std::to_string(*size) + " rows, got "
                             + std::to_string(lines.size() - 1),
                         lines.back().first);
      }
      std::vector<std::vector<Elem>> rows;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = split_ws(lines[i].second);
        if (toks.size() != *size) {
          throw ParseError("expected " + std::to_string(*size) + " entries",
                           lines[i].first);
        }
        std::vector<Elem> row;
        for (auto tok : toks) {
          auto v = to_number(tok);
          if (!v) {
            throw ParseError("bad entry '" + std::string(tok) + "'",
                             lines[i].first);
          }
          row.push_back(Elem(*v));
        }
        rows.push_back(std::move(row));
      }
      return from_cayley_table(rows, std::move(label));
    }
    throw ParseError("unknown header '" + std::string(header[0]) + "'",
                     lines[0].first);
  }

  Group load_group_file(std::filesystem::path const& path,
                        std::size_t                  order_cap) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_text(ss.str(), path.stem().string(), order_cap);
  }

  std::string dump_table(Group const& g) {
    std::string out = "table " + std::to_string(g.order()) + "\n";
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) {
        if (b > 0) {
          out += ' ';
        }
        out += std::to_string(g.mul(a, b));
      }
      out += '\n';
    }
    return out;
  }

  namespace {
    class SelectorParser {
     public:
      SelectorParser(std::string_view s, std::size_t cap) : s_(s), cap_(cap) {}

      Group parse() {
        auto g = expr();
        skip();
        if (pos_ != s_.size()) {
          fail("trailing characters");
        }
        return g;
      }

     private:
      [[noreturn]] void fail(std::string const& what) {
        throw ParseError("group selector '" + std::string(s_) + "': " + what,
                         0);
      }
      void skip() {
        while (pos_ < s_.size()
               && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }
      std::string_view word() {
        skip();
        auto start = pos_;
        while (pos_ < s_.size()
               && (std::isalpha(static_cast<unsigned char>(s_[pos_]))
                   || s_[pos_] == '_')) {
          ++pos_;
        }
        return s_.substr(start, pos_ - start);
      }
      unsigned number() {
        skip();
        auto start = pos_;
        while (pos_ < s_.size()
               && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        auto v = to_number(s_.substr(start, pos_ - start));
        if (!v) {
          fail("expected a number");
        }
        return unsigned(*v);
      }
      void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      Group expr() {
        auto w = word();
        if (w == "trivial") {
          return cyclic(1);
        }
        if (w == "prod") {
          expect('(');
          auto a = expr();
          expect(',');
          auto b = expr();
          expect(')');
          return direct_product(a, b, cap_);
        }
        expect(':');
        if (w == "elab") {
          auto p = number();
          expect('^');
          auto k = number();
          return standard_family(Family::elem_abelian, {p, k}, cap_);
        }
        auto n = number();
        if (w == "cyclic") {
          return standard_family(Family::cyclic, {n}, cap_);
        }
        if (w == "dihedral") {
          return standard_family(Family::dihedral, {n}, cap_);
        }
        if (w == "sym") {
          return standard_family(Family::symmetric, {n}, cap_);
        }
        if (w == "alt") {
          return standard_family(Family::alternating, {n}, cap_);
        }
        if (w == "quaternion") {
          return standard_family(Family::quaternion, {n}, cap_);
        }
        fail("unknown family '" + std::string(w) + "'");
      }

      std::string_view s_;
      std::size_t      cap_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Group group_from_selector(std::string_view selector, std::size_t order_cap) {
    return SelectorParser(selector, order_cap).parse();
  }

  Group load_group(std::string_view source, std::size_t order_cap) {
    std::filesystem::path p{std::string(source)};
    std::error_code       ec;
    if (std::filesystem::is_regular_file(p, ec)) {
      return load_group_file(p, order_cap);
    }
    return group_from_selector(source, order_cap);
  }

}  // namespace formcheck
