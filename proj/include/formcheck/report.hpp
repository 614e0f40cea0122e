#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "formcheck/group.hpp"

namespace formcheck {

  using ojson = nlohmann::ordered_json;

  // Skip reasons.
  namespace skip_reason {
    inline constexpr char const* hypothesis_failed = "hypothesis-failed";
    inline constexpr char const* budget_exceeded   = "budget-exceeded";
    inline constexpr char const* lattice_budget    = "lattice-budget-exceeded";
    inline constexpr char const* order_cap         = "order-cap-exceeded";
    inline constexpr char const* formation_sweep   = "formation-sweep-failed";
    inline constexpr char const* not_applicable    = "precondition-not-met";
  }  // namespace skip_reason

  // A reproducible counterexample: the whole Cayley table travels with it.
  struct Failure {
    std::string                    property;
    std::string                    group;
    std::string                    provenance;
    std::vector<std::vector<Elem>> cayley;
    std::vector<Elem>              subgroup;
    std::string                    detail;
    ojson                          data = ojson::object();

    ojson to_json() const;
  };

  Failure make_failure(std::string       property,
                       Group const&      g,
                       std::string       provenance,
                       std::string       detail,
                       std::vector<Elem> subgroup = {});

  struct VerificationReport {
    std::string                claim;
    std::string                formation;
    std::optional<std::string> sigma;
    std::string                coverage;

    std::uint64_t groups               = 0;
    std::uint64_t checked              = 0;
    std::uint64_t hypothesis_satisfied = 0;

    std::map<std::string, std::uint64_t> skipped;
    std::map<std::string, std::uint64_t> counters;
    std::vector<Failure>                 failures;
    ojson                                details = ojson::array();

    std::optional<double> elapsed_ms;

    void skip(std::string const& reason, std::uint64_t n = 1) {
      skipped[reason] += n;
    }
    void count(std::string const& key, std::uint64_t n = 1) {
      counters[key] += n;
    }

    // Counts add, failures and details append in argument order.
    void merge(VerificationReport const& other);

    std::uint64_t skipped_total() const;
    bool          passed() const noexcept {
      return failures.empty();
    }
    bool budget_exhausted() const;

    ojson       to_json() const;
    std::string to_text() const;
  };

  // 1 on any failure, 2 if none failed but something hit a budget, else 0.
  int exit_code(std::vector<VerificationReport> const& reports);

  ojson       reports_to_json(std::vector<VerificationReport> const& reports);
  std::string reports_to_text(std::vector<VerificationReport> const& reports);

}  // namespace formcheck
