#include "formcheck/report.hpp"

#include <sstream>

#include "formcheck/construct.hpp"

namespace formcheck {

  ojson Failure::to_json() const {
    ojson j;
    j["property"]   = property;
    j["group"]      = group;
    j["provenance"] = provenance;
    j["detail"]     = detail;
    j["subgroup"]   = subgroup;
    j["data"]       = data;
    j["cayley"]     = cayley;
    return j;
  }

  Failure make_failure(std::string       property,
                       Group const&      g,
                       std::string       provenance,
                       std::string       detail,
                       std::vector<Elem> subgroup) {
    Failure f;
    f.property   = std::move(property);
    f.group      = g.label();
    f.provenance = std::move(provenance);
    f.cayley     = cayley_rows(g);
    f.subgroup   = std::move(subgroup);
    f.detail     = std::move(detail);
    return f;
  }

  void VerificationReport::merge(VerificationReport const& other) {
    groups += other.groups;
    checked += other.checked;
    hypothesis_satisfied += other.hypothesis_satisfied;
    for (auto const& [k, v] : other.skipped) {
      skipped[k] += v;
    }
    for (auto const& [k, v] : other.counters) {
      counters[k] += v;
    }
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
    for (auto const& d : other.details) {
      details.push_back(d);
    }
  }

  std::uint64_t VerificationReport::skipped_total() const {
    std::uint64_t n = 0;
    for (auto const& [k, v] : skipped) {
      n += v;
    }
    return n;
  }

  bool VerificationReport::budget_exhausted() const {
    for (auto const& [k, v] : skipped) {
      if (v > 0
          && (k == skip_reason::budget_exceeded || k == skip_reason::lattice_budget
              || k == skip_reason::order_cap)) {
        return true;
      }
    }
    return false;
  }

  ojson VerificationReport::to_json() const {
    ojson j;
    j["claim"]     = claim;
    j["formation"] = formation;
    j["sigma"]     = sigma ? ojson(*sigma) : ojson(nullptr);
    j["coverage"]  = coverage;
    j["groups"]    = groups;
    j["checked"]   = checked;
    j["hypothesis_satisfied"] = hypothesis_satisfied;
    j["skipped"]              = ojson::object();
    for (auto const& [k, v] : skipped) {
      j["skipped"][k] = v;
    }
    j["counters"] = ojson::object();
    for (auto const& [k, v] : counters) {
      j["counters"][k] = v;
    }
    j["failures"] = ojson::array();
    for (auto const& f : failures) {
      j["failures"].push_back(f.to_json());
    }
    j["details"]    = details;
    j["verdict"]    = passed() ? "PASS" : "FAIL";
    j["elapsed_ms"] = elapsed_ms ? ojson(*elapsed_ms) : ojson(nullptr);
    return j;
  }

  std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "claim: " << claim << "\n";
    out << "formation: " << formation << "\n";
    out << "sigma: " << (sigma ? *sigma : "-") << "\n";
    out << "coverage: " << coverage << "\n";
    out << "groups: " << groups << "\n";
    out << "checked: " << checked << "\n";
    out << "hypothesis satisfied: " << hypothesis_satisfied << "\n";
    out << "skipped: " << skipped_total();
    for (auto const& [k, v] : skipped) {
      out << " " << k << "=" << v;
    }
    out << "\n";
    for (auto const& [k, v] : counters) {
      out << "  " << k << ": " << v << "\n";
    }
    for (auto const& d : details) {
      out << "  " << d.dump() << "\n";
    }
    out << "failures: " << failures.size() << "\n";
    for (auto const& f : failures) {
      out << "  [" << f.property << "] " << f.group << " (" << f.provenance
          << "): " << f.detail << "\n";
    }
    if (elapsed_ms) {
      out << "elapsed: " << *elapsed_ms << " ms\n";
    }
    out << "verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }

  int exit_code(std::vector<VerificationReport> const& reports) {
    bool budget = false;
    for (auto const& r : reports) {
      if (!r.passed()) {
        return 1;
      }
      budget = budget || r.budget_exhausted();
    }
    return budget ? 2 : 0;
  }

  ojson reports_to_json(std::vector<VerificationReport> const& reports) {
    ojson j;
    j["reports"] = ojson::array();
    for (auto const& r : reports) {
      j["reports"].push_back(r.to_json());
    }
    int code     = exit_code(reports);
    j["verdict"] = code == 1 ? "FAIL" : "PASS";
    j["exit_code"] = code;
    return j;
  }

  std::string reports_to_text(std::vector<VerificationReport> const& reports) {
    std::string out;
    for (auto const& r : reports) {
      out += r.to_text();
      out += "\n";
    }
    int code = exit_code(reports);
    out += "overall: ";
    out += code == 1 ? "FAIL" : "PASS";
    out += " (exit " + std::to_string(code) + ")\n";
    return out;
  }

}  // namespace formcheck
