#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef FORMCHECK_CLI
#error "FORMCHECK_CLI must name the command-line binary"
#endif

namespace {
  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = std::string(FORMCHECK_CLI) + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t            n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
      r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  bool has(Run const& r, std::string const& s) {
    return r.out.find(s) != std::string::npos;
  }

  std::filesystem::path temp_file(std::string const& name, std::string const& text) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
  }
}

TEST_CASE("group show") {
  auto c6 = run("group show cyclic:6");
  CHECK(c6.code == 0);
  CHECK(has(c6, "order: 6\n"));
  CHECK(has(c6, "nilpotent: true"));

  auto one = run("group show trivial");
  CHECK(has(one, "order: 1\n"));
  CHECK(has(one, "nilpotent: true"));
  CHECK(has(one, "supersoluble: true"));
  CHECK(has(one, "soluble: true"));

  auto s4 = run("group show sym:4");
  CHECK(has(s4, "chief series: 1,4,12,24"));
  CHECK(has(s4, "supersoluble: false"));
  CHECK(has(s4, "lattice: 30 subgroups"));

  auto j = nlohmann::json::parse(run("group show sym:3 --format json").out);
  CHECK(j["order"] == 6);
  CHECK(j["center_order"] == 1);
  CHECK(j["elements"].size() == 6);
}

TEST_CASE("queries") {
  auto r = run("residual sym:3 --formation nilpotent");
  CHECK(r.code == 0);
  CHECK(has(r, "residual: order 3"));
  CHECK(has(run("hypercentre sym:3 --formation supersoluble"),
            "hypercentre: order 6"));
  CHECK(has(run("hypercentre sym:3 --formation nilpotent"),
            "hypercentre: order 1"));
}

TEST_CASE("subnormal with generators from the element listing") {
  auto j = nlohmann::json::parse(run("group show sym:4 --format json").out);
  std::string a, b;
  for (auto const& e : j["elements"]) {
    if (e["name"] == "(0 1 2 3)") {
      a = std::to_string(e["index"].get<int>());
    }
    if (e["name"] == "(0 2)") {
      b = std::to_string(e["index"].get<int>());
    }
  }
  REQUIRE_FALSE(a.empty());
  REQUIRE_FALSE(b.empty());
  auto gens = " --gens " + a + "," + b;
  auto kf   = run("subnormal sym:4" + gens + " --formation supersoluble --kind kf");
  CHECK(kf.code == 0);
  CHECK(kf.out == "8 --f-step--> 24\n");
  CHECK(run("subnormal sym:4" + gens + " --formation nilpotent --kind kf").out
        == "NEGATIVE\n");
  CHECK(run("subnormal sym:4" + gens + " --kind subnormal").out == "NEGATIVE\n");
  CHECK(run("subnormal sym:4 --gens 99 --kind subnormal").code == 3);
}

TEST_CASE("config errors exit 3") {
  CHECK(run("residual sym:3 --formation sigma-nilpotent").code == 3);
  CHECK(run("residual sym:3 --formation nilpotent --sigma '[[2,3]]'").code == 3);
  CHECK(run("residual sym:3 --formation abelian").code == 3);
  CHECK(run("residual sym:3").code == 3);
  CHECK(run("verify theorem-z").code == 3);
  CHECK(run("verify all --max-order 9999").code == 3);
  CHECK(run("verify theorem-b --sigma '[[2,3],[3]]' --formation sigma-nilpotent").code
        == 3);
  CHECK(run("group show nope:3").code == 3);
  CHECK(run("frobnicate").code == 3);
}

TEST_CASE("group files") {
  auto f = temp_file("formcheck_s3.grp", "# S3\nperm 3\n(0 1)\n(0 1 2)\n");
  auto r = run("group show " + f.string());
  CHECK(r.code == 0);
  CHECK(has(r, "order: 6\n"));
  auto via_input = run("group show --input " + f.string());
  CHECK(has(via_input, "order: 6\n"));

  auto bad = temp_file("formcheck_bad.grp", "perm 3\n(0 1)\n(0 9)\n");
  CHECK(run("group show " + bad.string()).code == 3);

  // dump, then re-ingest the dump
  auto dump = run("group dump dihedral:6");
  CHECK(dump.out.rfind("table 12\n", 0) == 0);
  auto back = temp_file("formcheck_d6.grp", dump.out);
  CHECK(has(run("group show " + back.string()), "order: 12\n"));
  CHECK(has(run("group show " + back.string()), "normal subgroups: 7"));
}

TEST_CASE("verify") {
  auto b = run("verify theorem-b --formation nilpotent --max-order 24");
  CHECK(b.code == 0);
  CHECK(has(b, "verdict: PASS"));
  auto j = nlohmann::json::parse(
      run("verify theorem-b --formation nilpotent --max-order 24 --format json").out);
  CHECK(j["reports"][0]["hypothesis_satisfied"].get<int>() > 0);

  auto all = run("verify all --max-order 1");
  CHECK(all.code == 0);
  CHECK(has(all, "overall: PASS (exit 0)"));

  auto s3 = run("verify section3 --sigma '[[2,3]]' --max-order 24");
  CHECK(s3.code == 0);
  CHECK(has(s3, "verdict: PASS"));

  // a user file joins the catalog
  auto f = temp_file("formcheck_q8.grp", run("group dump quaternion:8").out);
  auto u = nlohmann::json::parse(
      run("verify theorem-b --max-order 8 --format json --input " + f.string()).out);
  CHECK(u["reports"][0]["coverage"].get<std::string>().find("1 user file")
        != std::string::npos);

  // budget exhaustion alone gives exit 2
  CHECK(run("verify theorem-a --formation nilpotent --max-order 24 "
            "--lattice-budget 12")
            .code
        == 2);
}

TEST_CASE("timing is opt in") {
  auto plain = nlohmann::json::parse(
      run("verify schenkman --max-order 8 --format json").out);
  CHECK(plain["reports"][0]["elapsed_ms"].is_null());
  auto timed = nlohmann::json::parse(
      run("verify schenkman --max-order 8 --format json --timing").out);
  CHECK(timed["reports"][0]["elapsed_ms"].is_number());
}
