#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formcheck/catalog.hpp"
#include "formcheck/formation.hpp"
#include "formcheck/isomorphism.hpp"
#include "formcheck/lattice.hpp"
#include "formcheck/report.hpp"

namespace formcheck {

  struct VerifyOptions {
    std::size_t   lattice_budget = default_lattice_budget;
    std::uint64_t search_budget  = default_search_budget;
    std::size_t   order_cap      = default_order_cap;
    unsigned      threads        = 0;  // 0: one per hardware thread
    std::uint32_t seed           = 1;  // relabelling in the lemma sweep
  };

  // For every G with Z_F(G) = 1: C_G(G^F) <= G^F. Also checks
  // C_G(G^F) <= G^F Z_F(G) on every group, hypothesis or not.
  VerificationReport verify_theorem_b(Catalog const&       catalog,
                                      Formation const&     f,
                                      VerifyOptions const& opts = {});

  // For every K-F-subnormal S with Z_F(E) = 1 for all E >= S:
  // C_G(S^F) <= S^F.
  VerificationReport verify_theorem_a(Catalog const&       catalog,
                                      Formation const&     f,
                                      VerifyOptions const& opts = {});

  // Subnormal S with C_G(S) = 1: C_G(S^N) <= S^N, and Z_N(E) = 1 for every
  // E >= S.
  VerificationReport verify_schenkman_classic(Catalog const&       catalog,
                                              VerifyOptions const& opts = {});

  // For G with G^F meet Z_F(G) = 1: |G / Z_F(G)| <= |G^F| |Aut(G^F)|.
  VerificationReport verify_holomorph_bound(Catalog const&       catalog,
                                            Formation const&     f,
                                            VerifyOptions const& opts = {});

  // The theorem A sweep for U (K-U-subnormal and U-subnormal S, hypothesis
  // on the cyclic hypercentre) and for N_sigma (sigma-subnormal and
  // N_sigma-subnormal S, hypothesis on the sigma-hypercentre), plus the
  // instance-by-instance agreement of sigma-subnormal and
  // K-N_sigma-subnormal.
  VerificationReport verify_section3_corollaries(Catalog const&        catalog,
                                                 SigmaPartition const& sigma,
                                                 VerifyOptions const&  opts = {});

  // Formation axioms, centrality and hypercentre properties, supplements,
  // and the subnormality implications, swept over the catalog.
  VerificationReport verify_lemma_suite(Catalog const&       catalog,
                                        Formation const&     f,
                                        VerifyOptions const& opts = {});

  inline constexpr std::string_view claim_names[] = {
      "theorem-a", "theorem-b", "schenkman", "holomorph-bound",
      "section3",  "lemmas",    "all"};

  struct RunConfig {
    std::optional<Formation>      formation;  // all built-ins when empty
    std::optional<SigmaPartition> sigma;
    bool                          timing = false;
    VerifyOptions                 opts;
  };

  // Runs a named claim. With "all", a failed lemma sweep for a formation
  // turns that formation's theorem runs into skips.
  std::vector<VerificationReport> run_claim(std::string_view claim,
                                            Catalog const&   catalog,
                                            RunConfig const& config);

}  // namespace formcheck
