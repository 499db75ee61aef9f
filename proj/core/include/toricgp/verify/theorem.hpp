#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricgp/nested/shibuta.hpp"
#include "toricgp/polytopes/subset_family.hpp"
#include "toricgp/verify/idp.hpp"

namespace toricgp {

struct TheoremOptions {
  int k_max = 3;
  std::uint64_t idp_cap = kDefaultIdpCap;
  // Largest Segre ring for the pipeline.
  std::uint64_t max_x_variables = 100'000;
  ShibutaOptions shibuta;
  bool cross_check = true;
  // Full ker psi against elimination on the multiset only up to this many
  // x-variables; the projected ideal is always compared.
  std::size_t full_cross_check_limit = 200;
  // Informational: is grevlex elimination on P_F also squarefree?
  bool grevlex_probe = true;
};

struct SubCheck {
  bool pass = false;
  // Set when the check could not finish (budget or guard).
  std::optional<std::string> error;
};

struct SquarefreeCheck : SubCheck {
  std::string order;
  std::optional<std::string> offending_generator;
  std::optional<bool> grevlex_squarefree;
};

struct QuadraticCheck : SubCheck {
  std::map<std::int64_t, std::size_t> degrees;
};

struct CrossCheck : SubCheck {
  std::optional<bool> projected_equal;
  std::optional<bool> full_equal; // nullopt when skipped
};

struct IdpCheck : SubCheck {
  IdpReport report;
};

struct VerificationReport {
  SubsetFamily family;
  std::optional<YParameters> y;
  std::size_t x_variables = 0;
  std::size_t points = 0;
  IdpCheck idp;
  SquarefreeCheck squarefree;
  QuadraticCheck quadratic;
  CrossCheck cross_check;
  std::optional<ShibutaReport> pipeline;
  std::optional<GroebnerBasis> projected_basis;
  // Wall-clock seconds per stage; not part of the deterministic output.
  std::map<std::string, double> timings;

  bool pass() const;
  bool budget_exceeded() const;
};

// (a) idp_check up to k_max; (b) shibuta_gb, project_out_j, squarefree
// initial ideal; (c) minimal generator degrees of the projected ideal at
// most 2; and the elimination cross-check. A budget error in one stage is
// recorded there and fails that stage only.
VerificationReport verify_theorem_main(const SubsetFamily &f,
                                       const TheoremOptions &options = {});
VerificationReport verify_theorem_main(const YParameters &y,
                                       const TheoremOptions &options = {});

} // namespace toricgp
