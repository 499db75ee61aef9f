#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricgp/groebner/buchberger.hpp"
#include "toricgp/groebner/groebner_basis.hpp"
#include "toricgp/nested/segre.hpp"

namespace toricgp {

struct ShibutaOptions {
  BuchbergerOptions buchberger;
  // Audit the raw assembly G_segre + lifts (under the composite order) for
  // confluence when it has at most this many elements.
  std::size_t raw_audit_limit = 400;
  // Run exchange_reduce on every lift.
  bool exchange_traces = true;
};

struct CycleLifts {
  Polynomial cycle;           // element of ker phi_B
  IntVector multidegree;
  std::size_t gamma_size = 0;
  std::size_t lifts = 0;      // distinct nonzero lifts kept
};

struct ShibutaReport {
  std::size_t segre_size = 0;
  std::size_t cycle_size = 0;
  bool segre_squarefree = false;
  bool cycle_squarefree = false;
  std::vector<CycleLifts> cycles;
  std::size_t lift_count = 0;
  std::size_t nonlinear_lifts = 0;
  // Classes of the linear lifts coincide with the psi-fibers.
  bool classes_match_fibers = false;
  // Raw assembly confluent under the composite order; nullopt when skipped.
  std::optional<bool> raw_confluent;
  std::size_t linear_size = 0;   // elements x_a - x_rep(a) of the final basis
  std::size_t projected_size = 0;
  bool squarefree = false;
  std::vector<std::size_t> exchange_trace_lengths;
  bool exchange_residuals_in_j = true;
};

struct ShibutaResult {
  // Reduced basis of ker psi under idx.composite_order(): the linear forms
  // x_a - x_rep(a) followed by the completion in the representatives.
  GroebnerBasis basis;
  // The raw assembly: G_segre and the lifts, in that order.
  std::vector<Polynomial> raw;
  // rep[x] = index of the representative of x.
  std::vector<std::size_t> rep;
  ShibutaReport report;
};

// Assembles G_segre with lift(y^a f) for f in even_cycle_gb(y_order) and
// y^a in Gamma(multidegree f), then completes it under the composite order.
// The linear lifts identify each x_a with the least variable of its class;
// the remaining generators, rewritten in the representatives, are completed
// by Buchberger.
ShibutaResult shibuta_gb(const SegreIndex &idx, const ShibutaOptions &options = {});

struct ProjectedBasis {
  // Basis of I_{P_F} in the variables of point_ring(F).
  GroebnerBasis basis;
  MonomialIdeal initial;
  bool squarefree = false;
  // representative tuple of each variable.
  std::vector<std::vector<int>> representatives;
};

// Substitutes every x-variable by the variable of its lexicographically
// least sort-equal tuple, drops the zero binomials, and renames the
// representatives to the variables of point_ring(F). Throws Error if a
// point has no representative among the tuples.
ProjectedBasis project_out_j(const GroebnerBasis &g, const SegreIndex &idx);

} // namespace toricgp
