#include "toricgp/verify/theorem.hpp"

#include <chrono>

#include "toricgp/errors.hpp"
#include "toricgp/groebner/generator_degrees.hpp"
#include "toricgp/groebner/toric.hpp"
#include "toricgp/lattice/text_format.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

namespace toricgp {

bool VerificationReport::pass() const {
  return idp.pass && squarefree.pass && quadratic.pass && cross_check.pass;
}

bool VerificationReport::budget_exceeded() const {
  return idp.error || squarefree.error || quadratic.error || cross_check.error;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs body; a BudgetExceeded is recorded on the check instead of escaping.
template <class Check, class Body>
void guarded(Check &check, Body &&body) {
  try {
    body();
  } catch (const BudgetExceeded &e) {
    check.pass = false;
    check.error = e.what();
  }
}

} // namespace

VerificationReport verify_theorem_main(const SubsetFamily &f,
                                       const TheoremOptions &options) {
  f.validate();
  VerificationReport r;
  r.family = f;

  auto t0 = Clock::now();
  guarded(r.idp, [&] {
    r.idp.report = idp_check(f, options.k_max, options.idp_cap);
    r.idp.pass = r.idp.report.pass;
  });
  r.timings["idp"] = seconds_since(t0);

  r.squarefree.order = "composite";
  std::optional<SegreIndex> idx;
  std::optional<ShibutaResult> shibuta;
  t0 = Clock::now();
  guarded(r.squarefree, [&] {
    idx.emplace(f, options.max_x_variables);
    r.x_variables = idx->x_count();
    shibuta = shibuta_gb(*idx, options.shibuta);
    r.pipeline = shibuta->report;
    r.squarefree.order = shibuta->basis.order.describe();
    ProjectedBasis p = project_out_j(shibuta->basis, *idx);
    r.points = p.basis.nvars;
    r.squarefree.pass = p.squarefree && shibuta->report.squarefree;
    if (!p.squarefree)
      for (const Monomial &g : p.initial.generators)
        if (!g.is_squarefree()) {
          r.squarefree.offending_generator = format_monomial(g, *p.basis.variables);
          break;
        }
    r.projected_basis = std::move(p.basis);
  });
  r.timings["pipeline"] = seconds_since(t0);

  if (!r.projected_basis) {
    r.quadratic.pass = false;
    r.quadratic.error = r.squarefree.error;
    r.cross_check.pass = false;
    r.cross_check.error = r.squarefree.error;
    return r;
  }

  t0 = Clock::now();
  guarded(r.quadratic, [&] {
    r.quadratic.degrees = minimal_generator_degrees(*r.projected_basis);
    r.quadratic.pass =
        r.quadratic.degrees.empty() || r.quadratic.degrees.rbegin()->first <= 2;
  });
  r.timings["degrees"] = seconds_since(t0);

  t0 = Clock::now();
  const PointRing ring = point_ring(f);
  if (options.cross_check) {
    guarded(r.cross_check, [&] {
      const GroebnerBasis elim = toric_ideal_elimination(
          ring.points, r.projected_basis->order, options.shibuta.buchberger);
      r.cross_check.projected_equal = ideal_equal(*r.projected_basis, elim);
      if (idx->x_count() <= options.full_cross_check_limit) {
        const GroebnerBasis full = toric_ideal_elimination(
            minkowski_lattice_points(f).points, MonomialOrder::grevlex(),
            options.shibuta.buchberger);
        r.cross_check.full_equal = ideal_equal(shibuta->basis, full);
      }
      r.cross_check.pass = *r.cross_check.projected_equal &&
                           r.cross_check.full_equal.value_or(true);
    });
  } else {
    r.cross_check.pass = true;
  }
  r.timings["cross_check"] = seconds_since(t0);

  if (options.grevlex_probe) {
    t0 = Clock::now();
    try {
      r.squarefree.grevlex_squarefree = is_squarefree(initial_ideal(
          toric_ideal_elimination(ring.points, MonomialOrder::grevlex(),
                                  options.shibuta.buchberger)));
    } catch (const BudgetExceeded &) {
    }
    r.timings["grevlex_probe"] = seconds_since(t0);
  }
  return r;
}

VerificationReport verify_theorem_main(const YParameters &y,
                                       const TheoremOptions &options) {
  VerificationReport r = verify_theorem_main(family_from_y(y), options);
  r.y = y;
  return r;
}

} // namespace toricgp
