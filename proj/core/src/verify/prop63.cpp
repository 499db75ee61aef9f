#include "toricgp/verify/prop63.hpp"

#include <string>

#include "toricgp/errors.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

namespace toricgp {

Prop63Report cross_check_prop63(const YParameters &y, int max_n) {
  y.validate();
  if (y.n > max_n)
    throw BudgetExceeded("z-inequality enumeration limited to n <= " +
                         std::to_string(max_n));
  // family_from_y keeps the singleton blocks, so the translation by the
  // singleton part is already inside the Minkowski sum.
  const std::vector<IntVector> ys = distinct_minkowski_points(family_from_y(y));
  const std::vector<IntVector> zs = z_lattice_points(y_to_z(y));
  return {ys == zs, ys.size(), zs.size()};
}

} // namespace toricgp
