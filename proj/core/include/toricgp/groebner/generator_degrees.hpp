#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "toricgp/groebner/groebner_basis.hpp"

namespace toricgp {

// Degree -> number of minimal homogeneous generators of the ideal of the
// reduced Groebner basis g, for degrees 1..max_degree (default: the largest
// element degree). In each degree d this is dim I_d - dim (R_1 I_{d-1})_d,
// computed by exact rank; degrees with no new generators are omitted.
// Throws InvalidArgument for a non-homogeneous basis.
std::map<std::int64_t, std::size_t>
minimal_generator_degrees(const GroebnerBasis &g,
                          std::optional<std::int64_t> max_degree = std::nullopt);

} // namespace toricgp
