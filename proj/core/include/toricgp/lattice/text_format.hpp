#pragma once

#include <string>
#include <string_view>

#include "toricgp/lattice/monomial_order.hpp"
#include "toricgp/lattice/polynomial.hpp"
#include "toricgp/lattice/variable_index.hpp"

namespace toricgp {

// Canonical text form, e.g. "x[1,2]*x[2,1] - x[1,1]*x[2,2]".
// Grammar and conventions: docs/text_format.md.

std::string format_monomial(const Monomial &m, const VariableIndex &vars);

// Terms are written in decreasing `order`; a marked order falls back to
// decreasing lexicographic exponent order.
std::string format_polynomial(const Polynomial &p, const VariableIndex &vars,
                              const MonomialOrder &order);

// Throws InvalidArgument on syntax errors or unknown variables.
Monomial parse_monomial(std::string_view text, const VariableIndex &vars);
Polynomial parse_polynomial(std::string_view text, const VariableIndex &vars);

} // namespace toricgp
