#pragma once

#include <string>

#include <gmpxx.h>

namespace toricgp {

using Rational = mpq_class;

std::string rational_to_string(const Rational &q);

} // namespace toricgp
