#pragma once

#include "toricgp/errors.hpp"
#include "toricgp/groebner/buchberger.hpp"
#include "toricgp/groebner/generator_degrees.hpp"
#include "toricgp/groebner/groebner_basis.hpp"
#include "toricgp/groebner/toric.hpp"
#include "toricgp/io/json.hpp"
#include "toricgp/lattice/int_vector.hpp"
#include "toricgp/lattice/linear_algebra.hpp"
#include "toricgp/lattice/monomial_order.hpp"
#include "toricgp/lattice/polynomial.hpp"
#include "toricgp/lattice/rational.hpp"
#include "toricgp/lattice/text_format.hpp"
#include "toricgp/lattice/variable_index.hpp"
#include "toricgp/nested/even_cycles.hpp"
#include "toricgp/nested/exchange.hpp"
#include "toricgp/nested/gamma.hpp"
#include "toricgp/nested/nested_configuration.hpp"
#include "toricgp/nested/segre.hpp"
#include "toricgp/nested/shibuta.hpp"
#include "toricgp/polytopes/lattice_points.hpp"
#include "toricgp/polytopes/subset_family.hpp"
#include "toricgp/verify/idp.hpp"
#include "toricgp/verify/prop63.hpp"
#include "toricgp/verify/sampling.hpp"
#include "toricgp/verify/theorem.hpp"
#include "toricgp/verify/triangulation.hpp"
