#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#ifdef TORICGP_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "toricgp/groebner/groebner_basis.hpp"
#include "toricgp/nested/shibuta.hpp"
#include "toricgp/polytopes/lattice_points.hpp"
#include "toricgp/polytopes/subset_family.hpp"
#include "toricgp/verify/idp.hpp"
#include "toricgp/verify/prop63.hpp"
#include "toricgp/verify/theorem.hpp"
#include "toricgp/verify/triangulation.hpp"

namespace toricgp::io {

// Keys keep insertion order, so equal values always dump to equal bytes.
// Schemas: docs/schemas/.
using Json = nlohmann::ordered_json;

// Readers throw InvalidArgument on a wrong shape and validate the result.
Json to_json(const SubsetFamily &f);
SubsetFamily family_from_json(const Json &j);
Json to_json(const BuildingSet &b);
BuildingSet building_set_from_json(const Json &j);
Json to_json(const YParameters &y);
YParameters y_from_json(const Json &j);
Json to_json(const SimpleGraph &g);
SimpleGraph graph_from_json(const Json &j);

Json to_json(const IntVector &v);
Json to_json(const LatticePointSet &s);
Json points_to_json(int dim, const std::vector<IntVector> &points);

Json to_json(const MonomialOrder &order);
Json to_json(const GroebnerBasis &g);
// {"2": 3}
Json degrees_to_json(const std::map<std::int64_t, std::size_t> &degrees);

Json to_json(const IdpReport &r);
Json to_json(const ShibutaReport &r);
Json to_json(const UnimodularityReport &r);
Json to_json(const Prop63Report &r);

struct ReportFormat {
  bool timings = false;
  bool basis = false;
};
Json to_json(const VerificationReport &r, const ReportFormat &format = {});

// Parses text, mapping syntax errors to InvalidArgument.
Json parse(const std::string &text);
// Two-space indent and a trailing newline.
std::string dump(const Json &j);

} // namespace toricgp::io
