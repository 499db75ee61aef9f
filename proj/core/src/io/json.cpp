#include "toricgp/io/json.hpp"

#include <algorithm>
#include <limits>

#include "toricgp/errors.hpp"
#include "toricgp/lattice/text_format.hpp"

namespace toricgp::io {

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object())
    throw InvalidArgument(std::string("expected a JSON object with \"") + key +
                          "\"");
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json &j, const char *what) {
  if (!j.is_number_integer())
    throw InvalidArgument(std::string(what) + " must be an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidArgument(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Subset subset_from(const Json &j) {
  if (!j.is_array())
    throw InvalidArgument("a subset must be an array of integers");
  Subset s;
  for (const Json &e : j)
    s.push_back(as_int(e, "subset element"));
  return s;
}

std::vector<Subset> subsets_from(const Json &j, const char *what) {
  if (!j.is_array())
    throw InvalidArgument(std::string(what) + " must be an array");
  std::vector<Subset> out;
  for (const Json &e : j)
    out.push_back(subset_from(e));
  return out;
}

Json ints(const std::vector<int> &v) {
  Json a = Json::array();
  for (int x : v)
    a.push_back(x);
  return a;
}

template <class T> void put_optional(Json &j, const char *key, const std::optional<T> &v) {
  if (v)
    j[key] = *v;
  else
    j[key] = nullptr;
}

Json check_json(const SubCheck &c) {
  Json j;
  j["pass"] = c.pass;
  put_optional(j, "error", c.error);
  return j;
}

} // namespace

Json to_json(const SubsetFamily &f) {
  Json j;
  j["n"] = f.n;
  Json sets = Json::array();
  for (const Subset &s : f.sets)
    sets.push_back(ints(s));
  j["sets"] = std::move(sets);
  return j;
}

SubsetFamily family_from_json(const Json &j) {
  SubsetFamily f;
  f.n = as_int(field(j, "n"), "n");
  f.sets = subsets_from(field(j, "sets"), "sets");
  for (const Subset &s : f.sets)
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidArgument("subsets must be strictly increasing lists");
  f.validate();
  return f;
}

Json to_json(const BuildingSet &b) {
  Json j;
  j["n"] = b.n;
  Json blocks = Json::array();
  for (const Subset &s : b.blocks)
    blocks.push_back(ints(s));
  j["blocks"] = std::move(blocks);
  return j;
}

BuildingSet building_set_from_json(const Json &j) {
  BuildingSet b;
  b.n = as_int(field(j, "n"), "n");
  for (Subset &s : subsets_from(field(j, "blocks"), "blocks")) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() ||
        s.front() < 1 || s.back() > b.n)
      throw InvalidArgument("building set blocks must be nonempty subsets of [n]");
    b.blocks.insert(std::move(s));
  }
  return b;
}

Json to_json(const YParameters &y) {
  Json j;
  j["n"] = y.n;
  Json vals = Json::object();
  for (const auto &[s, v] : y.y)
    vals[subset_key(s)] = v;
  j["y"] = std::move(vals);
  return j;
}

YParameters y_from_json(const Json &j) {
  YParameters y;
  y.n = as_int(field(j, "n"), "n");
  const Json &vals = field(j, "y");
  if (!vals.is_object())
    throw InvalidArgument("\"y\" must map subset keys like \"1,2\" to integers");
  for (auto it = vals.begin(); it != vals.end(); ++it) {
    if (!it.value().is_number_integer())
      throw InvalidArgument("y values must be integers");
    Subset s = parse_subset_key(it.key());
    if (!y.y.emplace(std::move(s), it.value().get<std::int64_t>()).second)
      throw InvalidArgument("duplicate y key " + it.key());
  }
  y.validate();
  return y;
}

Json to_json(const SimpleGraph &g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto [u, v] : g.edges)
    edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

SimpleGraph graph_from_json(const Json &j) {
  SimpleGraph g;
  g.n = as_int(field(j, "n"), "n");
  const Json &edges = field(j, "edges");
  if (!edges.is_array())
    throw InvalidArgument("\"edges\" must be an array of pairs");
  for (const Json &e : edges) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidArgument("an edge must be a pair [u, v]");
    g.edges.emplace_back(as_int(e[0], "vertex"), as_int(e[1], "vertex"));
  }
  g.validate();
  return g;
}

Json to_json(const IntVector &v) {
  Json a = Json::array();
  for (Exponent e : v.vec())
    a.push_back(e);
  return a;
}

Json points_to_json(int dim, const std::vector<IntVector> &points) {
  Json j;
  j["dim"] = dim;
  j["count"] = points.size();
  Json a = Json::array();
  for (const IntVector &p : points)
    a.push_back(to_json(p));
  j["points"] = std::move(a);
  return j;
}

Json to_json(const LatticePointSet &s) {
  Json j = points_to_json(s.dim, s.points);
  if (!s.provenance.empty()) {
    Json prov = Json::array();
    for (const auto &t : s.provenance)
      prov.push_back(ints(t));
    j["provenance"] = std::move(prov);
  }
  return j;
}

Json to_json(const MonomialOrder &order) {
  Json j;
  switch (order.kind()) {
  case OrderKind::Lex:
    j["kind"] = "lex";
    break;
  case OrderKind::GrevLex:
    j["kind"] = "grevlex";
    break;
  case OrderKind::Weighted:
    j["kind"] = "weighted";
    j["rows"] = order.rows();
    j["tiebreak"] = order.tiebreak() == Tiebreak::Lex ? "lex" : "grevlex";
    break;
  case OrderKind::BlockElimination:
    j["kind"] = "block_elimination";
    j["block"] = order.block();
    j["tail"] = to_json(order.tail());
    break;
  case OrderKind::Marked:
    j["kind"] = "marked";
    break;
  }
  return j;
}

Json to_json(const GroebnerBasis &g) {
  const VariableIndex vars =
      g.variables ? *g.variables : VariableIndex::numbered("x", g.nvars);
  Json j;
  Json names = Json::array();
  for (std::size_t i = 0; i < vars.size(); ++i)
    names.push_back(vars.name(i));
  j["variables"] = std::move(names);
  j["order"] = to_json(g.order);
  Json elements = Json::array();
  for (const GbElement &e : g.elements) {
    Json el;
    el["lead"] = format_monomial(e.lead, vars);
    el["tail"] = format_polynomial(e.tail(), vars, g.order);
    elements.push_back(std::move(el));
  }
  j["elements"] = std::move(elements);
  j["reduced"] = g.reduced;
  return j;
}

Json degrees_to_json(const std::map<std::int64_t, std::size_t> &degrees) {
  Json j = Json::object();
  for (const auto &[d, c] : degrees)
    j[std::to_string(d)] = c;
  return j;
}

Json to_json(const IdpReport &r) {
  Json j;
  j["k_max"] = r.k_max;
  j["pass"] = r.pass;
  Json steps = Json::array();
  for (const IdpStep &s : r.steps)
    steps.push_back({{"k", s.k},
                     {"sumset_points", s.sumset_points},
                     {"dilate_points", s.dilate_points},
                     {"pass", s.pass}});
  j["steps"] = std::move(steps);
  put_optional(j, "failing_k", r.failing_k);
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json();
  return j;
}

Json to_json(const ShibutaReport &r) {
  Json j;
  j["segre_size"] = r.segre_size;
  j["segre_squarefree"] = r.segre_squarefree;
  j["cycle_size"] = r.cycle_size;
  j["cycle_squarefree"] = r.cycle_squarefree;
  Json cycles = Json::array();
  for (const CycleLifts &c : r.cycles)
    cycles.push_back({{"multidegree", to_json(c.multidegree)},
                      {"gamma_size", c.gamma_size},
                      {"lifts", c.lifts}});
  j["cycles"] = std::move(cycles);
  j["lift_count"] = r.lift_count;
  j["nonlinear_lifts"] = r.nonlinear_lifts;
  j["classes_match_fibers"] = r.classes_match_fibers;
  put_optional(j, "raw_confluent", r.raw_confluent);
  j["linear_size"] = r.linear_size;
  j["projected_size"] = r.projected_size;
  j["squarefree"] = r.squarefree;
  j["exchange_trace_lengths"] = r.exchange_trace_lengths;
  j["exchange_residuals_in_j"] = r.exchange_residuals_in_j;
  return j;
}

Json to_json(const UnimodularityReport &r) {
  Json j;
  j["points"] = r.points;
  j["dim"] = r.dim;
  j["simplices"] = r.simplices;
  j["pass"] = r.pass;
  put_optional(j, "witness", r.witness);
  j["witness_volume"] =
      r.witness_volume ? Json(r.witness_volume->get_str()) : Json();
  return j;
}

Json to_json(const Prop63Report &r) {
  return {{"pass", r.pass}, {"y_points", r.y_points}, {"z_points", r.z_points}};
}

Json to_json(const VerificationReport &r, const ReportFormat &format) {
  Json j;
  j["family"] = to_json(r.family);
  j["y"] = r.y ? to_json(*r.y) : Json();
  j["x_variables"] = r.x_variables;
  j["points"] = r.points;
  j["pass"] = r.pass();

  Json idp = check_json(r.idp);
  idp["report"] = to_json(r.idp.report);
  j["idp"] = std::move(idp);

  Json sq = check_json(r.squarefree);
  sq["order"] = r.squarefree.order;
  put_optional(sq, "offending_generator", r.squarefree.offending_generator);
  put_optional(sq, "grevlex_squarefree", r.squarefree.grevlex_squarefree);
  j["squarefree"] = std::move(sq);

  Json quad = check_json(r.quadratic);
  quad["degrees"] = degrees_to_json(r.quadratic.degrees);
  j["quadratic"] = std::move(quad);

  Json cross = check_json(r.cross_check);
  put_optional(cross, "projected_equal", r.cross_check.projected_equal);
  put_optional(cross, "full_equal", r.cross_check.full_equal);
  j["cross_check"] = std::move(cross);

  j["pipeline"] = r.pipeline ? to_json(*r.pipeline) : Json();
  if (format.basis)
    j["projected_basis"] = r.projected_basis ? to_json(*r.projected_basis) : Json();
  if (format.timings) {
    Json t = Json::object();
    for (const auto &[k, v] : r.timings)
      t[k] = v;
    j["timings"] = std::move(t);
  }
  return j;
}

Json parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace toricgp::io
