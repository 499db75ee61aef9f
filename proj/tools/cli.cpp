#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#ifdef TORICGP_CLI11_SINGLE_HEADER
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif

#include "toricgp/toricgp.hpp"

namespace toricgp::cli {

namespace {

using io::Json;

struct Guards {
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::size_t max_basis = BuchbergerOptions{}.max_basis;
  std::int64_t max_degree = BuchbergerOptions{}.max_degree;
  std::uint64_t idp_cap = kDefaultIdpCap;
};

struct InputSpec {
  std::string family, y, building_set, graph, named;
  int n = 0;
};

struct Options {
  Guards guards;
  InputSpec input;
  std::string format = "json";
  int dilate = 1;
  bool multiset = false;
  std::string method = "elimination";
  std::string ring = "points";
  std::string order = "grevlex";
  std::string check = "all";
  int k_max = 3;
  std::size_t batch = 0;
  std::uint64_t seed = 1;
  int sample_n = 4;
  int sample_max_m = 4;
  std::uint64_t sample_max_product = 200;
  bool with_basis = false;
  bool timings = false;
  std::string report_input;
};

// Guard defaults may come from the environment.
template <class T> void env_default(const char *name, T &value) {
  const char *text = std::getenv(name);
  if (!text)
    return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != std::string(text).size() || v == 0)
      throw std::invalid_argument(name);
    value = static_cast<T>(v);
  } catch (const std::exception &) {
    throw InvalidArgument(std::string(name) + " must be a positive integer");
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "@path" reads the JSON from a file.
Json inline_or_file(const std::string &value) {
  if (!value.empty() && value.front() == '@')
    return io::parse(read_file(value.substr(1)));
  return io::parse(value);
}

YParameters counts(const SubsetFamily &f) {
  YParameters y{f.n, {}};
  for (const Subset &s : f.sets)
    ++y.y[s];
  return y;
}

struct Instance {
  SubsetFamily family;
  std::optional<YParameters> y;
  std::optional<BuildingSet> building;
  Json source;
};

BuildingSet checked(BuildingSet b) {
  const BuildingSetCheck c = building_set_check(b);
  if (c.ok)
    return b;
  if (c.witness.missing_singleton)
    throw InvalidArgument("not a building set: singleton {" +
                          std::to_string(*c.witness.missing_singleton) +
                          "} missing");
  throw InvalidArgument("not a building set: union of {" +
                        subset_key(c.witness.pair->first) + "} and {" +
                        subset_key(c.witness.pair->second) + "} missing");
}

Instance resolve(const InputSpec &in) {
  const int given = !in.family.empty() + !in.y.empty() +
                    !in.building_set.empty() + !in.graph.empty() +
                    !in.named.empty();
  if (given != 1)
    throw InvalidArgument(
        "give exactly one of --family, --y, --building-set, --graph, --named");
  Instance r;
  if (!in.named.empty()) {
    if (in.n < 1)
      throw InvalidArgument("--named needs --n >= 1");
    r.family = named_family(in.named, in.n);
    r.source = {{"named", to_string(parse_named_family(in.named))}, {"n", in.n}};
  } else if (!in.family.empty()) {
    r.family = io::family_from_json(inline_or_file(in.family));
    r.source = {{"family", io::to_json(r.family)}};
  } else if (!in.y.empty()) {
    r.y = io::y_from_json(inline_or_file(in.y));
    r.family = family_from_y(*r.y);
    r.source = {{"y", io::to_json(*r.y)}};
  } else if (!in.building_set.empty()) {
    r.building = checked(io::building_set_from_json(inline_or_file(in.building_set)));
    r.family = family_from_building_set(*r.building);
    r.source = {{"building_set", io::to_json(*r.building)}};
  } else {
    const SimpleGraph g = io::graph_from_json(inline_or_file(in.graph));
    r.building = graphical_building_set(g);
    r.family = family_from_building_set(*r.building);
    r.source = {{"graph", io::to_json(g)}};
  }
  return r;
}

Json guards_json(const Guards &g) {
  return {{"enum_cap", g.enum_cap},
          {"max_basis", g.max_basis},
          {"max_degree", g.max_degree},
          {"idp_cap", g.idp_cap}};
}

BuchbergerOptions engine_options(const Guards &g) {
  BuchbergerOptions b;
  b.max_basis = g.max_basis;
  b.max_degree = g.max_degree;
  return b;
}

MonomialOrder parse_order(const std::string &name) {
  if (name == "grevlex")
    return MonomialOrder::grevlex();
  if (name == "lex")
    return MonomialOrder::lex();
  throw InvalidArgument("unknown order '" + name + "'");
}

// Exit status of a document with a "checks" object.
struct Outcome {
  bool failed = false;
  bool budget = false;
  void add(const Json &check) {
    if (!check.at("error").is_null())
      budget = true;
    else if (!check.at("pass").get<bool>())
      failed = true;
  }
  int status() const {
    return failed ? kVerificationFailed : budget ? kBudgetExceeded : kOk;
  }
};

template <class Body> Json guarded_check(Body &&body) {
  try {
    return body();
  } catch (const BudgetExceeded &e) {
    return {{"pass", false}, {"error", e.what()}};
  }
}

Json idp_json(const SubsetFamily &f, const Options &o) {
  return guarded_check([&]() -> Json {
    const IdpReport r = idp_check(f, o.k_max, o.guards.idp_cap);
    return {{"pass", r.pass}, {"error", nullptr}, {"report", io::to_json(r)}};
  });
}

Json prop63_json(const YParameters &y) {
  return guarded_check([&]() -> Json {
    const Prop63Report r = cross_check_prop63(y);
    Json j = io::to_json(r);
    j["error"] = nullptr;
    return j;
  });
}

// The pipeline with its projection; squarefree and quadratic share it.
Json pipeline_checks(const SubsetFamily &f, const Options &o, bool squarefree,
                     bool quadratic) {
  Json checks = Json::object();
  try {
    const SegreIndex idx(f, o.guards.enum_cap);
    ShibutaOptions so;
    so.buchberger = engine_options(o.guards);
    const ShibutaResult s = shibuta_gb(idx, so);
    const ProjectedBasis p = project_out_j(s.basis, idx);
    if (squarefree) {
      Json j;
      j["pass"] = p.squarefree && s.report.squarefree;
      j["error"] = nullptr;
      j["order"] = s.basis.order.describe();
      j["projected_size"] = p.basis.size();
      j["offending_generator"] = nullptr;
      for (const Monomial &g : p.initial.generators)
        if (!g.is_squarefree()) {
          j["offending_generator"] = format_monomial(g, *p.basis.variables);
          break;
        }
      checks["squarefree"] = std::move(j);
    }
    if (quadratic) {
      checks["quadratic"] = guarded_check([&]() -> Json {
        const auto degrees = minimal_generator_degrees(p.basis);
        const bool pass = degrees.empty() || degrees.rbegin()->first <= 2;
        return {{"pass", pass},
                {"error", nullptr},
                {"degrees", io::degrees_to_json(degrees)}};
      });
    }
  } catch (const BudgetExceeded &e) {
    const Json failed = {{"pass", false}, {"error", e.what()}};
    if (squarefree)
      checks["squarefree"] = failed;
    if (quadratic)
      checks["quadratic"] = failed;
  }
  return checks;
}

// One instance of `verify`: {"family", ..., "checks", "pass"}.
Json verify_instance(const Instance &inst, const Options &o, Outcome &outcome) {
  const SubsetFamily &f = inst.family;
  Json doc;
  doc["family"] = io::to_json(f);
  Json checks = Json::object();
  if (o.check == "all") {
    TheoremOptions t;
    t.k_max = o.k_max;
    t.idp_cap = o.guards.idp_cap;
    t.max_x_variables = o.guards.enum_cap;
    t.shibuta.buchberger = engine_options(o.guards);
    const VerificationReport r = verify_theorem_main(f, t);
    Json full = io::to_json(r, {o.timings, o.with_basis});
    doc["x_variables"] = full["x_variables"];
    doc["points"] = full["points"];
    for (const char *k : {"idp", "squarefree", "quadratic", "cross_check"})
      checks[k] = full[k];
    checks["prop63"] = prop63_json(inst.y ? *inst.y : counts(f));
    doc["checks"] = std::move(checks);
    doc["pipeline"] = full["pipeline"];
    if (o.with_basis)
      doc["projected_basis"] = full["projected_basis"];
    if (o.timings)
      doc["timings"] = full["timings"];
  } else {
    if (o.check == "idp")
      checks["idp"] = idp_json(f, o);
    else if (o.check == "prop63")
      checks["prop63"] = prop63_json(inst.y ? *inst.y : counts(f));
    else
      checks = pipeline_checks(f, o, o.check == "squarefree",
                               o.check == "quadratic");
    doc["checks"] = std::move(checks);
  }
  bool pass = true;
  for (const auto &[name, c] : doc["checks"].items()) {
    outcome.add(c);
    pass = pass && c["pass"].get<bool>();
  }
  doc["pass"] = pass;
  return doc;
}

// Command bodies return the exit status and fill `doc` (or stream lines).

int cmd_construct(const Options &o, const Json &config, Json &doc) {
  const Instance inst = resolve(o.input);
  doc["command"] = "construct";
  doc["config"] = config;
  doc["family"] = io::to_json(inst.family);
  doc["y"] = io::to_json(inst.y ? *inst.y : counts(inst.family));
  doc["building_set"] = inst.building ? io::to_json(*inst.building) : Json();
  doc["m"] = inst.family.m();
  doc["product_size"] = inst.family.product_size();
  return kOk;
}

int cmd_points(const Options &o, const Json &config, Json &doc) {
  const Instance inst = resolve(o.input);
  if (o.dilate < 1)
    throw InvalidArgument("--dilate must be at least 1");
  const SubsetFamily g = dilate_family(inst.family, o.dilate);
  doc["command"] = "points";
  doc["config"] = config;
  doc["family"] = io::to_json(inst.family);
  doc["dilate"] = o.dilate;
  doc["multiset"] = o.multiset;
  if (o.multiset)
    doc["points"] = io::to_json(minkowski_lattice_points(g, o.guards.enum_cap));
  else
    doc["points"] = io::points_to_json(g.n, distinct_minkowski_points(g));
  return kOk;
}

int cmd_gb(const Options &o, const Json &config, Json &doc) {
  const Instance inst = resolve(o.input);
  const SubsetFamily &f = inst.family;
  const BuchbergerOptions engine = engine_options(o.guards);
  const bool elim = o.method != "shibuta";
  const bool shib = o.method != "elimination";
  std::optional<GroebnerBasis> e, s;
  Json shibuta_report;

  if (o.ring == "points") {
    const PointRing ring = point_ring(f);
    if (elim) {
      e = toric_ideal_elimination(ring.points, parse_order(o.order), engine);
      e->variables = std::make_shared<VariableIndex>("x", ring.representatives);
    }
    if (shib) {
      const SegreIndex idx(f, o.guards.enum_cap);
      const ShibutaResult r = shibuta_gb(idx, ShibutaOptions{engine});
      s = project_out_j(r.basis, idx).basis;
      shibuta_report = io::to_json(r.report);
    }
  } else {
    const SegreIndex idx(f, o.guards.enum_cap);
    if (elim) {
      e = toric_ideal_elimination(minkowski_lattice_points(f, o.guards.enum_cap).points,
                                  parse_order(o.order), engine);
      e->variables = idx.x_variables();
    }
    if (shib) {
      const ShibutaResult r = shibuta_gb(idx, ShibutaOptions{engine});
      s = r.basis;
      shibuta_report = io::to_json(r.report);
    }
  }

  doc["command"] = "gb";
  doc["config"] = config;
  doc["family"] = io::to_json(f);
  doc["ring"] = o.ring;
  if (e)
    doc["elimination"] = io::to_json(*e);
  if (s)
    doc["shibuta"] = {{"basis", io::to_json(*s)}, {"report", shibuta_report}};
  if (e && s) {
    const bool equal = ideal_equal(*e, *s);
    doc["ideal_equal"] = equal;
    return equal ? kOk : kVerificationFailed;
  }
  return kOk;
}

void emit(const Json &doc, const Options &o, std::ostream &out, bool line) {
  if (o.format == "text")
    out << render_text(doc);
  else if (line)
    out << doc.dump() << "\n";
  else
    out << io::dump(doc);
}

int cmd_verify(const Options &o, const Json &config, std::ostream &out) {
  Outcome outcome;
  if (o.batch == 0) {
    Json doc;
    doc["command"] = "verify";
    doc["config"] = config;
    const Json body = verify_instance(resolve(o.input), o, outcome);
    for (const auto &[k, v] : body.items())
      doc[k] = v;
    emit(doc, o, out, false);
    return outcome.status();
  }
  // JSON lines: a header, one line per instance, a summary.
  emit({{"command", "verify"}, {"config", config}}, o, out, true);
  SamplingOptions so;
  so.n = o.sample_n;
  so.max_m = o.sample_max_m;
  so.max_product = o.sample_max_product;
  std::size_t passed = 0, failed = 0, budget = 0;
  const auto families = sample_families(o.seed, o.batch, so);
  for (std::size_t i = 0; i < families.size(); ++i) {
    Outcome one;
    Instance inst{families[i], std::nullopt, std::nullopt, {}};
    Json doc;
    doc["command"] = "verify";
    doc["index"] = i;
    const Json body = verify_instance(inst, o, one);
    for (const auto &[k, v] : body.items())
      doc[k] = v;
    emit(doc, o, out, true);
    passed += one.status() == kOk;
    failed += one.failed;
    budget += !one.failed && one.budget;
    outcome.failed = outcome.failed || one.failed;
    outcome.budget = outcome.budget || one.budget;
  }
  emit({{"command", "verify"},
        {"summary",
         {{"seed", o.seed},
          {"count", families.size()},
          {"passed", passed},
          {"failed", failed},
          {"budget_exceeded", budget}}}},
       o, out, true);
  return outcome.status();
}

int cmd_report(const Options &o, std::ostream &out) {
  const std::string text =
      o.report_input == "-"
          ? std::string(std::istreambuf_iterator<char>(std::cin), {})
          : read_file(o.report_input);
  try {
    out << render_text(Json::parse(text));
    return kOk;
  } catch (const nlohmann::json::parse_error &) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty())
      out << render_text(io::parse(line));
  return kOk;
}

void add_input(CLI::App *sub, InputSpec &in) {
  sub->add_option("--family", in.family, "family JSON, or @file")
      ->group("Input");
  sub->add_option("--y", in.y, "y-parameters JSON, or @file")->group("Input");
  sub->add_option("--building-set", in.building_set,
                  "building set JSON, or @file")
      ->group("Input");
  sub->add_option("--graph", in.graph,
                  "graph JSON, or @file; uses its graphical building set")
      ->group("Input");
  sub->add_option("--named", in.named,
                  "permutohedron | associahedron | cyclohedron | pitman_stanley")
      ->group("Input");
  sub->add_option("--n", in.n, "ground set size for --named")->group("Input");
}

void add_guards(CLI::App *sub, Guards &g) {
  sub->add_option("--cap", g.enum_cap,
                  "largest tuple enumeration (env TORICGP_ENUM_CAP)")
      ->group("Guards");
  sub->add_option("--max-basis", g.max_basis,
                  "largest Groebner basis (env TORICGP_MAX_BASIS)")
      ->group("Guards");
  sub->add_option("--max-degree", g.max_degree,
                  "largest S-pair degree (env TORICGP_MAX_DEGREE)")
      ->group("Guards");
  sub->add_option("--idp-cap", g.idp_cap,
                  "largest point set in the IDP check (env TORICGP_IDP_CAP)")
      ->group("Guards");
}

void add_format(CLI::App *sub, std::string &format) {
  sub->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options o;
  try {
    env_default("TORICGP_ENUM_CAP", o.guards.enum_cap);
    env_default("TORICGP_MAX_BASIS", o.guards.max_basis);
    env_default("TORICGP_MAX_DEGREE", o.guards.max_degree);
    env_default("TORICGP_IDP_CAP", o.guards.idp_cap);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  CLI::App app{"Toric ideals and Groebner bases of generalized permutohedra",
               "toricgp"};
  app.require_subcommand(1);

  CLI::App *construct = app.add_subcommand(
      "construct", "resolve named, graphical or y input to a subset family");
  CLI::App *points =
      app.add_subcommand("points", "lattice points of a (dilated) P_F");
  CLI::App *gb = app.add_subcommand("gb", "Groebner basis of the toric ideal");
  CLI::App *verify =
      app.add_subcommand("verify", "check IDP, squarefree, quadratic, prop63");
  CLI::App *report =
      app.add_subcommand("report", "render a stored JSON report as text");

  for (CLI::App *sub : {construct, points, gb, verify}) {
    add_input(sub, o.input);
    add_guards(sub, o.guards);
    add_format(sub, o.format);
  }
  points->add_option("--dilate", o.dilate, "points of k P_F");
  points->add_flag("--multiset", o.multiset,
                   "every tuple with its provenance, not distinct points");
  gb->add_option("--method", o.method, "elimination | shibuta | both")
      ->check(CLI::IsMember({"elimination", "shibuta", "both"}));
  gb->add_option("--ring", o.ring,
                 "points: I_{P_F} on distinct points; multiset: one variable "
                 "per tuple")
      ->check(CLI::IsMember({"points", "multiset"}));
  gb->add_option("--order", o.order, "elimination order: grevlex | lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  verify
      ->add_option("check", o.check,
                   "idp | squarefree | quadratic | prop63 | all")
      ->check(CLI::IsMember({"idp", "squarefree", "quadratic", "prop63", "all"}));
  verify->add_option("--k-max", o.k_max, "largest dilate in the IDP check")
      ->check(CLI::Range(2, 64));
  verify->add_option("--batch", o.batch,
                     "verify this many random families; JSON lines");
  verify->add_option("--seed", o.seed, "seed of the random families");
  verify->add_option("--sample-n", o.sample_n, "ground set of random families")
      ->check(CLI::Range(1, 8));
  verify->add_option("--sample-max-m", o.sample_max_m, "most summands")
      ->check(CLI::Range(1, 16));
  verify->add_option("--sample-max-product", o.sample_max_product,
                     "largest product of set sizes");
  verify->add_flag("--with-basis", o.with_basis, "include the projected basis");
  verify->add_flag("--timings", o.timings,
                   "include wall-clock timings (not deterministic)");
  report->add_option("input", o.report_input, "report file, or - for stdin")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (report->parsed())
      return cmd_report(o, out);

    CLI::App *sub = app.get_subcommands().front();
    Json config;
    config["command"] = sub->get_name();
    const bool batch = sub == verify && o.batch > 0;
    config["input"] = batch ? Json() : resolve(o.input).source;
    config["guards"] = guards_json(o.guards);
    config["format"] = o.format;
    if (sub == points) {
      config["dilate"] = o.dilate;
      config["multiset"] = o.multiset;
    } else if (sub == gb) {
      config["method"] = o.method;
      config["ring"] = o.ring;
      config["order"] = o.order;
    } else if (sub == verify) {
      config["check"] = o.check;
      config["k_max"] = o.k_max;
      if (o.batch) {
        config["batch"] = o.batch;
        config["seed"] = o.seed;
        config["sampling"] = {{"n", o.sample_n},
                              {"max_m", o.sample_max_m},
                              {"max_product", o.sample_max_product}};
      }
    }

    if (sub == verify)
      return cmd_verify(o, config, out);
    Json doc;
    int status = kOk;
    if (sub == construct)
      status = cmd_construct(o, config, doc);
    else if (sub == points)
      status = cmd_points(o, config, doc);
    else
      status = cmd_gb(o, config, doc);
    emit(doc, o, out, false);
    return status;
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const OverflowError &e) {
    err << "overflow: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionMismatch &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

} // namespace toricgp::cli
