#include <sstream>

#include "cli.hpp"

namespace toricgp::cli {

namespace {

using io::Json;

std::string family_line(const Json &f) {
  std::ostringstream s;
  s << "n=" << f.at("n").get<int>() << " sets";
  for (const Json &set : f.at("sets")) {
    s << " {";
    bool first = true;
    for (const Json &j : set) {
      s << (first ? "" : ",") << j.get<int>();
      first = false;
    }
    s << "}";
  }
  return s.str();
}

std::string vec(const Json &v) {
  std::ostringstream s;
  s << "(";
  bool first = true;
  for (const Json &x : v) {
    s << (first ? "" : ",") << x.get<long long>();
    first = false;
  }
  s << ")";
  return s.str();
}

const char *verdict(const Json &check) {
  if (!check.at("error").is_null())
    return "BUDGET";
  return check.at("pass").get<bool>() ? "PASS" : "FAIL";
}

void basis_lines(std::ostringstream &s, const char *name, const Json &gb) {
  s << name << ": " << gb.at("elements").size() << " elements, order "
    << gb.at("order").at("kind").get<std::string>()
    << (gb.at("reduced").get<bool>() ? ", reduced" : "") << "\n";
  for (const Json &e : gb.at("elements"))
    s << "  " << e.at("lead").get<std::string>() << " - "
      << e.at("tail").get<std::string>() << "\n";
}

void check_lines(std::ostringstream &s, const Json &checks) {
  for (const auto &[name, c] : checks.items()) {
    s << "  " << name << ": " << verdict(c);
    if (!c.at("error").is_null())
      s << " (" << c.at("error").get<std::string>() << ")";
    if (name == "quadratic" && c.contains("degrees")) {
      s << " degrees";
      for (const auto &[d, n] : c.at("degrees").items())
        s << " " << d << ":" << n.get<std::size_t>();
    }
    if (name == "squarefree" && c.contains("offending_generator") &&
        !c.at("offending_generator").is_null())
      s << " offending " << c.at("offending_generator").get<std::string>();
    if (name == "idp" && c.contains("report") &&
        !c.at("report").at("counterexample").is_null())
      s << " counterexample " << vec(c.at("report").at("counterexample"));
    s << "\n";
  }
}

} // namespace

std::string render_text(const Json &doc) {
  std::ostringstream s;
  const std::string command =
      doc.contains("command") ? doc.at("command").get<std::string>() : "";
  if (command == "construct") {
    s << "family " << family_line(doc.at("family")) << "\n";
    s << "m=" << doc.at("m").get<std::size_t>()
      << " product=" << doc.at("product_size").get<std::uint64_t>() << "\n";
  } else if (command == "points") {
    const Json &p = doc.at("points");
    s << p.at("count").get<std::size_t>()
      << (doc.at("multiset").get<bool>() ? " tuples" : " distinct points")
      << " of " << doc.at("dilate").get<int>() << "*P for "
      << family_line(doc.at("family")) << "\n";
    for (std::size_t i = 0; i < p.at("points").size(); ++i) {
      s << "  " << vec(p.at("points")[i]);
      if (p.contains("provenance"))
        s << " <- " << vec(p.at("provenance")[i]);
      s << "\n";
    }
  } else if (command == "gb") {
    s << "family " << family_line(doc.at("family")) << ", ring "
      << doc.at("ring").get<std::string>() << "\n";
    if (doc.contains("elimination"))
      basis_lines(s, "elimination", doc.at("elimination"));
    if (doc.contains("shibuta"))
      basis_lines(s, "shibuta", doc.at("shibuta").at("basis"));
    if (doc.contains("ideal_equal"))
      s << "ideal_equal: " << (doc.at("ideal_equal").get<bool>() ? "true" : "false")
        << "\n";
  } else if (command == "verify" && doc.contains("summary")) {
    const Json &m = doc.at("summary");
    s << "batch seed " << m.at("seed").get<std::uint64_t>() << ": "
      << m.at("count").get<std::size_t>() << " instances, "
      << m.at("passed").get<std::size_t>() << " pass, "
      << m.at("failed").get<std::size_t>() << " fail, "
      << m.at("budget_exceeded").get<std::size_t>() << " over budget\n";
  } else if (command == "verify" && doc.contains("checks")) {
    if (doc.contains("index"))
      s << "#" << doc.at("index").get<std::size_t>() << " ";
    s << family_line(doc.at("family")) << ": "
      << (doc.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    check_lines(s, doc.at("checks"));
  } else if (command == "verify") {
    s << "verify " << doc.at("config").at("check").get<std::string>()
      << " batch\n";
  } else {
    s << doc.dump(2) << "\n";
  }
  return s.str();
}

} // namespace toricgp::cli
