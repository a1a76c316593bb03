#pragma once

// Command-line front end. Exit codes: 0 success, 1 malformed or invalid
// input, 2 engine did not stabilize, 3 certificate or relation failure,
// 4 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brauer/report.hpp"

namespace brauer {

enum ExitCode { kOk = 0, kInvalid = 1, kNotStabilized = 2, kCertificate = 3, kUsage = 4 };

struct CliArgs {
  std::string command;
  std::string file;
  int n = 0;
  int omega = 0;
  int cap = -1;
  int margin = -1;
  std::string field = "Q";
  std::string at;
  bool json = false;
  bool certify = false;
  bool compare_socle = false;
};

namespace cli {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& m) : Error("UsageError", m) {}
};

inline BrauerGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

inline Json graph_summary_json(const BrauerGraph& g) {
  Json trees = Json::object();
  for (const auto& c : g.cycle_edges()) trees[c] = g.tree(c);
  return Json{{"valid", true},
              {"edges", g.edge_count()},
              {"treeEdges", g.tree_edge_count()},
              {"loopEdge", g.loop_edge()},
              {"center", g.center_id()},
              {"cycleEdges", g.cycle_edges()},
              {"trees", trees},
              {"graph", graph_to_json(g)}};
}

inline Json quiver_json(const BrauerQuiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"name", a.name},
                      {"source", q.labels[a.source]},
                      {"target", q.labels[a.target]},
                      {"camp", camp_name(a.camp)}});
  Json cycles = Json::array();
  for (const auto& c : q.cycles) {
    std::vector<std::string> names;
    for (int a : c.arrows) names.push_back(q.arrows[a].name);
    cycles.push_back({{"graphVertex", c.graph_vertex},
                      {"camp", camp_name(c.camp)},
                      {"exceptional", c.exceptional},
                      {"arrows", names}});
  }
  return Json{{"vertices", q.labels}, {"arrows", arrows}, {"cycles", cycles}};
}

inline std::vector<std::string> relation_strings(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relations) out.push_back(relation_to_string(p.quiver, r));
  return out;
}

template <class K>
Json algebra_json(const QuotientAlgebra<K>& a) {
  Json blocks = Json::array();
  const auto& q = a.quiver();
  for (int i = 0; i < a.vertex_count(); ++i)
    for (int j = 0; j < a.vertex_count(); ++j) {
      if (a.block(i, j).empty()) continue;
      std::vector<std::string> paths;
      for (int b : a.block(i, j)) paths.push_back(path_to_string(q, a.basis_path(b)));
      blocks.push_back({{"source", q.labels[i]}, {"target", q.labels[j]}, {"paths", paths}});
    }
  return Json{{"presentation", a.presentation().name},
              {"field", field_name<K>()},
              {"cap", a.cap()},
              {"margin", a.margin()},
              {"dim", a.dim()},
              {"relations", relation_strings(a.presentation())},
              {"basis", blocks},
              {"cartan", cartan_json(cartan(a))}};
}

template <class K>
std::string algebra_text(const QuotientAlgebra<K>& a) {
  std::ostringstream os;
  os << a.presentation().name << " over " << field_name<K>() << "\n";
  os << "relations:\n";
  for (const auto& r : relation_strings(a.presentation())) os << "  " << r << "\n";
  os << "dim " << a.dim() << " (cap " << a.cap() << ", margin " << a.margin() << ")\n";
  os << "basis:\n" << a.basis_dump();
  os << "cartan:\n" << cartan_text(cartan(a));
  return os.str();
}

template <class K>
Json tilting_json(const TiltingComplex<K>& t, const TiltCertificate* cert) {
  Json summands = Json::object();
  for (const auto& z : t.order) summands[z] = complex_summary(t.summands.at(z));
  Json out{{"kind", t.kind == TiltKind::shrink ? "shrink" : "enlarge"},
           {"order", t.order},
           {"summands", summands},
           {"endCartan", cartan_json(end_cartan(t))}};
  if (t.enlarge) {
    out["at"] = t.enlarge->at;
    out["succ"] = t.enlarge->succ;
    out["betaFan"] = t.enlarge->beta_fan;
    out["after"] = graph_to_json(*t.target_graph);
  }
  if (cert) out["certificate"] = certificate_json(*cert);
  return out;
}

template <class K>
std::string tilting_text(const TiltingComplex<K>& t, const TiltCertificate* cert) {
  std::ostringstream os;
  if (t.enlarge)
    os << "enlarge at " << t.enlarge->at << ", moving " << t.enlarge->succ << " onto the cycle\n"
       << "after: " << serialize_graph(*t.target_graph) << "\n";
  for (const auto& z : t.order) {
    os << "Q(" << z << "):\n";
    std::istringstream lines(complex_to_string(t.summands.at(z)));
    for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
  }
  os << "End order:";
  for (const auto& z : t.order) os << " " << z;
  os << "\nEnd cartan:\n" << cartan_text(end_cartan(t));
  if (cert) os << "certificate:\n" << certificate_text(*cert);
  return os.str();
}

template <class K>
void star_report(const CliArgs& args, bool omega, std::ostream& out) {
  if (args.n < 1) throw DomainError("n must be at least 1");
  EngineOptions opt{args.cap, args.margin, true};
  const Presentation p = omega ? omega_n_presentation(args.n) : a_n_presentation(args.n);
  auto a = QuotientAlgebra<K>::build(p, opt);
  std::optional<bool> socle_equal;
  if (args.compare_socle) {
    auto om = QuotientAlgebra<K>::build(omega_n_presentation(args.n), opt);
    auto an = QuotientAlgebra<K>::build(a_n_presentation(args.n), opt);
    socle_equal = presentations_equal_on_basis(socle_quotient(om), socle_quotient(an));
  }
  if (args.json) {
    Json j = algebra_json(a);
    if (socle_equal) j["socleQuotientsEqual"] = *socle_equal;
    out << with_schema(j).dump(2) << "\n";
  } else {
    out << algebra_text(a);
    if (socle_equal) out << "socle quotients equal: " << (*socle_equal ? "true" : "false") << "\n";
  }
}

template <class K>
void run_command(const CliArgs& args, std::ostream& out) {
  const EngineOptions opt{args.cap, args.margin, true};
  const std::string& cmd = args.command;
  auto emit = [&](const Json& j, const std::string& text) {
    if (args.json)
      out << with_schema(j).dump(2) << "\n";
    else
      out << text;
  };

  if (cmd == "omega" || cmd == "an") return star_report<K>(args, cmd == "omega", out);

  if (cmd == "cartan" && args.omega != 0) {
    if (args.omega < 1) throw DomainError("n must be at least 1");
    auto c = cartan(QuotientAlgebra<K>::build(omega_n_presentation(args.omega), opt));
    return emit(cartan_json(c), cartan_text(c));
  }
  if (args.file.empty()) throw UsageError(cmd + " needs a graph file");
  const BrauerGraph g = load_graph(args.file);

  if (cmd == "validate") {
    std::ostringstream os;
    os << "valid: " << g.edge_count() << " edges, " << g.cycle_edges().size() << " on the cycle, "
       << g.tree_edge_count() << " in trees\n";
    return emit(graph_summary_json(g), os.str());
  }
  if (cmd == "classify") {
    const int n = classify(g);
    std::ostringstream os;
    os << "n = " << n << " (derived equivalent to Omega(" << n << "))\n";
    return emit(Json{{"n", n}, {"representative", "Omega(" + std::to_string(n) + ")"}}, os.str());
  }
  if (cmd == "quiver") {
    const auto q = build_quiver(g);
    Json j = quiver_json(q);
    j["dot"] = quiver_to_dot(q);
    return emit(j, quiver_to_dot(q));
  }
  if (cmd == "algebra") {
    auto a = omega_algebra<K>(g, opt);
    return emit(algebra_json(a), algebra_text(a));
  }
  if (cmd == "cartan") {
    auto c = cartan(omega_algebra<K>(g, opt));
    return emit(cartan_json(c), cartan_text(c));
  }
  if (cmd == "tilt-shrink" || cmd == "tilt-enlarge") {
    auto a = omega_algebra<K>(g, opt);
    TiltingComplex<K> t;
    if (cmd == "tilt-shrink") {
      t = shrink_complex(a, g);
    } else {
      if (args.at.empty()) throw UsageError("tilt-enlarge needs --at");
      t = enlarge_complex(a, g, args.at);
    }
    std::optional<TiltCertificate> cert;
    if (args.certify) {
      cert = check_tilting(t);
      if (t.target_graph && !(cert->end_cartan == cartan(omega_algebra<K>(*t.target_graph, opt))))
        throw CertificateFailure("End Cartan matrix differs from the Cartan matrix of the new graph");
    }
    const TiltCertificate* cp = cert ? &*cert : nullptr;
    return emit(tilting_json(t, cp), tilting_text(t, cp));
  }
  if (cmd == "reduce") {
    auto t = reduce_to_normal_form<K>(g, args.certify, opt);
    if (args.certify) certify_trace<K>(t, opt);
    return emit(trace_json(t), trace_text(t));
  }
  throw UsageError("unknown command '" + cmd + "'");
}

inline int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "MalformedInput" || k == "ValidationError") return kInvalid;
  if (k == "NotStabilized") return kNotStabilized;
  if (k == "CertificateFailure" || k == "RelationFailure" || k == "NonUniqueHom" || k == "InternalError")
    return kCertificate;
  return kUsage;  // DomainError, EmptyTree, UsageError
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived equivalence classification of Omega(T) algebras", "brauer-derive"};
  app.require_subcommand(1);
  CliArgs args;
  app.add_option("--cap", args.cap, "maximal path length kept in the basis");
  app.add_option("--margin", args.margin, "extra path length used for relation multiples");
  app.add_option("--field", args.field, "Q or a prime: 2, 3, 5, 7, 32003")
      ->check(CLI::IsMember({"Q", "2", "3", "5", "7", "32003"}));
  app.add_option("--at", args.at, "cycle edge for tilt-enlarge");
  app.add_flag("--json", args.json, "JSON output");
  app.add_flag("--certify", args.certify, "check tilting certificates");

  struct Sub {
    const char* name;
    const char* help;
    bool file;
  };
  const std::vector<Sub> subs{{"validate", "validate a graph file", true},
                              {"quiver", "Brauer quiver as DOT", true},
                              {"algebra", "basis, relations and Cartan matrix of Omega(T)", true},
                              {"cartan", "Cartan matrix of Omega(T) or of Omega(n)", true},
                              {"tilt-shrink", "tilting complex with End = Omega(n)", true},
                              {"tilt-enlarge", "two-term tilting complex at --at", true},
                              {"reduce", "reduce to the loop-star normal form", true},
                              {"classify", "number n of the class Omega(n)", true},
                              {"omega", "the algebra Omega(n)", false},
                              {"an", "the algebra A(n)", false}};
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->fallthrough();
    if (s.file)
      sc->add_option("file", args.file, "graph file")->required(std::string(s.name) != "cartan");
    else
      sc->add_option("n", args.n, "number of edges")->required();
    if (std::string(s.name) == "cartan") sc->add_option("--omega", args.omega, "use Omega(n) instead of a file");
    if (!s.file) sc->add_flag("--compare-socle", args.compare_socle, "compare Omega(n)/soc and A(n)/soc");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: UsageError: " << e.what() << "\n";
    return kUsage;
  }
  args.command = app.get_subcommands().front()->get_name();

  std::ostringstream buf;
  try {
    if (args.field == "Q")
      cli::run_command<Rational>(args, buf);
    else if (args.field == "2")
      cli::run_command<Zp<2>>(args, buf);
    else if (args.field == "3")
      cli::run_command<Zp<3>>(args, buf);
    else if (args.field == "5")
      cli::run_command<Zp<5>>(args, buf);
    else if (args.field == "7")
      cli::run_command<Zp<7>>(args, buf);
    else
      cli::run_command<Zp<32003>>(args, buf);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return cli::exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: MalformedInput: " << e.what() << "\n";
    return kInvalid;
  }
  out << buf.str();
  return kOk;
}

}  // namespace brauer
