#pragma once

// JSON and text renderings of Cartan matrices, certificates and traces.

#include <sstream>
#include <string>

#include "brauer/reduction.hpp"
#include "json.hpp"

namespace brauer {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "brauer-derive/1";

inline Json with_schema(const Json& body) {
  Json out{{"schema", kSchema}};
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

inline Json cartan_json(const CartanMatrix& c) {
  return Json{{"order", c.order}, {"matrix", c.matrix}, {"dim", c.dim()}, {"det", c.det()}};
}

inline Json certificate_json(const TiltCertificate& c) {
  Json hv = Json::object();
  for (const auto& [r, d] : c.hom_vanishing) hv[std::to_string(r)] = d;
  Json gen = Json::array();
  for (const auto& [cone, form] : c.generation) gen.push_back({{"cone", cone}, {"matches", form}});
  return Json{{"homVanishing", hv},
              {"generation", gen},
              {"endCartan", cartan_json(c.end_cartan)},
              {"detSource", c.det_source},
              {"detEnd", c.det_end},
              {"relationsChecked", c.relations_checked}};
}

inline Json trace_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j{{"at", s.at}, {"after", graph_to_json(s.after)}};
    if (s.certificate) j["certificate"] = certificate_json(*s.certificate);
    steps.push_back(j);
  }
  return Json{{"input", graph_to_json(t.input)},
              {"n", t.n},
              {"steps", steps},
              {"normalForm", graph_to_json(t.normal_form)}};
}

inline std::string cartan_text(const CartanMatrix& c) {
  std::size_t w = 1;
  for (const auto& l : c.order) w = std::max(w, l.size());
  for (const auto& row : c.matrix)
    for (long long x : row) w = std::max(w, std::to_string(x).size());
  auto pad = [w](const std::string& s) { return std::string(w + 1 - s.size(), ' ') + s; };
  std::ostringstream os;
  os << std::string(w + 1, ' ');
  for (const auto& l : c.order) os << pad(l);
  os << "\n";
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    os << pad(c.order[i]);
    for (long long x : c.matrix[i]) os << pad(std::to_string(x));
    os << "\n";
  }
  os << "dim " << c.dim() << ", det " << c.det() << "\n";
  return os.str();
}

inline std::string certificate_text(const TiltCertificate& c) {
  std::ostringstream os;
  os << "Hom(Q, Q[r]) for r != 0:";
  for (const auto& [r, d] : c.hom_vanishing) os << " " << r << ":" << d;
  os << "\n";
  for (const auto& [cone, form] : c.generation) os << "  " << cone << " ~ " << form << "\n";
  os << "relations checked: " << c.relations_checked << "\n";
  os << "det source " << c.det_source << ", det End " << c.det_end << "\n";
  return os.str();
}

inline std::string trace_text(const ReductionTrace& t) {
  std::ostringstream os;
  os << "input: " << serialize_graph(t.input) << "\n";
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    os << "step " << k + 1 << " at " << s.at << ": " << serialize_graph(s.after) << "\n";
    if (s.certificate) {
      std::istringstream lines(certificate_text(*s.certificate));
      for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
    }
  }
  os << "normal form: " << serialize_graph(t.normal_form) << "\n";
  os << "n = " << t.n << "\n";
  return os.str();
}

}  // namespace brauer
