#pragma once

// JSON, CSV and plain-text renderings of SolutionSet and CatalogRow.
//
// JSON conventions: exponents (p, q, x, y, k, alpha, beta, p_plus_2) are JSON
// numbers; values that can outgrow 64 bits (mp, mq, l, z, two_p_plus_1) are
// decimal strings. Object keys are emitted in a fixed order so identical input
// gives byte-identical output.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdioph/catalog.hpp"
#include "mdioph/solver.hpp"

namespace mdioph {

using Json = nlohmann::ordered_json;

// ---- SolutionSet -----------------------------------------------------------

inline Json instance_to_json(const EquationInstance& inst) {
  Json j;
  j["p"] = inst.p();
  j["mp"] = inst.mp().value().str();
  j["q"] = inst.q();
  j["mq"] = inst.mq().value().str();
  j["l"] = inst.l().str();
  return j;
}

inline EquationInstance instance_from_json(const Json& j) {
  auto inst = EquationInstance::from_exponents(j.at("p").get<Exponent>(), j.at("q").get<Exponent>(),
                                               parse_bigint(j.at("l").get<std::string>()));
  if (inst.mp().value().str() != j.at("mp").get<std::string>() ||
      inst.mq().value().str() != j.at("mq").get<std::string>())
    throw std::invalid_argument("instance JSON: mp/mq do not match p/q");
  return inst;
}

inline Json solution_to_json(const Solution& s) {
  Json j;
  j["x"] = s.x;
  j["y"] = s.y;
  j["z"] = s.z.str();
  j["case_label"] = to_string(s.case_label);
  if (s.trace) j["trace"] = Json{{"k", s.trace->k}, {"alpha", s.trace->alpha}, {"beta", s.trace->beta}};
  return j;
}

inline Solution solution_from_json(const Json& j) {
  Solution s;
  s.x = j.at("x").get<Exponent>();
  s.y = j.at("y").get<Exponent>();
  s.z = parse_bigint(j.at("z").get<std::string>());
  s.case_label = case_label_from_string(j.at("case_label").get<std::string>());
  if (j.contains("trace")) {
    const auto& t = j.at("trace");
    s.trace = DerivationTrace{t.at("k").get<Exponent>(), t.at("alpha").get<Exponent>(), t.at("beta").get<Exponent>()};
  }
  return s;
}

inline Json reason_to_json(const Reason& r) { return Json{{"kind", to_string(r.kind)}, {"detail", r.detail}}; }

inline Reason reason_from_json(const Json& j) {
  return {reason_kind_from_string(j.at("kind").get<std::string>()), j.at("detail").get<std::string>()};
}

inline Json to_json(const SolutionSet& set) {
  Json j;
  j["instance"] = instance_to_json(set.instance);
  j["solutions"] = Json::array();
  for (const auto& s : set.solutions) j["solutions"].push_back(solution_to_json(s));
  j["nonexistence_reasons"] = Json::array();
  for (const auto& r : set.nonexistence_reasons) j["nonexistence_reasons"].push_back(reason_to_json(r));
  return j;
}

inline SolutionSet solution_set_from_json(const Json& j) {
  SolutionSet set{instance_from_json(j.at("instance")), {}, {}};
  for (const auto& s : j.at("solutions")) set.solutions.push_back(solution_from_json(s));
  for (const auto& r : j.at("nonexistence_reasons")) set.nonexistence_reasons.push_back(reason_from_json(r));
  return set;
}

inline std::string equation_text(const EquationInstance& inst) {
  return inst.mp().value().str() + "^x + " + inst.second_base().str() + "^y = (" + inst.l().str() + "z)^2";
}

inline void write_text(std::ostream& os, const SolutionSet& set) {
  const auto& inst = set.instance;
  os << "equation: " << equation_text(inst) << "  (p=" << inst.p() << ", q=" << inst.q() << ", l=" << inst.l()
     << ")\n";
  if (set.solutions.empty()) {
    os << "no solutions\n";
  } else {
    os << "solutions:\n";
    for (const auto& s : set.solutions) {
      os << "  (x, y, z) = (" << s.x << ", " << s.y << ", " << s.z << ")  [" << to_string(s.case_label);
      if (s.trace) os << "; k=" << s.trace->k << " alpha=" << s.trace->alpha << " beta=" << s.trace->beta;
      os << "]\n";
    }
  }
  if (!set.nonexistence_reasons.empty()) {
    os << "reasons:\n";
    for (const auto& r : set.nonexistence_reasons) os << "  " << to_string(r.kind) << ": " << r.detail << "\n";
  }
}

// ---- CSV ---------------------------------------------------------------------

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void csv_line(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\n";
}

}  // namespace detail

inline void write_csv(std::ostream& os, const SolutionSet& set) {
  detail::csv_line(os, {"x", "y", "z", "case_label"});
  for (const auto& s : set.solutions)
    detail::csv_line(os, {std::to_string(s.x), std::to_string(s.y), s.z.str(), to_string(s.case_label)});
}

// ---- CatalogRow ----------------------------------------------------------------

inline std::string status_text(const RowStatus& st) {
  switch (st.kind) {
    case RowStatusKind::Solvable: return "Solvable";
    case RowStatusKind::PaperErratum: return "PaperErratum(" + st.note + ")";
    case RowStatusKind::Unsolvable: {
      std::string kinds;
      for (const auto& r : st.reasons) kinds += (kinds.empty() ? "" : ";") + to_string(r.kind);
      return "Unsolvable(" + kinds + ")";
    }
  }
  return "unknown";
}

inline const std::vector<std::string>& catalog_columns() {
  static const std::vector<std::string> cols{"mp", "p", "p_plus_2", "q", "mq", "two_p_plus_1",
                                             "l", "solution", "status", "paper_row"};
  return cols;
}

inline void write_csv(std::ostream& os, const std::vector<CatalogRow>& rows) {
  detail::csv_line(os, catalog_columns());
  for (const auto& r : rows) {
    const std::string sol = r.solution ? detail::xyz_text(r.solution->x, r.solution->y, r.solution->z) : "";
    detail::csv_line(os, {r.mp.str(), std::to_string(r.p), std::to_string(r.p_plus_2), std::to_string(r.q),
                          r.mq.str(), r.two_p_plus_1.str(), r.l.str(), sol, status_text(r.status),
                          r.paper_row ? std::to_string(*r.paper_row) : ""});
  }
}

inline Json to_json(const CatalogRow& r) {
  Json j;
  j["mp"] = r.mp.str();
  j["p"] = r.p;
  j["p_plus_2"] = r.p_plus_2;
  j["q"] = r.q;
  j["mq"] = r.mq.str();
  j["two_p_plus_1"] = r.two_p_plus_1.str();
  j["l"] = r.l.str();
  j["solution"] = r.solution ? solution_to_json(*r.solution) : Json(nullptr);
  Json st;
  st["kind"] = to_string(r.status.kind);
  if (r.status.kind == RowStatusKind::Unsolvable) {
    st["reasons"] = Json::array();
    for (const auto& reason : r.status.reasons) st["reasons"].push_back(reason_to_json(reason));
  }
  if (r.status.kind == RowStatusKind::PaperErratum) st["note"] = r.status.note;
  j["status"] = st;
  j["paper_row"] = r.paper_row ? Json(*r.paper_row) : Json(nullptr);
  return j;
}

inline Json to_json(const std::vector<CatalogRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline void write_text(std::ostream& os, const std::vector<CatalogRow>& rows) {
  for (const auto& r : rows) {
    os << "M_p=" << r.mp << " p=" << r.p << " p+2=" << r.p_plus_2 << " q=" << r.q << " M_q=" << r.mq
       << " 2^p+1=" << r.two_p_plus_1 << " l=" << r.l;
    if (r.solution) os << " (x,y,z)=" << detail::xyz_text(r.solution->x, r.solution->y, r.solution->z);
    os << "  " << status_text(r.status) << "\n";
  }
}

}  // namespace mdioph
