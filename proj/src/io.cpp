#include "unigen/io.hpp"

#include <json.hpp>

namespace unigen {

namespace {

using nlohmann::json;

json matrix_to_json(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat matrix_from_json(const json& j, int expected_cols = -1) {
  if (!j.is_array() || j.empty()) throw invalid_input("matrix must be a non-empty array of rows");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  if (expected_cols >= 0 && cols != expected_cols)
    throw invalid_input("matrix has wrong number of columns");
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != cols)
      throw invalid_input("matrix rows have inconsistent length");
    for (int c = 0; c < cols; ++c) {
      const json& e = j[i][c];
      if (e.is_string())
        m(i, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer())
        m(i, c) = Rat(static_cast<long>(e.get<long long>()));
      else
        throw invalid_input("matrix entries must be rational strings or integers");
    }
  }
  return m;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("JSON parse error: ") + e.what());
  }
  ProblemFile p;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw invalid_input("missing integer field 'dimension'");
  p.dimension = j["dimension"].get<int>();
  if (p.dimension <= 0) throw invalid_input("'dimension' must be positive");
  if (!j.contains("lie_algebra") || !j["lie_algebra"].is_array())
    throw invalid_input("missing array field 'lie_algebra'");
  p.rep.dim_V = p.dimension;
  for (const json& m : j["lie_algebra"]) {
    QMat x = matrix_from_json(m, p.dimension);
    if (x.rows() != p.dimension) throw invalid_input("lie_algebra matrix has wrong shape");
    p.rep.basis.push_back(std::move(x));
  }
  if (j.contains("lattice") && !j["lattice"].is_null()) {
    QMat l = matrix_from_json(j["lattice"], p.dimension);
    if (l.rows() != p.dimension) throw invalid_input("lattice basis must be square");
    p.lattice = std::move(l);
  }
  if (j.contains("flag") && !j["flag"].is_null()) {
    std::vector<QMat> flag;
    for (const json& m : j["flag"]) flag.push_back(matrix_from_json(m, p.dimension));
    p.flag = std::move(flag);
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    if (o.contains("support_optimization"))
      p.options.support_optimization = o["support_optimization"].get<bool>();
    if (o.contains("verify")) p.options.verify = o["verify"].get<bool>();
  }
  return p;
}

std::string serialize_problem(const ProblemFile& p) {
  json j;
  j["dimension"] = p.dimension;
  j["lie_algebra"] = json::array();
  for (const QMat& x : p.rep.basis) j["lie_algebra"].push_back(matrix_to_json(x));
  if (p.lattice) j["lattice"] = matrix_to_json(*p.lattice);
  if (p.flag) {
    j["flag"] = json::array();
    for (const QMat& s : *p.flag) j["flag"].push_back(matrix_to_json(s));
  }
  j["options"] = {{"support_optimization", p.options.support_optimization},
                  {"verify", p.options.verify}};
  return j.dump(2) + "\n";
}

ResultFile parse_result(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("JSON parse error: ") + e.what());
  }
  ResultFile r;
  r.dimension = j.at("dimension").get<int>();
  for (const json& m : j.at("generators")) r.generators.push_back(matrix_from_json(m, r.dimension));
  r.hirsch_length = j.at("hirsch_length").get<int>();
  if (j.contains("levels"))
    for (const json& lv : j["levels"])
      r.levels.emplace_back(lv.at("k").get<int>(), lv.at("l").get<int>());
  if (j.contains("verification")) {
    const json& v = j["verification"];
    VerifyReport rep;
    rep.preserves_lattice = v.at("preserves_lattice").get<bool>();
    rep.count_ok = v.at("count_ok").get<bool>();
    rep.log_span_ok = v.at("log_span_ok").get<bool>();
    rep.centrality_ok = v.at("centrality_ok").get<bool>();
    if (v.contains("issues"))
      for (const json& s : v["issues"]) rep.issues.push_back(s.get<std::string>());
    r.verification = rep;
  }
  if (j.contains("timing")) {
    const json& t = j["timing"];
    r.timing.check = t.value("check", 0.0);
    r.timing.flag = t.value("flag", 0.0);
    r.timing.generators = t.value("generators", 0.0);
    r.timing.verify = t.value("verify", 0.0);
  }
  return r;
}

std::string serialize_result(const ResultFile& r) {
  json j;
  j["dimension"] = r.dimension;
  j["generators"] = json::array();
  for (const QMat& g : r.generators) j["generators"].push_back(matrix_to_json(g));
  j["hirsch_length"] = r.hirsch_length;
  j["levels"] = json::array();
  for (auto [k, l] : r.levels) j["levels"].push_back({{"k", k}, {"l", l}});
  if (r.verification) {
    j["verification"] = {{"preserves_lattice", r.verification->preserves_lattice},
                         {"count_ok", r.verification->count_ok},
                         {"log_span_ok", r.verification->log_span_ok},
                         {"centrality_ok", r.verification->centrality_ok},
                         {"issues", r.verification->issues}};
  }
  j["timing"] = {{"check", r.timing.check},
                 {"flag", r.timing.flag},
                 {"generators", r.timing.generators},
                 {"verify", r.timing.verify}};
  return j.dump(2) + "\n";
}

ProblemFile builtin_example() {
  ProblemFile p;
  p.dimension = 4;
  p.rep.dim_V = 4;
  QMat e13(4, 4), e14(4, 4), g2(4, 4);
  e13(0, 2) = 1;
  e14(0, 3) = 1;
  g2(1, 2) = 1;  // e23 + e34
  g2(2, 3) = 1;
  p.rep.basis = {e13, e14, g2};
  p.options.verify = true;
  return p;
}

}  // namespace unigen
