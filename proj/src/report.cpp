#include "braidseed/report.hpp"

#include <json.hpp>
#include <sstream>

namespace braidseed {

using json = nlohmann::ordered_json;

bool operator==(const InductiveStep& lhs, const InductiveStep& rhs) {
  return lhs.case_kind == rhs.case_kind && lhs.letter == rhs.letter && lhs.l == rhs.l &&
         lhs.r == rhs.r && lhs.reorder == rhs.reorder;
}

bool operator==(const DimensionReport& lhs, const DimensionReport& rhs) {
  return lhs.nonempty == rhs.nonempty && lhs.dim == rhs.dim && lhs.s == rhs.s;
}

bool AnalysisReport::operator==(const AnalysisReport& o) const {
  return n == o.n && u_word == o.u_word && u_oneline == o.u_oneline && beta == o.beta && J == o.J &&
         m == o.m && f == o.f && vertex_order == o.vertex_order && boundaries == o.boundaries &&
         h_twice == o.h_twice && d_twice == o.d_twice && bhat == o.bhat && det == o.det && a == o.a &&
         torus_weights == o.torus_weights && torus_actions == o.torus_actions && sign == o.sign &&
         anomalies == o.anomalies && dimension == o.dimension && step_log == o.step_log;
}

AnalysisReport build_report(const Permutation& u, const BraidWord& beta, bool inductive) {
  AnalysisReport report;
  report.n = beta.n;
  report.u_word = reduced_word(u);
  report.u_oneline = u.oneline();
  report.beta = beta.letters;

  PlabicDiagram diagram = build_diagram(u, beta);
  report.J = diagram.bridge_positions;

  FilmSet films = propagate_films(diagram);
  report.m = films.m;
  report.f = films.f;
  report.anomalies = films.anomalies;
  for (const SoapFilm& film : films.films) {
    report.vertex_order.push_back(film.origin_position);
    report.boundaries.push_back(film.boundary);
  }

  ExchangeData data = analyze_exchange(diagram, films);
  report.h_twice = data.h_twice;
  report.d_twice = data.d_twice;
  report.bhat = data.bhat;
  report.det = data.det;
  report.a = data.a;

  TorusAction action = torus_action(data.a, data.m, data.f);
  report.torus_weights = action.weights;
  for (int i = 1; i <= data.m + data.f; ++i)
    report.torus_actions.push_back(torus_action_string(action, i));

  report.sign = sign_report(data.a);
  report.dimension = dimension_report(u, beta);

  if (inductive) {
    InductiveResult ind = inductive_build(u, beta);
    if (ind.bhat != report.bhat || ind.a != report.a)
      throw InternalError("inductive route disagrees with direct route");
    report.step_log = std::move(ind.steps);
  }
  return report;
}

namespace {

json dyadic_json(Dyadic d) {
  if (d.is_integer()) return json(d.as_int());
  return json(d.str());
}

Dyadic dyadic_from_json(const json& j) {
  if (j.is_number_integer()) return Dyadic::from_int(j.get<int64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    size_t slash = s.find("/2");
    if (slash == std::string::npos || slash + 2 != s.size())
      throw InvalidInput("malformed dyadic value '" + s + "'");
    return Dyadic::from_twice(std::stoll(s.substr(0, slash)));
  }
  throw InvalidInput("malformed dyadic value in JSON");
}

json dyadic_matrix_json(const IntMatrix& twice) {
  json rows = json::array();
  for (int i = 0; i < twice.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < twice.cols(); ++j) row.push_back(dyadic_json(Dyadic::from_twice(twice.at(i, j))));
    rows.push_back(std::move(row));
  }
  return rows;
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix dyadic_matrix_from_json(const json& j, int cols_if_empty = 0) {
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j[0].size()) : cols_if_empty;
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = dyadic_from_json(j[i][c]).twice();
  return m;
}

IntMatrix int_matrix_from_json(const json& j, int cols_if_empty = 0) {
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j[0].size()) : cols_if_empty;
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = j[i][c].get<int64_t>();
  return m;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  json j;
  j["n"] = report.n;
  j["u_word"] = report.u_word;
  j["u_oneline"] = report.u_oneline;
  j["beta"] = report.beta;
  j["J"] = report.J;
  j["m"] = report.m;
  j["f"] = report.f;
  j["vertex_order"] = report.vertex_order;
  j["boundaries"] = report.boundaries;
  j["H"] = dyadic_matrix_json(report.h_twice);
  j["D"] = dyadic_matrix_json(report.d_twice);
  j["Bhat"] = int_matrix_json(report.bhat);
  j["det"] = report.det;
  j["A"] = int_matrix_json(report.a);
  j["torus_weights"] = int_matrix_json(report.torus_weights);
  j["torus_actions"] = report.torus_actions;
  j["sign_report"]["all_nonpositive"] = report.sign.all_nonpositive;
  json violations = json::array();
  for (const SignViolation& v : report.sign.violations)
    violations.push_back(json::array({v.row, v.col, v.entry}));
  j["sign_report"]["violations"] = std::move(violations);
  j["anomaly_counters"]["pinched_pass"] = report.anomalies.pinched_pass;
  j["anomaly_counters"]["crossing_both_interior"] = report.anomalies.crossing_both_interior;
  j["anomaly_counters"]["multiplicity_gt1"] = report.anomalies.multiplicity_gt1;
  j["dimension"]["nonempty"] = report.dimension.nonempty;
  j["dimension"]["dim"] = report.dimension.dim;
  j["dimension"]["s"] = report.dimension.s;
  if (report.step_log) {
    json steps = json::array();
    for (const InductiveStep& step : *report.step_log) {
      json s;
      s["case"] = std::string(1, step.case_kind);
      s["letter"] = step.letter;
      if (step.case_kind == 'B') {
        s["L"] = int_matrix_json(step.l);
        s["R"] = int_matrix_json(step.r);
        s["reorder"] = step.reorder;
      }
      steps.push_back(std::move(s));
    }
    j["step_log"] = std::move(steps);
  }
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("malformed report JSON: ") + e.what());
  }
  AnalysisReport r;
  r.n = j.at("n").get<int>();
  r.u_word = j.at("u_word").get<std::vector<int>>();
  r.u_oneline = j.at("u_oneline").get<std::vector<int>>();
  r.beta = j.at("beta").get<std::vector<int>>();
  r.J = j.at("J").get<std::vector<int>>();
  r.m = j.at("m").get<int>();
  r.f = j.at("f").get<int>();
  r.vertex_order = j.at("vertex_order").get<std::vector<int>>();
  r.boundaries = j.at("boundaries").get<std::vector<std::vector<int64_t>>>();
  int size = r.m + r.f;
  r.h_twice = dyadic_matrix_from_json(j.at("H"), size);
  r.d_twice = dyadic_matrix_from_json(j.at("D"), size);
  r.bhat = int_matrix_from_json(j.at("Bhat"), size);
  r.det = j.at("det").get<int64_t>();
  r.a = int_matrix_from_json(j.at("A"), size);
  r.torus_weights = int_matrix_from_json(j.at("torus_weights"), r.f);
  r.torus_actions = j.at("torus_actions").get<std::vector<std::string>>();
  r.sign.all_nonpositive = j.at("sign_report").at("all_nonpositive").get<bool>();
  for (const json& v : j.at("sign_report").at("violations"))
    r.sign.violations.push_back({v[0].get<int>(), v[1].get<int>(), v[2].get<int64_t>()});
  r.anomalies.pinched_pass = j.at("anomaly_counters").at("pinched_pass").get<int64_t>();
  r.anomalies.crossing_both_interior = j.at("anomaly_counters").at("crossing_both_interior").get<int64_t>();
  r.anomalies.multiplicity_gt1 = j.at("anomaly_counters").at("multiplicity_gt1").get<int64_t>();
  r.dimension.nonempty = j.at("dimension").at("nonempty").get<bool>();
  r.dimension.dim = j.at("dimension").at("dim").get<int>();
  r.dimension.s = j.at("dimension").at("s").get<int>();
  if (j.contains("step_log")) {
    std::vector<InductiveStep> steps;
    for (const json& s : j.at("step_log")) {
      InductiveStep step;
      step.case_kind = s.at("case").get<std::string>()[0];
      step.letter = s.at("letter").get<int>();
      if (step.case_kind == 'B') {
        int sz = static_cast<int>(s.at("reorder").size());
        step.l = int_matrix_from_json(s.at("L"), sz);
        step.r = int_matrix_from_json(s.at("R"), sz);
        step.reorder = s.at("reorder").get<std::vector<int>>();
      }
      steps.push_back(std::move(step));
    }
    r.step_log = std::move(steps);
  }
  return r;
}

namespace {

void print_dyadic_matrix(std::ostream& out, const std::string& name, const IntMatrix& twice) {
  out << name << " (" << twice.rows() << "x" << twice.cols() << "):\n";
  for (int i = 0; i < twice.rows(); ++i) {
    out << "  [";
    for (int j = 0; j < twice.cols(); ++j) {
      if (j) out << ", ";
      out << Dyadic::from_twice(twice.at(i, j)).str();
    }
    out << "]\n";
  }
}

void print_int_matrix(std::ostream& out, const std::string& name, const IntMatrix& m) {
  out << name << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (int i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m.at(i, j);
    }
    out << "]\n";
  }
}

template <typename T>
void print_list(std::ostream& out, const std::vector<T>& v) {
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
}

}  // namespace

std::string report_to_pretty(const AnalysisReport& report) {
  std::ostringstream out;
  out << "braid variety seed data\n";
  out << "n = " << report.n << "\n";
  out << "u = ";
  print_list(out, report.u_oneline);
  out << "  (word: ";
  print_list(out, report.u_word);
  out << ")\n";
  out << "beta = ";
  print_list(out, report.beta);
  out << "\nJ = ";
  print_list(out, report.J);
  out << "\nm = " << report.m << ", f = " << report.f << "\n";
  out << "vertex -> origin position: ";
  print_list(out, report.vertex_order);
  out << "\nboundaries:\n";
  for (size_t i = 0; i < report.boundaries.size(); ++i) {
    out << "  dC_" << (i + 1) << " = ";
    print_list(out, report.boundaries[i]);
    out << (i < static_cast<size_t>(report.m) ? "  [mutable]" : "  [frozen]") << "\n";
  }
  print_dyadic_matrix(out, "H", report.h_twice);
  print_dyadic_matrix(out, "D", report.d_twice);
  print_int_matrix(out, "Bhat", report.bhat);
  out << "det(Bhat) = " << report.det << "\n";
  print_int_matrix(out, "A", report.a);
  out << "torus action ((C*)^" << report.f << "):\n";
  for (const std::string& s : report.torus_actions) out << "  " << s << "\n";
  out << "sign phenomenon: " << (report.sign.all_nonpositive ? "all entries of A <= 0" : "mixed signs")
      << "\n";
  for (const SignViolation& v : report.sign.violations)
    out << "  positive entry A[" << v.row << "][" << v.col << "] = " << v.entry << "\n";
  out << "dimension = " << report.dimension.dim << ", variables s = " << report.dimension.s << "\n";
  out << "anomalies: pinched_pass = " << report.anomalies.pinched_pass
      << ", crossing_both_interior = " << report.anomalies.crossing_both_interior
      << ", multiplicity_gt1 = " << report.anomalies.multiplicity_gt1 << "\n";
  return out.str();
}

void validate_report(const AnalysisReport& report) {
  const int size = report.m + report.f;
  if (report.det != ((size % 2 == 0) ? 1 : -1)) throw InternalError("validate: determinant mismatch");
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (report.h_twice.at(i, j) != -report.h_twice.at(j, i))
        throw InternalError("validate: H is not skew-symmetric");
      if (report.d_twice.at(i, j) != report.d_twice.at(j, i))
        throw InternalError("validate: D is not symmetric");
      if ((i < report.m || j < report.m) && report.d_twice.at(i, j) != 0)
        throw InternalError("validate: D has a nonzero mutable row or column");
    }
  for (int i = 0; i < size; ++i) {
    bool frozen = i >= report.m;
    bool nonzero = false;
    for (int64_t x : report.boundaries[i]) nonzero = nonzero || x != 0;
    if (frozen != nonzero) throw InternalError("validate: frozen classification mismatch");
  }
  if (!(report.bhat * report.a).is_identity()) throw InternalError("validate: Bhat * A != I");
  kernel_basis(report.bhat, report.a, report.m, report.f);

  BraidWord beta;
  beta.n = report.n;
  beta.letters = report.beta;
  Permutation u = Permutation::from_oneline(report.u_oneline);
  InductiveResult ind = inductive_build(u, beta);
  if (ind.bhat != report.bhat || ind.a != report.a)
    throw InternalError("validate: inductive route disagrees");
}

}  // namespace braidseed
