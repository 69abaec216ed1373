#include "qmirror/json_io.hpp"

#include <sstream>

namespace qmirror {

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, coef] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [s, e] : mono.exponents()) exps[s] = e;
    terms.push_back(Json{{"exps", exps}, {"coef", to_string(coef)}});
  }
  return Json{{"terms", terms}};
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den_expanded())}};
}

Json to_json(const LGModel& model) {
  Json constraints = Json::array();
  for (const auto& c : model.constraints) constraints.push_back(to_json(c));
  return Json{{"name", model.name()},
              {"N", model.N},
              {"vars", model.vars},
              {"W", to_json(model.superpotential)},
              {"constraints", constraints}};
}

Json to_json(const QSeries& series) {
  // fold the series index back into a q-power inside each class coefficient
  std::map<SchubertClass, LaurentPolynomial> folded;
  for (int k = 0; k <= series.order; ++k)
    for (const auto& [c, coef] : series.terms[k].entries())
      folded[c] += coef * LaurentPolynomial::var("q", k);
  Json terms = Json::array();
  for (const auto& [c, coef] : folded)
    terms.push_back(Json{{"class", c.str()}, {"coef", to_json(coef)}});
  return Json{{"N", series.N}, {"order", series.order}, {"terms", terms}};
}

Json to_json(const PolyMatrix& matrix) {
  Json rows = Json::array();
  for (int i = 1; i <= matrix.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= matrix.size(); ++j) row.push_back(matrix.at(i, j).str());
    rows.push_back(row);
  }
  return Json{{"size", matrix.size()}, {"rows", rows}};
}

Json to_json(const ClusterSeed& seed) {
  return Json{{"m", seed.m},
              {"mutable", seed.mutable_vars},
              {"frozen", seed.frozen_vars}};
}

Json to_json(const CriticalPointSet& points, const ChartMembership& membership) {
  Json main = Json::object();
  for (const auto& [v, val] : points.main_family) main[v] = val.str();
  Json extras = Json::array();
  for (const auto& pt : points.extra_points) {
    Json e = Json::object();
    for (const auto& [v, val] : pt) e[v] = val.str();
    extras.push_back(e);
  }
  auto entry = [](const ChartMembership::Entry& e) {
    return Json{{"chart", e.chart}, {"member", e.member}, {"failing", e.failing}};
  };
  Json mainMem = Json::array();
  for (const auto& e : membership.main) mainMem.push_back(entry(e));
  Json extraMem = Json::array();
  for (const auto& row : membership.extras) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(entry(e));
    extraMem.push_back(r);
  }
  Json extraValues = Json::array();
  for (std::size_t i = 0; i < points.extra_points.size(); ++i) extraValues.push_back("0");
  return Json{{"N", points.N},
              {"sqrt_sign", points.eps},
              {"point_count", points.point_count},
              {"main_family", main},
              {"main_value", points.main_value.str()},
              {"extra_points", extras},
              {"extra_values", extraValues},
              {"membership", Json{{"main", mainMem}, {"extras", extraMem}}}};
}

Json to_json(const IdentityReport& report) {
  Json coeffs = Json::object();
  for (const auto& [c, v] : report.coefficients) coeffs[c] = to_string(v);
  return Json{{"identity", report.identity},
              {"chart", report.chart == Chart::C1 ? "C1" : "C2"},
              {"coefficients", coeffs},
              {"status", report.ok ? "verified" : "failed"},
              {"detail", report.detail}};
}

std::string qseries_csv(const QSeries& series) {
  std::ostringstream os;
  os << "class";
  for (int k = 0; k <= series.order; ++k) os << ",q^" << k;
  os << "\n";
  for (const auto& c : schubert_basis(series.N)) {
    os << c.str();
    for (int k = 0; k <= series.order; ++k) os << ",\"" << series.terms[k].coefficient(c).str()
                                               << "\"";
    os << "\n";
  }
  return os.str();
}

std::string series_routes_csv(int N, int kmax) {
  std::ostringstream os;
  os << "N,class,k,route,value,hbar_exponent\n";
  BetaTable tab = beta_recursion(N, kmax);
  for (const auto& c : schubert_basis(N)) {
    for (int k = 1; k <= kmax; ++k) {
      Coefficient closed = closed_form_coefficient(N, c, k);
      os << N << "," << c.str() << "," << k << ",closed," << to_string(closed.value) << ","
         << closed.hbar_exponent << "\n";
      os << N << "," << c.str() << "," << k << ",recursion," << to_string(tab.at(c, k)) << ","
         << closed.hbar_exponent << "\n";
      os << N << "," << c.str() << "," << k << ",constant-term,"
         << to_string(constant_term_coefficient(N, c, k)) << "," << closed.hbar_exponent << "\n";
    }
  }
  return os.str();
}

}  // namespace qmirror
