#pragma once

#include <json.hpp>

#include "qmirror/critical.hpp"
#include "qmirror/dmodule.hpp"
#include "qmirror/flat_sections.hpp"
#include "qmirror/lie_matrix.hpp"
#include "qmirror/quiver.hpp"

namespace qmirror {

using Json = nlohmann::ordered_json;

// {"terms":[{"exps":{"x":2,"y":-1},"coef":"3/4"}]}, terms in the canonical
// lex order on exponent vectors.
Json to_json(const LaurentPolynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const LGModel& model);
Json to_json(const QSeries& series);
Json to_json(const PolyMatrix& matrix);
Json to_json(const ClusterSeed& seed);
Json to_json(const CriticalPointSet& points, const ChartMembership& membership);
Json to_json(const IdentityReport& report);

// rows = classes, columns = q-powers
std::string qseries_csv(const QSeries& series);

// rows (N, l, k, route, value-as-fraction, hbar-exponent)
std::string series_routes_csv(int N, int kmax);

}  // namespace qmirror
