#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmirror/algebra.hpp"
#include "qmirror/lg_models.hpp"

namespace qmirror {

// Closed-form critical points of the canonical superpotential. The main family
// is one point over Q(q)[zeta]/(zeta^N - 4q), standing for its N Galois
// conjugates; the extra points live over Q(q)[s]/(s^2 - eps q) with
// eps = (-1)^m in the even case (the quadric forces the sign) and over Q(q)
// itself in the odd case.
struct CriticalPointSet {
  int N = 0;
  int eps = 1;  // s^2 = eps q for the even extra points
  std::map<Symbol, ZetaElement> main_family;
  std::vector<std::map<Symbol, SqrtQElement>> extra_points;
  ZetaElement main_value;  // = N zeta
  int point_count = 0;     // N conjugates + extras = dim H*(Q_N)
};

CriticalPointSet closed_form_critical_points(int N);

// Critical values: N*zeta on the main family, 0 at the extra points.
struct CriticalValues {
  ZetaElement main;
  std::vector<SqrtQElement> extras;
};
CriticalValues critical_values(int N);

struct CriticalityReport {
  bool ok = false;
  std::string detail;
};

// All partial derivatives of the (even: constraint-eliminated) superpotential
// vanish exactly at the listed points, and the critical values are N zeta and 0.
CriticalityReport verify_criticality(int N);

// Membership of the critical points in the Przyjalkowski / Givental / Lusztig
// charts: the comparison-map images must be defined and nonzero.
struct ChartMembership {
  struct Entry {
    std::string chart;
    bool member = false;
    std::vector<std::string> failing;  // vanishing required-nonzero functions
  };
  std::vector<Entry> main;
  std::vector<std::vector<Entry>> extras;  // one row per extra point
};

ChartMembership chart_membership(int N);

}  // namespace qmirror
