#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmirror/cohomology.hpp"
#include "qmirror/lg_models.hpp"

namespace qmirror {

// Cluster charts of the even mirror: C1 carries p_1..p_{m-2}, C2 carries
// p_{2m-3}..p_m; both carry the frozen delta_0..delta_{m-3} (delta_0 stands
// for p_{2m-2}) and the two middle Plucker coordinates. p_0 = 1 throughout.
enum class Chart { C1, C2 };

std::vector<Symbol> chart_vars(int m, Chart chart);

// Substitution eliminating the complementary Plucker coordinates via the
// exchange relations; keys are the canonical-model variables plus q.
std::map<Symbol, RationalFunction> chart_elimination(int m, Chart chart);

// The canonical superpotential rewritten in the chart variables (a Laurent
// polynomial there).
RationalFunction express_W_in_chart(int m, Chart chart);

struct IdentityReport {
  bool ok = false;
  Chart chart = Chart::C1;
  std::string identity;
  std::map<Symbol, Rational> coefficients;
  std::string detail;  // residual serialization on failure
};

// The B-side counterpart of the quantum Chevalley rule for the class `which`
// (standard index or the primed middle class): q dW/dq * p - (image) equals
// p * sum m_c c dW/dc with the proof's coefficient set, verified exactly.
IdentityReport verify_b_side_identity(int m, SchubertClass which);

struct SolveOutcome {
  enum class Status { Solved, NoSolution, SingularSample };
  Status status = Status::NoSolution;
  std::map<Symbol, Rational> coefficients;
};

// Finds constants m_c with target = pivot * sum_{c != pivot} m_c c dW/dc by
// exact linear algebra on random rational samples, then certifies the
// candidate exactly; sampling can never produce a false positive.
SolveOutcome solve_vector_field_coefficients(const std::vector<Symbol>& vars,
                                             const RationalFunction& W,
                                             const Symbol& pivot_var,
                                             const RationalFunction& pivot,
                                             const RationalFunction& target,
                                             std::uint64_t seed);

struct OddReport {
  bool ok = false;
  std::string detail;
  std::map<int, std::map<Symbol, Rational>> coefficients;  // per class index
};

// Odd analogue of the intertwining identities, certified by the solver on the
// two odd cluster charts (C1 for i <= m-1, C2 for i >= m).
OddReport odd_intertwiner_check(int m, std::uint64_t seed = 12345);

// Weight of a homogeneous rational function under deg p_i = i, deg p' = m-1,
// deg delta_j = N, deg q = N; nullopt if not homogeneous.
std::optional<std::int64_t> chart_weight(int m, bool odd_case, const RationalFunction& f);

}  // namespace qmirror
