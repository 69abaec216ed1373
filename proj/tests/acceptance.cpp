// Acceptance suite: every criterion is exact (tolerance zero); each line
// reports one criterion with its runtime, and the process exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmirror/critical.hpp"
#include "qmirror/dmodule.hpp"
#include "qmirror/flat_sections.hpp"
#include "qmirror/lie_matrix.hpp"
#include "qmirror/quiver.hpp"

using namespace qmirror;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;  // 0 = no stated budget
  std::function<bool(std::string&)> run;
};

bool check_eq(bool cond, const std::string& what, std::string& note) {
  if (!cond && note.empty()) note = what;
  return cond;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"AC-01", "hypergeometric values a1, a2 and the GW invariant, N in {3..6}",
                      1.0, [](std::string& note) {
                        bool ok = true;
                        for (int N : {3, 4, 5, 6}) {
                          auto a = hypergeometric_series(N, 2);
                          Rational a2(binomial(4, 2), boost::multiprecision::pow(Integer(2), N));
                          ok &= check_eq(a[1] == Rational(2), "a1 != 2", note);
                          ok &= check_eq(a[2] == a2, "a2 mismatch", note);
                          ok &= check_eq(gw_invariant(N, 1) == a[1], "gw(1) != a1", note);
                          ok &= check_eq(gw_invariant(N, 2) == a[2], "gw(2) != a2", note);
                        }
                        return ok;
                      }});

  criteria.push_back(
      {"AC-02", "triple-route agreement for every component, k<=5 (N=3,4) and k<=3 (N=5,6)",
       120.0, [](std::string& note) {
         bool ok = true;
         for (int N : {3, 4, 5, 6}) {
           int kmax = N <= 4 ? 5 : 3;
           BetaTable tab = beta_recursion(N, kmax);
           for (const auto& c : schubert_basis(N)) {
             for (int k = 1; k <= kmax; ++k) {
               auto closed = closed_form_coefficient(N, c, k);
               Rational ct = constant_term_coefficient(N, c, k);
               std::ostringstream os;
               os << "N=" << N << " " << c.str() << " k=" << k;
               ok &= check_eq(closed.value == tab.at(c, k), os.str() + " closed!=recursion",
                              note);
               ok &= check_eq(closed.value == ct, os.str() + " closed!=constant-term", note);
               int m = (N % 2 != 0) ? (N + 1) / 2 : (N + 2) / 2;
               int l = c.prime ? m - 1 : c.i;
               if (!(c.i == N && !c.prime))
                 ok &= check_eq(closed.hbar_exponent ==
                                    static_cast<std::int64_t>(k) * N - l,
                                os.str() + " hbar exponent", note);
             }
           }
         }
         return ok;
       }});

  criteria.push_back({"AC-03", "flat-section PDE in both directions, q^5 (N=3,4) and q^3 (N=5,6)",
                      0.0, [](std::string& note) {
                        bool ok = true;
                        for (int N : {3, 4, 5, 6}) {
                          auto rep = verify_flat(N, N <= 4 ? 5 : 3);
                          ok &= check_eq(rep.ok, "N=" + std::to_string(N) + ": " + rep.detail,
                                         note);
                        }
                        return ok;
                      }});

  criteria.push_back({"AC-04", "Dubrovin flatness certificate through q^4, N in {3..6}", 0.0,
                      [](std::string& note) {
                        bool ok = true;
                        for (int N : {3, 4, 5, 6})
                          ok &= check_eq(connection_flatness_certificate(N, 4),
                                         "commutator does not vanish at N=" + std::to_string(N),
                                         note);
                        return ok;
                      }});

  criteria.push_back(
      {"AC-05", "mirror-map equivalences for 3<=N<=10 and prz<->giv log-Jacobian = +-1, N=3,4,5",
       0.0, [](std::string& note) {
         bool ok = true;
         for (int N = 3; N <= 10; ++N) {
           std::vector<MapKind> kinds{MapKind::PrzToGiv, MapKind::GivToPrz,
                                      MapKind::PlueckerInLusztig, MapKind::LusztigInverse};
           if (N % 2 != 0) {
             kinds.push_back(MapKind::CanToPrzOdd);
             kinds.push_back(MapKind::CanToGivOdd);
           } else {
             kinds.push_back(MapKind::CanToPrzEven);
             kinds.push_back(MapKind::PrzToCanEven);
           }
           for (auto kind : kinds) {
             auto rep = verify_pullback(kind, N);
             ok &= check_eq(rep.ok, "pullback fails at N=" + std::to_string(N), note);
           }
         }
         for (int N : {3, 4, 5}) {
           ok &= check_eq(
               is_plus_minus_one(log_jacobian_det(coordinate_map(MapKind::PrzToGiv, N))),
               "prz->giv jacobian not +-1 at N=" + std::to_string(N), note);
           ok &= check_eq(
               is_plus_minus_one(log_jacobian_det(coordinate_map(MapKind::GivToPrz, N))),
               "giv->prz jacobian not +-1 at N=" + std::to_string(N), note);
         }
         return ok;
       }});

  criteria.push_back(
      {"AC-06", "critical points: exact gradients, values N*zeta and 0, counts, chart membership,"
                " N in {3..8}",
       30.0, [](std::string& note) {
         bool ok = true;
         for (int N = 3; N <= 8; ++N) {
           auto rep = verify_criticality(N);
           ok &= check_eq(rep.ok, "N=" + std::to_string(N) + ": " + rep.detail, note);
           auto set = closed_form_critical_points(N);
           int expected = (N % 2 != 0) ? N + 1 : N + 2;
           ok &= check_eq(set.point_count == expected, "point count", note);
           auto mem = chart_membership(N);
           for (const auto& e : mem.main)
             ok &= check_eq(e.member, "main family not in chart " + e.chart, note);
           for (const auto& row : mem.extras)
             for (const auto& e : row)
               ok &= check_eq(!e.member, "extra point in chart " + e.chart, note);
         }
         return ok;
       }});

  criteria.push_back({"AC-07", "cluster exchange relations and delta monomials on the torus,"
                               " m<=6; quadric pulls back to 0",
                      0.0, [](std::string& note) {
                        bool ok = true;
                        for (int m : {3, 4, 5, 6}) {
                          int N = 2 * m - 2;
                          ok &= check_eq(verify_exchange_relations(m).ok,
                                         "exchange relations at m=" + std::to_string(m), note);
                          auto img = coordinate_map(MapKind::PlueckerInLusztig, N).images;
                          img.emplace("q", RationalFunction::var("q"));
                          ok &= check_eq(RationalFunction(canonical_model(N).constraints[0])
                                             .substitute(img)
                                             .is_zero(),
                                         "quadric pullback at m=" + std::to_string(m), note);
                          for (int ell = 1; ell <= m - 2; ++ell) {
                            auto v = RationalFunction(delta_affine(N, ell)).substitute(img);
                            ok &= check_eq(v.is_polynomial() && v.num().term_count() == 1,
                                           "delta monomial at m=" + std::to_string(m), note);
                          }
                        }
                        return ok;
                      }});

  criteria.push_back(
      {"AC-08", "D-module identities: printed sets for m in {3,4,5}; odd solver for m in {2,3,4}",
       0.0, [](std::string& note) {
         bool ok = true;
         for (int m : {3, 4, 5}) {
           for (int i = 0; i <= 2 * m - 2; ++i) {
             auto rep = verify_b_side_identity(m, {i, false});
             ok &= check_eq(rep.ok, "even identity m=" + std::to_string(m) +
                                        " i=" + std::to_string(i) + ": " + rep.detail,
                            note);
           }
           auto repp = verify_b_side_identity(m, {m - 1, true});
           ok &= check_eq(repp.ok, "even identity m=" + std::to_string(m) + " mid", note);
         }
         for (int m : {2, 3, 4}) {
           auto rep = odd_intertwiner_check(m, 12345);
           ok &= check_eq(rep.ok, "odd m=" + std::to_string(m) + ": " + rep.detail, note);
         }
         return ok;
       }});

  criteria.push_back(
      {"AC-09", "Lie-matrix identities for m in {3,4,5}: Plucker extraction, minors, u2^T Q u2",
       0.0, [](std::string& note) {
         bool ok = true;
         for (int m : {3, 4, 5}) {
           auto rep = verify_minor_identities(m);
           ok &= check_eq(rep.ok, "m=" + std::to_string(m) + ": " + rep.detail, note);
           if (rep.ok && !rep.detail.empty() && note.empty()) note = rep.detail;
         }
         return ok;
       }});

  criteria.push_back({"AC-10", "quiver reading reproduces the Lusztig model for 3<=N<=12;"
                               " Gr(2,4) bridge",
                      0.0, [](std::string& note) {
                        bool ok = true;
                        for (int N = 3; N <= 12; ++N)
                          ok &= check_eq(superpotential_from_quiver(quadric_quiver(N)) ==
                                             lusztig_model(N).superpotential,
                                         "quiver superpotential at N=" + std::to_string(N),
                                         note);
                        ok &= check_eq(gr24_bridge(), "Gr(2,4) bridge", note);
                        return ok;
                      }});

  int failures = 0;
  for (auto& c : criteria) {
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && dt > c.budget_seconds) {
      ok = false;
      note = "runtime budget exceeded (" + std::to_string(dt) + "s > " +
             std::to_string(c.budget_seconds) + "s)" + (note.empty() ? "" : "; " + note);
    }
    std::printf("%s %s (%.2fs) %s%s%s\n", c.id.c_str(), ok ? "PASS" : "FAIL", dt,
                c.title.c_str(), note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
