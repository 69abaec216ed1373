// Command-line front end: builds the mirror models of quadrics, runs the
// verification suites, and emits series tables and quiver diagrams.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "qmirror/json_io.hpp"

using namespace qmirror;

namespace {

struct CaseResult {
  std::string line;
  bool ok = true;
};

// Runs independent verification cases, possibly in parallel (capped by
// MIRROR_QUADRIC_THREADS), and prints the buffered results in input order.
bool run_cases(const std::vector<std::pair<std::string, std::function<CaseResult()>>>& cases) {
  std::size_t threads = 1;
  if (const char* env = std::getenv("MIRROR_QUADRIC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 1) threads = static_cast<std::size_t>(v);
  }
  std::vector<CaseResult> results(cases.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) results[i] = cases[i].second();
  } else {
    std::size_t next = 0;
    while (next < cases.size()) {
      std::size_t batch = std::min(threads, cases.size() - next);
      std::vector<std::future<CaseResult>> futs;
      for (std::size_t j = 0; j < batch; ++j)
        futs.push_back(std::async(std::launch::async, cases[next + j].second));
      for (std::size_t j = 0; j < batch; ++j) results[next + j] = futs[j].get();
      next += batch;
    }
  }
  bool all = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::cout << (results[i].ok ? "PASS " : "FAIL ") << cases[i].first;
    if (!results[i].line.empty()) std::cout << ": " << results[i].line;
    std::cout << "\n";
    all = all && results[i].ok;
  }
  return all;
}

LGModel model_by_name(const std::string& name, int N) {
  if (name == "canonical") return canonical_model(N);
  if (name == "givental") return givental_model(N);
  if (name == "prz" || name == "przyjalkowski") return przyjalkowski_model(N);
  if (name == "lusztig") return lusztig_model(N);
  throw CLI::ValidationError("--model", "unknown model " + name);
}

std::string map_kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::PrzToGiv: return "prz->giv";
    case MapKind::GivToPrz: return "giv->prz";
    case MapKind::CanToPrzOdd: return "can->prz";
    case MapKind::CanToGivOdd: return "can->giv";
    case MapKind::CanToPrzEven: return "can->prz";
    case MapKind::PrzToCanEven: return "prz->can";
    case MapKind::PlueckerInLusztig: return "lusztig->can";
    case MapKind::LusztigInverse: return "can->lusztig";
  }
  return "?";
}

int run_verify_suite(int N, const std::string& suite, std::uint64_t seed) {
  bool odd = N % 2 != 0;
  int m = odd ? (N + 1) / 2 : (N + 2) / 2;
  std::vector<std::pair<std::string, std::function<CaseResult()>>> cases;
  auto want = [&suite](const std::string& s) { return suite == "all" || suite == s; };

  if (want("pullbacks")) {
    std::vector<MapKind> kinds{MapKind::PrzToGiv, MapKind::GivToPrz, MapKind::PlueckerInLusztig,
                               MapKind::LusztigInverse};
    if (odd) {
      kinds.push_back(MapKind::CanToPrzOdd);
      kinds.push_back(MapKind::CanToGivOdd);
    } else {
      kinds.push_back(MapKind::CanToPrzEven);
      kinds.push_back(MapKind::PrzToCanEven);
    }
    for (auto kind : kinds) {
      cases.emplace_back("pullbacks/" + map_kind_name(kind), [kind, N]() {
        auto rep = verify_pullback(kind, N);
        return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
      });
    }
    cases.emplace_back("pullbacks/log-jacobian prz<->giv", [N]() {
      bool ok = is_plus_minus_one(log_jacobian_det(coordinate_map(MapKind::PrzToGiv, N))) &&
                is_plus_minus_one(log_jacobian_det(coordinate_map(MapKind::GivToPrz, N)));
      return CaseResult{"", ok};
    });
  }
  if (want("cluster")) {
    if (!odd) {
      cases.emplace_back("cluster/exchange-relations", [m]() {
        auto rep = verify_exchange_relations(m);
        return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
      });
      cases.emplace_back("cluster/quadric-pullback", [N]() {
        auto img = coordinate_map(MapKind::PlueckerInLusztig, N).images;
        img.emplace("q", RationalFunction::var("q"));
        bool ok = RationalFunction(canonical_model(N).constraints[0]).substitute(img).is_zero();
        return CaseResult{"", ok};
      });
    }
    cases.emplace_back("cluster/delta-monomials", [N, m, odd]() {
      auto img = coordinate_map(MapKind::PlueckerInLusztig, N).images;
      img.emplace("q", RationalFunction::var("q"));
      int top = odd ? m - 1 : m - 2;
      for (int ell = 1; ell <= top; ++ell) {
        auto v = RationalFunction(delta_affine(N, ell)).substitute(img);
        if (!v.is_polynomial() || v.num().term_count() != 1)
          return CaseResult{"delta_" + std::to_string(ell) + " is not a torus monomial", false};
      }
      return CaseResult{"", true};
    });
  }
  if (want("critical")) {
    cases.emplace_back("critical/gradient-and-values", [N]() {
      auto rep = verify_criticality(N);
      return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
    });
    cases.emplace_back("critical/chart-membership", [N]() {
      auto mem = chart_membership(N);
      for (const auto& e : mem.main)
        if (!e.member) return CaseResult{"main family leaves chart " + e.chart, false};
      for (const auto& row : mem.extras)
        for (const auto& e : row)
          if (e.member) return CaseResult{"extra point lies in chart " + e.chart, false};
      return CaseResult{"", true};
    });
  }
  if (want("dmodule")) {
    if (odd) {
      cases.emplace_back("dmodule/odd-intertwiner", [m, seed]() {
        auto rep = odd_intertwiner_check(m, seed);
        return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
      });
    } else {
      for (int i = 0; i <= N; ++i) {
        cases.emplace_back("dmodule/even-identity-s" + std::to_string(i), [m, i]() {
          auto rep = verify_b_side_identity(m, {i, false});
          return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
        });
      }
      cases.emplace_back("dmodule/even-identity-s" + std::to_string(m - 1) + "p", [m]() {
        auto rep = verify_b_side_identity(m, {m - 1, true});
        return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
      });
    }
  }
  if (want("flatness")) {
    cases.emplace_back("flatness/certificate", [N]() {
      return CaseResult{"", connection_flatness_certificate(N, 4)};
    });
    cases.emplace_back("flatness/hypergeometric-section", [N]() {
      auto rep = verify_flat(N, N <= 4 ? 5 : 3);
      return CaseResult{rep.ok ? "" : rep.detail, rep.ok};
    });
  }
  if (want("lie-matrix") && !odd) {
    cases.emplace_back("lie-matrix/minor-identities", [m]() {
      auto rep = verify_minor_identities(m);
      return CaseResult{rep.detail, rep.ok};
    });
  }
  if (want("quiver")) {
    cases.emplace_back("quiver/superpotential", [N]() {
      bool ok = superpotential_from_quiver(quadric_quiver(N)) == lusztig_model(N).superpotential;
      return CaseResult{"", ok};
    });
    if (N == 4)
      cases.emplace_back("quiver/gr24-bridge", []() { return CaseResult{"", gr24_bridge()}; });
  }

  if (cases.empty()) {
    std::cerr << "unknown or empty suite for this parity: " << suite << "\n";
    return 2;
  }
  std::cout << "verify: quadric Q_" << N << ", suite " << suite << ", seed " << seed << "\n";
  return run_cases(cases) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mirror-symmetry toolkit for quadric hypersurfaces"};
  app.require_subcommand(1);

  int N = 3;
  int order = 3;
  int degree = 1;
  std::string model_name = "canonical";
  std::string component = "all";
  std::string route = "all";
  std::string suite = "all";
  std::uint64_t seed = 12345;
  bool as_json = false, as_csv = false, as_dot = false;

  auto* sp = app.add_subcommand("superpotential", "print a superpotential presentation");
  sp->add_option("--quadric", N, "dimension N of the quadric")->required();
  sp->add_option("--model", model_name, "canonical|givental|prz|lusztig");
  sp->add_flag("--json", as_json, "emit JSON");

  auto* se = app.add_subcommand("series", "flat-section coefficient table");
  se->add_option("--quadric", N)->required();
  se->add_option("--order", order, "q-adic truncation order");
  se->add_option("--component", component, "class index, 'mid', or 'all'");
  se->add_option("--route", route, "closed|recursion|constant-term|all");
  se->add_flag("--csv", as_csv, "emit CSV");

  auto* cr = app.add_subcommand("critical", "closed-form critical points");
  cr->add_option("--quadric", N)->required();
  cr->add_flag("--json", as_json, "emit JSON");

  auto* qv = app.add_subcommand("quiver", "superpotential quiver");
  qv->add_option("--quadric", N)->required();
  qv->add_flag("--dot", as_dot, "emit graphviz DOT");
  qv->add_flag("--json", as_json, "emit the cluster seed as JSON");

  auto* gw = app.add_subcommand("gw", "two-point Gromov-Witten invariant");
  gw->add_option("--quadric", N)->required();
  gw->add_option("--degree", degree, "curve degree k")->required();

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--quadric", N)->required();
  ve->add_option("--suite", suite,
                 "pullbacks|cluster|critical|dmodule|flatness|lie-matrix|quiver|all");
  ve->add_option("--seed", seed, "seed for the randomized solver (echoed in the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sp->parsed()) {
      LGModel model = model_by_name(model_name, N);
      if (as_json) {
        std::cout << to_json(model).dump(2) << "\n";
      } else {
        std::cout << model.name() << " superpotential of Q_" << N
                  << ":\n  W = " << model.superpotential.str() << "\n";
        for (const auto& c : model.constraints)
          std::cout << "  constraint: " << c.str() << " = 0\n";
      }
      return 0;
    }

    if (se->parsed()) {
      if (as_csv && route == "all" && component == "all") {
        std::cout << series_routes_csv(N, std::max(order, 1));
        return 0;
      }
      bool use_closed = route == "all" || route == "closed";
      bool use_rec = route == "all" || route == "recursion";
      bool use_ct = route == "all" || route == "constant-term";
      if (!use_closed && !use_rec && !use_ct)
        throw CLI::ValidationError("--route", "unknown route " + route);
      BetaTable tab = beta_recursion(N, std::max(order, 1));
      bool agree = true;
      std::cout << "N,class,k";
      if (use_closed) std::cout << ",closed";
      if (use_rec) std::cout << ",recursion";
      if (use_ct) std::cout << ",constant-term";
      std::cout << ",hbar_exponent\n";
      for (const auto& c : schubert_basis(N)) {
        if (component != "all") {
          if (component == "mid") {
            if (!c.prime) continue;
          } else if (c.prime || c.i != std::stoi(component)) {
            continue;
          }
        }
        for (int k = 0; k <= order; ++k) {
          auto closed = closed_form_coefficient(N, c, k);
          std::cout << N << "," << c.str() << "," << k;
          Rational rec = k == 0 ? closed.value : tab.at(c, k);
          Rational ct = k == 0 ? closed.value : constant_term_coefficient(N, c, k);
          if (use_closed) std::cout << "," << to_string(closed.value);
          if (use_rec) std::cout << "," << to_string(rec);
          if (use_ct) std::cout << "," << to_string(ct);
          std::cout << "," << closed.hbar_exponent << "\n";
          agree = agree && closed.value == rec && closed.value == ct;
        }
      }
      return agree ? 0 : 1;
    }

    if (cr->parsed()) {
      auto points = closed_form_critical_points(N);
      auto mem = chart_membership(N);
      if (as_json) {
        std::cout << to_json(points, mem).dump(2) << "\n";
      } else {
        std::cout << "critical points of the Q_" << N << " mirror (" << points.point_count
                  << " = dim H*(Q_" << N << ")):\n";
        std::cout << "  main family (zeta^" << N << " = 4q), critical value "
                  << points.main_value.str() << ":\n";
        for (const auto& [v, val] : points.main_family)
          std::cout << "    " << v << " = " << val.str() << "\n";
        for (std::size_t i = 0; i < points.extra_points.size(); ++i) {
          std::cout << "  extra point " << i + 1
                    << (N % 2 != 0 ? std::string(" (rational)")
                                   : std::string(" (s^2 = ") + (points.eps == 1 ? "q" : "-q") +
                                         ")")
                    << ", critical value 0:\n";
          for (const auto& [v, val] : points.extra_points[i])
            if (!val.is_zero()) std::cout << "    " << v << " = " << val.str() << "\n";
        }
      }
      return 0;
    }

    if (qv->parsed()) {
      auto quiver = quadric_quiver(N);
      if (as_dot) {
        std::cout << quiver.to_dot();
      } else if (as_json) {
        if (N % 2 != 0) throw CLI::ValidationError("--json", "cluster seeds exist for even N");
        std::cout << to_json(cluster_seed((N + 2) / 2)).dump(2) << "\n";
      } else {
        std::cout << "quiver of Q_" << N << ": " << quiver.vertices.size() << " vertices, "
                  << quiver.arrows.size()
                  << " arrows\n  superpotential: " << superpotential_from_quiver(quiver).str()
                  << "\n";
      }
      return 0;
    }

    if (gw->parsed()) {
      std::cout << to_string(gw_invariant(N, degree)) << "\n";
      return 0;
    }

    if (ve->parsed()) return run_verify_suite(N, suite, seed);
  } catch (const CLI::ParseError& e) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
