#include "qmirror/dmodule.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qmirror {

namespace {

RationalFunction RV(const Symbol& s) { return RationalFunction::var(s); }

void require_m(int m) {
  if (m < 3) throw std::invalid_argument("even charts need m >= 3");
}

// delta_j as a chart symbol / frozen product (delta_0 = p_{2m-2},
// delta_{m-2} = p_{m-1} p'_{m-1} for even; delta_0 = p_{2m-1} for odd).
RationalFunction delta_expr_even(int m, int j) {
  if (j == 0) return RV(delta_var(0));
  if (j == m - 2) return RV(pvar(m - 1)) * RV(pprime_var(m - 1));
  return RV(delta_var(j));
}

RationalFunction delta_expr_odd(int m, int j) {
  if (j == 0) return RV(pvar(2 * m - 1));
  return RV(delta_var(j));
}

}  // namespace

std::vector<Symbol> chart_vars(int m, Chart chart) {
  require_m(m);
  std::vector<Symbol> v;
  if (chart == Chart::C1)
    for (int i = 1; i <= m - 2; ++i) v.push_back(pvar(i));
  else
    for (int i = 2 * m - 3; i >= m; --i) v.push_back(pvar(i));
  for (int j = 0; j <= m - 3; ++j) v.push_back(delta_var(j));
  v.push_back(pvar(m - 1));
  v.push_back(pprime_var(m - 1));
  return v;
}

std::map<Symbol, RationalFunction> chart_elimination(int m, Chart chart) {
  require_m(m);
  std::map<Symbol, RationalFunction> sub;
  sub["q"] = RV("q");
  sub[pvar(m - 1)] = RV(pvar(m - 1));
  sub[pprime_var(m - 1)] = RV(pprime_var(m - 1));
  sub[pvar(2 * m - 2)] = RV(delta_var(0));
  if (chart == Chart::C1) {
    for (int i = 1; i <= m - 2; ++i) sub[pvar(i)] = RV(pvar(i));
    for (int j = 1; j <= m - 2; ++j)
      sub[pvar(2 * m - 2 - j)] = (delta_expr_even(m, j - 1) + delta_expr_even(m, j)) / RV(pvar(j));
  } else {
    for (int i = m; i <= 2 * m - 3; ++i) sub[pvar(i)] = RV(pvar(i));
    for (int j = 1; j <= m - 2; ++j)
      sub[pvar(j)] = (delta_expr_even(m, j - 1) + delta_expr_even(m, j)) / RV(pvar(2 * m - 2 - j));
  }
  return sub;
}

RationalFunction express_W_in_chart(int m, Chart chart) {
  require_m(m);
  return canonical_model(2 * m - 2).superpotential.substitute(chart_elimination(m, chart));
}

namespace {

// the proof's coefficient sets; every listed vector field enters with -1
// except the doubled deltas of the C1 relations
std::map<Symbol, Rational> printed_coefficients(int m, SchubertClass which) {
  std::map<Symbol, Rational> mc;
  auto add = [&mc](const Symbol& s, int v) { mc[s] = Rational(v); };
  if (which.prime) {
    add(pvar(m - 1), -1);
    for (int j = m; j <= 2 * m - 3; ++j) add(pvar(j), -1);
    for (int j = 0; j <= m - 3; ++j) add(delta_var(j), -1);
    return mc;
  }
  int i = which.i;
  if (i <= m - 3) {
    for (int j = i + 1; j <= m - 2; ++j) add(pvar(j), -1);
    add(pvar(m - 1), -1);
    add(pprime_var(m - 1), -1);
    for (int j = 0; j < i; ++j) add(delta_var(j), -1);
    for (int j = i; j <= m - 3; ++j) add(delta_var(j), -2);
  } else if (i == m - 2) {
    add(pvar(m - 1), -1);
    add(pprime_var(m - 1), -1);
    for (int j = 0; j <= m - 3; ++j) add(delta_var(j), -1);
  } else if (i == m - 1) {
    add(pprime_var(m - 1), -1);
    for (int j = m; j <= 2 * m - 3; ++j) add(pvar(j), -1);
    for (int j = 0; j <= m - 3; ++j) add(delta_var(j), -1);
  } else if (i <= 2 * m - 4) {
    for (int j = i + 1; j <= 2 * m - 3; ++j) add(pvar(j), -1);
    for (int j = 0; j <= 2 * m - 3 - i && j <= m - 3; ++j) add(delta_var(j), -1);
  } else if (i == 2 * m - 3) {
    add(delta_var(0), -1);
  }
  // i = 2m-2: empty set
  return mc;
}

// sigma_1 * sigma_which written in the chart's coordinates
RationalFunction chevalley_target(int m, SchubertClass which, Chart chart,
                                  const std::map<Symbol, RationalFunction>& elim) {
  if (which.prime) return elim.at(pvar(m));
  int i = which.i;
  if (i == m - 2) return elim.at(pvar(m - 1)) + elim.at(pprime_var(m - 1));
  if (i == 2 * m - 3) return elim.at(pvar(2 * m - 2)) + RV("q");
  if (i == 2 * m - 2) return RV("q") * elim.at(pvar(1));
  (void)chart;
  return elim.at(pvar(i + 1));
}

RationalFunction pivot_expr(SchubertClass which, int m,
                            const std::map<Symbol, RationalFunction>& elim) {
  if (which.prime) return elim.at(pprime_var(m - 1));
  if (which.i == 0) return RationalFunction(Rational(1));
  return elim.at(pvar(which.i));
}


}  // namespace

std::optional<std::int64_t> chart_weight(int m, bool odd_case, const RationalFunction& f) {
  int N = odd_case ? 2 * m - 1 : 2 * m - 2;
  auto mono_weight = [&](const Monomial& mono) {
    std::int64_t w = 0;
    for (const auto& [s, e] : mono.exponents()) {
      std::int64_t ws;
      if (s == "q")
        ws = N;
      else if (s.rfind("delta", 0) == 0)
        ws = N;
      else if (s.rfind("pp", 0) == 0)
        ws = m - 1;
      else if (s.rfind("p", 0) == 0)
        ws = std::stoll(s.substr(1));
      else
        throw std::invalid_argument("chart_weight: unexpected symbol " + s);
      w += ws * e;
    }
    return w;
  };
  auto poly_weight = [&](const LaurentPolynomial& p) -> std::optional<std::int64_t> {
    std::optional<std::int64_t> w;
    for (const auto& [mono, coef] : p.terms()) {
      std::int64_t mw = mono_weight(mono);
      if (!w)
        w = mw;
      else if (*w != mw)
        return std::nullopt;
    }
    return w ? w : std::optional<std::int64_t>(0);
  };
  auto nw = poly_weight(f.num());
  if (!nw) return std::nullopt;
  std::int64_t total = *nw;
  for (const auto& [fac, e] : f.den_factors()) {
    auto fw = poly_weight(fac);
    if (!fw) return std::nullopt;
    total -= *fw * e;
  }
  return total;
}

IdentityReport verify_b_side_identity(int m, SchubertClass which) {
  require_m(m);
  IdentityReport rep;
  int i = which.prime ? m - 1 : which.i;
  if (which.prime && which.i != m - 1) throw std::invalid_argument("invalid middle class");
  if (i < 0 || i > 2 * m - 2) throw std::invalid_argument("class index out of range");
  rep.chart = (!which.prime && which.i <= m - 2) ? Chart::C1 : Chart::C2;
  rep.identity = "q dW/dq * " + which.str();

  auto elim = chart_elimination(m, rep.chart);
  RationalFunction W = express_W_in_chart(m, rep.chart);
  RationalFunction pivot = pivot_expr(which, m, elim);
  RationalFunction target =
      RV("q") * W.derivative("q") * pivot - chevalley_target(m, which, rep.chart, elim);

  // degree pre-check: the residual is homogeneous of weight i+1
  if (!target.is_zero()) {
    auto w = chart_weight(m, false, target);
    if (!w || *w != i + 1) {
      rep.ok = false;
      rep.detail = "residual target is not homogeneous of weight " + std::to_string(i + 1);
      return rep;
    }
  }

  rep.coefficients = printed_coefficients(m, which);
  RationalFunction combo;
  for (const auto& [c, mc] : rep.coefficients)
    combo = combo + RationalFunction(LaurentPolynomial::constant(mc)) * RV(c) * W.derivative(c);
  combo = pivot * combo;
  if (!target.equals(combo)) {
    rep.ok = false;
    rep.detail = "residual = " + (target - combo).str();
    return rep;
  }
  rep.ok = true;
  return rep;
}

SolveOutcome solve_vector_field_coefficients(const std::vector<Symbol>& vars,
                                             const RationalFunction& W,
                                             const Symbol& pivot_var,
                                             const RationalFunction& pivot,
                                             const RationalFunction& target,
                                             std::uint64_t seed) {
  SolveOutcome out;
  std::vector<Symbol> basis_vars;
  for (const auto& v : vars)
    if (v != pivot_var) basis_vars.push_back(v);
  std::vector<RationalFunction> basis;
  for (const auto& v : basis_vars) basis.push_back(pivot * RV(v) * W.derivative(v));

  if (target.is_zero()) {
    out.status = SolveOutcome::Status::Solved;
    for (const auto& v : basis_vars) out.coefficients[v] = 0;
    return out;
  }

  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                               43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::mt19937_64 rng(seed);
  const std::size_t n = basis.size();
  const std::size_t rows = n + 4;

  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  int budget = 32;
  while (A.size() < rows && budget > 0) {
    --budget;
    std::vector<int> pool(std::begin(primes), std::end(primes));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::map<Symbol, Rational> point;
    std::size_t k = 0;
    for (const auto& v : vars) point[v] = Rational(pool[k++ % pool.size()]);
    point["q"] = Rational(pool[k++ % pool.size()]);
    std::vector<Rational> row;
    bool good = true;
    for (const auto& g : basis) {
      auto val = g.evaluate(point);
      if (!val) {
        good = false;
        break;
      }
      row.push_back(*val);
    }
    auto tv = good ? target.evaluate(point) : std::nullopt;
    if (!good || !tv) continue;
    A.push_back(std::move(row));
    b.push_back(*tv);
  }
  if (A.size() < rows) {
    out.status = SolveOutcome::Status::SingularSample;
    return out;
  }

  // exact least-structure solve: Gaussian elimination, free unknowns set to 0
  std::size_t rcount = A.size();
  std::vector<Rational> x(n, Rational(0));
  std::size_t r = 0;
  std::vector<int> col_of_row;
  for (std::size_t c = 0; c < n && r < rcount; ++c) {
    std::size_t pr = r;
    while (pr < rcount && A[pr][c] == 0) ++pr;
    if (pr == rcount) continue;
    std::swap(A[pr], A[r]);
    std::swap(b[pr], b[r]);
    Rational inv = Rational(1) / A[r][c];
    for (std::size_t j = c; j < n; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i2 = 0; i2 < rcount; ++i2) {
      if (i2 == r || A[i2][c] == 0) continue;
      Rational f = A[i2][c];
      for (std::size_t j = c; j < n; ++j) A[i2][j] -= f * A[r][j];
      b[i2] -= f * b[r];
    }
    col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  // inconsistent rows => no solution candidate
  for (std::size_t i2 = r; i2 < rcount; ++i2)
    if (b[i2] != 0) {
      out.status = SolveOutcome::Status::NoSolution;
      return out;
    }
  for (std::size_t idx = 0; idx < col_of_row.size(); ++idx) x[col_of_row[idx]] = b[idx];

  // exact certificate
  RationalFunction combo;
  for (std::size_t idx = 0; idx < n; ++idx)
    if (x[idx] != 0)
      combo = combo + RationalFunction(LaurentPolynomial::constant(x[idx])) * basis[idx];
  if (!combo.equals(target)) {
    out.status = SolveOutcome::Status::NoSolution;
    return out;
  }
  out.status = SolveOutcome::Status::Solved;
  for (std::size_t idx = 0; idx < n; ++idx) out.coefficients[basis_vars[idx]] = x[idx];
  return out;
}

OddReport odd_intertwiner_check(int m, std::uint64_t seed) {
  OddReport rep;
  if (m < 2) throw std::invalid_argument("odd check needs m >= 2");
  int N = 2 * m - 1;

  // odd chart variables and eliminations (C1: p_1..p_{m-1}; C2: p_{2m-2}..p_m)
  auto odd_chart_vars = [&](bool c1) {
    std::vector<Symbol> v;
    if (c1)
      for (int i = 1; i <= m - 1; ++i) v.push_back(pvar(i));
    else
      for (int i = 2 * m - 2; i >= m; --i) v.push_back(pvar(i));
    for (int j = 1; j <= m - 1; ++j) v.push_back(delta_var(j));
    v.push_back(pvar(N));
    return v;
  };
  auto odd_elim = [&](bool c1) {
    std::map<Symbol, RationalFunction> sub;
    sub["q"] = RV("q");
    sub[pvar(N)] = RV(pvar(N));
    if (c1) {
      for (int i = 1; i <= m - 1; ++i) sub[pvar(i)] = RV(pvar(i));
      for (int j = 1; j <= m - 1; ++j)
        sub[pvar(2 * m - 1 - j)] =
            (delta_expr_odd(m, j - 1) + delta_expr_odd(m, j)) / RV(pvar(j));
    } else {
      for (int i = m; i <= 2 * m - 2; ++i) sub[pvar(i)] = RV(pvar(i));
      for (int j = 1; j <= m - 1; ++j)
        sub[pvar(j)] =
            (delta_expr_odd(m, j - 1) + delta_expr_odd(m, j)) / RV(pvar(2 * m - 1 - j));
    }
    return sub;
  };

  RationalFunction Wcan = canonical_model(N).superpotential;
  for (int i = 0; i <= N; ++i) {
    bool c1 = i <= m - 1;
    auto vars = odd_chart_vars(c1);
    auto elim = odd_elim(c1);
    RationalFunction W = Wcan.substitute(elim);
    RationalFunction pivot = (i == 0) ? RationalFunction(Rational(1)) : elim.at(pvar(i));
    Symbol pivot_var = (i == 0) ? Symbol("") : pvar(i);
    RationalFunction image;
    if (i == m - 1)
      image = Rational(2) * elim.at(pvar(m));
    else if (i == N - 1)
      image = elim.at(pvar(N)) + RV("q");
    else if (i == N)
      image = RV("q") * elim.at(pvar(1));
    else
      image = elim.at(pvar(i + 1));
    RationalFunction target = RV("q") * W.derivative("q") * pivot - image;

    if (!target.is_zero()) {
      auto w = chart_weight(m, true, target);
      if (!w || *w != i + 1) {
        rep.ok = false;
        rep.detail = "odd residual not homogeneous at i=" + std::to_string(i);
        return rep;
      }
    }
    auto sol = solve_vector_field_coefficients(vars, W, pivot_var, pivot, target, seed);
    if (sol.status != SolveOutcome::Status::Solved) {
      rep.ok = false;
      rep.detail = "odd intertwiner fails at i=" + std::to_string(i) +
                   (sol.status == SolveOutcome::Status::SingularSample ? " (singular samples)"
                                                                       : " (no solution)");
      return rep;
    }
    rep.coefficients[i] = sol.coefficients;
  }
  rep.ok = true;
  return rep;
}

}  // namespace qmirror
