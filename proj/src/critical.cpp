#include "qmirror/critical.hpp"

#include <sstream>
#include <stdexcept>

namespace qmirror {

namespace {

bool odd(int N) { return N % 2 != 0; }
int half_m(int N) { return odd(N) ? (N + 1) / 2 : (N + 2) / 2; }

void require_N(int N) {
  if (N < 3) throw std::invalid_argument("quadric dimension must be >= 3");
}

// the even superpotential with p'_{m-1} eliminated on the chart p_{m-1} != 0
RationalFunction restricted_superpotential(int N) {
  if (odd(N)) return canonical_model(N).superpotential;
  int m = half_m(N);
  auto model = canonical_model(N);
  std::map<Symbol, RationalFunction> sub;
  for (const auto& v : model.vars) sub[v] = RationalFunction::var(v);
  sub[pprime_var(m - 1)] =
      RationalFunction(delta_affine(N, m - 2), LaurentPolynomial::var(pvar(m - 1)));
  sub["q"] = RationalFunction::var("q");
  return model.superpotential.substitute(sub);
}

std::vector<Symbol> restricted_vars(int N) {
  std::vector<Symbol> vars;
  for (const auto& v : canonical_model(N).vars)
    if (v != pprime_var(half_m(N) - 1) || odd(N)) vars.push_back(v);
  return vars;
}

}  // namespace

CriticalPointSet closed_form_critical_points(int N) {
  require_N(N);
  int m = half_m(N);
  CriticalPointSet set;
  set.N = N;

  ZetaElement proto(N);
  auto zpow = [&](int k) { return ZetaElement::zeta_power(N, k); };
  if (odd(N)) {
    for (int j = 1; j <= m - 1; ++j) set.main_family[pvar(j)] = zpow(j);
    for (int j = m; j <= 2 * m - 2; ++j)
      set.main_family[pvar(j)] = zpow(j).scaled(Rational(1, 2));
    set.main_family[pvar(N)] = ZetaElement::scalar(N, qscalar_q());

    set.eps = 1;
    std::map<Symbol, SqrtQElement> extra;
    for (int j = 1; j <= 2 * m - 2; ++j)
      extra[pvar(j)] = SqrtQElement::scalar(QScalar(), set.eps);
    extra[pvar(N)] = SqrtQElement::scalar(qscalar(Rational(-1)) * qscalar_q(), set.eps);
    set.extra_points.push_back(extra);
    set.point_count = N + 1;
  } else {
    for (int j = 1; j <= m - 2; ++j) set.main_family[pvar(j)] = zpow(j);
    for (int j = m - 1; j <= 2 * m - 3; ++j)
      set.main_family[pvar(j)] = zpow(j).scaled(Rational(1, 2));
    set.main_family[pprime_var(m - 1)] = zpow(m - 1).scaled(Rational(1, 2));
    set.main_family[pvar(N)] = ZetaElement::scalar(N, qscalar_q());

    set.eps = (m % 2 == 0) ? 1 : -1;  // the quadric forces p_{m-1}^2 = (-1)^m q
    for (int sign : {1, -1}) {
      std::map<Symbol, SqrtQElement> extra;
      for (const auto& v : canonical_model(N).vars)
        extra[v] = SqrtQElement::scalar(QScalar(), set.eps);
      extra[pvar(m - 1)] = SqrtQElement::root(set.eps).scaled(Rational(sign));
      extra[pprime_var(m - 1)] = SqrtQElement::root(set.eps).scaled(Rational(-sign));
      extra[pvar(N)] = SqrtQElement::scalar(qscalar(Rational(-1)) * qscalar_q(), set.eps);
      set.extra_points.push_back(extra);
    }
    set.point_count = N + 2;
  }
  set.main_value = ZetaElement::zeta_power(N, 1).scaled(Rational(N));
  (void)proto;
  return set;
}

CriticalValues critical_values(int N) {
  auto set = closed_form_critical_points(N);
  CriticalValues v;
  v.main = set.main_value;
  for (std::size_t i = 0; i < set.extra_points.size(); ++i)
    v.extras.push_back(SqrtQElement::scalar(QScalar(), set.eps));
  return v;
}

CriticalityReport verify_criticality(int N) {
  CriticalityReport rep;
  require_N(N);
  int m = half_m(N);
  auto set = closed_form_critical_points(N);
  RationalFunction W = restricted_superpotential(N);
  auto vars = restricted_vars(N);

  std::ostringstream os;
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.detail = what;
    return rep;
  };

  // main family, over the zeta algebra
  ZetaElement zproto(N);
  std::map<Symbol, ZetaElement> zvals;
  for (const auto& v : vars) zvals[v] = set.main_family.at(v);
  zvals["q"] = ZetaElement::scalar(N, qscalar_q());
  for (const auto& v : vars) {
    ZetaElement g = eval_rf(W.derivative(v), zvals, zproto);
    if (!g.is_zero())
      return fail("gradient does not vanish at the main family: d/d" + v + " = " + g.str());
  }
  // consistency of the eliminated coordinate and the critical value
  if (!odd(N)) {
    ZetaElement pp = eval_rf(
        RationalFunction(delta_affine(N, m - 2), LaurentPolynomial::var(pvar(m - 1))), zvals,
        zproto);
    if (!(pp == set.main_family.at(pprime_var(m - 1))))
      return fail("eliminated middle coordinate disagrees with the closed form");
  }
  ZetaElement val = eval_rf(W, zvals, zproto);
  if (!(val == set.main_value)) return fail("main critical value is not N*zeta: " + val.str());

  // delta_l = q along the main family
  int dtop = odd(N) ? m - 1 : m - 2;
  for (int ell = 1; ell <= dtop; ++ell) {
    ZetaElement dv = eval_laurent(delta_affine(N, ell), zvals, zproto);
    if (!(dv == ZetaElement::scalar(N, qscalar_q())))
      return fail("delta_" + std::to_string(ell) + " != q at the main family: " + dv.str());
  }

  // extra points
  for (std::size_t idx = 0; idx < set.extra_points.size(); ++idx) {
    const auto& pt = set.extra_points[idx];
    SqrtQElement sproto = SqrtQElement::scalar(QScalar(), set.eps);
    std::map<Symbol, SqrtQElement> svals;
    for (const auto& v : vars) svals[v] = pt.at(v);
    svals["q"] = SqrtQElement::scalar(qscalar_q(), set.eps);
    for (const auto& v : vars) {
      SqrtQElement g = eval_rf(W.derivative(v), svals, sproto);
      if (!g.is_zero())
        return fail("gradient does not vanish at extra point " + std::to_string(idx) +
                    ": d/d" + v + " = " + g.str());
    }
    if (!odd(N)) {
      SqrtQElement pp = eval_rf(
          RationalFunction(delta_affine(N, m - 2), LaurentPolynomial::var(pvar(m - 1))), svals,
          sproto);
      if (!(pp == pt.at(pprime_var(m - 1))))
        return fail("eliminated coordinate disagrees at an extra point");
    }
    SqrtQElement v0 = eval_rf(W, svals, sproto);
    if (!v0.is_zero()) return fail("extra critical value is not 0: " + v0.str());
  }

  rep.ok = true;
  return rep;
}

namespace {

template <class A>
ChartMembership::Entry chart_entry(const std::string& name,
                                   const std::map<Symbol, RationalFunction>& images,
                                   const std::vector<RationalFunction>& extra_nonzero,
                                   const std::map<Symbol, A>& vals, const A& proto) {
  ChartMembership::Entry entry;
  entry.chart = name;
  entry.member = true;
  for (const auto& [v, f] : images) {
    auto value = try_eval_rf(f, vals, proto);
    if (!value) {
      entry.member = false;
      entry.failing.push_back(v + " undefined (" + f.str() + ")");
    } else if (value->is_zero()) {
      entry.member = false;
      entry.failing.push_back(v + " = 0 (" + f.str() + ")");
    }
  }
  for (const auto& f : extra_nonzero) {
    auto value = try_eval_rf(f, vals, proto);
    if (!value || value->is_zero()) {
      entry.member = false;
      entry.failing.push_back(f.str() + " = 0");
    }
  }
  return entry;
}

}  // namespace

ChartMembership chart_membership(int N) {
  require_N(N);
  auto set = closed_form_critical_points(N);
  ChartMembership out;

  struct Chart {
    std::string name;
    std::map<Symbol, RationalFunction> images;
    std::vector<RationalFunction> extra_nonzero;
  };
  std::vector<Chart> charts;
  if (odd(N)) {
    charts.push_back({"przyjalkowski", coordinate_map(MapKind::CanToPrzOdd, N).images, {}});
    charts.push_back({"givental", coordinate_map(MapKind::CanToGivOdd, N).images, {}});
  } else {
    auto prz = coordinate_map(MapKind::CanToPrzEven, N).images;
    charts.push_back({"przyjalkowski", prz, {}});
    // the Givental locus is the Przyjalkowski torus minus {z_N + q = 0}
    RationalFunction zq = prz.at("z" + std::to_string(N)) + RationalFunction::var("q");
    charts.push_back({"givental", prz, {zq}});
  }
  charts.push_back({"lusztig", coordinate_map(MapKind::LusztigInverse, N).images, {}});

  ZetaElement zproto(N);
  std::map<Symbol, ZetaElement> zvals = set.main_family;
  zvals["q"] = ZetaElement::scalar(N, qscalar_q());
  for (const auto& ch : charts)
    out.main.push_back(chart_entry(ch.name, ch.images, ch.extra_nonzero, zvals, zproto));

  for (const auto& pt : set.extra_points) {
    SqrtQElement sproto = SqrtQElement::scalar(QScalar(), set.eps);
    std::map<Symbol, SqrtQElement> svals = pt;
    svals["q"] = SqrtQElement::scalar(qscalar_q(), set.eps);
    std::vector<ChartMembership::Entry> row;
    for (const auto& ch : charts)
      row.push_back(chart_entry(ch.name, ch.images, ch.extra_nonzero, svals, sproto));
    out.extras.push_back(row);
  }
  return out;
}

}  // namespace qmirror
