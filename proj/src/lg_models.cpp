#include "qmirror/lg_models.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qmirror {

namespace {

bool odd(int N) { return N % 2 != 0; }
int half_m(int N) { return odd(N) ? (N + 1) / 2 : (N + 2) / 2; }

RationalFunction RF(const LaurentPolynomial& p) { return RationalFunction(p); }
LaurentPolynomial LV(const Symbol& s) { return LaurentPolynomial::var(s); }
RationalFunction RV(const Symbol& s) { return RationalFunction::var(s); }

void require_N(int N) {
  if (N < 3) throw std::invalid_argument("quadric dimension must be >= 3");
}

std::map<Symbol, RationalFunction> with_q(std::map<Symbol, RationalFunction> m) {
  m.emplace("q", RV("q"));
  return m;
}

}  // namespace

std::string LGModel::name() const {
  switch (kind) {
    case ModelKind::Canonical: return "canonical";
    case ModelKind::Givental: return "givental";
    case ModelKind::Przyjalkowski: return "przyjalkowski";
    case ModelKind::Lusztig: return "lusztig";
  }
  return "?";
}

Symbol pvar(int i) { return "p" + std::to_string(i); }
Symbol pprime_var(int i) { return "pp" + std::to_string(i); }
Symbol delta_var(int i) { return "delta" + std::to_string(i); }

std::vector<Symbol> lusztig_vars(int N) {
  require_N(N);
  int m = half_m(N);
  std::vector<Symbol> v;
  int atop = odd(N) ? m - 1 : m - 2;
  for (int i = 1; i <= atop; ++i) v.push_back("a" + std::to_string(i));
  if (!odd(N)) v.push_back("d");
  v.push_back("c");
  for (int i = atop; i >= 1; --i) v.push_back("b" + std::to_string(i));
  return v;
}

static LaurentPolynomial delta_build(int N, int ell, bool affine) {
  auto P = [&](int j) {
    if (j == 0 && affine) return LaurentPolynomial::one();
    return LV(pvar(j));
  };
  LaurentPolynomial d;
  for (int k = 0; k <= ell; ++k) {
    LaurentPolynomial t = P(ell - k) * P(N - ell + k);
    d += (k % 2 == 0) ? t : -t;
  }
  return d;
}

LaurentPolynomial delta_poly_ext(int N, int ell) {
  require_N(N);
  int m = half_m(N);
  int hi = odd(N) ? m - 1 : m - 2;
  if (ell < 0 || ell > hi) throw std::invalid_argument("delta index out of range");
  return delta_build(N, ell, false);
}

LaurentPolynomial delta_poly(int N, int ell) {
  require_N(N);
  int m = half_m(N);
  int hi = odd(N) ? m - 1 : m - 3;
  if (ell < 1 || ell > hi) throw std::invalid_argument("delta index out of range");
  return delta_build(N, ell, false);
}

LaurentPolynomial delta_affine(int N, int ell) {
  require_N(N);
  int m = half_m(N);
  int hi = odd(N) ? m - 1 : m - 2;
  if (ell < 0 || ell > hi) throw std::invalid_argument("delta index out of range");
  return delta_build(N, ell, true);
}

LaurentPolynomial quadric_relation(int N) {
  require_N(N);
  if (odd(N)) throw std::invalid_argument("quadric relation exists for even N only");
  int m = half_m(N);
  LaurentPolynomial r = LV(pvar(m - 1)) * LV(pprime_var(m - 1));
  for (int j = 1; j <= m - 1; ++j) {
    LaurentPolynomial t = LV(pvar(m - 1 - j)) * LV(pvar(m - 1 + j));
    r += (j % 2 == 0) ? t : -t;
  }
  return r;
}

LGModel canonical_model(int N) {
  require_N(N);
  int m = half_m(N);
  LGModel model;
  model.kind = ModelKind::Canonical;
  model.N = N;
  if (odd(N)) {
    for (int i = 1; i <= N; ++i) model.vars.push_back(pvar(i));
    RationalFunction W = RV(pvar(1));
    for (int ell = 1; ell <= m - 1; ++ell)
      W = W + RationalFunction(LV(pvar(ell + 1)) * LV(pvar(2 * m - 1 - ell)),
                               delta_affine(N, ell));
    W = W + RationalFunction(LV("q") * LV(pvar(1)), LV(pvar(N)));
    model.superpotential = W;
  } else {
    for (int i = 1; i <= m - 1; ++i) model.vars.push_back(pvar(i));
    model.vars.push_back(pprime_var(m - 1));
    for (int i = m; i <= N; ++i) model.vars.push_back(pvar(i));
    RationalFunction W = RV(pvar(1));
    for (int ell = 1; ell <= m - 3; ++ell)
      W = W + RationalFunction(LV(pvar(ell + 1)) * LV(pvar(2 * m - 2 - ell)),
                               delta_affine(N, ell));
    W = W + RationalFunction(LV(pvar(m)), LV(pvar(m - 1)));
    W = W + RationalFunction(LV(pvar(m)), LV(pprime_var(m - 1)));
    W = W + RationalFunction(LV("q") * LV(pvar(1)), LV(pvar(N)));
    model.superpotential = W;
    // affine quadric relation (p0 = 1)
    LaurentPolynomial rel = LV(pvar(m - 1)) * LV(pprime_var(m - 1));
    for (int j = 1; j <= m - 1; ++j) {
      LaurentPolynomial pj = (m - 1 - j == 0) ? LaurentPolynomial::one() : LV(pvar(m - 1 - j));
      LaurentPolynomial t = pj * LV(pvar(m - 1 + j));
      rel += (j % 2 == 0) ? t : -t;
    }
    model.constraints.push_back(rel);
  }
  return model;
}

LGModel givental_model(int N) {
  require_N(N);
  LGModel model;
  model.kind = ModelKind::Givental;
  model.N = N;
  for (int i = 1; i <= N + 2; ++i) model.vars.push_back("nu" + std::to_string(i));
  RationalFunction W;
  for (int i = 1; i <= N; ++i) W = W + RV(model.vars[i - 1]);
  model.superpotential = W;
  LaurentPolynomial prod = LaurentPolynomial::one();
  for (const auto& v : model.vars) prod = prod * LV(v);
  model.constraints.push_back(prod - LV("q"));
  model.constraints.push_back(LV(model.vars[N]) + LV(model.vars[N + 1]) -
                              LaurentPolynomial::one());
  return model;
}

LGModel przyjalkowski_model(int N) {
  require_N(N);
  LGModel model;
  model.kind = ModelKind::Przyjalkowski;
  model.N = N;
  for (int i = 1; i <= N; ++i) model.vars.push_back("z" + std::to_string(i));
  RationalFunction W;
  for (int i = 1; i <= N - 1; ++i) W = W + RV(model.vars[i - 1]);
  LaurentPolynomial prod = LaurentPolynomial::one();
  for (const auto& v : model.vars) prod = prod * LV(v);
  LaurentPolynomial zq = LV(model.vars[N - 1]) + LV("q");
  W = W + RationalFunction(zq * zq, prod);
  model.superpotential = W;
  return model;
}

LGModel lusztig_model(int N) {
  require_N(N);
  LGModel model;
  model.kind = ModelKind::Lusztig;
  model.N = N;
  model.vars = lusztig_vars(N);
  LaurentPolynomial sum;
  LaurentPolynomial prod = LaurentPolynomial::one();
  for (const auto& v : model.vars) {
    sum += LV(v);
    prod = prod * LV(v);
  }
  RationalFunction W = RF(sum) + RationalFunction(LV("q") * (LV("a1") + LV("b1")), prod);
  model.superpotential = W;
  return model;
}

// ------------------------------------------------------------ coordinate maps

namespace {

std::map<Symbol, RationalFunction> pluecker_images_map(int N) {
  int m = half_m(N);
  std::map<Symbol, RationalFunction> img;
  auto amono = [&](int upto) {  // a1 ... a_upto
    LaurentPolynomial p = LaurentPolynomial::one();
    for (int i = 1; i <= upto; ++i) p = p * LV("a" + std::to_string(i));
    return p;
  };
  if (odd(N)) {
    for (int k = 1; k <= m - 1; ++k)
      img[pvar(k)] =
          RF(amono(k - 1) * (LV("a" + std::to_string(k)) + LV("b" + std::to_string(k))));
    img[pvar(m)] = RF(amono(m - 1) * LV("c"));
    for (int k = m + 1; k <= 2 * m - 1; ++k) {
      LaurentPolynomial b = LaurentPolynomial::one();
      for (int j = m - 1; j >= 2 * m - k; --j) b = b * LV("b" + std::to_string(j));
      img[pvar(k)] = RF(amono(m - 1) * LV("c") * b);
    }
  } else {
    for (int k = 1; k <= m - 2; ++k)
      img[pvar(k)] =
          RF(amono(k - 1) * (LV("a" + std::to_string(k)) + LV("b" + std::to_string(k))));
    img[pvar(m - 1)] = RF(amono(m - 2) * LV("c"));
    img[pprime_var(m - 1)] = RF(amono(m - 2) * LV("d"));
    img[pvar(m)] = RF(amono(m - 2) * LV("c") * LV("d"));
    for (int k = m + 1; k <= 2 * m - 2; ++k) {
      LaurentPolynomial b = LaurentPolynomial::one();
      for (int j = m - 2; j >= 2 * m - 1 - k; --j) b = b * LV("b" + std::to_string(j));
      img[pvar(k)] = RF(amono(m - 2) * LV("c") * LV("d") * b);
    }
  }
  return img;
}

std::map<Symbol, RationalFunction> lusztig_inverse_images(int N) {
  int m = half_m(N);
  std::map<Symbol, RationalFunction> img;
  if (odd(N)) {
    img["c"] = RationalFunction(LV(pvar(m)) * LV(pvar(m)), delta_affine(N, m - 1));
    for (int j = 1; j <= m - 1; ++j)
      img["b" + std::to_string(j)] = RV(pvar(2 * m - j)) / RV(pvar(2 * m - 1 - j));
    // A_k = a1...ak: delta_k / p_{2m-1-k} for k <= m-2, delta_{m-1}/p_m at the top.
    std::vector<RationalFunction> A(m);
    A[0] = RationalFunction(Rational(1));
    for (int k = 1; k <= m - 2; ++k)
      A[k] = RationalFunction(delta_affine(N, k), LV(pvar(2 * m - 1 - k)));
    A[m - 1] = RationalFunction(delta_affine(N, m - 1), LV(pvar(m)));
    for (int k = 1; k <= m - 1; ++k) img["a" + std::to_string(k)] = A[k] / A[k - 1];
  } else {
    img["d"] = RV(pvar(m)) / RV(pvar(m - 1));
    img["c"] = RV(pvar(m)) / RV(pprime_var(m - 1));
    for (int j = 1; j <= m - 2; ++j)
      img["b" + std::to_string(j)] = RV(pvar(2 * m - 1 - j)) / RV(pvar(2 * m - 2 - j));
    std::vector<RationalFunction> A(std::max(m - 1, 1));
    A[0] = RationalFunction(Rational(1));
    for (int k = 1; k <= m - 3; ++k)
      A[k] = RationalFunction(delta_affine(N, k), LV(pvar(2 * m - 2 - k)));
    A[m - 2] = RationalFunction(LV(pvar(m - 1)) * LV(pprime_var(m - 1)), LV(pvar(m)));
    for (int k = 1; k <= m - 2; ++k) img["a" + std::to_string(k)] = A[k] / A[k - 1];
  }
  return img;
}

std::map<Symbol, RationalFunction> can_to_prz_odd_images(int N) {
  int m = half_m(N);
  std::map<Symbol, RationalFunction> img;
  auto P = [&](int j) { return j == 0 ? LaurentPolynomial::one() : LV(pvar(j)); };
  for (int i = 1; i <= m - 1; ++i) img["z" + std::to_string(i)] = RationalFunction(P(i), P(i - 1));
  for (int i = m; i <= 2 * m - 3; ++i)
    img["z" + std::to_string(i)] =
        RationalFunction(P(2 * m - 1 - i) * delta_affine(N, 2 * m - 3 - i),
                         P(2 * m - 2 - i) * delta_affine(N, 2 * m - 2 - i));
  img["z" + std::to_string(2 * m - 2)] = RationalFunction(LV("q") * P(1), P(2 * m - 1));
  img["z" + std::to_string(2 * m - 1)] =
      RationalFunction(LV("q") * delta_affine(N, m - 2), delta_affine(N, m - 1));
  return img;
}

std::map<Symbol, RationalFunction> can_to_giv_odd_images(int N) {
  int m = half_m(N);
  std::map<Symbol, RationalFunction> img;
  auto P = [&](int j) { return j == 0 ? LaurentPolynomial::one() : LV(pvar(j)); };
  img["nu1"] = RationalFunction(P(m) * P(m), delta_affine(N, m - 1));
  for (int i = 2; i <= m; ++i)
    img["nu" + std::to_string(i)] = RationalFunction(P(i - 1), P(i - 2));
  for (int i = m + 1; i <= 2 * m - 2; ++i)
    img["nu" + std::to_string(i)] =
        RationalFunction(P(2 * m - i) * delta_affine(N, 2 * m - 2 - i),
                         P(2 * m - 1 - i) * delta_affine(N, 2 * m - 1 - i));
  img["nu" + std::to_string(2 * m - 1)] = RationalFunction(LV("q") * P(1), P(2 * m - 1));
  img["nu" + std::to_string(2 * m)] =
      RationalFunction(delta_affine(N, m - 2), P(m - 1) * P(m));
  img["nu" + std::to_string(2 * m + 1)] =
      RationalFunction(delta_affine(N, m - 1), P(m - 1) * P(m));
  return img;
}

std::map<Symbol, RationalFunction> can_to_prz_even_images(int N) {
  int m = half_m(N);
  std::map<Symbol, RationalFunction> img;
  auto P = [&](int j) { return j == 0 ? LaurentPolynomial::one() : LV(pvar(j)); };
  for (int i = 1; i <= m - 2; ++i) img["z" + std::to_string(i)] = RationalFunction(P(i), P(i - 1));
  for (int i = m - 1; i <= 2 * m - 5; ++i)
    img["z" + std::to_string(i)] =
        RationalFunction(P(2 * m - 3 - i) * delta_affine(N, 2 * m - 5 - i),
                         P(2 * m - 4 - i) * delta_affine(N, 2 * m - 4 - i));
  img["z" + std::to_string(2 * m - 4)] = RationalFunction(P(m), P(m - 1));
  img["z" + std::to_string(2 * m - 3)] = RationalFunction(P(m), LV(pprime_var(m - 1)));
  img["z" + std::to_string(2 * m - 2)] =
      RationalFunction(LV("q") * delta_affine(N, m - 3), delta_affine(N, m - 2));
  return img;
}

// Inverse of the even can->prz map, built from the forward table and the
// exchange relations; see the round-trip and pullback tests.
std::map<Symbol, RationalFunction> prz_to_can_even_images(int N) {
  int m = half_m(N);
  std::map<Symbol, RationalFunction> img;
  auto Z = [&](int j) {  // z1 ... zj
    LaurentPolynomial p = LaurentPolynomial::one();
    for (int i = 1; i <= j; ++i) p = p * LV("z" + std::to_string(i));
    return p;
  };
  auto zv = [](int i) { return LV("z" + std::to_string(i)); };
  RationalFunction zNq = RF(zv(2 * m - 2) + LV("q"));
  for (int i = 1; i <= m - 2; ++i) img[pvar(i)] = RF(Z(i));
  img[pvar(m - 1)] = RF(LV("q") * Z(m - 2) * zv(2 * m - 3)) / zNq;
  img[pprime_var(m - 1)] = RF(LV("q") * Z(m - 2) * zv(2 * m - 4)) / zNq;
  img[pvar(m)] = RF(LV("q") * Z(m - 2) * zv(2 * m - 4) * zv(2 * m - 3)) / zNq;
  // delta chain downward from delta_{m-3}; p_{2m-2} = delta_0 and the exchange
  // relations give the remaining Plucker coordinates.
  std::vector<RationalFunction> dl(std::max(m - 2, 1));
  RationalFunction base =
      RF(LV("q") * zv(2 * m - 4) * zv(2 * m - 3) * zv(2 * m - 2) * Z(m - 2) * Z(m - 2)) /
      (zNq * zNq);
  dl[m - 3] = base;
  for (int j = m - 3; j >= 1; --j)
    dl[j - 1] = dl[j] * RV("z" + std::to_string(2 * m - 4 - j)) /
                RV("z" + std::to_string(j + 1));
  img[pvar(2 * m - 2)] = dl[0];
  for (int i = m + 1; i <= 2 * m - 3; ++i) {
    int j = 2 * m - 2 - i;
    img[pvar(i)] = (dl[j - 1] + dl[j]) / RF(Z(j));
  }
  return img;
}

std::map<Symbol, RationalFunction> prz_to_giv_images(int N) {
  std::map<Symbol, RationalFunction> img;
  LaurentPolynomial prod = LaurentPolynomial::one();
  for (int i = 1; i <= N; ++i) prod = prod * LV("z" + std::to_string(i));
  LaurentPolynomial zq = LV("z" + std::to_string(N)) + LV("q");
  img["nu1"] = RationalFunction(zq * zq, prod);
  for (int i = 2; i <= N; ++i) img["nu" + std::to_string(i)] = RV("z" + std::to_string(i - 1));
  img["nu" + std::to_string(N + 1)] = RationalFunction(LV("z" + std::to_string(N)), zq);
  img["nu" + std::to_string(N + 2)] = RationalFunction(LV("q"), zq);
  return img;
}

std::map<Symbol, RationalFunction> giv_to_prz_images(int N) {
  std::map<Symbol, RationalFunction> img;
  for (int i = 1; i <= N - 1; ++i)
    img["z" + std::to_string(i)] = RV("nu" + std::to_string(i + 1));
  img["z" + std::to_string(N)] =
      RF(LV("q") * LV("nu" + std::to_string(N + 1))) / RV("nu" + std::to_string(N + 2));
  return img;
}

// Rational parametrization of the Givental constraint locus by nu_2..nu_{N+1}.
std::map<Symbol, RationalFunction> givental_parametrization(int N) {
  std::map<Symbol, RationalFunction> par;
  RationalFunction last = RationalFunction(Rational(1)) - RV("nu" + std::to_string(N + 1));
  RationalFunction denom = last;
  for (int i = 2; i <= N + 1; ++i) denom = denom * RV("nu" + std::to_string(i));
  par["nu1"] = RV("q") / denom;
  for (int i = 2; i <= N + 1; ++i) par["nu" + std::to_string(i)] = RV("nu" + std::to_string(i));
  par["nu" + std::to_string(N + 2)] = last;
  par["q"] = RV("q");
  return par;
}

std::vector<LaurentPolynomial> collect_chart(const std::map<Symbol, RationalFunction>& images) {
  std::set<LaurentPolynomial> seen;
  std::vector<LaurentPolynomial> chart;
  for (const auto& [v, f] : images)
    for (const auto& [fac, e] : f.den_factors())
      if (seen.insert(fac).second) chart.push_back(fac);
  return chart;
}

}  // namespace

CoordinateMap coordinate_map(MapKind kind, int N) {
  require_N(N);
  CoordinateMap cm;
  cm.kind = kind;
  switch (kind) {
    case MapKind::PrzToGiv:
      cm.source = przyjalkowski_model(N);
      cm.target = givental_model(N);
      cm.images = prz_to_giv_images(N);
      break;
    case MapKind::GivToPrz:
      cm.source = givental_model(N);
      cm.target = przyjalkowski_model(N);
      cm.images = giv_to_prz_images(N);
      break;
    case MapKind::CanToPrzOdd:
      if (!odd(N)) throw std::invalid_argument("CanToPrzOdd needs odd N");
      cm.source = canonical_model(N);
      cm.target = przyjalkowski_model(N);
      cm.images = can_to_prz_odd_images(N);
      break;
    case MapKind::CanToGivOdd:
      if (!odd(N)) throw std::invalid_argument("CanToGivOdd needs odd N");
      cm.source = canonical_model(N);
      cm.target = givental_model(N);
      cm.images = can_to_giv_odd_images(N);
      break;
    case MapKind::CanToPrzEven:
      if (odd(N)) throw std::invalid_argument("CanToPrzEven needs even N");
      cm.source = canonical_model(N);
      cm.target = przyjalkowski_model(N);
      cm.images = can_to_prz_even_images(N);
      break;
    case MapKind::PrzToCanEven:
      if (odd(N)) throw std::invalid_argument("PrzToCanEven needs even N");
      cm.source = przyjalkowski_model(N);
      cm.target = canonical_model(N);
      cm.images = prz_to_can_even_images(N);
      break;
    case MapKind::PlueckerInLusztig:
      cm.source = lusztig_model(N);
      cm.target = canonical_model(N);
      cm.images = pluecker_images_map(N);
      break;
    case MapKind::LusztigInverse:
      cm.source = canonical_model(N);
      cm.target = lusztig_model(N);
      cm.images = lusztig_inverse_images(N);
      break;
  }
  cm.chart = collect_chart(cm.images);
  return cm;
}

std::map<Symbol, RationalFunction> compose_images(const CoordinateMap& first,
                                                  const CoordinateMap& second) {
  auto base = with_q(first.images);
  std::map<Symbol, RationalFunction> out;
  for (const auto& [v, f] : second.images) out[v] = f.substitute(base);
  return out;
}

PullbackReport verify_pullback(MapKind kind, int N) {
  PullbackReport rep;
  CoordinateMap cm = coordinate_map(kind, N);
  auto img = with_q(cm.images);
  auto fail = [&rep](const std::string& what, const RationalFunction& lhs,
                     const RationalFunction& rhs) -> PullbackReport {
    rep.ok = false;
    rep.detail = what + ":\n  lhs = " + lhs.str() + "\n  rhs = " + rhs.str();
    return rep;
  };

  auto check_constraints = [&](const std::map<Symbol, RationalFunction>& im) -> bool {
    for (const auto& c : cm.target.constraints) {
      RationalFunction v = RationalFunction(c).substitute(im);
      if (!v.is_zero()) {
        fail("constraint of " + cm.target.name() + " does not pull back to 0: " + c.str(), v,
             RationalFunction());
        return false;
      }
    }
    return true;
  };

  switch (kind) {
    case MapKind::PrzToGiv:
    case MapKind::CanToGivOdd:
    case MapKind::PlueckerInLusztig:
    case MapKind::PrzToCanEven:
    case MapKind::CanToPrzOdd: {
      if (!check_constraints(img)) return rep;
      RationalFunction lhs = cm.target.superpotential.substitute(img);
      if (!lhs.equals(cm.source.superpotential))
        return fail("superpotential pullback", lhs, cm.source.superpotential);
      break;
    }
    case MapKind::GivToPrz: {
      auto par = givental_parametrization(N);
      std::map<Symbol, RationalFunction> composed;
      for (const auto& [v, f] : cm.images) composed[v] = f.substitute(par);
      composed = with_q(composed);
      RationalFunction lhs = cm.target.superpotential.substitute(composed);
      RationalFunction rhs = cm.source.superpotential.substitute(par);
      if (!lhs.equals(rhs)) return fail("superpotential pullback on Givental chart", lhs, rhs);
      break;
    }
    case MapKind::CanToPrzEven: {
      auto lus = with_q(coordinate_map(MapKind::PlueckerInLusztig, N).images);
      std::map<Symbol, RationalFunction> composed;
      for (const auto& [v, f] : cm.images) composed[v] = f.substitute(lus);
      composed = with_q(composed);
      RationalFunction lhs = cm.target.superpotential.substitute(composed);
      RationalFunction rhs = lusztig_model(N).superpotential;
      if (!lhs.equals(rhs)) return fail("superpotential pullback on Lusztig torus", lhs, rhs);
      break;
    }
    case MapKind::LusztigInverse: {
      // Round trip u(p(u)) = u on the torus.
      auto plue = with_q(coordinate_map(MapKind::PlueckerInLusztig, N).images);
      for (const auto& [v, f] : cm.images) {
        RationalFunction back = f.substitute(plue);
        if (!back.equals(RV(v))) return fail("round trip for " + v, back, RV(v));
      }
      break;
    }
  }
  rep.ok = true;
  return rep;
}

// --------------------------------------------------------------- determinants

static RationalFunction det_rf(std::vector<std::vector<RationalFunction>> M) {
  const std::size_t n = M.size();
  RationalFunction det{Rational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && M[piv][k].is_zero()) ++piv;
    if (piv == n) return RationalFunction();
    if (piv != k) {
      std::swap(M[piv], M[k]);
      det = -det;
    }
    det = det * M[k][k];
    RationalFunction inv = M[k][k].inverse();
    for (std::size_t j = k + 1; j < n; ++j) M[k][j] = M[k][j] * inv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero()) continue;
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = M[i][j] - M[i][k] * M[k][j];
      M[i][k] = RationalFunction();
    }
  }
  return det;
}

RationalFunction dlog_jacobian_det(const std::vector<Symbol>& source_vars,
                                   const std::vector<RationalFunction>& target_images) {
  if (source_vars.size() != target_images.size())
    throw std::invalid_argument("dlog_jacobian_det: variable count mismatch");
  std::size_t n = source_vars.size();
  std::vector<std::vector<RationalFunction>> M(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M[i][j] =
          RV(source_vars[i]) * target_images[j].derivative(source_vars[i]) / target_images[j];
  return det_rf(std::move(M));
}

RationalFunction log_jacobian_det(const CoordinateMap& map) {
  int N = map.source.N;
  bool src_giv = map.source.kind == ModelKind::Givental;
  bool tgt_giv = map.target.kind == ModelKind::Givental;

  std::vector<Symbol> srcv;
  for (const auto& v : map.source.vars)
    if (!src_giv || (v != "nu1" && v != "nu" + std::to_string(N + 2))) srcv.push_back(v);

  std::map<Symbol, RationalFunction> par;
  if (src_giv) par = givental_parametrization(N);

  std::vector<RationalFunction> imgs;
  RationalFunction correction{Rational(1)};
  for (const auto& v : map.target.vars) {
    if (tgt_giv && (v == "nu1" || v == "nu" + std::to_string(N + 2))) continue;
    RationalFunction f = map.images.at(v);
    if (src_giv) f = f.substitute(par);
    imgs.push_back(f);
  }
  if (tgt_giv) {
    RationalFunction f = map.images.at("nu" + std::to_string(N + 2));
    if (src_giv) f = f.substitute(par);
    correction = correction / f;  // residue factor 1/nu_{N+2} of the target form
  }
  if (src_giv)
    correction = correction * par.at("nu" + std::to_string(N + 2));  // divide source factor

  if (srcv.size() != imgs.size())
    throw std::invalid_argument("log_jacobian_det: chart dimension mismatch");
  return dlog_jacobian_det(srcv, imgs) * correction;
}

bool is_plus_minus_one(const RationalFunction& f) {
  return f.equals(RationalFunction(Rational(1))) || f.equals(RationalFunction(Rational(-1)));
}

}  // namespace qmirror
