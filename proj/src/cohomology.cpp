#include "qmirror/cohomology.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace qmirror {

namespace {

bool odd(int N) { return N % 2 != 0; }
int half_m(int N) { return odd(N) ? (N + 1) / 2 : (N + 2) / 2; }

LaurentPolynomial qvar() { return LaurentPolynomial::var("q"); }
LaurentPolynomial hbar(std::int64_t e) { return LaurentPolynomial::var("hbar", e); }

void require_N(int N) {
  if (N < 3) throw std::invalid_argument("quadric dimension must be >= 3");
}

}  // namespace

CohVector CohVector::unit(SchubertClass c) {
  CohVector v;
  v.e_.emplace(c, LaurentPolynomial::one());
  return v;
}

LaurentPolynomial CohVector::coefficient(SchubertClass c) const {
  auto it = e_.find(c);
  return it == e_.end() ? LaurentPolynomial::zero() : it->second;
}

void CohVector::set(SchubertClass c, const LaurentPolynomial& v) {
  if (v.is_zero())
    e_.erase(c);
  else
    e_[c] = v;
}

void CohVector::add(SchubertClass c, const LaurentPolynomial& v) {
  auto it = e_.find(c);
  if (it == e_.end()) {
    if (!v.is_zero()) e_.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) e_.erase(it);
}

CohVector CohVector::operator+(const CohVector& o) const {
  CohVector r = *this;
  for (const auto& [c, v] : o.e_) r.add(c, v);
  return r;
}

CohVector CohVector::operator-(const CohVector& o) const {
  CohVector r = *this;
  for (const auto& [c, v] : o.e_) r.add(c, -v);
  return r;
}

CohVector CohVector::operator*(const LaurentPolynomial& s) const {
  CohVector r;
  if (s.is_zero()) return r;
  for (const auto& [c, v] : e_) r.set(c, v * s);
  return r;
}

CohVector CohVector::operator*(const Rational& s) const {
  return *this * LaurentPolynomial::constant(s);
}

std::string CohVector::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, v] : e_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")*" << c.str();
  }
  return os.str();
}

std::vector<SchubertClass> schubert_basis(int N) {
  require_N(N);
  std::vector<SchubertClass> basis;
  int m = half_m(N);
  for (int i = 0; i <= N; ++i) {
    basis.push_back({i, false});
    if (!odd(N) && i == m - 1) basis.push_back({i, true});
  }
  return basis;
}

int grading(SchubertClass c) { return c.i; }

SchubertClass poincare_dual(int N, SchubertClass c) {
  require_N(N);
  int m = half_m(N);
  if (!odd(N) && c.i == m - 1) return {m - 1, !c.prime};
  if (c.prime || c.i < 0 || c.i > N) throw std::invalid_argument("invalid class");
  return {N - c.i, false};
}

CohVector quantum_chevalley(int N, SchubertClass c) {
  require_N(N);
  int m = half_m(N);
  CohVector out;
  if (odd(N)) {
    if (c.prime || c.i < 0 || c.i > N) throw std::invalid_argument("invalid class for odd N");
    if (c.i == m - 1) {
      out.set({m, false}, LaurentPolynomial::constant(2));
    } else if (c.i == N - 1) {
      out.set({N, false}, LaurentPolynomial::one());
      out.set({0, false}, qvar());
    } else if (c.i == N) {
      out.set({1, false}, qvar());
    } else {
      out.set({c.i + 1, false}, LaurentPolynomial::one());
    }
    return out;
  }
  if (c.i < 0 || c.i > N || (c.prime && c.i != m - 1))
    throw std::invalid_argument("invalid class for even N");
  if (c.prime) {
    out.set({m, false}, LaurentPolynomial::one());
  } else if (c.i == m - 2) {
    out.set({m - 1, false}, LaurentPolynomial::one());
    out.set({m - 1, true}, LaurentPolynomial::one());
  } else if (c.i == 2 * m - 3) {
    out.set({2 * m - 2, false}, LaurentPolynomial::one());
    out.set({0, false}, qvar());
  } else if (c.i == 2 * m - 2) {
    out.set({1, false}, qvar());
  } else {
    out.set({c.i + 1, false}, LaurentPolynomial::one());
  }
  return out;
}

CohVector chevalley_apply(int N, const CohVector& v) {
  CohVector out;
  for (const auto& [c, coef] : v.entries()) {
    CohVector image = quantum_chevalley(N, c);
    for (const auto& [c2, coef2] : image.entries()) out.add(c2, coef * coef2);
  }
  return out;
}

CohVector classical_chevalley_apply(int N, const CohVector& v) {
  CohVector out;
  for (const auto& [c, coef] : v.entries()) {
    CohVector image = quantum_chevalley(N, c);
    for (const auto& [c2, coef2] : image.entries()) {
      LaurentPolynomial cl = coef2.coefficient({{"q", 0}});
      if (!cl.is_zero()) out.add(c2, coef * cl);
    }
  }
  return out;
}

CohVector first_chern_times(int N, const CohVector& v) {
  return chevalley_apply(N, v) * Rational(N);
}

bool QSeries::is_zero() const {
  for (const auto& t : terms)
    if (!t.is_zero()) return false;
  return true;
}

bool QSeries::operator==(const QSeries& o) const {
  if (N != o.N || order != o.order) return false;
  return terms == o.terms;
}

std::string QSeries::str() const {
  std::ostringstream os;
  for (int k = 0; k <= order; ++k) {
    if (terms[k].is_zero()) continue;
    os << "q^" << k << ": " << terms[k].str() << "\n";
  }
  auto s = os.str();
  return s.empty() ? "0" : s;
}

namespace {

// split sigma_1 * c into (classical part, coefficient of q)
std::pair<CohVector, CohVector> chevalley_split(int N, const CohVector& v) {
  CohVector image = chevalley_apply(N, v);
  CohVector classical, quantum;
  for (const auto& [c, coef] : image.entries()) {
    classical.add(c, coef.coefficient({{"q", 0}}));
    quantum.add(c, coef.coefficient({{"q", 1}}));
  }
  return {classical, quantum};
}

// (sigma_1 *_q S)_k = classical(S_k) + quantum(S_{k-1})
QSeries sigma1_star(const QSeries& S) {
  QSeries out(S.N, S.order);
  for (int k = 0; k <= S.order; ++k) {
    auto [cl, qu] = chevalley_split(S.N, S.terms[k]);
    out.terms[k] = out.terms[k] + cl;
    if (k + 1 <= S.order) out.terms[k + 1] = out.terms[k + 1] + qu;
  }
  return out;
}

LaurentPolynomial theta(const LaurentPolynomial& p, const Symbol& s) {
  return p.derivative(s) * LaurentPolynomial::var(s);
}

CohVector map_coeffs(const CohVector& v, const std::function<LaurentPolynomial(
                                             const LaurentPolynomial&)>& f) {
  CohVector out;
  for (const auto& [c, coef] : v.entries()) out.add(c, f(coef));
  return out;
}

}  // namespace

QSeries dual_dubrovin_apply(Direction dir, const QSeries& S) {
  QSeries out(S.N, S.order);
  if (dir == Direction::Q) {
    // q d_q acts as k + d/dL on the q^k coefficient
    for (int k = 0; k <= S.order; ++k)
      out.terms[k] = map_coeffs(S.terms[k], [k](const LaurentPolynomial& p) {
        return p * Rational(k) + p.derivative("L");
      });
    QSeries sv = sigma1_star(S);
    for (int k = 0; k <= S.order; ++k)
      out.terms[k] = out.terms[k] - sv.terms[k] * hbar(-1);
    return out;
  }
  for (int k = 0; k <= S.order; ++k)
    out.terms[k] = map_coeffs(S.terms[k],
                              [](const LaurentPolynomial& p) { return theta(p, "hbar"); });
  QSeries sv = sigma1_star(S);
  for (int k = 0; k <= S.order; ++k) {
    out.terms[k] = out.terms[k] + sv.terms[k] * (hbar(-1) * Rational(S.N));
    CohVector graded;
    for (const auto& [c, coef] : S.terms[k].entries())
      graded.add(c, coef * Rational(grading(c) - S.N));
    out.terms[k] = out.terms[k] + graded;
  }
  return out;
}

bool connection_flatness_certificate(int N, int order) {
  require_N(N);
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  for (const auto& c : schubert_basis(N)) {
    QSeries S(N, order);
    S.terms[0] = CohVector::unit(c);
    QSeries qh = dual_dubrovin_apply(Direction::Q, dual_dubrovin_apply(Direction::Hbar, S));
    QSeries hq = dual_dubrovin_apply(Direction::Hbar, dual_dubrovin_apply(Direction::Q, S));
    if (!(qh == hq)) return false;
  }
  return true;
}

QSeries j_function(int N, int order) {
  require_N(N);
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  QSeries J(N, order);
  for (int d = 0; d <= order; ++d) {
    CohVector v = CohVector::unit({0, false});
    // numerator: prod_{j=1}^{2d} (2 sigma_1 + j hbar)
    for (int j = 1; j <= 2 * d; ++j)
      v = classical_chevalley_apply(N, v) * Rational(2) +
          v * LaurentPolynomial::monomial(Monomial::var("hbar"), Rational(j));
    // denominator: prod_{j=1}^{d} (sigma_1 + j hbar)^{-(N+2)}, expanded with
    // the nilpotency of sigma_1
    for (int j = 1; j <= d; ++j) {
      for (int rep = 0; rep < N + 2; ++rep) {
        // (sigma_1 + j hbar)^{-1} v = sum_i (-1)^i sigma_1^i v / (j hbar)^{i+1}
        CohVector res;
        CohVector pw = v;
        Rational jr(j);
        for (int i = 0; i <= N + 1 && !pw.is_zero(); ++i) {
          Rational coef = (i % 2 == 0 ? Rational(1) : Rational(-1));
          Rational jpow = 1;
          for (int t = 0; t <= i; ++t) jpow *= jr;
          res = res + pw * LaurentPolynomial::monomial(Monomial::var("hbar", -(i + 1)),
                                                       coef / jpow);
          pw = classical_chevalley_apply(N, pw);
        }
        v = res;
      }
    }
    J.terms[d] = v;
  }
  // multiply through by e^{L sigma_1 / hbar}
  for (int d = 0; d <= order; ++d) {
    CohVector res;
    CohVector pw = J.terms[d];
    Integer fact = 1;
    for (int t = 0; t <= N + 1 && !pw.is_zero(); ++t) {
      if (t > 0) fact *= t;
      res = res + pw * LaurentPolynomial::monomial(
                           Monomial::var("L", t) * Monomial::var("hbar", -t),
                           Rational(Integer(1), fact));
      pw = classical_chevalley_apply(N, pw);
    }
    J.terms[d] = res;
  }
  return J;
}

}  // namespace qmirror
