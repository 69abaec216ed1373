#include "qmirror/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qmirror {

QScalar qscalar_q() { return RationalFunction::var("q"); }
QScalar qscalar(const Rational& c) { return RationalFunction(LaurentPolynomial::constant(c)); }

ZetaElement ZetaElement::scalar(int N, const QScalar& s) {
  ZetaElement e(N);
  e.c_[0] = s;
  return e;
}

ZetaElement ZetaElement::zeta_power(int N, int k) {
  if (k < 0) throw std::invalid_argument("zeta_power: negative exponent");
  ZetaElement e(N);
  QScalar coef = qscalar(Rational(1));
  while (k >= N) {
    coef = coef * (qscalar(Rational(4)) * qscalar_q());
    k -= N;
  }
  e.c_[k] = coef;
  return e;
}

ZetaElement ZetaElement::scaled(const Rational& r) const {
  ZetaElement e(N_);
  for (int i = 0; i < N_; ++i) e.c_[i] = c_[i] * qscalar(r);
  return e;
}

ZetaElement ZetaElement::operator+(const ZetaElement& o) const {
  if (N_ != o.N_) throw std::invalid_argument("algebra mismatch");
  ZetaElement e(N_);
  for (int i = 0; i < N_; ++i) e.c_[i] = c_[i] + o.c_[i];
  return e;
}

ZetaElement ZetaElement::operator-(const ZetaElement& o) const {
  if (N_ != o.N_) throw std::invalid_argument("algebra mismatch");
  ZetaElement e(N_);
  for (int i = 0; i < N_; ++i) e.c_[i] = c_[i] - o.c_[i];
  return e;
}

ZetaElement ZetaElement::operator*(const ZetaElement& o) const {
  if (N_ != o.N_) throw std::invalid_argument("algebra mismatch");
  ZetaElement e(N_);
  QScalar fourq = qscalar(Rational(4)) * qscalar_q();
  for (int i = 0; i < N_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < N_; ++j) {
      if (o.c_[j].is_zero()) continue;
      int k = i + j;
      QScalar v = c_[i] * o.c_[j];
      if (k >= N_) {
        k -= N_;
        v = v * fourq;
      }
      e.c_[k] = e.c_[k] + v;
    }
  }
  return e;
}

bool ZetaElement::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

bool ZetaElement::operator==(const ZetaElement& o) const {
  if (N_ != o.N_) return false;
  for (int i = 0; i < N_; ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

namespace {

using Poly = std::vector<QScalar>;  // dense in zeta

int deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

Poly sub_scaled(const Poly& a, const Poly& b, const QScalar& c, int shift) {
  Poly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i + shift] = r[i + shift] - b[i] * c;
  return r;
}

// division with remainder over the field Q(q)
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  int db = deg(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  Poly q(std::max<std::size_t>(a.size(), 1));
  QScalar lead_inv = b[db].inverse();
  for (int da = deg(a); da >= db; da = deg(a)) {
    QScalar c = a[da] * lead_inv;
    q[da - db] = q[da - db] + c;
    a = sub_scaled(a, b, c, da - db);
  }
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

Poly subp(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

}  // namespace

ZetaElement ZetaElement::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  // extended Euclid against the irreducible modulus zeta^N - 4q
  Poly modulus(N_ + 1);
  modulus[0] = qscalar(Rational(-4)) * qscalar_q();
  modulus[N_] = qscalar(Rational(1));
  Poly r0 = modulus, r1(c_.begin(), c_.end());
  Poly t0(1), t1{qscalar(Rational(1))};
  while (deg(r1) >= 0) {
    auto [q, r2] = divmod(r0, r1);
    Poly t2 = subp(t0, mul(q, t1));
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (deg(r0) != 0) throw std::logic_error("modulus not coprime to element");
  QScalar ginv = r0[0].inverse();
  Poly inv = t0;
  // reduce mod zeta^N - 4q and scale
  auto [qq, rem] = divmod(inv, modulus);
  ZetaElement e(N_);
  for (int i = 0; i < N_ && i < static_cast<int>(rem.size()); ++i) e.c_[i] = rem[i] * ginv;
  return e;
}

std::string ZetaElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < N_; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")";
    if (i > 0) os << "*zeta^" << i;
  }
  if (first) os << "0";
  return os.str();
}

SqrtQElement SqrtQElement::scaled(const Rational& r) const {
  return {a_ * qscalar(r), b_ * qscalar(r), eps_};
}

SqrtQElement SqrtQElement::operator+(const SqrtQElement& o) const {
  return {a_ + o.a_, b_ + o.b_, eps_};
}

SqrtQElement SqrtQElement::operator-(const SqrtQElement& o) const {
  return {a_ - o.a_, b_ - o.b_, eps_};
}

SqrtQElement SqrtQElement::operator*(const SqrtQElement& o) const {
  QScalar sq = qscalar(Rational(eps_)) * qscalar_q();
  return {a_ * o.a_ + b_ * o.b_ * sq, a_ * o.b_ + b_ * o.a_, eps_};
}

SqrtQElement SqrtQElement::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  QScalar sq = qscalar(Rational(eps_)) * qscalar_q();
  QScalar nrm = a_ * a_ - b_ * b_ * sq;  // nonzero: s^2 - eps q is irreducible
  QScalar ninv = nrm.inverse();
  return {a_ * ninv, (QScalar() - b_) * ninv, eps_};
}

bool SqrtQElement::operator==(const SqrtQElement& o) const {
  return eps_ == o.eps_ && a_ == o.a_ && b_ == o.b_;
}

std::string SqrtQElement::str() const {
  std::ostringstream os;
  os << "(" << a_.str() << ")";
  if (!b_.is_zero()) os << " + (" << b_.str() << ")*s";
  return os.str();
}

}  // namespace qmirror
