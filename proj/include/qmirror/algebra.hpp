#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmirror/rational_function.hpp"

namespace qmirror {

// Scalars of the critical-point algebras: rational functions in q.
using QScalar = RationalFunction;

QScalar qscalar_q();
QScalar qscalar(const Rational& c);

// Element of Q(q)[zeta]/(zeta^N - 4q), a field (the modulus is irreducible).
class ZetaElement {
 public:
  ZetaElement() = default;
  explicit ZetaElement(int N) : N_(N), c_(N) {}
  static ZetaElement scalar(int N, const QScalar& s);
  static ZetaElement zeta_power(int N, int k);  // zeta^k, reduced

  int modulus_degree() const { return N_; }
  const std::vector<QScalar>& coeffs() const { return c_; }

  ZetaElement zero_like() const { return ZetaElement(N_); }
  ZetaElement one_like() const { return scalar(N_, qscalar(Rational(1))); }
  ZetaElement scaled(const Rational& r) const;

  ZetaElement operator+(const ZetaElement& o) const;
  ZetaElement operator-(const ZetaElement& o) const;
  ZetaElement operator*(const ZetaElement& o) const;
  ZetaElement inverse() const;
  bool is_zero() const;
  bool operator==(const ZetaElement& o) const;

  std::string str() const;

 private:
  int N_ = 0;
  std::vector<QScalar> c_;  // c_[k] multiplies zeta^k
};

// Element a + b s of Q(q)[s]/(s^2 - eps q), eps = +-1.
class SqrtQElement {
 public:
  SqrtQElement() = default;
  SqrtQElement(QScalar a, QScalar b, int eps) : a_(std::move(a)), b_(std::move(b)), eps_(eps) {}
  static SqrtQElement scalar(const QScalar& s, int eps) { return {s, QScalar(), eps}; }
  static SqrtQElement root(int eps) { return {QScalar(), qscalar(Rational(1)), eps}; }

  const QScalar& a() const { return a_; }
  const QScalar& b() const { return b_; }
  int eps() const { return eps_; }

  SqrtQElement zero_like() const { return {QScalar(), QScalar(), eps_}; }
  SqrtQElement one_like() const { return scalar(qscalar(Rational(1)), eps_); }
  SqrtQElement scaled(const Rational& r) const;

  SqrtQElement operator+(const SqrtQElement& o) const;
  SqrtQElement operator-(const SqrtQElement& o) const;
  SqrtQElement operator*(const SqrtQElement& o) const;
  SqrtQElement inverse() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool operator==(const SqrtQElement& o) const;

  std::string str() const;

 private:
  QScalar a_, b_;
  int eps_ = 1;
};

// Exact evaluation of Laurent polynomials / rational functions with values in
// an algebra; every symbol of the expression must have a value, and negative
// exponents invert in the algebra.
template <class A>
A eval_laurent(const LaurentPolynomial& p, const std::map<Symbol, A>& vals, const A& proto) {
  A total = proto.zero_like();
  for (const auto& [mono, coef] : p.terms()) {
    A term = proto.one_like().scaled(coef);
    for (const auto& [s, e] : mono.exponents()) {
      auto it = vals.find(s);
      if (it == vals.end()) throw std::invalid_argument("eval: missing value for " + s);
      A base = e < 0 ? it->second.inverse() : it->second;
      for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) term = term * base;
    }
    total = total + term;
  }
  return total;
}

template <class A>
A eval_rf(const RationalFunction& f, const std::map<Symbol, A>& vals, const A& proto) {
  A num = eval_laurent(f.num(), vals, proto);
  for (const auto& [fac, e] : f.den_factors()) {
    A d = eval_laurent(fac, vals, proto).inverse();
    for (int i = 0; i < e; ++i) num = num * d;
  }
  return num;
}

// nullopt when the evaluation would invert zero (the expression is genuinely
// undefined at the point).
template <class A>
std::optional<A> try_eval_laurent(const LaurentPolynomial& p, const std::map<Symbol, A>& vals,
                                  const A& proto) {
  A total = proto.zero_like();
  for (const auto& [mono, coef] : p.terms()) {
    A term = proto.one_like().scaled(coef);
    for (const auto& [s, e] : mono.exponents()) {
      auto it = vals.find(s);
      if (it == vals.end()) throw std::invalid_argument("eval: missing value for " + s);
      if (e < 0 && it->second.is_zero()) return std::nullopt;
      A base = e < 0 ? it->second.inverse() : it->second;
      for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) term = term * base;
    }
    total = total + term;
  }
  return total;
}

template <class A>
std::optional<A> try_eval_rf(const RationalFunction& f, const std::map<Symbol, A>& vals,
                             const A& proto) {
  auto num = try_eval_laurent(f.num(), vals, proto);
  if (!num) return std::nullopt;
  A acc = *num;
  for (const auto& [fac, e] : f.den_factors()) {
    auto d = try_eval_laurent(fac, vals, proto);
    if (!d || d->is_zero()) return std::nullopt;
    A inv = d->inverse();
    for (int i = 0; i < e; ++i) acc = acc * inv;
  }
  return acc;
}

}  // namespace qmirror
