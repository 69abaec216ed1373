#include "qmirror/rational_function.hpp"

#include <sstream>

namespace qmirror {

RationalFunction::RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  num_ = num;
  push_den(den, 1);
  cancel();
}

void RationalFunction::push_den(const LaurentPolynomial& f, int mult) {
  if (f.is_zero()) throw std::invalid_argument("zero denominator factor");
  if (mult <= 0) return;
  Monomial um;
  Rational uc;
  LaurentPolynomial prim;
  f.unit_normalize(um, uc, prim);
  // num / (u*prim)^mult = num * u^-mult / prim^mult with u the unit part.
  Rational cpow = 1;
  for (int i = 0; i < mult; ++i) cpow *= uc;
  num_ = num_ * LaurentPolynomial::monomial(um.pow(-mult), Rational(1) / cpow);
  if (prim.is_constant()) return;  // prim == 1
  den_[prim] += mult;
}

void RationalFunction::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    bool erased = false;
    while (it->second > 0) {
      auto q = LaurentPolynomial::exact_divide(num_, it->first);
      if (!q) break;
      num_ = *q;
      if (--it->second == 0) {
        it = den_.erase(it);
        erased = true;
        break;
      }
    }
    if (!erased) ++it;
  }
}

LaurentPolynomial RationalFunction::den_expanded() const {
  LaurentPolynomial d = LaurentPolynomial::one();
  for (const auto& [f, e] : den_) d = d * f.pow(e);
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  RationalFunction r;
  // lcm of the factored denominators.
  r.den_ = den_;
  for (const auto& [f, e] : o.den_) {
    auto it = r.den_.find(f);
    if (it == r.den_.end())
      r.den_.emplace(f, e);
    else if (it->second < e)
      it->second = e;
  }
  LaurentPolynomial ca = LaurentPolynomial::one(), cb = LaurentPolynomial::one();
  for (const auto& [f, e] : r.den_) {
    auto ia = den_.find(f);
    int ea = ia == den_.end() ? 0 : ia->second;
    if (e > ea) ca = ca * f.pow(e - ea);
    auto ib = o.den_.find(f);
    int eb = ib == o.den_.end() ? 0 : ib->second;
    if (e > eb) cb = cb * f.pow(e - eb);
  }
  r.num_ = num_ * ca + o.num_ * cb;
  r.cancel();
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  RationalFunction r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  for (const auto& [f, e] : o.den_) r.den_[f] += e;
  r.cancel();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::invalid_argument("inverse of zero");
  RationalFunction r;
  r.num_ = den_expanded();
  r.push_den(num_, 1);
  r.cancel();
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(std::int64_t n) const {
  if (n == 0) return RationalFunction(LaurentPolynomial::one());
  if (n < 0) return inverse().pow(-n);
  RationalFunction r;
  r.num_ = num_.pow(n);
  for (const auto& [f, e] : den_) r.den_[f] = static_cast<int>(e * n);
  r.cancel();
  return r;
}

RationalFunction RationalFunction::derivative(const Symbol& s) const {
  // d(n / prod f_i^e_i) = [n' prod f_i - n sum_i e_i f_i' prod_{j!=i} f_j] / prod f_i^{e_i+1}
  LaurentPolynomial top = num_.derivative(s);
  for (const auto& [f, e] : den_) top = top * f;
  for (const auto& [fi, ei] : den_) {
    LaurentPolynomial piece = num_ * fi.derivative(s) * Rational(ei);
    for (const auto& [fj, ej] : den_)
      if (!(fj == fi)) piece = piece * fj;
    top = top - piece;
  }
  RationalFunction r;
  r.num_ = top;
  for (const auto& [f, e] : den_) r.den_[f] = e + 1;
  r.cancel();
  return r;
}

RationalFunction RationalFunction::substitute(const std::map<Symbol, RationalFunction>& images) const {
  auto eval_poly = [&images](const LaurentPolynomial& p) {
    RationalFunction acc;
    for (const auto& [m, c] : p.terms()) {
      RationalFunction term{LaurentPolynomial::constant(c)};
      for (const auto& [s, e] : m.exponents()) {
        auto it = images.find(s);
        if (it == images.end())
          throw std::invalid_argument("substitute: no image for symbol " + s);
        term = term * it->second.pow(e);
      }
      acc = acc + term;
    }
    return acc;
  };
  RationalFunction r = eval_poly(num_);
  for (const auto& [f, e] : den_) {
    RationalFunction fv = eval_poly(f);
    if (fv.is_zero())
      throw SubstitutionDenominatorZero("denominator maps to zero under substitution: " + f.str());
    r = r * fv.pow(-static_cast<std::int64_t>(e));
  }
  return r;
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return (*this - o).is_zero();
}

std::optional<Rational> RationalFunction::evaluate(const std::map<Symbol, Rational>& point) const {
  auto n = num_.evaluate(point);
  if (!n) return std::nullopt;
  Rational d = 1;
  for (const auto& [f, e] : den_) {
    auto v = f.evaluate(point);
    if (!v || *v == 0) return std::nullopt;
    for (int i = 0; i < e; ++i) d *= *v;
  }
  return *n / d;
}

std::set<Symbol> RationalFunction::variables() const {
  std::set<Symbol> v = num_.variables();
  for (const auto& [f, e] : den_)
    for (const auto& s : f.variables()) v.insert(s);
  return v;
}

std::string RationalFunction::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (";
  bool first = true;
  for (const auto& [f, e] : den_) {
    if (!first) os << " * ";
    first = false;
    os << "(" << f.str() << ")";
    if (e != 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

RationalFunction operator+(const LaurentPolynomial& a, const RationalFunction& b) {
  return RationalFunction(a) + b;
}

RationalFunction operator*(const LaurentPolynomial& a, const RationalFunction& b) {
  return RationalFunction(a) * b;
}

}  // namespace qmirror

namespace qmirror {
RationalFunction operator*(const Rational& c, const RationalFunction& b) {
  return RationalFunction(LaurentPolynomial::constant(c)) * b;
}
}  // namespace qmirror
