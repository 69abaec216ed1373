#include "qmirror/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qmirror {

std::string to_string(const Rational& r) { return r.str(); }

Rational rational_from_string(const std::string& s) { return Rational(s); }

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(const Symbol& s, std::int64_t e) {
  Monomial m;
  if (e != 0) m.exps_[s] = e;
  return m;
}

Monomial Monomial::from_exponents(ExpMap e) {
  Monomial m;
  for (auto& [s, k] : e)
    if (k != 0) m.exps_.emplace(s, k);
  return m;
}

std::int64_t Monomial::exponent(const Symbol& s) const {
  auto it = exps_.find(s);
  return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [s, e] : o.exps_) {
    auto it = r.exps_.find(s);
    if (it == r.exps_.end()) {
      r.exps_.emplace(s, e);
    } else {
      std::int64_t sum;
      if (__builtin_add_overflow(it->second, e, &sum))
        throw std::overflow_error("monomial exponent overflow");
      if (sum == 0)
        r.exps_.erase(it);
      else
        it->second = sum;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (const auto& [s, e] : exps_) r.exps_.emplace(s, -e);
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  Monomial r;
  if (k == 0) return r;
  for (const auto& [s, e] : exps_) {
    std::int64_t p;
    if (__builtin_mul_overflow(e, k, &p)) throw std::overflow_error("monomial exponent overflow");
    r.exps_.emplace(s, p);
  }
  return r;
}

bool Monomial::divides(const Monomial& n) const {
  for (const auto& [s, e] : exps_)
    if (n.exponent(s) < e) return false;
  return true;
}

int Monomial::compare(const Monomial& o) const {
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() || b != o.exps_.end()) {
    // Missing symbol = exponent 0; walk names in lex order.
    if (a == exps_.end()) {
      // o has a symbol this lacks: its exponent decides (positive => o larger
      // on that earliest symbol).
      return b->second > 0 ? -1 : 1;
    }
    if (b == o.exps_.end()) return a->second > 0 ? 1 : -1;
    if (a->first < b->first) return a->second > 0 ? 1 : -1;
    if (b->first < a->first) return b->second > 0 ? -1 : 1;
    if (a->second != b->second) return a->second > b->second ? 1 : -1;
    ++a;
    ++b;
  }
  return 0;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, e] : exps_) {
    if (!first) os << "*";
    first = false;
    os << s;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

LaurentPolynomial LaurentPolynomial::var(const Symbol& s, std::int64_t e) {
  LaurentPolynomial p;
  p.t_.emplace(Monomial::var(s, e), Rational(1));
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Monomial& m, const Rational& c) {
  LaurentPolynomial p;
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

bool LaurentPolynomial::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
}

Rational LaurentPolynomial::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return t_.begin()->second;
}

void LaurentPolynomial::insert(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.t_) insert(m, c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (const auto& [m, c] : o.t_) r.insert(m, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.insert(ma * mb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
  LaurentPolynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
  return r;
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) { return p * c; }

LaurentPolynomial LaurentPolynomial::pow(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPolynomial acc = one();
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::derivative(const Symbol& s) const {
  LaurentPolynomial r;
  for (const auto& [m, c] : t_) {
    std::int64_t e = m.exponent(s);
    if (e == 0) continue;
    r.insert(m * Monomial::var(s, -1), c * Rational(e));
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::coefficient(
    const std::map<Symbol, std::int64_t>& partial) const {
  LaurentPolynomial r;
  for (const auto& [m, c] : t_) {
    bool match = true;
    for (const auto& [s, e] : partial)
      if (m.exponent(s) != e) {
        match = false;
        break;
      }
    if (!match) continue;
    Monomial::ExpMap rest;
    for (const auto& [s, e] : m.exponents())
      if (!partial.count(s)) rest.emplace(s, e);
    r.insert(Monomial::from_exponents(rest), c);
  }
  return r;
}

std::pair<Monomial, Rational> LaurentPolynomial::leading() const {
  if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto it = std::prev(t_.end());
  return {it->first, it->second};
}

std::set<Symbol> LaurentPolynomial::variables() const {
  std::set<Symbol> v;
  for (const auto& [m, c] : t_)
    for (const auto& [s, e] : m.exponents()) v.insert(s);
  return v;
}

void LaurentPolynomial::unit_normalize(Monomial& unit_mono, Rational& unit_coef,
                                       LaurentPolynomial& primitive) const {
  if (t_.empty()) throw std::logic_error("unit_normalize of zero polynomial");
  // Minimum exponent over all terms, counting absent symbols as 0.
  std::set<Symbol> vars = variables();
  Monomial::ExpMap shift;
  for (const auto& s : vars) {
    std::int64_t mn = 0;
    bool init = false;
    for (const auto& [m, c] : t_) {
      std::int64_t e = m.exponent(s);
      if (!init || e < mn) {
        mn = e;
        init = true;
      }
    }
    if (mn != 0) shift.emplace(s, mn);
  }
  unit_mono = Monomial::from_exponents(shift);
  Monomial inv = unit_mono.inverse();
  LaurentPolynomial shifted;
  for (const auto& [m, c] : t_) shifted.t_.emplace(m * inv, c);
  unit_coef = shifted.leading().second;
  primitive = shifted * (Rational(1) / unit_coef);
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_divide(const LaurentPolynomial& n,
                                                                 const LaurentPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide by zero");
  if (n.is_zero()) return zero();
  Monomial un, ud;
  Rational cn, cd;
  LaurentPolynomial N, D;
  n.unit_normalize(un, cn, N);
  d.unit_normalize(ud, cd, D);
  // Ordinary-polynomial single-divisor lex division with fail-fast.
  LaurentPolynomial q, r = N;
  const auto [ltdm, ltdc] = D.leading();
  while (!r.is_zero()) {
    const auto [ltm, ltc] = r.leading();
    if (!ltdm.divides(ltm)) return std::nullopt;
    LaurentPolynomial t = monomial(ltm * ltdm.inverse(), ltc / ltdc);
    q += t;
    r = r - t * D;
  }
  return q * monomial(un * ud.inverse(), cn / cd);
}

std::optional<Rational> LaurentPolynomial::evaluate(const std::map<Symbol, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : t_) {
    Rational v = c;
    for (const auto& [s, e] : m.exponents()) {
      auto it = point.find(s);
      if (it == point.end()) throw std::invalid_argument("evaluate: missing value for " + s);
      if (it->second == 0 && e < 0) return std::nullopt;
      Rational base = it->second;
      std::int64_t k = e;
      if (k < 0) {
        base = Rational(1) / base;
        k = -k;
      }
      Rational p = 1;
      while (k > 0) {
        if (k & 1) p *= base;
        base *= base;
        k >>= 1;
      }
      v *= p;
    }
    total += v;
  }
  return total;
}

std::string LaurentPolynomial::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Rational& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = c < 0 ? Rational(-c) : c;
    if (it->first.is_unit()) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << it->first.str();
    }
  }
  return os.str();
}

}  // namespace qmirror
