#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmirror/rational.hpp"

namespace qmirror {

using Symbol = std::string;

// Exponent vector of a Laurent monomial. Zero exponents are never stored.
// The order (lexicographic on symbol names, larger exponent first) is a total
// group order on exponent vectors, so leading terms multiply.
class Monomial {
 public:
  using ExpMap = std::map<Symbol, std::int64_t>;

  Monomial() = default;
  static Monomial var(const Symbol& s, std::int64_t e = 1);
  static Monomial from_exponents(ExpMap e);

  const ExpMap& exponents() const { return exps_; }
  bool is_unit() const { return exps_.empty(); }
  std::int64_t exponent(const Symbol& s) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(std::int64_t k) const;

  // d.divides(n): n/d has no negative exponents.
  bool divides(const Monomial& n) const;

  int compare(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator<(const Monomial& o) const { return compare(o) < 0; }

  std::string str() const;

 private:
  ExpMap exps_;
};

// Sparse multivariate Laurent polynomial over Q. No zero coefficients stored;
// value equality is term-map equality.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& c);
  static LaurentPolynomial zero() { return LaurentPolynomial(); }
  static LaurentPolynomial one() { return LaurentPolynomial(Rational(1)); }
  static LaurentPolynomial constant(const Rational& c) { return LaurentPolynomial(c); }
  static LaurentPolynomial var(const Symbol& s, std::int64_t e = 1);
  static LaurentPolynomial monomial(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  // Constant value; requires is_constant().
  Rational constant_value() const;
  std::size_t term_count() const { return t_.size(); }

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rational& c) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);

  // n-th power by repeated squaring, n >= 0.
  LaurentPolynomial pow(std::int64_t n) const;

  LaurentPolynomial derivative(const Symbol& s) const;

  // Sub-polynomial in the remaining variables whose terms carry exactly the
  // given exponents on the named symbols (missing symbol in a term = 0).
  LaurentPolynomial coefficient(const std::map<Symbol, std::int64_t>& partial) const;

  std::pair<Monomial, Rational> leading() const;  // lex-largest term; requires nonzero
  std::set<Symbol> variables() const;

  // Decompose as unit * primitive: unit = (leading coefficient) * (monomial
  // shifting all minimal exponents to zero); primitive has lex-leading
  // coefficient 1 and nonnegative exponents with zero minimum per variable.
  void unit_normalize(Monomial& unit_mono, Rational& unit_coef, LaurentPolynomial& primitive) const;

  // Exact quotient n / d in the Laurent ring, or nullopt when not divisible.
  static std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& n,
                                                       const LaurentPolynomial& d);

  std::optional<Rational> evaluate(const std::map<Symbol, Rational>& point) const;

  bool operator==(const LaurentPolynomial& o) const { return t_ == o.t_; }
  bool operator<(const LaurentPolynomial& o) const { return t_ < o.t_; }

  std::string str() const;

 private:
  void insert(const Monomial& m, const Rational& c);
  TermMap t_;
};

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p);

}  // namespace qmirror
