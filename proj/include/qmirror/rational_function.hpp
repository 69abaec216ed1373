#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qmirror/laurent.hpp"

namespace qmirror {

struct SubstitutionDenominatorZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quotient of Laurent polynomials. Equality is decided by cross-multiplication
// (no canonical gcd form). Internally the denominator is a multiset of monic
// shift-normalized factors; this only affects performance, never values.
class RationalFunction {
 public:
  using FactorMap = std::map<LaurentPolynomial, int>;

  RationalFunction() = default;  // zero
  RationalFunction(const LaurentPolynomial& p) : num_(p) {}  // NOLINT: implicit by design
  RationalFunction(const Rational& c) : num_(LaurentPolynomial(c)) {}
  RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den);
  static RationalFunction var(const Symbol& s) { return RationalFunction(LaurentPolynomial::var(s)); }

  const LaurentPolynomial& num() const { return num_; }
  const FactorMap& den_factors() const { return den_; }
  LaurentPolynomial den_expanded() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(std::int64_t n) const;  // any sign

  RationalFunction derivative(const Symbol& s) const;

  // Exact composition; every symbol of *this must have an image.
  RationalFunction substitute(const std::map<Symbol, RationalFunction>& images) const;

  bool equals(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const { return equals(o); }

  std::optional<Rational> evaluate(const std::map<Symbol, Rational>& point) const;

  std::set<Symbol> variables() const;
  std::string str() const;

 private:
  void push_den(const LaurentPolynomial& f, int mult);
  void cancel();
  LaurentPolynomial num_;
  FactorMap den_;
};

RationalFunction operator+(const LaurentPolynomial& a, const RationalFunction& b);
RationalFunction operator*(const LaurentPolynomial& a, const RationalFunction& b);
RationalFunction operator*(const Rational& c, const RationalFunction& b);

}  // namespace qmirror
