#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qmirror/laurent.hpp"

namespace qmirror {

// Schubert basis class of H^{2i}(Q_N); even quadrics carry a second middle
// class (prime = true, i = m-1).
struct SchubertClass {
  int i = 0;
  bool prime = false;
  auto operator<=>(const SchubertClass&) const = default;
  std::string str() const { return "s" + std::to_string(i) + (prime ? "p" : ""); }
};

// Element of H*(Q_N) with coefficients in the Laurent ring over {hbar, q, L},
// L being the formal log of q (dq L = 1/q).
class CohVector {
 public:
  using Map = std::map<SchubertClass, LaurentPolynomial>;

  CohVector() = default;
  static CohVector unit(SchubertClass c);

  const Map& entries() const { return e_; }
  LaurentPolynomial coefficient(SchubertClass c) const;
  void set(SchubertClass c, const LaurentPolynomial& v);
  void add(SchubertClass c, const LaurentPolynomial& v);
  bool is_zero() const { return e_.empty(); }

  CohVector operator+(const CohVector& o) const;
  CohVector operator-(const CohVector& o) const;
  CohVector operator*(const LaurentPolynomial& s) const;
  CohVector operator*(const Rational& s) const;
  bool operator==(const CohVector& o) const { return e_ == o.e_; }

  std::string str() const;

 private:
  Map e_;
};

std::vector<SchubertClass> schubert_basis(int N);
int grading(SchubertClass c);
SchubertClass poincare_dual(int N, SchubertClass c);

// sigma_1 *_q c per the quantum Chevalley rule (quantum parameter of degree N).
CohVector quantum_chevalley(int N, SchubertClass c);
// linear extension to vectors, with q inside coefficients
CohVector chevalley_apply(int N, const CohVector& v);
// classical cup with sigma_1 (the q -> 0 part)
CohVector classical_chevalley_apply(int N, const CohVector& v);
// c_1(TX) * v = N (sigma_1 * v)
CohVector first_chern_times(int N, const CohVector& v);

// Truncated q-power series of cohomology elements; terms[k] is the
// coefficient of q^k, with q not reused inside entries.
struct QSeries {
  int N = 0;
  int order = 0;
  std::vector<CohVector> terms;

  QSeries() = default;
  QSeries(int N_, int order_) : N(N_), order(order_), terms(order_ + 1) {}
  bool is_zero() const;
  bool operator==(const QSeries& o) const;
  std::string str() const;
};

enum class Direction { Q, Hbar };

// The dual Dubrovin operator annihilating flat sections, applied to the
// prefactor-normalized series:
//   Q:    q d_q S - (1/hbar) sigma_1 * S
//   Hbar: hbar d_hbar S + (1/hbar) c_1 * S + Gr(S) - N S
// (the -N S term is the conjugation by the dropped hbar^{-N} prefactor).
QSeries dual_dubrovin_apply(Direction dir, const QSeries& S);

// Commutator of the two covariant derivatives annihilates every basis class
// through the given q-order.
bool connection_flatness_certificate(int N, int order);

// Givental J-function, expanded with the classical cup ring; the hypersurface
// factor carries denominator exponent N+2 (the sigma_0-component check against
// the hypergeometric coefficients pins this down).
QSeries j_function(int N, int order);

}  // namespace qmirror
