#pragma once

#include <string>
#include <vector>

#include "qmirror/laurent.hpp"

namespace qmirror {

// Dense matrix over the Laurent polynomial ring; used for the SO_{2m}
// computations of the even canonical mirror.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(n), e_(n, std::vector<LaurentPolynomial>(n)) {}
  static PolyMatrix identity(int n);

  int size() const { return n_; }
  LaurentPolynomial& at(int r, int c) { return e_[r - 1][c - 1]; }          // 1-based
  const LaurentPolynomial& at(int r, int c) const { return e_[r - 1][c - 1]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  bool operator==(const PolyMatrix& o) const { return e_ == o.e_; }
  bool is_zero() const;

 private:
  int n_ = 0;
  std::vector<std::vector<LaurentPolynomial>> e_;
};

// Chevalley generators of so_{2m} in the antidiagonal form: e_i =
// E_{i,i+1} + E_{2m-i,2m-i+1} for i < m, e_m = E_{m-1,m+1} + E_{m,m+2}, and
// f_i the transpose.
struct ChevalleyGenerators {
  int m = 0;
  std::vector<PolyMatrix> e, f;  // index 1..m stored at [i-1]
};
ChevalleyGenerators chevalley_generators(int m);

// y_i(t) = exp(t f_i) = I + t f_i (the generators square to zero).
PolyMatrix one_param_subgroup(int m, int i, const LaurentPolynomial& t);

// The factored unipotent element
//   u2 = y_1(a1) ... y_{m-2}(a_{m-2}) y_m(d) y_{m-1}(c) y_{m-2}(b_{m-2}) ... y_1(b1).
PolyMatrix factored_u2(int m);

// The antidiagonal quadratic form Q(v_i, v_j) = (-1)^{max(i,j)} delta_{i+j,2m+1}.
PolyMatrix quadratic_form(int m);

// Column index (1-based) of the bottom-row entry holding each Plucker
// coordinate, derived once by applying the Weyl-word representatives to the
// last basis vector. Order: p_0, p_1, ..., p_{m-1}, p'_{m-1}, p_m, ..., p_{2m-2}.
std::vector<int> pluecker_column_order(int m);

struct PlueckerValues {
  std::vector<LaurentPolynomial> p;  // p_0 .. p_{2m-2}
  LaurentPolynomial p_prime;         // p'_{m-1}
};
PlueckerValues pluecker_from_matrix(const PolyMatrix& M);

// Minor with the given 1-based row and column sets (in listed order).
LaurentPolynomial minor(const PolyMatrix& M, const std::vector<int>& rows,
                        const std::vector<int>& cols);

struct MinorReport {
  bool ok = false;
  std::string detail;
};
// The bottom-row minor, the delta minors, the squared spin minors,
// and the single-entry convention check.
MinorReport verify_minor_identities(int m);

}  // namespace qmirror
