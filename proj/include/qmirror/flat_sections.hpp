#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmirror/cohomology.hpp"

namespace qmirror {

// Two-point descendent invariants beta_{l,k} = I_k(psi^{Nk-1-l} sigma_N, sigma_l),
// filled degree by degree from the divisor/topological recursion. Entries are
// stored only where Nk-1-l >= 0; absent entries read as 0.
struct BetaTable {
  int N = 0;
  std::map<std::pair<SchubertClass, int>, Rational> entries;
  Rational at(SchubertClass c, int k) const;
};

struct Coefficient {
  Rational value;
  std::int64_t hbar_exponent;  // coefficient sits at hbar^{-hbar_exponent} q^k
};

// Closed form of the flat-section coefficient <S_N, sigma_l> at q^k.
Coefficient closed_form_coefficient(int N, SchubertClass c, int k);

// Kontsevich-Manin recursion; after filling, every recursion relation is
// re-checked on the table (throws on inconsistency).
BetaTable beta_recursion(int N, int kmax);

// Constant-term route: coefficient of q^k in the constant term of
// p_l W_Lus^{kN-l} / (kN-l)!, evaluated by multinomial enumeration.
Rational constant_term_coefficient(int N, SchubertClass c, int k);

// 1 + sum_k C(2k,k)/(k!)^N q^k, as a coefficient list up to kmax.
std::vector<Rational> hypergeometric_series(int N, int kmax);

// I_k(sigma_N psi^{Nk-2}) = C(2k,k)/(k!)^N
Rational gw_invariant(int N, int k);

// The flat section as a truncated q-series over the Schubert basis,
// prefactor-normalized (see dual_dubrovin_apply).
QSeries assemble_section(int N, int order);

struct FlatReport {
  bool ok = false;
  std::string detail;
};
// Both dual-connection directions annihilate the assembled section through
// q^order, exactly.
FlatReport verify_flat(int N, int order);

}  // namespace qmirror
