#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmirror/rational_function.hpp"

namespace qmirror {

enum class ModelKind { Canonical, Givental, Przyjalkowski, Lusztig };

// A named variable set with a superpotential; constrained models carry the
// polynomials that must vanish on their domain. Canonical models are affine
// (p0 = 1); delta_poly keeps p0 symbolic.
struct LGModel {
  ModelKind kind;
  int N = 0;
  std::vector<Symbol> vars;  // excludes the quantum parameter "q"
  RationalFunction superpotential;
  std::vector<LaurentPolynomial> constraints;
  std::string name() const;
};

// Symbol helpers shared across modules.
Symbol pvar(int i);                 // "p3"
Symbol pprime_var(int i);           // "pp3", the primed middle Plucker coordinate
Symbol delta_var(int i);            // "delta2" (cluster chart symbol)
std::vector<Symbol> lusztig_vars(int N);

// delta_ell = sum_{k=0..ell} (-1)^k p_{ell-k} p_{N-ell+k}; homogeneous (p0 kept).
// Range-checked: 1 <= ell <= m-1 (odd N=2m-1) or 1 <= ell <= m-3 (even N=2m-2).
LaurentPolynomial delta_poly(int N, int ell);
// Same formula on the full natural range (0 <= ell <= floor((N-1)/2)
// odd, 0 <= ell <= m-2 even); delta_0 = p0*pN.
LaurentPolynomial delta_poly_ext(int N, int ell);
// Affine versions (p0 = 1).
LaurentPolynomial delta_affine(int N, int ell);
// Quadric relation of the even mirror, homogeneous in p0..p_{2m-2}, pp_{m-1}.
LaurentPolynomial quadric_relation(int N);

LGModel canonical_model(int N);
LGModel givental_model(int N);
LGModel przyjalkowski_model(int N);
LGModel lusztig_model(int N);

enum class MapKind {
  PrzToGiv,            // nu_i in terms of z_i (either parity)
  GivToPrz,            // z_i in terms of nu_i
  CanToPrzOdd,         // z_i in terms of p_i
  CanToGivOdd,         // nu_i in terms of p_i
  CanToPrzEven,        // z_i in terms of p_i, pp
  PrzToCanEven,        // p_i, pp in terms of z_i (inverse of the above)
  PlueckerInLusztig,   // p_i (and pp) in terms of Lusztig torus coordinates
  LusztigInverse,      // Lusztig coordinates in terms of p_i (and pp)
};

struct CoordinateMap {
  MapKind kind;
  LGModel source, target;
  // target variable -> rational function in source variables (and q)
  std::map<Symbol, RationalFunction> images;
  // the distinct denominator factors occurring in the images (the chart)
  std::vector<LaurentPolynomial> chart;
};

CoordinateMap coordinate_map(MapKind kind, int N);

// images of map2 composed over map1 (map1: A->B, map2: B->C) as functions on A.
std::map<Symbol, RationalFunction> compose_images(const CoordinateMap& first,
                                                  const CoordinateMap& second);

struct PullbackReport {
  bool ok = false;
  std::string detail;  // first failing identity, both sides serialized
};

// Substituting the map into the target superpotential must reproduce the
// source superpotential exactly; constraints of constrained targets must pull
// back to zero; even canonical identities are verified on the Lusztig torus;
// maps out of the Givental model are verified on its rational parametrization.
PullbackReport verify_pullback(MapKind kind, int N);

// det( d log target_j / d log source_i ) on the map's chart, with the residue
// normalization of the Givental volume form applied on whichever side is the
// constrained Givental model (its chart eliminates nu_1 and nu_{N+2}).
RationalFunction log_jacobian_det(const CoordinateMap& map);

// Plain dlog-Jacobian determinant of an explicit coordinate assignment
// (used for torus-to-torus checks and unit tests).
RationalFunction dlog_jacobian_det(const std::vector<Symbol>& source_vars,
                                   const std::vector<RationalFunction>& target_images);

bool is_plus_minus_one(const RationalFunction& f);

}  // namespace qmirror
