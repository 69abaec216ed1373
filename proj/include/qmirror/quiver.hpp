#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmirror/lg_models.hpp"

namespace qmirror {

// The superpotential quiver of Q_N: a vertical chain from the source vertex
// "1", a doubled diamond at the bottom, and two unlabeled arrows into the sink
// "q". Unlabeled arrows get the label forced by requiring every 1->q path to
// have label product q.
struct Quiver {
  enum class Role { One, Internal, Sink };
  struct Vertex {
    std::string id;
    Role role;
  };
  struct Arrow {
    int tail, head;
    std::optional<Symbol> label;
  };
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;

  std::string to_dot() const;
};

Quiver quadric_quiver(int N);

// Sum of all arrow labels after solving for the unlabeled ones; throws on an
// inconsistent labeling.
RationalFunction superpotential_from_quiver(const Quiver& qv);

// The Gr(2,4) substitution m1 -> q/(a1 c d), m2 -> a1, m3 -> c, m4 -> b1
// turns the Grassmannian quiver superpotential into the Q4 one.
bool gr24_bridge();

// Exchange relation p_i p_{2m-2-i} = RHS of the A_1^{m-2} cluster structure,
// as a pair of polynomials in the (homogeneous) Plucker symbols.
std::pair<LaurentPolynomial, LaurentPolynomial> exchange_relation(int m, int i);

struct ExchangeReport {
  bool ok = false;
  std::string detail;
};
// All exchange relations hold identically after the Lusztig substitution.
ExchangeReport verify_exchange_relations(int m);

// Cluster seed data of the even mirror, serializable.
struct ClusterSeed {
  int m = 0;
  std::vector<Symbol> mutable_vars;
  std::vector<Symbol> frozen_vars;
};
ClusterSeed cluster_seed(int m);

}  // namespace qmirror
