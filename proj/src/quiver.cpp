#include "qmirror/quiver.hpp"

#include <sstream>
#include <stdexcept>

namespace qmirror {

namespace {
LaurentPolynomial LV(const Symbol& s) { return LaurentPolynomial::var(s); }
RationalFunction RV(const Symbol& s) { return RationalFunction::var(s); }
}  // namespace

Quiver quadric_quiver(int N) {
  if (N < 3) throw std::invalid_argument("quadric quiver needs N >= 3");
  int m = (N % 2 != 0) ? (N + 1) / 2 : (N + 2) / 2;
  Quiver qv;
  qv.vertices.push_back({"1", Quiver::Role::One});
  // chain labels, top to bottom
  std::vector<Symbol> chain;
  if (N % 2 != 0) {
    for (int i = 2; i <= m - 1; ++i) chain.push_back("a" + std::to_string(i));
    chain.push_back("c");
    for (int i = m - 1; i >= 2; --i) chain.push_back("b" + std::to_string(i));
  } else {
    for (int i = 2; i <= m - 2; ++i) chain.push_back("a" + std::to_string(i));
    chain.push_back("d");
    chain.push_back("c");
    for (int i = m - 2; i >= 2; --i) chain.push_back("b" + std::to_string(i));
  }
  int prev = 0;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    qv.vertices.push_back({"v" + std::to_string(k + 1), Quiver::Role::Internal});
    qv.arrows.push_back({prev, static_cast<int>(qv.vertices.size() - 1), chain[k]});
    prev = static_cast<int>(qv.vertices.size() - 1);
  }
  // diamond: two arrows b1 (left) and a1 (right) from the chain bottom, then
  // one unlabeled arrow from each new vertex into the sink
  int left = static_cast<int>(qv.vertices.size());
  qv.vertices.push_back({"u1", Quiver::Role::Internal});
  int right = static_cast<int>(qv.vertices.size());
  qv.vertices.push_back({"u2", Quiver::Role::Internal});
  int sink = static_cast<int>(qv.vertices.size());
  qv.vertices.push_back({"q", Quiver::Role::Sink});
  qv.arrows.push_back({prev, left, Symbol("b1")});
  qv.arrows.push_back({prev, right, Symbol("a1")});
  qv.arrows.push_back({left, sink, std::nullopt});
  qv.arrows.push_back({right, sink, std::nullopt});
  return qv;
}

std::string Quiver::to_dot() const {
  std::ostringstream os;
  os << "digraph quadric {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    os << "  n" << i << " [label=\"" << vertices[i].id << "\"";
    if (vertices[i].role != Role::Internal) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& a : arrows) {
    os << "  n" << a.tail << " -> n" << a.head;
    if (a.label) os << " [label=\"" << *a.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

RationalFunction superpotential_from_quiver(const Quiver& qv) {
  int one = -1, sink = -1;
  for (std::size_t i = 0; i < qv.vertices.size(); ++i) {
    if (qv.vertices[i].role == Quiver::Role::One) one = static_cast<int>(i);
    if (qv.vertices[i].role == Quiver::Role::Sink) sink = static_cast<int>(i);
  }
  if (one < 0 || sink < 0) throw std::invalid_argument("quiver needs 1 and q vertices");

  // enumerate all 1 -> q paths (the quiver is a DAG)
  std::vector<std::vector<int>> paths;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == sink) {
      paths.push_back(stack);
      return;
    }
    for (std::size_t i = 0; i < qv.arrows.size(); ++i)
      if (qv.arrows[i].tail == v) {
        stack.push_back(static_cast<int>(i));
        self(self, qv.arrows[i].head);
        stack.pop_back();
      }
  };
  dfs(dfs, one);

  // solve the unlabeled arrows from "path product = q"
  std::map<std::size_t, RationalFunction> solved;
  for (const auto& path : paths) {
    RationalFunction labeled{Rational(1)};
    std::vector<std::size_t> unknown;
    for (int ai : path) {
      if (qv.arrows[ai].label)
        labeled = labeled * RV(*qv.arrows[ai].label);
      else
        unknown.push_back(static_cast<std::size_t>(ai));
    }
    if (unknown.size() != 1)
      throw std::invalid_argument("each 1->q path must carry exactly one unlabeled arrow");
    RationalFunction value = RV("q") / labeled;
    auto [it, fresh] = solved.emplace(unknown[0], value);
    if (!fresh && !(it->second == value))
      throw std::invalid_argument("inconsistent quiver labeling");
  }

  RationalFunction W;
  for (std::size_t i = 0; i < qv.arrows.size(); ++i) {
    if (qv.arrows[i].label) {
      W = W + RV(*qv.arrows[i].label);
    } else {
      auto it = solved.find(i);
      if (it == solved.end()) throw std::invalid_argument("unlabeled arrow not on any 1->q path");
      W = W + it->second;
    }
  }
  return W;
}

bool gr24_bridge() {
  RationalFunction grW = RV("m1") + RV("m2") + RV("m3") + RV("m4") +
                         RV("m1") * RV("m2") / RV("m4") +
                         RV("q") / (RV("m1") * RV("m2") * RV("m3"));
  std::map<Symbol, RationalFunction> sub{
      {"m1", RV("q") / (RV("a1") * RV("c") * RV("d"))},
      {"m2", RV("a1")},
      {"m3", RV("c")},
      {"m4", RV("b1")},
      {"q", RV("q")},
  };
  return grW.substitute(sub) == lusztig_model(4).superpotential;
}

std::pair<LaurentPolynomial, LaurentPolynomial> exchange_relation(int m, int i) {
  if (m < 3) throw std::invalid_argument("exchange relations need m >= 3");
  if (i < 1 || i > m - 2) throw std::invalid_argument("exchange index out of range");
  int N = 2 * m - 2;
  LaurentPolynomial lhs = LV(pvar(i)) * LV(pvar(N - i));
  auto dpoly = [&](int j) -> LaurentPolynomial {
    if (j == 0) return LV(pvar(0)) * LV(pvar(N));
    if (j == m - 2) return LV(pvar(m - 1)) * LV(pprime_var(m - 1));
    return delta_poly(N, j);
  };
  LaurentPolynomial rhs = dpoly(i - 1) + dpoly(i);
  return {lhs, rhs};
}

ExchangeReport verify_exchange_relations(int m) {
  ExchangeReport rep;
  if (m < 3) throw std::invalid_argument("verify_exchange_relations needs m >= 3");
  int N = 2 * m - 2;
  auto img = coordinate_map(MapKind::PlueckerInLusztig, N).images;
  img.emplace("p0", RationalFunction(Rational(1)));
  img.emplace("q", RationalFunction::var("q"));
  for (int i = 1; i <= m - 2; ++i) {
    auto [lhs, rhs] = exchange_relation(m, i);
    RationalFunction diff = RationalFunction(lhs - rhs).substitute(img);
    if (!diff.is_zero()) {
      rep.ok = false;
      std::ostringstream os;
      os << "exchange relation fails for (m=" << m << ", i=" << i
         << "): residual = " << diff.str();
      rep.detail = os.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

ClusterSeed cluster_seed(int m) {
  if (m < 3) throw std::invalid_argument("cluster seed needs m >= 3");
  ClusterSeed s;
  s.m = m;
  for (int i = 1; i <= m - 2; ++i) s.mutable_vars.push_back(pvar(i));
  for (int i = 1; i <= m - 3; ++i) s.frozen_vars.push_back(delta_var(i));
  s.frozen_vars.push_back(pvar(0));
  s.frozen_vars.push_back(pvar(m - 1));
  s.frozen_vars.push_back(pprime_var(m - 1));
  s.frozen_vars.push_back(pvar(2 * m - 2));
  return s;
}

}  // namespace qmirror
