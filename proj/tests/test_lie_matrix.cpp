#include <doctest.h>

#include "qmirror/lie_matrix.hpp"
#include "qmirror/lg_models.hpp"

using namespace qmirror;

namespace {
LaurentPolynomial LV(const Symbol& s) { return LaurentPolynomial::var(s); }
}  // namespace

TEST_CASE("chevalley generators") {
  CHECK_THROWS(chevalley_generators(2));
  auto g = chevalley_generators(3);
  // e1 = E_{12} + E_{56}
  PolyMatrix e1(6);
  e1.at(1, 2) = LaurentPolynomial::one();
  e1.at(5, 6) = LaurentPolynomial::one();
  CHECK(g.e[0] == e1);
  CHECK(g.f[2] == g.e[2].transpose());
  for (int i = 0; i < 3; ++i) CHECK((g.e[i] * g.e[i]).is_zero());
  for (int i = 0; i < 3; ++i) CHECK((g.f[i] * g.f[i]).is_zero());
}

TEST_CASE("one parameter subgroups") {
  CHECK(one_param_subgroup(3, 1, LaurentPolynomial::zero()) == PolyMatrix::identity(6));
  auto y1 = one_param_subgroup(3, 1, LV("t"));
  CHECK(y1.at(2, 1) == LV("t"));
  CHECK(y1.at(6, 5) == LV("t"));
  auto ys = one_param_subgroup(3, 2, LV("s"));
  auto yt = one_param_subgroup(3, 2, LV("t"));
  CHECK(ys * yt == one_param_subgroup(3, 2, LV("s") + LV("t")));
}

TEST_CASE("factored u2 for m=3") {
  auto u2 = factored_u2(3);
  // bottom row, right to left: 1, a1+b1, a1 c, a1 d, a1 c d, a1 c d b1
  CHECK(u2.at(6, 6) == LaurentPolynomial::one());
  CHECK(u2.at(6, 5) == LV("a1") + LV("b1"));
  CHECK(u2.at(6, 4) == LV("a1") * LV("c"));
  CHECK(u2.at(6, 3) == LV("a1") * LV("d"));
  CHECK(u2.at(6, 2) == LV("a1") * LV("c") * LV("d"));
  CHECK(u2.at(6, 1) == LV("a1") * LV("c") * LV("d") * LV("b1"));

  auto Q = quadratic_form(3);
  CHECK(u2.transpose() * Q * u2 == Q);
}

TEST_CASE("pluecker column order matches the basis convention") {
  CHECK(pluecker_column_order(3) == std::vector<int>{6, 5, 4, 3, 2, 1});
  CHECK(pluecker_column_order(4) == std::vector<int>{8, 7, 6, 5, 4, 3, 2, 1});
}

TEST_CASE("pluecker extraction equals the closed forms") {
  for (int m : {3, 4, 5}) {
    auto P = pluecker_from_matrix(factored_u2(m));
    auto img = coordinate_map(MapKind::PlueckerInLusztig, 2 * m - 2).images;
    CHECK(P.p[0] == LaurentPolynomial::one());
    for (int k = 1; k <= 2 * m - 2; ++k)
      CHECK(RationalFunction(P.p[k]) == img.at(pvar(k)));
    CHECK(RationalFunction(P.p_prime) == img.at(pprime_var(m - 1)));
  }
}

TEST_CASE("minors") {
  auto I = PolyMatrix::identity(6);
  CHECK(minor(I, {1, 2}, {1, 2}) == LaurentPolynomial::one());
  CHECK(minor(I, {1, 2}, {1, 3}) == LaurentPolynomial::zero());
  CHECK_THROWS(minor(I, {1, 2}, {1}));

  auto u2 = factored_u2(3);
  auto P = pluecker_from_matrix(u2);
  CHECK(minor(u2, {6}, {1}) == P.p[4]);
  // squared spin minors, m=3
  CHECK(minor(u2, {2, 3, 6}, {1, 2, 4}) == P.p[2] * P.p[2]);
  CHECK(minor(u2, {2, 4, 6}, {1, 2, 3}) == P.p_prime * P.p_prime);
}

TEST_CASE("minor identity suite") {
  for (int m : {3, 4, 5}) {
    auto rep = verify_minor_identities(m);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}
