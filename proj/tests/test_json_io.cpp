#include <doctest.h>

#include "qmirror/json_io.hpp"

using namespace qmirror;

TEST_CASE("polynomial json shape") {
  auto p = LaurentPolynomial::monomial(Monomial::var("x", 2) * Monomial::var("y", -1),
                                       Rational(3, 4));
  auto j = to_json(p);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["exps"]["x"] == 2);
  CHECK(j["terms"][0]["exps"]["y"] == -1);
  CHECK(j["terms"][0]["coef"] == "3/4");
}

TEST_CASE("json emitters round out") {
  auto mj = to_json(lusztig_model(4));
  CHECK(mj["name"] == "lusztig");
  CHECK(mj["N"] == 4);
  CHECK(mj["vars"].size() == 4);

  auto sj = to_json(assemble_section(3, 2));
  CHECK(sj["N"] == 3);
  CHECK(sj["order"] == 2);
  CHECK(sj["terms"].size() == 4);

  auto pm = to_json(factored_u2(3));
  CHECK(pm["size"] == 6);
  CHECK(pm["rows"].size() == 6);

  auto cj = to_json(closed_form_critical_points(4), chart_membership(4));
  CHECK(cj["point_count"] == 6);
  CHECK(cj["sqrt_sign"] == -1);
  CHECK(cj["membership"]["main"].size() == 3);

  auto ij = to_json(verify_b_side_identity(3, {1, false}));
  CHECK(ij["status"] == "verified");
  CHECK(ij["chart"] == "C1");
}

TEST_CASE("csv emitters") {
  auto csv = qseries_csv(assemble_section(3, 2));
  CHECK(csv.find("class,q^0,q^1,q^2") == 0);
  CHECK(csv.find("s3") != std::string::npos);

  auto routes = series_routes_csv(3, 2);
  CHECK(routes.find("N,class,k,route,value,hbar_exponent") == 0);
  CHECK(routes.find("3,s0,1,closed,2,3") != std::string::npos);
  CHECK(routes.find("3,s0,1,constant-term,2,3") != std::string::npos);
}
