#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyvf/errors.hpp"
#include "polyvf/serialize.hpp"

using namespace polyvf;

TEST_CASE("rationals in JSON") {
  CHECK(rat_json(Rat(3)) == Json(3));
  CHECK(rat_json(parse_rat("-1/2")) == Json("-1/2"));
  CHECK(rat_json(parse_rat("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(rat_list_json({Rat(0), parse_rat("2/3")}).dump() == "[0,\"2/3\"]");
}

TEST_CASE("polynomial files round trip") {
  std::mt19937 rng(89);
  auto vars = default_variables(3);
  std::vector<MPoly> polys;
  for (int t = 0; t < 5; ++t) {
    MPoly f(vars);
    for (int k = 0; k < 4; ++k) f.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)}, oracle::random_rat(rng));
    polys.push_back(f);
  }
  auto j = polys_to_json(polys, 3);
  CHECK(polys_from_json(Json::parse(j.dump())) == polys);
  auto integer_coef = Json::parse(R"({"n": 1, "polys": [[{"exp": [2], "coef": 5}]]})");
  CHECK(polys_from_json(integer_coef).front() == MPoly::monomial(default_variables(1), {2}, 5));
  CHECK_THROWS_AS(polys_from_json(Json::parse(R"({"n": 2, "polys": [[{"exp": [1], "coef": "1"}]]})")), DimensionMismatch);
  CHECK_THROWS_AS(polys_from_json(Json::parse(R"({"polys": []})")), std::invalid_argument);
}

TEST_CASE("series and descriptors") {
  RationalSeries s(UPoly::x_power(1), UPoly::constant(1) - UPoly::x_power(1));
  auto j = to_json(s);
  CHECK(j["num"].dump() == "[0,1]");
  CHECK(j["den"].dump() == "[1,-1]");
  ModuleDescriptor d({parse_rat("1/2"), Rat(0)}, {Rat(1), Rat(-2)});
  auto dj = to_json(d);
  CHECK(dj.dump().find("\"1/2\"") != std::string::npos);
}

TEST_CASE("identical inputs serialize identically") {
  ModuleDescriptor d({Rat(0), Rat(0)}, {Rat(0), Rat(0)});
  auto a = to_json(spanning_generators(d, 6, 4)).dump();
  auto b = to_json(spanning_generators(d, 6, 4)).dump();
  CHECK(a == b);
}
