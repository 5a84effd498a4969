#include "generators.hpp"

#include "glinf/charmat.hpp"
#include "glinf/gt_oracle.hpp"
#include "glinf/json_io.hpp"
#include "glinf/tensor.hpp"

#include <doctest.h>

using namespace glinf;
using glinf::testing::hw;

TEST_SUITE("json_io") {

TEST_CASE("eigenvalue report layout") {
  const auto j = to_json(eigenvalue_report(hw({2, 1}), 3));
  CHECK(j.dump() == R"({"lambda":[2,1],"m":3,"closed":"12","recursive":"12","agree":true})");
}

TEST_CASE("certificate layout") {
  CHECK(to_json(verify_theorem5(hw({1, 1}))).dump() ==
        R"({"lambda":[1,1],"mu":null,"n":3,"roots":["1","0","-2"],"residual_zero":true,"kernel_dims":[8,0,1]})");
  const auto j = to_json(verify_theorem6(hw({1, 1}), hw({1})));
  CHECK(j["mu"].dump() == "[1]");
}

TEST_CASE("decomposition layout") {
  CHECK(to_json(lr_decompose(hw({1}), hw({1}))).dump() ==
        R"({"lambda":[1],"mu":[1],"summands":[{"nu":[2],"mult":1},{"nu":[1,1],"mult":1}]})");
}

TEST_CASE("rationals are strings") {
  IdentityCertificate c;
  c.roots = {Rational(-3, 2)};
  CHECK(to_json(c)["roots"][0] == "-3/2");
}

TEST_CASE("module fixture round trip") {
  const auto rep = build_module(hw({2, 1}), 3);
  const auto j = module_fixture(rep);
  CHECK(j["dim"] == 8);
  CHECK(j["hwv_index"] == 0);
  CHECK(highest_weight_from_json(j["lambda"]) == hw({2, 1}));
  CHECK(j["generators"].size() == 9);
  for (const auto& g : j["generators"]) {
    const auto& m = rep.generator(g["i"].get<std::size_t>(), g["j"].get<std::size_t>());
    CHECK(g["entries"].size() == m.nonzeros());
    for (const auto& e : g["entries"])
      CHECK(m.at(e[0].get<std::size_t>(), e[1].get<std::size_t>()) == parse_rational(e[2].get<std::string>()));
  }
  CHECK_THROWS_AS(highest_weight_from_json(Json::parse("[1,2]")), DominanceError);
}

}
