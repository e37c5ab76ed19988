#include <cliffalg/json_io.hpp>
#include <cliffalg/lie_structure.hpp>
#include <cliffalg/random.hpp>

#include <doctest.h>

using namespace cliffalg;
namespace jio = cliffalg::json_io;

TEST_CASE("rationals and polynomials") {
  CHECK(jio::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(jio::rational_from_json(jio::json("6/8")) == Rational(3, 4));
  CHECK(jio::rational_from_json(jio::json(5)) == 5);
  CHECK_THROWS_AS(jio::rational_from_json(jio::json(0.5)), ParseError);
  const Polynomial p{Rational(1), Rational(0), Rational(-2, 3)};
  CHECK(jio::to_json(p) == jio::json({"1", "0", "-2/3"}));
  CHECK(jio::polynomial_from_json(jio::to_json(p)) == p);
  const RationalFunction f(Polynomial{1, 1}, Polynomial{0, 2});
  CHECK(jio::rational_function_from_json(jio::to_json(f)) == f);
  CHECK(jio::rational_function_from_json(jio::json::parse(R"(["0","1"])")) == RationalFunction(Polynomial::t()));
  CHECK_THROWS_AS(jio::rational_function_from_json(jio::json::parse(R"({"num":["1"],"den":[]})")), ParseError);
}

TEST_CASE("quadratic spaces and families") {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const SpaceQ V = random_space(rng, 4);
    CHECK(jio::space_from_json(jio::to_json(V)) == V);
  }
  CHECK_THROWS_AS(jio::space_from_json(jio::json::parse(R"({"m":2,"Q":[["1","2"],["0","1"]]})")), ParseError);
  CHECK_THROWS_AS(jio::space_from_json(jio::json::parse(R"({"m":2,"Q":[["1","0"]]})")), ParseError);
  const auto F = jio::family_from_json(jio::json::parse(R"({"m":1,"Q":[[["0","1"]]]})"));
  CHECK(F.gram()[0][0] == RationalFunction(Polynomial::t()));
}

TEST_CASE("multivectors") {
  const auto x = jio::multivector_from_json(jio::json::parse(R"({"[]":"1","[1,3]":"2/3"})"));
  CHECK(x.coefficient(0) == 1);
  CHECK(x.coefficient(blade_of({1, 3})) == Rational(2, 3));
  CHECK(jio::multivector_from_json(jio::to_json(x)) == x);
  CHECK_THROWS_AS(jio::multivector_from_json(jio::json::parse(R"({"[3,1]":"1"})")), ParseError);
  CHECK_THROWS_AS(jio::multivector_from_json(jio::json::parse(R"({"x":"1"})")), ParseError);
}

TEST_CASE("algebra tensors") {
  const auto T = theta_tensor(SpaceQ::identity(3));
  CHECK(jio::tensor_from_json(jio::to_json(T)) == T);
  CHECK_THROWS_AS(jio::tensor_from_json(jio::json::parse(R"({"dim":2,"identity":0,"c":[[0,0,5,"1"]]})")), ParseError);
}

TEST_CASE("weights and tuples") {
  WeightMultiset W;
  W.add({Rational(1, 2), Rational(-1, 2)}, 3);
  CHECK(jio::weights_from_json(jio::to_json(W)) == W);
  const MatrixTuple T(2, {MatrixQ::identity(2), MatrixQ(2, 2)});
  CHECK(jio::tuple_from_json(jio::to_json(T)) == T);
  CHECK_THROWS_AS(jio::tuple_from_json(jio::json::parse(R"({"g":1,"n":2,"X":[[["1"]]]})")), ParseError);
}

TEST_CASE("parse errors carry the position") {
  try {
    jio::parse("{\"m\": 3,");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}
