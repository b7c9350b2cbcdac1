#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/oracle.hpp"
#include "dio/system.hpp"

using namespace dio;

TEST_CASE("validate accepts well-formed specs and records parity") {
  const ValidatedSpec even = validate(SystemSpec::full4({1, 1, 1, 1}));
  CHECK(even.even_sum);
  CHECK(even.spec.k == 4);

  const ValidatedSpec odd = validate(SystemSpec::full4({1, 1, 1, 2}));
  CHECK_FALSE(odd.even_sum);
}

TEST_CASE("validate rejects bad arity and negative entries") {
  CHECK_THROWS_AS(validate(SystemSpec::floyd3({2, 2})), WrongArity);
  CHECK_THROWS_AS(validate(SystemSpec{SystemKind::Full4, 4, {1, 2, 3}}), WrongArity);
  CHECK_THROWS_AS(validate(SystemSpec{SystemKind::Full4, 3, {1, 2, 3}}), WrongArity);
  CHECK_THROWS_AS(validate(SystemSpec::general({})), WrongArity);
  CHECK_THROWS_AS(validate(SystemSpec::full4({1, -1, 1, 1})), NegativeRhs);
}

TEST_CASE("classify_delta sign classes") {
  CHECK(classify_delta({2, 2, 0, 0}) == DeltaClass::Negative);
  CHECK(classify_delta({2, 2, 2, 2}) == DeltaClass::Zero);
  CHECK(classify_delta({0, 0, 2, 2}) == DeltaClass::Positive);
}

TEST_CASE("classify_delta symmetries") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const long long a = rng() % 20, b = rng() % 20, c = rng() % 20, d = rng() % 20;
    const DeltaClass base = classify_delta({a, b, c, d});
    CHECK(classify_delta({b, a, c, d}) == base);
    CHECK(classify_delta({a, b, d, c}) == base);
    // exchanging the pairs flips the sign
    const DeltaClass flipped = classify_delta({c, d, a, b});
    switch (base) {
      case DeltaClass::Negative:
        CHECK(flipped == DeltaClass::Positive);
        break;
      case DeltaClass::Zero:
        CHECK(flipped == DeltaClass::Zero);
        break;
      case DeltaClass::Positive:
        CHECK(flipped == DeltaClass::Negative);
        break;
    }
  }
}

TEST_CASE("residue_class") {
  CHECK(residue_class(8) == 0);
  CHECK(residue_class(9) == 1);
  CHECK(residue_class(6) == 2);
  CHECK(residue_class(0) == 0);
  CHECK(residue_class(3) == 3);
}

TEST_CASE("solution matrices satisfy the row equations and the delta identity") {
  // the identity 2*a34 - 2*a12 = delta(reduced rhs) must hold on every
  // enumerated k=4 solution, uniform or not
  for (const std::vector<long long>& rhs :
       {std::vector<long long>{3, 3, 3, 3}, {4, 4, 4, 4}, {2, 3, 4, 5}, {0, 1, 2, 3},
        {5, 1, 3, 1}}) {
    const ValidatedSpec vs = validate(SystemSpec::full4(rhs));
    enumerate_solutions(vs, [&](const SolutionMatrix& m) {
      REQUIRE(m.satisfies(vs.spec));
      const ReducedRhs r{rhs[0] - 2 * m.at(0, 0), rhs[1] - 2 * m.at(1, 1),
                         rhs[2] - 2 * m.at(2, 2), rhs[3] - 2 * m.at(3, 3)};
      REQUIRE(delta_of(r) == 2 * m.at(2, 3) - 2 * m.at(0, 1));
      return true;
    });
  }
}

TEST_CASE("satisfies rejects wrong row sums") {
  SolutionMatrix m(4);
  m.set(0, 1, 1);
  m.set(2, 3, 1);
  CHECK(m.satisfies(SystemSpec::full4({1, 1, 1, 1})));
  CHECK_FALSE(m.satisfies(SystemSpec::full4({1, 1, 1, 3})));
  CHECK_FALSE(m.satisfies(SystemSpec::floyd3({1, 1, 1})));
}

TEST_CASE("canonical json emits the upper triangle row-major") {
  SolutionMatrix m(4);
  m.set(0, 1, 1);
  m.set(2, 3, 1);
  CHECK(m.to_json_string() ==
        R"({"k":4,"alpha":[[0,1,0,0],[0,0,0],[0,1],[0]]})");

  SolutionMatrix z(4);
  CHECK(z.to_json_string() == R"({"k":4,"alpha":[[0,0,0,0],[0,0,0],[0,0],[0]]})");

  SolutionMatrix f(3);
  f.set(0, 0, 2);
  f.set(1, 2, 3);
  CHECK(f.to_json_string() == R"({"k":3,"alpha":[[2,0,0],[0,3],[0]]})");
  CHECK(f.upper_triangle() == std::vector<long long>{2, 0, 0, 0, 3, 0});
}
