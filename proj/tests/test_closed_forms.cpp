#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dio/closed_forms.hpp"
#include "dio/oracle.hpp"

using namespace dio;

namespace {
BigCount oracle4(long long l) {
  return count_bruteforce(validate(SystemSpec::full4({l, l, l, l})));
}
}  // namespace

TEST_CASE("even closed form against the oracle") {
  CHECK(closed_count_even(0) == 1);
  CHECK(closed_count_even(2) == 17);
  CHECK(closed_count_even(4) == 138);  // frozen from the oracle
  CHECK(closed_count_even(0) == oracle4(0));
  CHECK(closed_count_even(2) == oracle4(2));
  CHECK(closed_count_even(4) == oracle4(4));
  CHECK(closed_count_even(6) == oracle4(6));
}

TEST_CASE("odd closed form against the oracle") {
  CHECK(closed_count_odd(1) == 3);
  CHECK(closed_count_odd(3) == 47);   // frozen from the oracle
  CHECK(closed_count_odd(5) == 306);  // frozen from the oracle
  CHECK(closed_count_odd(1) == oracle4(1));
  CHECK(closed_count_odd(3) == oracle4(3));
  CHECK(closed_count_odd(5) == oracle4(5));
  CHECK(closed_count_odd(7) == oracle4(7));
}

TEST_CASE("parity errors") {
  CHECK_THROWS_AS(closed_count_even(1), OddInput);
  CHECK_THROWS_AS(closed_count_odd(2), EvenInput);
  CHECK_THROWS_AS(closed_count_even(-2), DomainError);
  CHECK_THROWS_AS(closed_count(-1), DomainError);
}

TEST_CASE("reindexed forms reproduce the main forms") {
  // determined by cross-evaluation: the reindexed polynomials walk the even
  // values via m -> 2m-2 and the odd values via m -> 2m-3
  for (long long m = 1; m <= 40; ++m) {
    CHECK(closed_count_even_reindexed(m) == closed_count_even(2 * m - 2));
  }
  for (long long m = 2; m <= 40; ++m) {
    CHECK(closed_count_odd_reindexed(m) == closed_count_odd(2 * m - 3));
  }
  CHECK(closed_count_even_reindexed(1) == 1);
  CHECK(closed_count_odd_reindexed(2) == 3);
  CHECK(closed_count_even_reindexed(3) == 138);  // self-evaluation of the polynomial
  CHECK_THROWS_AS(closed_count_even_reindexed(0), DomainError);
  CHECK_THROWS_AS(closed_count_odd_reindexed(1), DomainError);
}

TEST_CASE("floyd closed form") {
  CHECK(floyd_count(0) == 1);
  CHECK(floyd_count(2) == 5);
  CHECK(floyd_count(3) == 0);  // odd l is a value, not an error
  CHECK(floyd_count(4) == 15);
  CHECK_THROWS_AS(floyd_count(-2), DomainError);
}

TEST_CASE("magic constant") {
  CHECK(magic_constant(1) == 1);
  CHECK(magic_constant(3) == 15);
  CHECK(magic_constant(3) == floyd_count(4));
  for (long long n = 2; n <= 20; ++n) {
    CHECK(magic_constant(n) == floyd_count(2 * n - 2));
  }
  CHECK_THROWS_AS(magic_constant(0), DomainError);
}

TEST_CASE("triangle numbers") {
  CHECK(triangle_number(0) == 0);
  CHECK(triangle_number(4) == 10);
  CHECK(triangle_number(10) == 55);
}

TEST_CASE("closed_count dispatches by parity") {
  CHECK(closed_count(0) == 1);
  CHECK(closed_count(1) == 3);
  CHECK(closed_count(2) == 17);
  CHECK(evaluate_closed_form(Formula::EvenMain, 2).count == 17);
  CHECK(evaluate_closed_form(Formula::OddMain, 1).count == 3);
  CHECK(evaluate_closed_form(Formula::MagicConstant, 3).count == 15);
}

TEST_CASE("divisibility is exact across a wide sweep") {
  // the evaluators throw InternalError on any nonzero remainder, so a clean
  // sweep is the assertion
  for (long long l = 0; l <= 10000; l += 2) {
    CHECK_NOTHROW(closed_count_even(l));
    CHECK_NOTHROW(floyd_count(l));
  }
  for (long long l = 1; l <= 9999; l += 2) {
    CHECK_NOTHROW(closed_count_odd(l));
  }
  for (long long n = 1; n <= 10000; ++n) {
    CHECK_NOTHROW(magic_constant(n));
  }
}

TEST_CASE("counts grow strictly from l = 1 on") {
  BigCount prev = closed_count(1);
  for (long long l = 2; l <= 2000; ++l) {
    const BigCount cur = closed_count(l);
    CHECK(cur > prev);
    prev = cur;
  }
}
