#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/oracle.hpp"

using namespace dio;

namespace {
ValidatedSpec full4(std::vector<long long> rhs) {
  return validate(SystemSpec::full4(std::move(rhs)));
}
}  // namespace

TEST_CASE("zero rhs has exactly the zero solution") {
  const auto sols = list_solutions(full4({0, 0, 0, 0}));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == SolutionMatrix(4));
  CHECK(count_bruteforce(full4({0, 0, 0, 0})) == 1);
}

TEST_CASE("rhs [1,1,1,1] yields the three perfect matchings, in lex order") {
  const auto sols = list_solutions(full4({1, 1, 1, 1}));
  REQUIRE(sols.size() == 3);
  // upper triangle order: a11 a12 a13 a14 a22 a23 a24 a33 a34 a44
  CHECK(sols[0].upper_triangle() == std::vector<long long>{0, 0, 0, 1, 0, 1, 0, 0, 0, 0});
  CHECK(sols[1].upper_triangle() == std::vector<long long>{0, 0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(sols[2].upper_triangle() == std::vector<long long>{0, 1, 0, 0, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("odd-parity rhs yields an empty stream") {
  CHECK(list_solutions(full4({1, 1, 1, 2})).empty());
  CHECK(count_bruteforce(full4({1, 1, 1, 2})) == 0);
}

TEST_CASE("stream is strictly lexicographic and stable across runs") {
  const auto a = list_solutions(full4({3, 2, 3, 2}));
  const auto b = list_solutions(full4({3, 2, 3, 2}));
  CHECK(a == b);
  for (std::size_t i = 1; i < a.size(); ++i) {
    CHECK(a[i - 1].upper_triangle() < a[i].upper_triangle());
  }
  CHECK_FALSE(a.empty());
}

TEST_CASE("limit truncates the stream") {
  CHECK(list_solutions(full4({2, 2, 2, 2}), 5).size() == 5);
  CHECK(list_solutions(full4({2, 2, 2, 2}), 0).empty());
  CHECK(list_solutions(full4({1, 1, 1, 1}), 100).size() == 3);
}

TEST_CASE("count_bruteforce spot values") {
  CHECK(count_bruteforce(full4({2, 2, 2, 2})) == 17);
  CHECK(count_bruteforce(validate(SystemSpec::floyd3({2, 2, 2}))) == 5);
  CHECK(count_bruteforce(validate(SystemSpec::general({4}))) == 1);
  CHECK(count_bruteforce(validate(SystemSpec::general({3}))) == 0);
}

TEST_CASE("counting matches listing") {
  for (const std::vector<long long>& rhs :
       {std::vector<long long>{4, 4, 4, 4}, {5, 5, 5, 5}, {1, 2, 3, 4}, {6, 2, 4, 2}}) {
    const auto vs = full4(rhs);
    CHECK(count_bruteforce(vs) == BigCount(list_solutions(vs).size()));
  }
}

TEST_CASE("random odd-sum instances count zero") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 3);
    std::vector<long long> rhs(static_cast<std::size_t>(k));
    long long total = 0;
    for (auto& v : rhs) {
      v = static_cast<long long>(rng() % 7);
      total += v;
    }
    if (total % 2 == 0) rhs[0] += 1;  // force odd
    CHECK(count_bruteforce(validate(SystemSpec::general(rhs))) == 0);
  }
}

TEST_CASE("count_fixed_diagonal spot values") {
  CHECK(count_fixed_diagonal(2, {0, 0, 0, 0}) == 1);
  CHECK(count_fixed_diagonal(1, {1, 1, 1, 1}) == 3);
  CHECK(count_fixed_diagonal(2, {2, 2, 0, 0}) == 1);
  CHECK_THROWS_AS(count_fixed_diagonal(2, {1, 2, 0, 0}), DomainError);
  CHECK_THROWS_AS(count_fixed_diagonal(2, {4, 2, 0, 0}), DomainError);
}

TEST_CASE("fixed-diagonal decomposition is complete") {
  // summing over every admissible diagonal recovers the full count
  for (long long l = 0; l <= 6; ++l) {
    BigCount total = 0;
    const long long start = l & 1;
    for (long long a = start; a <= l; a += 2) {
      for (long long b = start; b <= l; b += 2) {
        for (long long c = start; c <= l; c += 2) {
          for (long long d = start; d <= l; d += 2) {
            total += count_fixed_diagonal(l, {a, b, c, d});
          }
        }
      }
    }
    CHECK(total == count_bruteforce(full4({l, l, l, l})));
  }
}

TEST_CASE("count_fixed_diagonal_by_delta") {
  CHECK(count_fixed_diagonal_by_delta(2, 0, 0, DeltaClass::Negative) == 0);

  // pinned by summing count_fixed_diagonal over (l33,l44) in {0,2}^2 directly
  BigCount direct = 0;
  for (long long c : {0, 2}) {
    for (long long d : {0, 2}) {
      if (classify_delta({2, 2, c, d}) == DeltaClass::Zero) {
        direct += count_fixed_diagonal(2, {2, 2, c, d});
      }
    }
  }
  CHECK(direct == 6);
  CHECK(count_fixed_diagonal_by_delta(2, 2, 2, DeltaClass::Zero) == direct);
}

TEST_CASE("delta positive equals delta negative with the pair roles exchanged") {
  for (long long l = 0; l <= 7; ++l) {
    const long long start = l & 1;
    for (long long a = start; a <= l; a += 2) {
      for (long long b = start; b <= l; b += 2) {
        // (a, b) as the fixed (l33, l44) pair, positive class, summed the
        // long way around
        BigCount exchanged = 0;
        for (long long x = start; x <= l; x += 2) {
          for (long long y = start; y <= l; y += 2) {
            if (classify_delta({x, y, a, b}) == DeltaClass::Positive) {
              exchanged += count_fixed_diagonal(l, {x, y, a, b});
            }
          }
        }
        CHECK(count_fixed_diagonal_by_delta(l, a, b, DeltaClass::Negative) == exchanged);
      }
    }
  }
}
