// Acceptance suite: one check per criterion, each exact and time-boxed.
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dio/closed_forms.hpp"
#include "dio/floyd.hpp"
#include "dio/gf.hpp"
#include "dio/oracle.hpp"
#include "dio/strip.hpp"
#include "dio/system.hpp"

using namespace dio;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void run(int number, const std::string& name, double budget_seconds,
         const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed >= budget_seconds) {
    outcome.fail("exceeded the " + std::to_string(budget_seconds) + " s budget");
  }
  if (!outcome.ok) ++failures;
  std::printf("[%2d] %s  %s (%.2f s)%s%s\n", number, outcome.ok ? "PASS" : "FAIL",
              name.c_str(), elapsed, outcome.detail.empty() ? "" : "  -- ",
              outcome.detail.c_str());
  std::fflush(stdout);
}

BigCount oracle_uniform(SystemKind kind, int k, long long l) {
  return count_bruteforce(validate(SystemSpec::uniform(kind, k, l)));
}

}  // namespace

int main() {
  run(1, "closed form equals oracle for every l in [0,16]", 30.0, [](Outcome& o) {
    for (long long l = 0; l <= 16; ++l) {
      const BigCount closed = closed_count(l);
      const BigCount oracle = oracle_uniform(SystemKind::Full4, 4, l);
      if (closed != oracle) {
        o.fail("l=" + std::to_string(l) + " closed=" + closed.str() +
               " oracle=" + oracle.str());
      }
    }
  });

  run(2, "spot values re-derived by the oracle: 1, 3, 17", 0.0, [](Outcome& o) {
    const struct {
      long long l;
      long long frozen;
    } spots[] = {{0, 1}, {1, 3}, {2, 17}};
    for (const auto& s : spots) {
      const BigCount oracle = oracle_uniform(SystemKind::Full4, 4, s.l);
      if (oracle != s.frozen) {
        o.fail("oracle l=" + std::to_string(s.l) + " gave " + oracle.str());
      }
      if (closed_count(s.l) != s.frozen) {
        o.fail("closed l=" + std::to_string(s.l) + " gave " + closed_count(s.l).str());
      }
    }
  });

  run(3, "every case value equals the delta-restricted oracle for l <= 12", 60.0,
      [](Outcome& o) {
        for (long long l = 0; l <= 12; ++l) {
          const long long start = l & 1;
          for (long long a = start; a <= l; a += 2) {
            for (long long b = a; b <= l; b += 2) {
              for (const DeltaClass dc : {DeltaClass::Negative, DeltaClass::Zero}) {
                const BigCount expect = count_fixed_diagonal_by_delta(l, a, b, dc);
                const BigCount got = case_count(l, a, b, dc);
                if (got != expect) {
                  o.fail("l=" + std::to_string(l) + " l11=" + std::to_string(a) +
                         " l22=" + std::to_string(b) + " case=" + got.str() +
                         " oracle=" + expect.str());
                  return;
                }
              }
            }
          }
        }
      });

  run(4, "aggregate equals the closed form for every l in [0,60]", 10.0, [](Outcome& o) {
    for (long long l = 0; l <= 60; ++l) {
      const BigCount agg = aggregate_count(l);
      const BigCount closed = closed_count(l);
      if (agg != closed) {
        o.fail("l=" + std::to_string(l) + " aggregate=" + agg.str() +
               " closed=" + closed.str());
      }
    }
  });

  run(5, "partial sums equal their stated polynomials (even l=4,8,12; odd l=1,5,9,13)", 0.0,
      [](Outcome& o) {
        for (const ProofBlock block : all_proof_blocks()) {
          const bool even = proof_block_residue(block) == 0;
          for (const long long l : even ? std::vector<long long>{4, 8, 12}
                                        : std::vector<long long>{1, 5, 9, 13}) {
            try {
              proof_block_value(block, l);
            } catch (const Error& e) {
              o.fail(to_string(block) + " at l=" + std::to_string(l) + ": " + e.what());
            }
          }
        }
      });

  run(6, "floyd: closed = case sums = enumeration = oracle for even l <= 20, 0 for odd",
      5.0, [](Outcome& o) {
        for (long long l = 0; l <= 20; ++l) {
          const BigCount closed = floyd_count(l);
          if (l % 2 != 0) {
            if (closed != 0 || !floyd_enumerate(l).empty()) {
              o.fail("odd l=" + std::to_string(l) + " not zero");
            }
            continue;
          }
          const BigCount cases = floyd_count_cases(l);
          const BigCount enumerated = static_cast<long long>(floyd_enumerate(l).size());
          const BigCount oracle = oracle_uniform(SystemKind::Floyd3, 3, l);
          if (closed != cases || closed != enumerated || closed != oracle) {
            o.fail("l=" + std::to_string(l) + " closed=" + closed.str() + " cases=" +
                   cases.str() + " enum=" + enumerated.str() + " oracle=" + oracle.str());
          }
        }
      });

  run(7, "magic-constant remap for n in [1,100] and the stored 20-term table", 0.0,
      [](Outcome& o) {
        for (long long n = 1; n <= 100; ++n) {
          if (floyd_count(2 * n - 2) != magic_constant(n)) {
            o.fail("n=" + std::to_string(n));
          }
        }
        for (std::size_t i = 0; i < floyd_triangle_row_sums.size(); ++i) {
          const long long n = static_cast<long long>(i) + 1;
          if (floyd_count(2 * n - 2) != floyd_triangle_row_sums[i]) {
            o.fail("table term " + std::to_string(n));
          }
        }
      });

  run(8, "gf equals oracle on 100 seeded instances; permutation, parity, uniform l <= 40",
      60.0, [](Outcome& o) {
        std::mt19937 rng(0xd10c0de5U);
        for (int trial = 0; trial < 100; ++trial) {
          const int k = 3 + trial % 3;
          std::vector<long long> rhs(static_cast<std::size_t>(k));
          long long total = 0;
          for (auto& v : rhs) {
            v = static_cast<long long>(rng() % 9);
            total += v;
          }
          const BigCount fast = count_general(rhs);
          const BigCount slow = count_bruteforce(validate(SystemSpec::general(rhs)));
          if (fast != slow) {
            o.fail("instance " + std::to_string(trial) + ": gf=" + fast.str() +
                   " oracle=" + slow.str());
            return;
          }
          if (total % 2 != 0 && fast != 0) {
            o.fail("odd-sum instance " + std::to_string(trial) + " counted " + fast.str());
            return;
          }
          std::vector<long long> shuffled = rhs;
          std::shuffle(shuffled.begin(), shuffled.end(), rng);
          if (count_general(shuffled) != fast) {
            o.fail("permutation mismatch on instance " + std::to_string(trial));
            return;
          }
        }
        for (long long l = 0; l <= 40; ++l) {
          if (count_general({l, l, l, l}) != closed_count(l)) {
            o.fail("uniform l=" + std::to_string(l));
            return;
          }
        }
      });

  run(9, "oracle total over delta>0 equals total over delta<0 for l <= 12", 60.0,
      [](Outcome& o) {
        for (long long l = 0; l <= 12; ++l) {
          BigCount pos = 0, neg = 0;
          const long long start = l & 1;
          for (long long a = start; a <= l; a += 2) {
            for (long long b = start; b <= l; b += 2) {
              pos += count_fixed_diagonal_by_delta(l, a, b, DeltaClass::Positive);
              neg += count_fixed_diagonal_by_delta(l, a, b, DeltaClass::Negative);
            }
          }
          if (pos != neg) {
            o.fail("l=" + std::to_string(l) + " pos=" + pos.str() + " neg=" + neg.str());
          }
        }
      });

  run(10, "numerators divide exactly by 576/576/16/2 for all valid l <= 10000", 0.0,
      [](Outcome& o) {
        for (long long l = 0; l <= 10000; ++l) {
          const BigCount n = l;
          if (l % 2 == 0) {
            if ((n + 2) * (n + 4) * (n * (n + 5) * (n * (n + 4) + 12) + 72) % 576 != 0) {
              o.fail("even numerator at l=" + std::to_string(l));
            }
            if ((n + 2) * (n * n + 4 * n + 8) % 16 != 0) {
              o.fail("floyd numerator at l=" + std::to_string(l));
            }
          } else {
            if ((n + 1) * (n + 3) * (n * (n + 5) * (n * (n + 6) + 17) + 72) % 576 != 0) {
              o.fail("odd numerator at l=" + std::to_string(l));
            }
          }
          if (l >= 1 && n * (1 + n * n) % 2 != 0) {
            o.fail("magic numerator at n=" + std::to_string(l));
          }
        }
      });

  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
