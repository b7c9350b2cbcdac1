#include "dio/floyd.hpp"

#include <algorithm>

#include "dio/errors.hpp"

namespace dio {

bool floyd_exists(const FloydTriple& t) {
  if (t.l11 < 0 || t.l22 < 0 || t.l33 < 0) {
    throw DomainError("triple entries must be nonnegative");
  }
  if ((t.l11 + t.l22 + t.l33) % 2 != 0) return false;  // half-integer entries otherwise
  const long long gap = t.l22 >= t.l11 ? t.l22 - t.l11 : t.l11 - t.l22;
  return gap <= t.l33 && t.l33 <= t.l11 + t.l22;
}

FloydOffDiagonal floyd_solution(const FloydTriple& t) {
  if (!floyd_exists(t)) {
    throw NoSolution("no nonnegative solution for (" + std::to_string(t.l11) + ", " +
                     std::to_string(t.l22) + ", " + std::to_string(t.l33) + ")");
  }
  return FloydOffDiagonal{(t.l11 + t.l22 - t.l33) / 2, (t.l11 + t.l33 - t.l22) / 2,
                          (t.l22 + t.l33 - t.l11) / 2};
}

BigCount floyd_count_cases(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  if (l % 2 != 0) throw OddInput("floyd_count_cases requires even l; odd l counts zero");
  BigCount f1 = 0;
  BigCount f2 = 0;
  BigCount f3 = 0;
  BigCount f4 = 0;
  if (l % 4 == 0) {
    for (long long a = 0; a <= l / 2; a += 2) {
      f1 += a + 1;
      f3 += BigCount(a + 1) * (l / 2 - a);
    }
    f2 = BigCount(l / 2 + 1) * (l / 4);
    for (long long b = l / 2 + 2; b <= l; b += 2) {
      for (long long a = l - b + 2; a <= b - 2; a += 2) {
        f4 += (l - (b - a)) / 2 + 1;
      }
    }
  } else {
    // the boundary lines now cross at an odd point, so the sums stop one
    // lattice step earlier and two minimally saturating pairs appear
    for (long long a = 0; a <= l / 2 - 1; a += 2) {
      f1 += a + 1;
      f3 += BigCount(a + 1) * (l / 2 - a);
    }
    f2 = exact_div(BigCount(l / 2 + 1) * (l / 2 + 1), 2);
    for (long long b = l / 2 + 3; b <= l; b += 2) {
      for (long long a = l - b + 2; a <= b - 2; a += 2) {
        f4 += (l - (b - a)) / 2 + 1;
      }
    }
  }
  return f1 + f2 + 2 * f3 + 2 * f4;
}

std::vector<FloydItem> floyd_enumerate(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  std::vector<FloydItem> out;
  if (l % 2 != 0) return out;
  for (long long l11 = 0; l11 <= l; l11 += 2) {
    for (long long l22 = 0; l22 <= l; l22 += 2) {
      const long long low = l11 >= l22 ? l11 - l22 : l22 - l11;
      const long long high = std::min(l11 + l22, l);
      for (long long l33 = low; l33 <= high; l33 += 2) {
        const FloydTriple t{l11, l22, l33};
        out.push_back(FloydItem{t, floyd_solution(t)});
      }
    }
  }
  return out;
}

}  // namespace dio
