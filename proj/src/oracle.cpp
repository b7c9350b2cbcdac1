#include "dio/oracle.hpp"

#include <algorithm>

namespace dio {
namespace {

// Shared recursion shape for listing and counting.  Variables are visited in
// row-major upper-triangle order.  The last variable of each row is forced by
// the row's remaining budget (and the final diagonal by half of it), which
// prunes without disturbing lexicographic order: forced entries are functions
// of strictly earlier ones.
class Walker {
 public:
  explicit Walker(const SystemSpec& spec)
      : k_(spec.k), budget_(spec.rhs), matrix_(spec.k) {}

  // Listing.  Returns false once the visitor asked to stop.
  bool list(int i, int j, const std::function<bool(const SolutionMatrix&)>& visit) {
    if (i == k_) return visit(matrix_);
    if (i == j) {
      if (i == k_ - 1) {  // final variable: the whole remaining budget, halved
        if (budget_[i] % 2 != 0) return true;
        const long long v = budget_[i] / 2;
        matrix_.set(i, i, v);
        budget_[i] = 0;
        const bool keep_going = list(k_, 0, visit);
        budget_[i] = 2 * v;
        matrix_.set(i, i, 0);
        return keep_going;
      }
      const long long top = budget_[i] / 2;
      for (long long v = 0; v <= top; ++v) {
        matrix_.set(i, i, v);
        budget_[i] -= 2 * v;
        const bool keep_going = list(i, j + 1, visit);
        budget_[i] += 2 * v;
        if (!keep_going) {
          matrix_.set(i, i, 0);
          return false;
        }
      }
      matrix_.set(i, i, 0);
      return true;
    }
    if (j == k_ - 1) {  // last off-diagonal of row i: forced to the row budget
      const long long v = budget_[i];
      bool keep_going = true;
      if (v <= budget_[j]) {
        matrix_.set(i, j, v);
        budget_[i] = 0;
        budget_[j] -= v;
        keep_going = list(i + 1, i + 1, visit);
        budget_[i] = v;
        budget_[j] += v;
        matrix_.set(i, j, 0);
      }
      return keep_going;
    }
    const long long top = std::min(budget_[i], budget_[j]);
    for (long long v = 0; v <= top; ++v) {
      matrix_.set(i, j, v);
      budget_[i] -= v;
      budget_[j] -= v;
      const bool keep_going = list(i, j + 1, visit);
      budget_[i] += v;
      budget_[j] += v;
      if (!keep_going) {
        matrix_.set(i, j, 0);
        return false;
      }
    }
    matrix_.set(i, j, 0);
    return true;
  }

  // Counting: same tree, subtree cardinalities only.
  BigCount count(int i, int j) {
    if (i == k_) return 1;
    if (i == j) {
      if (i == k_ - 1) return budget_[i] % 2 == 0 ? 1 : 0;
      BigCount total = 0;
      const long long top = budget_[i] / 2;
      for (long long v = 0; v <= top; ++v) {
        budget_[i] -= 2 * v;
        total += count(i, j + 1);
        budget_[i] += 2 * v;
      }
      return total;
    }
    if (j == k_ - 1) {
      const long long v = budget_[i];
      if (v > budget_[j]) return 0;
      budget_[i] = 0;
      budget_[j] -= v;
      BigCount total = count(i + 1, i + 1);
      budget_[i] = v;
      budget_[j] += v;
      return total;
    }
    BigCount total = 0;
    const long long top = std::min(budget_[i], budget_[j]);
    for (long long v = 0; v <= top; ++v) {
      budget_[i] -= v;
      budget_[j] -= v;
      total += count(i, j + 1);
      budget_[i] += v;
      budget_[j] += v;
    }
    return total;
  }

 private:
  int k_;
  std::vector<long long> budget_;
  SolutionMatrix matrix_;
};

void require_reduced(long long l, long long v, const char* name) {
  if (l < 0) throw DomainError("l must be nonnegative");
  if (v < 0 || v > l) {
    throw DomainError(std::string(name) + " must lie in [0, l], got " + std::to_string(v));
  }
  if ((v & 1) != (l & 1)) {
    throw DomainError(std::string(name) + " must have the parity of l");
  }
}

}  // namespace

void enumerate_solutions(const ValidatedSpec& spec,
                         const std::function<bool(const SolutionMatrix&)>& visit) {
  Walker walker(spec.spec);
  walker.list(0, 0, visit);
}

std::vector<SolutionMatrix> list_solutions(const ValidatedSpec& spec,
                                           std::optional<std::uint64_t> limit) {
  std::vector<SolutionMatrix> out;
  if (limit && *limit == 0) return out;
  enumerate_solutions(spec, [&](const SolutionMatrix& m) {
    out.push_back(m);
    return !limit || out.size() < *limit;
  });
  return out;
}

BigCount count_bruteforce(const ValidatedSpec& spec) {
  Walker walker(spec.spec);
  return walker.count(0, 0);
}

BigCount count_fixed_diagonal(long long l, const ReducedRhs& r) {
  require_reduced(l, r.l11, "l11");
  require_reduced(l, r.l22, "l22");
  require_reduced(l, r.l33, "l33");
  require_reduced(l, r.l44, "l44");
  BigCount total = 0;
  for (long long a12 = 0; a12 <= std::min(r.l11, r.l22); ++a12) {
    for (long long a13 = 0; a13 <= std::min(r.l11 - a12, r.l33); ++a13) {
      const long long a14 = r.l11 - a12 - a13;
      if (a14 > r.l44) continue;
      const long long top23 = std::min(r.l22 - a12, r.l33 - a13);
      for (long long a23 = 0; a23 <= top23; ++a23) {
        const long long a24 = r.l22 - a12 - a23;
        if (a24 > r.l44 - a14) continue;
        const long long a34 = r.l33 - a13 - a23;
        if (a34 == r.l44 - a14 - a24) ++total;
      }
    }
  }
  return total;
}

BigCount count_fixed_diagonal_by_delta(long long l, long long l11, long long l22,
                                       DeltaClass dc) {
  require_reduced(l, l11, "l11");
  require_reduced(l, l22, "l22");
  BigCount total = 0;
  const long long start = l & 1;
  for (long long l33 = start; l33 <= l; l33 += 2) {
    for (long long l44 = start; l44 <= l; l44 += 2) {
      const ReducedRhs r{l11, l22, l33, l44};
      if (classify_delta(r) == dc) total += count_fixed_diagonal(l, r);
    }
  }
  return total;
}

}  // namespace dio
