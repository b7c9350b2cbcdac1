#include "dio/gf.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace dio {

std::uint64_t default_max_cells() {
  constexpr std::uint64_t kDefault = 100'000'000ULL;
  const char* env = std::getenv("DIO_MAX_CELLS");
  if (env == nullptr || *env == '\0') return kDefault;
  std::uint64_t value = 0;
  for (const char* p = env; *p != '\0'; ++p) {
    if (!std::isdigit(static_cast<unsigned char>(*p))) return kDefault;
    const std::uint64_t digit = static_cast<std::uint64_t>(*p - '0');
    if (value > (UINT64_MAX - digit) / 10) return kDefault;
    value = value * 10 + digit;
  }
  return value > 0 ? value : kDefault;
}

BigCount count_general(const std::vector<long long>& rhs, std::uint64_t max_cells) {
  const int k = static_cast<int>(rhs.size());
  if (k < 1) throw WrongArity("count_general requires k >= 1");
  if (max_cells == 0) max_cells = default_max_cells();
  std::uint64_t cells = 1;
  for (long long v : rhs) {
    if (v < 0) throw NegativeRhs("rhs entries must be nonnegative");
    const std::uint64_t dim = static_cast<std::uint64_t>(v) + 1;
    if (cells > max_cells / dim) {
      throw CapacityError("budget table would exceed the cell cap of " +
                          std::to_string(max_cells) + " cells (set --max-cells or "
                          "DIO_MAX_CELLS to raise it)");
    }
    cells *= dim;
  }

  std::vector<std::uint64_t> stride(static_cast<std::size_t>(k), 1);
  for (int i = k - 2; i >= 0; --i) {
    stride[i] = stride[i + 1] * (static_cast<std::uint64_t>(rhs[i + 1]) + 1);
  }

  std::vector<BigCount> table(cells);
  table[0] = 1;

  // One in-place unbounded-knapsack pass per variable.  The digit odometer
  // tracks the budget vector of the current flat index, so the component
  // bounds cost O(1) amortized per cell.
  std::vector<long long> digit(static_cast<std::size_t>(k), 0);
  const auto apply = [&](int i, int j) {
    const std::uint64_t offset = i == j ? 2 * stride[i] : stride[i] + stride[j];
    const long long need = i == j ? 2 : 1;
    std::fill(digit.begin(), digit.end(), 0);
    for (std::uint64_t f = 0; f < cells; ++f) {
      if (digit[i] >= need && digit[j] >= 1) {
        table[f] += table[f - offset];
      }
      for (int d = k - 1; d >= 0; --d) {
        if (++digit[d] <= rhs[static_cast<std::size_t>(d)]) break;
        digit[d] = 0;
      }
    }
  };

  // diagonals first (they settle the per-row parity early), then the
  // off-diagonal variables in lexicographic order
  for (int i = 0; i < k; ++i) apply(i, i);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) apply(i, j);
  }
  return table[cells - 1];
}

std::vector<BigCount> count_general_table(int k, long long lmax, std::uint64_t max_cells) {
  if (k < 1) throw WrongArity("count_general_table requires k >= 1");
  if (lmax < 0) throw DomainError("lmax must be nonnegative");
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(lmax) + 1);
  for (long long l = 0; l <= lmax; ++l) {
    out.push_back(count_general(std::vector<long long>(static_cast<std::size_t>(k), l),
                                max_cells));
  }
  return out;
}

}  // namespace dio
