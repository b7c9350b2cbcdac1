#include "dio/closed_forms.hpp"

namespace dio {

std::string to_string(Formula f) {
  switch (f) {
    case Formula::EvenMain:
      return "even-main";
    case Formula::OddMain:
      return "odd-main";
    case Formula::EvenReindexed:
      return "even-reindexed";
    case Formula::OddReindexed:
      return "odd-reindexed";
    case Formula::Floyd:
      return "floyd";
    case Formula::MagicConstant:
      return "magic-constant";
  }
  return "?";
}

BigCount closed_count_even(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  if (l % 2 != 0) throw OddInput("closed_count_even requires even l");
  const BigCount n = l;
  return exact_div((n + 2) * (n + 4) * (n * (n + 5) * (n * (n + 4) + 12) + 72), 576);
}

BigCount closed_count_odd(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  if (l % 2 == 0) throw EvenInput("closed_count_odd requires odd l");
  const BigCount n = l;
  return exact_div((n + 1) * (n + 3) * (n * (n + 5) * (n * (n + 6) + 17) + 72), 576);
}

BigCount closed_count_even_reindexed(long long m) {
  if (m < 1) throw DomainError("closed_count_even_reindexed requires m >= 1");
  const BigCount n = m;
  return exact_div(n * (n + 1) * (3 + 2 * n + n * n + n * n * n + 2 * n * n * n * n), 18);
}

BigCount closed_count_odd_reindexed(long long m) {
  if (m < 2) throw DomainError("closed_count_odd_reindexed requires m >= 2");
  const BigCount n = m;
  return exact_div(n * (n - 1) * (3 - 2 * n + n * n - n * n * n + 2 * n * n * n * n), 18);
}

BigCount floyd_count(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  if (l % 2 != 0) return 0;
  const BigCount n = l;
  return exact_div((n + 2) * (n * n + 4 * n + 8), 16);
}

BigCount magic_constant(long long n) {
  if (n < 1) throw DomainError("magic_constant requires n >= 1");
  const BigCount m = n;
  return exact_div(m * (1 + m * m), 2);
}

BigCount triangle_number(long long n) {
  if (n < 0) throw DomainError("triangle_number requires n >= 0");
  const BigCount m = n;
  return exact_div(m * (m + 1), 2);
}

BigCount closed_count(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  return l % 2 == 0 ? closed_count_even(l) : closed_count_odd(l);
}

ClosedFormResult evaluate_closed_form(Formula f, long long l) {
  switch (f) {
    case Formula::EvenMain:
      return {l, closed_count_even(l), f};
    case Formula::OddMain:
      return {l, closed_count_odd(l), f};
    case Formula::EvenReindexed:
      return {l, closed_count_even_reindexed(l), f};
    case Formula::OddReindexed:
      return {l, closed_count_odd_reindexed(l), f};
    case Formula::Floyd:
      return {l, floyd_count(l), f};
    case Formula::MagicConstant:
      return {l, magic_constant(l), f};
  }
  throw DomainError("unknown formula");
}

}  // namespace dio
