#include "dio/strip.hpp"

#include "dio/closed_forms.hpp"

namespace dio {
namespace {

Parity parity_of(long long l) { return l % 2 == 0 ? Parity::Even : Parity::Odd; }

// Clipping threshold: below it the polygon of admissible (l33, l44) pairs
// fits under the cap l33, l44 <= l.  The boundary case, where the cut-off
// sums are empty, counts as Unclipped.
Regime regime_of(Parity p, DeltaClass dc, long long l, long long l11, long long l22) {
  long long threshold = l11 + l22;
  if (dc == DeltaClass::Negative) threshold -= (p == Parity::Even) ? 2 : 3;
  if (dc == DeltaClass::Zero && p == Parity::Odd) threshold -= 1;
  return l >= threshold ? Regime::Unclipped : Regime::Clipped;
}

void check_tag(const CaseTag& tag, Parity expected, long long l, long long l11,
               long long l22) {
  if (l < 0 || l11 < 0) throw DomainError("l and l11 must be nonnegative");
  if (l22 > l) throw DomainError("l22 must not exceed l");
  if (tag.parity != expected) {
    throw InconsistentTag("tag parity does not match the evaluator");
  }
  const long long bit = expected == Parity::Even ? 0 : 1;
  if ((l & 1) != bit || (l11 & 1) != bit || (l22 & 1) != bit) {
    throw InconsistentTag("l, l11, l22 must all have the tag parity");
  }
  if (l11 > l22) {
    throw InconsistentTag("l11 > l22: use mirror_count");
  }
  if (tag.delta == DeltaClass::Positive) {
    throw InconsistentTag("no case expression for delta > 0; it follows by symmetry");
  }
  if (tag.relation != (l11 == l22 ? Relation::Equal : Relation::Less)) {
    throw InconsistentTag("tag relation contradicts l11 vs l22");
  }
  if (tag.regime != regime_of(expected, tag.delta, l, l11, l22)) {
    throw InconsistentTag("tag regime contradicts the clipping threshold");
  }
}

CaseValue finish(CaseTag tag, long long l, long long l11, long long l22,
                 BigCount strip, BigCount region, BigCount cutoff) {
  CaseValue v;
  v.tag = tag;
  v.l = l;
  v.l11 = l11;
  v.l22 = l22;
  v.strip_part = std::move(strip);
  v.region_part = std::move(region);
  v.cutoff_part = std::move(cutoff);
  v.value = v.strip_part + v.region_part - v.cutoff_part;
  if (v.value < 0) {
    throw InternalError("case expression evaluated to a negative count at l=" +
                        std::to_string(l) + " l11=" + std::to_string(l11) +
                        " l22=" + std::to_string(l22));
  }
  return v;
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(Regime r) { return r == Regime::Unclipped ? "unclipped" : "clipped"; }

std::string to_string(Relation r) { return r == Relation::Less ? "less" : "equal"; }

CaseTag make_case_tag(long long l, long long l11, long long l22, DeltaClass dc) {
  if (l < 0 || l11 < 0) throw DomainError("l and l11 must be nonnegative");
  if (l22 > l) throw DomainError("l22 must not exceed l");
  if (l11 > l22) throw InconsistentTag("l11 > l22: use mirror_count");
  if (dc == DeltaClass::Positive) {
    throw InconsistentTag("no case expression for delta > 0; it follows by symmetry");
  }
  const Parity p = parity_of(l);
  const long long bit = p == Parity::Even ? 0 : 1;
  if ((l11 & 1) != bit || (l22 & 1) != bit) {
    throw InconsistentTag("l11 and l22 must have the parity of l");
  }
  return CaseTag{p, dc, regime_of(p, dc, l, l11, l22),
                 l11 == l22 ? Relation::Equal : Relation::Less};
}

// Even lattice.  The strip sums run over the reciprocal hyperplanes, indexed
// by t so that triangle_number(2t-1) / triangle_number(2t) is the
// multiplicity on alternating hyperplanes; the region sum runs over the
// vertical (and, mirrored, horizontal) hyperplanes outside the strip.
CaseValue case_value_even(const CaseTag& tag, long long l, long long l11, long long l22) {
  check_tag(tag, Parity::Even, l, l11, l22);
  const long long half_gap = (l22 - l11) / 2;
  BigCount strip = 0;
  BigCount region = 0;
  BigCount cutoff = 0;
  if (tag.delta == DeltaClass::Negative) {
    for (long long t = 1; t <= l11 / 2; ++t) {
      region += triangle_number(2 * t - 1) * (l11 - (2 * t - 2));
    }
    region *= 2;
    if (tag.relation == Relation::Less) {
      for (long long t = 1; t <= l11 / 2; ++t) {
        strip += triangle_number(2 * t - 1) * (half_gap - 1);
        strip += triangle_number(2 * t) * half_gap;
      }
    } else {
      // degenerate strip: the diagonal is double counted by the mirrored
      // region sums and has to come off again
      for (long long t = 1; t <= l11 / 2; ++t) {
        strip -= triangle_number(2 * t - 1);
      }
    }
    if (tag.regime == Regime::Clipped) {
      const long long excess = (l11 + l22 - l) / 2;
      for (long long t = 1; t <= excess - 1; ++t) {
        cutoff += triangle_number(2 * t - 1) * (excess - t);
      }
      cutoff *= 2;
    }
  } else {  // DeltaClass::Zero: everything lies on one reciprocal hyperplane
    strip = BigCount(l11 + 1) * (l11 + 2) / 2;
    if (tag.relation == Relation::Less) {
      strip *= half_gap - 1;
    } else {
      strip = -strip;
    }
    if (tag.regime == Regime::Unclipped) {
      for (long long t = 1; t <= l11 / 2 + 1; ++t) {
        region += triangle_number(2 * t - 1);
      }
    } else if (tag.relation == Relation::Less) {
      for (long long t = 1; t <= (l - l22) / 2 + 1; ++t) {
        region += triangle_number(l11 + l22 - l + 2 * t - 1);
      }
    } else {
      for (long long t = 1; t <= (l - l11) / 2 + 1; ++t) {
        region += triangle_number(2 * l11 - l + 2 * t - 1);
      }
    }
    region *= 2;
  }
  return finish(tag, l, l11, l22, std::move(strip), std::move(region), std::move(cutoff));
}

// Odd lattice: coordinates start at 1, so the hyperplane multiplicities
// alternate the other way around and the region sums lose one vertex.
CaseValue case_value_odd(const CaseTag& tag, long long l, long long l11, long long l22) {
  check_tag(tag, Parity::Odd, l, l11, l22);
  const long long half_gap = (l22 - l11) / 2;
  BigCount strip = 0;
  BigCount region = 0;
  BigCount cutoff = 0;
  if (tag.delta == DeltaClass::Negative) {
    for (long long t = 1; t <= (l11 - 1) / 2; ++t) {
      region += triangle_number(2 * t) * (l11 - (2 * t - 2) - 1);
    }
    region *= 2;
    if (tag.relation == Relation::Less) {
      for (long long t = 1; t <= (l11 - 1) / 2; ++t) {
        strip += triangle_number(2 * t) * (half_gap - 1);
      }
      for (long long t = 1; t <= (l11 + 1) / 2; ++t) {
        strip += triangle_number(2 * t - 1) * half_gap;
      }
    } else {
      for (long long t = 1; t <= (l11 - 1) / 2; ++t) {
        strip -= triangle_number(2 * t);
      }
    }
    if (tag.regime == Regime::Clipped) {
      const long long top = (l11 + l22 - l - 3) / 2;
      for (long long t = 1; t <= top; ++t) {
        cutoff += triangle_number(2 * t) * ((l11 + l22 - l - 1) / 2 - t);
      }
      cutoff *= 2;
    }
  } else {  // DeltaClass::Zero
    strip = BigCount(l11 + 1) * (l11 + 2) / 2;
    if (tag.relation == Relation::Less) {
      strip *= half_gap - 1;
    } else {
      strip = -strip;
    }
    if (tag.regime == Regime::Unclipped) {
      for (long long t = 1; t <= (l11 + 1) / 2; ++t) {
        region += triangle_number(2 * t);
      }
    } else if (tag.relation == Relation::Less) {
      for (long long t = 1; t <= (l - l22) / 2 + 1; ++t) {
        region += triangle_number(l11 + l22 - l + 2 * t - 1);
      }
    } else {
      for (long long t = 1; t <= (l - l11) / 2 + 1; ++t) {
        region += triangle_number(2 * l11 - l + 2 * t - 1);
      }
    }
    region *= 2;
  }
  return finish(tag, l, l11, l22, std::move(strip), std::move(region), std::move(cutoff));
}

CaseValue mirror_count(const CaseTag& tag, long long l, long long l11, long long l22) {
  if (l11 <= l22) throw DomainError("mirror_count requires l11 > l22");
  return tag.parity == Parity::Even ? case_value_even(tag, l, l22, l11)
                                    : case_value_odd(tag, l, l22, l11);
}

bool delta_negative_region_nonempty(long long l, long long l11, long long l22) {
  if (l11 > l22) std::swap(l11, l22);
  const long long min_sum = (l % 2 == 0) ? 0 : 2;
  const long long low = std::max(l22 - l11, min_sum);
  const long long high = l11 + l22 - 2;
  return low <= high;
}

BigCount case_count(long long l, long long l11, long long l22, DeltaClass dc) {
  if (l11 > l22) std::swap(l11, l22);
  if (dc == DeltaClass::Negative && !delta_negative_region_nonempty(l, l11, l22)) {
    return 0;
  }
  const CaseTag tag = make_case_tag(l, l11, l22, dc);
  const CaseValue v = tag.parity == Parity::Even ? case_value_even(tag, l, l11, l22)
                                                 : case_value_odd(tag, l, l11, l22);
  return v.value;
}

BigCount aggregate_count(long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  BigCount total = 0;
  const long long start = l & 1;
  for (long long l11 = start; l11 <= l; l11 += 2) {
    for (long long l22 = l11; l22 <= l; l22 += 2) {
      // per ordered (l11, l22): the delta < 0 and delta > 0 classes carry the
      // same total, the delta = 0 class counts once
      BigCount per_pair = 2 * case_count(l, l11, l22, DeltaClass::Negative) +
                          case_count(l, l11, l22, DeltaClass::Zero);
      total += l11 == l22 ? per_pair : 2 * per_pair;
    }
  }
  return total;
}

namespace {

BigCount even_case(long long l, long long a, long long b, DeltaClass dc, Regime rg) {
  const CaseTag tag{Parity::Even, dc, rg, a == b ? Relation::Equal : Relation::Less};
  return case_value_even(tag, l, a, b).value;
}

BigCount odd_case(long long l, long long a, long long b, DeltaClass dc, Regime rg) {
  const CaseTag tag{Parity::Odd, dc, rg, a == b ? Relation::Equal : Relation::Less};
  return case_value_odd(tag, l, a, b).value;
}

// The programmed double sums, with the summation bounds spelled out exactly
// as each identity states them (all indices advance in steps of two).

BigCount even_neg_less_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long b = 2; b <= l; b += 2) {
    s += even_case(l, 0, b, DeltaClass::Negative, Regime::Unclipped);  // always zero
  }
  for (long long a = 2; a <= l / 2; a += 2) {
    for (long long b = a + 2; b <= l - a + 2; b += 2) {
      s += even_case(l, a, b, DeltaClass::Negative, Regime::Unclipped);
    }
  }
  return s;
}

BigCount even_neg_less_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = l / 2 + 2; a <= l - 2; a += 2) {
    for (long long b = a + 2; b <= l; b += 2) {
      s += even_case(l, a, b, DeltaClass::Negative, Regime::Clipped);
    }
  }
  for (long long a = 4; a <= l / 2; a += 2) {
    for (long long b = l - a + 4; b <= l; b += 2) {
      s += even_case(l, a, b, DeltaClass::Negative, Regime::Clipped);
    }
  }
  return s;
}

BigCount even_neg_equal_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = 2; a <= l / 2; a += 2) {
    s += even_case(l, a, a, DeltaClass::Negative, Regime::Unclipped);
  }
  return s;
}

BigCount even_neg_equal_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = l / 2 + 2; a <= l; a += 2) {
    s += even_case(l, a, a, DeltaClass::Negative, Regime::Clipped);
  }
  return s;
}

BigCount even_zero_less_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = 0; a <= l / 2 - 2; a += 2) {
    for (long long b = a + 2; b <= l - a; b += 2) {
      s += even_case(l, a, b, DeltaClass::Zero, Regime::Unclipped);
    }
  }
  return s;
}

BigCount even_zero_less_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = l / 2; a <= l - 2; a += 2) {
    for (long long b = a + 2; b <= l; b += 2) {
      s += even_case(l, a, b, DeltaClass::Zero, Regime::Clipped);
    }
  }
  for (long long a = 2; a <= l / 2 - 2; a += 2) {
    for (long long b = l - a + 2; b <= l; b += 2) {
      s += even_case(l, a, b, DeltaClass::Zero, Regime::Clipped);
    }
  }
  return s;
}

BigCount even_zero_equal_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = 0; a <= l / 2; a += 2) {
    s += even_case(l, a, a, DeltaClass::Zero, Regime::Unclipped);
  }
  return s;
}

BigCount even_zero_equal_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = l / 2 + 2; a <= l; a += 2) {
    s += even_case(l, a, a, DeltaClass::Zero, Regime::Clipped);
  }
  return s;
}

BigCount odd_neg_less_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long b = 3; b <= l; b += 2) {
    s += odd_case(l, 1, b, DeltaClass::Negative, Regime::Unclipped);
  }
  for (long long a = 3; a <= (l + 1) / 2; a += 2) {
    for (long long b = a + 2; b <= l - a + 3; b += 2) {
      s += odd_case(l, a, b, DeltaClass::Negative, Regime::Unclipped);
    }
  }
  return s;
}

BigCount odd_neg_less_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = (l + 1) / 2 + 2; a <= l - 2; a += 2) {
    for (long long b = a + 2; b <= l; b += 2) {
      s += odd_case(l, a, b, DeltaClass::Negative, Regime::Clipped);
    }
  }
  for (long long a = 5; a <= (l + 1) / 2; a += 2) {
    for (long long b = l - a + 5; b <= l; b += 2) {
      s += odd_case(l, a, b, DeltaClass::Negative, Regime::Clipped);
    }
  }
  return s;
}

BigCount odd_neg_equal_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = 3; a <= (l + 1) / 2; a += 2) {
    s += odd_case(l, a, a, DeltaClass::Negative, Regime::Unclipped);
  }
  return s;
}

BigCount odd_neg_equal_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = (l + 1) / 2 + 2; a <= l; a += 2) {
    s += odd_case(l, a, a, DeltaClass::Negative, Regime::Clipped);
  }
  return s;
}

BigCount odd_zero_less_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = 1; a <= (l + 1) / 2 - 2; a += 2) {
    for (long long b = a + 2; b <= l - a + 1; b += 2) {
      s += odd_case(l, a, b, DeltaClass::Zero, Regime::Unclipped);
    }
  }
  return s;
}

BigCount odd_zero_less_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = (l + 1) / 2; a <= l - 2; a += 2) {
    for (long long b = a + 2; b <= l; b += 2) {
      s += odd_case(l, a, b, DeltaClass::Zero, Regime::Clipped);
    }
  }
  for (long long a = 3; a <= (l + 1) / 2 - 2; a += 2) {
    for (long long b = l - a + 3; b <= l; b += 2) {
      s += odd_case(l, a, b, DeltaClass::Zero, Regime::Clipped);
    }
  }
  return s;
}

BigCount odd_zero_equal_unclipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = 1; a <= (l + 1) / 2; a += 2) {
    s += odd_case(l, a, a, DeltaClass::Zero, Regime::Unclipped);
  }
  return s;
}

BigCount odd_zero_equal_clipped_sum(long long l) {
  BigCount s = 0;
  for (long long a = (l + 1) / 2 + 2; a <= l; a += 2) {
    s += odd_case(l, a, a, DeltaClass::Zero, Regime::Clipped);
  }
  return s;
}

// The stated closed polynomial values of the same sums.

BigCount even_block_poly(ProofBlock block, const BigCount& n) {
  switch (block) {
    case ProofBlock::EvenNegLessUnclipped:
      return exact_div(n * (n + 4) * (n + 8) * (n * n * n + 15 * n * n + 83 * n + 204), 46080);
    case ProofBlock::EvenNegLessClipped:
      return exact_div((n - 4) * n * (n + 4) * (19 * n * n * n + 153 * n * n + 509 * n + 528),
                       46080);
    case ProofBlock::EvenNegLessCombined:
      return exact_div(
          n * (n + 4) * (n * n * n * n + 5 * n * n * n + 5 * n * n - 32 * n - 24), 2304);
    case ProofBlock::EvenNegEqualUnclipped:
      return exact_div(n * (n + 2) * (n + 4) * (n + 6) * (n + 8), 7680);
    case ProofBlock::EvenNegEqualClipped:
      return exact_div(n * (n + 4) * (23 * n * n * n + 148 * n * n + 388 * n + 128), 7680);
    case ProofBlock::EvenNegEqualCombined:
      return exact_div(n * (n + 4) * (6 * n * n * n + 41 * n * n + 116 * n + 56), 1920);
    case ProofBlock::EvenZeroLessUnclipped:
      return exact_div(n * (n + 4) * (n + 8) * (2 * n * n + 11 * n + 24), 7680);
    case ProofBlock::EvenZeroLessClipped:
      return exact_div(n * (n + 4) * (14 * n * n * n + 69 * n * n + 224 * n - 16), 7680);
    case ProofBlock::EvenZeroLessCombined:
      return exact_div(n * (n + 4) * (n * n * n + 6 * n * n + 21 * n + 11), 480);
    case ProofBlock::EvenZeroEqualUnclipped:
      return exact_div((n + 4) * (n + 8) * (n * n + 8 * n + 24), 768);
    case ProofBlock::EvenZeroEqualClipped:
      return exact_div(n * (n + 4) * (7 * n * n + 32 * n + 120), 768);
    case ProofBlock::EvenZeroEqualCombined:
      return exact_div((n + 4) * (n * n * n + 6 * n * n + 26 * n + 24), 96);
    default:
      throw InternalError("not an even block");
  }
}

BigCount odd_block_poly(ProofBlock block, const BigCount& n) {
  switch (block) {
    case ProofBlock::OddNegLessUnclipped:
      return exact_div((n - 1) * (n * n * n * n * n + 34 * n * n * n * n + 479 * n * n * n +
                                  3509 * n * n + 14268 * n + 10125),
                       46080);
    case ProofBlock::OddNegLessClipped:
      return exact_div((n - 5) * (n - 1) *
                           (19 * n * n * n * n + 261 * n * n * n + 1526 * n * n + 4221 * n + 2997),
                       46080);
    case ProofBlock::OddNegLessCombined:
      return exact_div(
          (n - 1) * (n + 3) * (n * n * n * n + 7 * n * n * n + 14 * n * n - 37 * n - 81), 2304);
    case ProofBlock::OddNegEqualUnclipped:
      return exact_div((n - 1) * (n + 3) * (n + 7) * (n * n + 16 * n + 75), 7680);
    case ProofBlock::OddNegEqualClipped:
      return exact_div(
          (n - 1) * (23 * n * n * n * n + 258 * n * n * n + 1148 * n * n + 2038 * n + 885), 7680);
    case ProofBlock::OddNegEqualCombined:
      return exact_div((n - 1) * (n + 3) * (6 * n * n * n + 53 * n * n + 192 * n + 205), 1920);
    case ProofBlock::OddZeroLessUnclipped:
      return exact_div((n - 1) * (n + 3) * (2 * n * n * n + 41 * n * n + 304 * n + 805), 7680);
    case ProofBlock::OddZeroLessClipped:
      return exact_div((n - 1) * (n + 3) * (14 * n * n * n + 87 * n * n + 208 * n - 165), 7680);
    case ProofBlock::OddZeroLessCombined:
      return exact_div((n - 1) * (n + 2) * (n + 3) * (n * n + 6 * n + 20), 480);
    case ProofBlock::OddZeroEqualUnclipped:
      return exact_div((n + 3) * (n + 7) * (n * n + 14 * n + 57), 768);
    case ProofBlock::OddZeroEqualClipped:
      return exact_div(7 * (n - 1) * (n * n * n + 9 * n * n + 35 * n + 51), 768);
    case ProofBlock::OddZeroEqualCombined:
      return exact_div((n + 3) * (n * n * n + 7 * n * n + 29 * n + 35), 96);
    default:
      throw InternalError("not an odd block");
  }
}

BigCount block_sum(ProofBlock block, long long l) {
  switch (block) {
    case ProofBlock::EvenNegLessUnclipped:
      return even_neg_less_unclipped_sum(l);
    case ProofBlock::EvenNegLessClipped:
      return even_neg_less_clipped_sum(l);
    case ProofBlock::EvenNegLessCombined:
      return even_neg_less_unclipped_sum(l) + even_neg_less_clipped_sum(l);
    case ProofBlock::EvenNegEqualUnclipped:
      return even_neg_equal_unclipped_sum(l);
    case ProofBlock::EvenNegEqualClipped:
      return even_neg_equal_clipped_sum(l);
    case ProofBlock::EvenNegEqualCombined:
      return even_neg_equal_unclipped_sum(l) + even_neg_equal_clipped_sum(l);
    case ProofBlock::EvenZeroLessUnclipped:
      return even_zero_less_unclipped_sum(l);
    case ProofBlock::EvenZeroLessClipped:
      return even_zero_less_clipped_sum(l);
    case ProofBlock::EvenZeroLessCombined:
      return even_zero_less_unclipped_sum(l) + even_zero_less_clipped_sum(l);
    case ProofBlock::EvenZeroEqualUnclipped:
      return even_zero_equal_unclipped_sum(l);
    case ProofBlock::EvenZeroEqualClipped:
      return even_zero_equal_clipped_sum(l);
    case ProofBlock::EvenZeroEqualCombined:
      return even_zero_equal_unclipped_sum(l) + even_zero_equal_clipped_sum(l);
    case ProofBlock::OddNegLessUnclipped:
      return odd_neg_less_unclipped_sum(l);
    case ProofBlock::OddNegLessClipped:
      return odd_neg_less_clipped_sum(l);
    case ProofBlock::OddNegLessCombined:
      return odd_neg_less_unclipped_sum(l) + odd_neg_less_clipped_sum(l);
    case ProofBlock::OddNegEqualUnclipped:
      return odd_neg_equal_unclipped_sum(l);
    case ProofBlock::OddNegEqualClipped:
      return odd_neg_equal_clipped_sum(l);
    case ProofBlock::OddNegEqualCombined:
      return odd_neg_equal_unclipped_sum(l) + odd_neg_equal_clipped_sum(l);
    case ProofBlock::OddZeroLessUnclipped:
      return odd_zero_less_unclipped_sum(l);
    case ProofBlock::OddZeroLessClipped:
      return odd_zero_less_clipped_sum(l);
    case ProofBlock::OddZeroLessCombined:
      return odd_zero_less_unclipped_sum(l) + odd_zero_less_clipped_sum(l);
    case ProofBlock::OddZeroEqualUnclipped:
      return odd_zero_equal_unclipped_sum(l);
    case ProofBlock::OddZeroEqualClipped:
      return odd_zero_equal_clipped_sum(l);
    case ProofBlock::OddZeroEqualCombined:
      return odd_zero_equal_unclipped_sum(l) + odd_zero_equal_clipped_sum(l);
  }
  throw InternalError("unknown proof block");
}

}  // namespace

std::string to_string(ProofBlock block) {
  const bool even = proof_block_residue(block) == 0;
  std::string name = even ? "even" : "odd";
  const int i = static_cast<int>(block) % 12;
  name += (i / 6 == 0) ? "-neg" : "-zero";
  name += ((i / 3) % 2 == 0) ? "-less" : "-equal";
  switch (i % 3) {
    case 0:
      name += "-unclipped";
      break;
    case 1:
      name += "-clipped";
      break;
    default:
      name += "-combined";
      break;
  }
  return name;
}

int proof_block_residue(ProofBlock block) {
  return static_cast<int>(block) < 12 ? 0 : 1;
}

const std::vector<ProofBlock>& all_proof_blocks() {
  static const std::vector<ProofBlock> blocks = [] {
    std::vector<ProofBlock> v;
    for (int i = 0; i < 24; ++i) v.push_back(static_cast<ProofBlock>(i));
    return v;
  }();
  return blocks;
}

BigCount proof_block_value(ProofBlock block, long long l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  const int residue = proof_block_residue(block);
  if (residue_class(l) != residue) {
    throw ResidueError(to_string(block) + " is stated for l = " + std::to_string(residue) +
                       " (mod 4), got l = " + std::to_string(l));
  }
  const BigCount sum = block_sum(block, l);
  const BigCount poly =
      residue == 0 ? even_block_poly(block, BigCount(l)) : odd_block_poly(block, BigCount(l));
  if (sum != poly) {
    throw InternalError("partial sum " + to_string(block) + " at l=" + std::to_string(l) +
                        " evaluates to " + sum.str() + " but its polynomial gives " +
                        poly.str());
  }
  return sum;
}

}  // namespace dio
