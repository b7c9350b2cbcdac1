#pragma once

#include <string>
#include <vector>

#include "dio/errors.hpp"

namespace dio {

enum class SystemKind { Full4, Floyd3, GeneralK };

std::string to_string(SystemKind kind);

/// Which structured system to count: the kind, the number of equations k and
/// the right-hand side vector.  The system is
///
///   2*a(i,i) + sum_{j != i} a(i,j) = rhs[i]     for i = 0..k-1
///
/// over a symmetric nonnegative integer matrix a.  Full4 pins k = 4 and
/// Floyd3 pins k = 3; GeneralK takes k from the rhs length.
struct SystemSpec {
  SystemKind kind = SystemKind::Full4;
  int k = 4;
  std::vector<long long> rhs;

  static SystemSpec full4(std::vector<long long> rhs);
  static SystemSpec floyd3(std::vector<long long> rhs);
  static SystemSpec general(std::vector<long long> rhs);
  /// rhs = [l, l, ..., l] with k entries.
  static SystemSpec uniform(SystemKind kind, int k, long long l);
};

/// A SystemSpec that passed validate().  even_sum records whether the rhs
/// total is even; an odd total is valid input and simply counts zero.
struct ValidatedSpec {
  SystemSpec spec;
  bool even_sum = true;
};

/// Structural validation: arity and nonnegativity.  Throws WrongArity or
/// NegativeRhs.  No upper bound is imposed on the rhs entries; the engines
/// document their own practical limits.
ValidatedSpec validate(const SystemSpec& spec);

/// Symmetric k-by-k nonnegative integer matrix.  Stores the full matrix so
/// row checks stay uniform; the canonical wire form is the upper triangle,
/// row-major.
class SolutionMatrix {
 public:
  SolutionMatrix() = default;
  explicit SolutionMatrix(int k)
      : k_(k), a_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0) {}

  int k() const { return k_; }
  long long at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, long long v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  /// Entries a(i,j) for i <= j in row-major order:
  /// a(0,0), a(0,1), ..., a(0,k-1), a(1,1), ..., a(k-1,k-1).
  std::vector<long long> upper_triangle() const;

  /// True iff every entry is nonnegative and every row equation of `spec`
  /// holds.
  bool satisfies(const SystemSpec& spec) const;

  /// Canonical JSON form, e.g. for k = 4:
  /// {"k":4,"alpha":[[a11,a12,a13,a14],[a22,a23,a24],[a33,a34],[a44]]}
  std::string to_json_string() const;

  friend bool operator==(const SolutionMatrix&, const SolutionMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) +
           static_cast<std::size_t>(j);
  }

  int k_ = 0;
  std::vector<long long> a_;
};

/// The reduced right-hand sides l_ii = l - 2*a(i,i) left for the off-diagonal
/// variables of the 4-equation system once the diagonal is fixed.
struct ReducedRhs {
  long long l11 = 0;
  long long l22 = 0;
  long long l33 = 0;
  long long l44 = 0;

  friend bool operator==(const ReducedRhs&, const ReducedRhs&) = default;
};

/// Sign class of the invariant delta = -l11 - l22 + l33 + l44.  On every
/// solution of the reduced system, delta equals 2*a34 - 2*a12.
enum class DeltaClass { Negative, Zero, Positive };

std::string to_string(DeltaClass dc);

long long delta_of(const ReducedRhs& r);
DeltaClass classify_delta(const ReducedRhs& r);

/// l mod 4, always in {0,1,2,3}.  Selects the aggregation variant.
int residue_class(long long l);

}  // namespace dio
