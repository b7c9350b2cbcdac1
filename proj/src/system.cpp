#include "dio/system.hpp"

#include <json.hpp>

namespace dio {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Full4:
      return "full4";
    case SystemKind::Floyd3:
      return "floyd3";
    case SystemKind::GeneralK:
      return "general";
  }
  return "?";
}

SystemSpec SystemSpec::full4(std::vector<long long> rhs) {
  return SystemSpec{SystemKind::Full4, 4, std::move(rhs)};
}

SystemSpec SystemSpec::floyd3(std::vector<long long> rhs) {
  return SystemSpec{SystemKind::Floyd3, 3, std::move(rhs)};
}

SystemSpec SystemSpec::general(std::vector<long long> rhs) {
  const int k = static_cast<int>(rhs.size());
  return SystemSpec{SystemKind::GeneralK, k, std::move(rhs)};
}

SystemSpec SystemSpec::uniform(SystemKind kind, int k, long long l) {
  if (kind == SystemKind::Full4) k = 4;
  if (kind == SystemKind::Floyd3) k = 3;
  return SystemSpec{kind, k, std::vector<long long>(static_cast<std::size_t>(k > 0 ? k : 0), l)};
}

ValidatedSpec validate(const SystemSpec& spec) {
  int expected = spec.k;
  switch (spec.kind) {
    case SystemKind::Full4:
      expected = 4;
      break;
    case SystemKind::Floyd3:
      expected = 3;
      break;
    case SystemKind::GeneralK:
      break;
  }
  if (spec.k != expected) {
    throw WrongArity("system " + to_string(spec.kind) + " requires k = " +
                     std::to_string(expected) + ", got k = " + std::to_string(spec.k));
  }
  if (expected < 1) {
    throw WrongArity("k must be at least 1, got " + std::to_string(expected));
  }
  if (static_cast<int>(spec.rhs.size()) != expected) {
    throw WrongArity("rhs has " + std::to_string(spec.rhs.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  int parity = 0;
  for (long long v : spec.rhs) {
    if (v < 0) {
      throw NegativeRhs("rhs entries must be nonnegative, got " + std::to_string(v));
    }
    parity ^= static_cast<int>(v & 1);
  }
  return ValidatedSpec{spec, parity == 0};
}

std::vector<long long> SolutionMatrix::upper_triangle() const {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(k_) * (k_ + 1) / 2);
  for (int i = 0; i < k_; ++i) {
    for (int j = i; j < k_; ++j) {
      out.push_back(at(i, j));
    }
  }
  return out;
}

bool SolutionMatrix::satisfies(const SystemSpec& spec) const {
  if (spec.k != k_ || static_cast<int>(spec.rhs.size()) != k_) return false;
  for (int i = 0; i < k_; ++i) {
    long long row = at(i, i);  // diagonal counts twice
    for (int j = 0; j < k_; ++j) {
      if (at(i, j) < 0 || at(i, j) != at(j, i)) return false;
      row += at(i, j);
    }
    if (row != spec.rhs[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::string SolutionMatrix::to_json_string() const {
  nlohmann::ordered_json j;
  j["k"] = k_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < k_; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = i; c < k_; ++c) {
      row.push_back(at(i, c));
    }
    rows.push_back(std::move(row));
  }
  j["alpha"] = std::move(rows);
  return j.dump();
}

std::string to_string(DeltaClass dc) {
  switch (dc) {
    case DeltaClass::Negative:
      return "negative";
    case DeltaClass::Zero:
      return "zero";
    case DeltaClass::Positive:
      return "positive";
  }
  return "?";
}

long long delta_of(const ReducedRhs& r) { return -r.l11 - r.l22 + r.l33 + r.l44; }

DeltaClass classify_delta(const ReducedRhs& r) {
  const long long d = delta_of(r);
  if (d < 0) return DeltaClass::Negative;
  if (d == 0) return DeltaClass::Zero;
  return DeltaClass::Positive;
}

int residue_class(long long l) { return static_cast<int>(((l % 4) + 4) % 4); }

}  // namespace dio
