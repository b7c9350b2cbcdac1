// dio: command-line front end for the exact Diophantine counting engines.
//
// Subcommands: count, enumerate, verify, table.  Exit codes: 0 ok,
// 1 verification failure, 2 usage, 3 engine/capacity error, 4 output I/O
// error.  All data output is deterministic: identical flags give
// byte-identical bytes.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dio/closed_forms.hpp"
#include "dio/floyd.hpp"
#include "dio/gf.hpp"
#include "dio/oracle.hpp"
#include "dio/strip.hpp"
#include "dio/system.hpp"

namespace {

using dio::BigCount;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_rhs(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--rhs expects comma-separated integers, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--rhs must not be empty");
  return out;
}

dio::SystemKind parse_kind(const std::string& name) {
  if (name == "full4") return dio::SystemKind::Full4;
  if (name == "floyd3") return dio::SystemKind::Floyd3;
  if (name == "general") return dio::SystemKind::GeneralK;
  throw UsageError("unknown system '" + name + "'");
}

// Shared --system/--rhs/--l/--k resolution for count, enumerate and table.
struct SpecOptions {
  std::string system;
  std::string rhs_text;
  std::optional<long long> l;
  std::optional<int> k;

  dio::ValidatedSpec resolve_rhs() const {
    const dio::SystemKind kind = parse_kind(system);
    if (!rhs_text.empty() == l.has_value()) {
      throw UsageError("pass exactly one of --rhs and --l");
    }
    dio::SystemSpec spec;
    if (!rhs_text.empty()) {
      std::vector<long long> rhs = parse_rhs(rhs_text);
      if (k && static_cast<std::size_t>(*k) != rhs.size()) {
        throw UsageError("--k contradicts the number of --rhs entries");
      }
      spec = dio::SystemSpec{kind, kind == dio::SystemKind::GeneralK
                                       ? static_cast<int>(rhs.size())
                                       : (kind == dio::SystemKind::Full4 ? 4 : 3),
                             std::move(rhs)};
    } else {
      int kk = 4;
      if (kind == dio::SystemKind::Floyd3) kk = 3;
      if (kind == dio::SystemKind::GeneralK) {
        if (!k) throw UsageError("--system general with --l requires --k");
        kk = *k;
      } else if (k && *k != kk) {
        throw UsageError("--k contradicts --system " + system);
      }
      spec = dio::SystemSpec::uniform(kind, kk, *l);
    }
    return dio::validate(spec);
  }

  // For table: the uniform system family, k resolved.
  int resolve_k() const {
    const dio::SystemKind kind = parse_kind(system);
    if (kind == dio::SystemKind::Full4) return 4;
    if (kind == dio::SystemKind::Floyd3) return 3;
    if (!k) throw UsageError("--system general requires --k");
    if (*k < 1) throw UsageError("--k must be positive");
    return *k;
  }
};

struct EngineResult {
  BigCount count;
  std::string engine;
};

EngineResult run_engine(const dio::ValidatedSpec& vs, std::string engine,
                        std::uint64_t max_cells) {
  const dio::SystemSpec& spec = vs.spec;
  const bool uniform =
      !spec.rhs.empty() &&
      std::all_of(spec.rhs.begin(), spec.rhs.end(),
                  [&](long long v) { return v == spec.rhs.front(); });
  const long long l = uniform ? spec.rhs.front() : -1;
  if (engine == "auto") {
    engine = (uniform && (spec.kind == dio::SystemKind::Full4 ||
                          spec.kind == dio::SystemKind::Floyd3))
                 ? "closed"
                 : "gf";
  }
  if (engine == "closed") {
    if (uniform && spec.k == 4) return {dio::closed_count(l), engine};
    if (uniform && spec.k == 3) return {dio::floyd_count(l), engine};
    throw EngineError("the closed engine requires a uniform rhs with k = 3 or k = 4");
  }
  if (engine == "strip") {
    if (uniform && spec.k == 4) return {dio::aggregate_count(l), engine};
    throw EngineError("the strip engine requires a uniform rhs with k = 4");
  }
  if (engine == "oracle") return {dio::count_bruteforce(vs), engine};
  if (engine == "gf") return {dio::count_general(spec.rhs, max_cells), engine};
  throw UsageError("unknown engine '" + engine + "'");
}

int cmd_count(const SpecOptions& sopts, const std::string& engine,
              const std::string& format, std::uint64_t max_cells) {
  const dio::ValidatedSpec vs = sopts.resolve_rhs();
  const EngineResult res = run_engine(vs, engine, max_cells);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["system"] = dio::to_string(vs.spec.kind);
    j["rhs"] = vs.spec.rhs;
    j["engine"] = res.engine;
    j["count"] = res.count.str();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << res.count << "\n";
  }
  return 0;
}

std::string upper_triangle_header(int k) {
  std::string h;
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      if (!h.empty()) h += ',';
      h += 'a';
      if (k > 9) {
        h += std::to_string(i) + "_" + std::to_string(j);
      } else {
        h += std::to_string(i) + std::to_string(j);
      }
    }
  }
  return h;
}

int cmd_enumerate(const SpecOptions& sopts, std::optional<std::uint64_t> limit,
                  const std::string& format) {
  const dio::ValidatedSpec vs = sopts.resolve_rhs();
  if (format == "csv") std::cout << upper_triangle_header(vs.spec.k) << "\n";
  std::uint64_t emitted = 0;
  dio::enumerate_solutions(vs, [&](const dio::SolutionMatrix& m) {
    if (format == "json") {
      std::cout << m.to_json_string() << "\n";
    } else {
      const char sep = format == "csv" ? ',' : ' ';
      const std::vector<long long> ut = m.upper_triangle();
      for (std::size_t i = 0; i < ut.size(); ++i) {
        if (i > 0) std::cout << sep;
        std::cout << ut[i];
      }
      std::cout << "\n";
    }
    ++emitted;
    return !limit || emitted < *limit;
  });
  return 0;
}

int cmd_table(const SpecOptions& sopts, long long max_l, const std::string& engine,
              const std::string& format, const std::string& out_path,
              std::uint64_t max_cells) {
  const int k = sopts.resolve_k();
  const dio::SystemKind kind = parse_kind(sopts.system);

  std::ostringstream body;
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long long l = 0; l <= max_l; ++l) {
      const auto vs = dio::validate(dio::SystemSpec::uniform(kind, k, l));
      nlohmann::ordered_json row;
      row["l"] = l;
      row["count"] = run_engine(vs, engine, max_cells).count.str();
      rows.push_back(std::move(row));
    }
    body << rows.dump() << "\n";
  } else {
    body << "l,count\n";
    for (long long l = 0; l <= max_l; ++l) {
      const auto vs = dio::validate(dio::SystemSpec::uniform(kind, k, l));
      body << l << "," << run_engine(vs, engine, max_cells).count << "\n";
    }
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + out_path + "' for writing");
    out << body.str();
    out.flush();
    if (!out) throw IoError("failed writing to '" + out_path + "'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

class VerifyReport {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++(ok ? passed_ : failed_);
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
  }

  int finish() const {
    const int total = passed_ + failed_;
    if (failed_ == 0) {
      std::cout << "PASSED " << passed_ << "/" << total << " checks\n";
      return 0;
    }
    std::cout << "FAILED " << failed_ << "/" << total << " checks\n";
    return 1;
  }

 private:
  int passed_ = 0;
  int failed_ = 0;
};

BigCount oracle_uniform(dio::SystemKind kind, int k, long long l) {
  return dio::count_bruteforce(dio::validate(dio::SystemSpec::uniform(kind, k, l)));
}

void suite_closed_vs_oracle(VerifyReport& rep, long long max_l) {
  rep.check("closed l=0 -> 1", dio::closed_count(0) == 1);
  rep.check("closed l=1 -> 3", dio::closed_count(1) == 3);
  rep.check("closed l=2 -> 17", dio::closed_count(2) == 17);
  for (long long l = 0; l <= max_l; ++l) {
    const BigCount closed = dio::closed_count(l);
    const BigCount oracle = oracle_uniform(dio::SystemKind::Full4, 4, l);
    rep.check("closed vs oracle l=" + std::to_string(l), closed == oracle,
              "closed=" + closed.str() + " oracle=" + oracle.str());
  }
}

void suite_strip_vs_oracle(VerifyReport& rep, long long max_l) {
  for (long long l = 0; l <= max_l; ++l) {
    for (const dio::DeltaClass dc : {dio::DeltaClass::Negative, dio::DeltaClass::Zero}) {
      bool ok = true;
      std::string detail;
      for (long long a = l & 1; a <= l && ok; a += 2) {
        for (long long b = a; b <= l && ok; b += 2) {
          const BigCount expect = dio::count_fixed_diagonal_by_delta(l, a, b, dc);
          const BigCount got = dio::case_count(l, a, b, dc);
          if (got != expect) {
            ok = false;
            detail = "l11=" + std::to_string(a) + " l22=" + std::to_string(b) +
                     " case=" + got.str() + " oracle=" + expect.str();
          }
        }
      }
      rep.check("case values vs oracle l=" + std::to_string(l) + " delta=" +
                    (dc == dio::DeltaClass::Negative ? std::string("<0") : std::string("=0")),
                ok, detail);
    }
  }
}

void suite_strip_vs_closed(VerifyReport& rep, long long max_l) {
  for (long long l = 0; l <= max_l; ++l) {
    const BigCount agg = dio::aggregate_count(l);
    const BigCount closed = dio::closed_count(l);
    rep.check("aggregate vs closed l=" + std::to_string(l), agg == closed,
              "aggregate=" + agg.str() + " closed=" + closed.str());
  }
}

void suite_floyd(VerifyReport& rep, long long max_l) {
  for (long long l = 0; l <= max_l; l += 2) {
    const BigCount f = dio::floyd_count(l);
    const BigCount cases = dio::floyd_count_cases(l);
    const BigCount enumerated = static_cast<long long>(dio::floyd_enumerate(l).size());
    const BigCount oracle = oracle_uniform(dio::SystemKind::Floyd3, 3, l);
    const bool ok = f == cases && f == enumerated && f == oracle;
    rep.check("floyd engines agree l=" + std::to_string(l), ok,
              "closed=" + f.str() + " cases=" + cases.str() + " enumerated=" +
                  enumerated.str() + " oracle=" + oracle.str());
  }
  {
    bool ok = true;
    for (long long l = 1; l <= max_l; l += 2) {
      if (dio::floyd_count(l) != 0 || !dio::floyd_enumerate(l).empty()) ok = false;
    }
    rep.check("floyd odd l -> 0", ok);
  }
  {
    bool ok = true;
    for (long long l = 0; l <= 400; l += 2) {
      if (dio::floyd_count_cases(l) != dio::floyd_count(l)) ok = false;
    }
    rep.check("floyd case sums vs closed form for even l <= 400", ok);
  }
  {
    bool ok = true;
    for (long long n = 1; n <= 100; ++n) {
      if (dio::floyd_count(2 * n - 2) != dio::magic_constant(n)) ok = false;
    }
    rep.check("floyd remap equals magic constant for n in [1,100]", ok);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < dio::floyd_triangle_row_sums.size(); ++i) {
      const long long n = static_cast<long long>(i) + 1;
      if (dio::floyd_count(2 * n - 2) != dio::floyd_triangle_row_sums[i]) ok = false;
    }
    rep.check("floyd remap matches the stored row-sum table", ok);
  }
}

void suite_gf(VerifyReport& rep, long long max_l) {
  std::mt19937 rng(0x5eed5eedU);
  bool vs_oracle = true;
  bool permutation = true;
  bool odd_zero = true;
  std::string detail;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + trial % 3;
    std::vector<long long> rhs(static_cast<std::size_t>(k));
    long long total = 0;
    for (auto& v : rhs) {
      v = static_cast<long long>(rng() % 9);  // 0..8
      total += v;
    }
    const BigCount fast = dio::count_general(rhs);
    const BigCount slow = dio::count_bruteforce(dio::validate(dio::SystemSpec::general(rhs)));
    if (fast != slow && vs_oracle) {
      vs_oracle = false;
      detail = "instance " + std::to_string(trial) + " gf=" + fast.str() +
               " oracle=" + slow.str();
    }
    std::vector<long long> shuffled = rhs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (dio::count_general(shuffled) != fast) permutation = false;
    if (total % 2 != 0 && fast != 0) odd_zero = false;
  }
  rep.check("gf vs oracle on 100 seeded instances (k in {3,4,5}, l_i <= 8)", vs_oracle,
            detail);
  rep.check("gf permutation invariance on the same instances", permutation);
  rep.check("gf odd-sum instances count zero", odd_zero);
  {
    bool ok = true;
    for (long long l = 0; l <= max_l; ++l) {
      if (dio::count_general(std::vector<long long>(4, l)) != dio::closed_count(l)) ok = false;
    }
    rep.check("gf uniform k=4 vs closed for l <= " + std::to_string(max_l), ok);
  }
  {
    bool ok = true;
    for (long long l = 0; l <= 20; ++l) {
      if (dio::count_general(std::vector<long long>(3, l)) != dio::floyd_count(l)) ok = false;
    }
    rep.check("gf uniform k=3 vs floyd closed form for l <= 20", ok);
  }
}

void suite_proof_blocks(VerifyReport& rep) {
  for (const dio::ProofBlock block : dio::all_proof_blocks()) {
    const bool even = dio::proof_block_residue(block) == 0;
    bool ok = true;
    std::string detail;
    for (long long l : even ? std::vector<long long>{0, 4, 8, 12}
                            : std::vector<long long>{1, 5, 9, 13}) {
      try {
        dio::proof_block_value(block, l);
      } catch (const dio::Error& e) {
        ok = false;
        detail = e.what();
      }
    }
    rep.check("partial sum equals its polynomial: " + dio::to_string(block), ok, detail);
  }
}

int cmd_verify(const std::string& suite, std::optional<long long> max_l) {
  VerifyReport rep;
  const auto pick = [&](long long fallback) { return max_l ? *max_l : fallback; };
  if (suite == "closed-vs-oracle" || suite == "all") suite_closed_vs_oracle(rep, pick(12));
  if (suite == "strip-vs-oracle" || suite == "all") suite_strip_vs_oracle(rep, pick(10));
  if (suite == "strip-vs-closed" || suite == "all") suite_strip_vs_closed(rep, pick(60));
  if (suite == "floyd" || suite == "all") suite_floyd(rep, pick(20));
  if (suite == "gf" || suite == "all") suite_gf(rep, pick(40));
  if (suite == "proof-blocks" || suite == "all") suite_proof_blocks(rep);
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and enumeration of nonnegative solutions of "
               "symmetric row-sum Diophantine systems"};
  app.require_subcommand(1);

  SpecOptions count_spec, enum_spec, table_spec;
  std::string count_engine = "auto", count_format = "text";
  std::uint64_t count_cells = 0;

  auto* count = app.add_subcommand("count", "print the number of nonnegative solutions");
  count->add_option("--system", count_spec.system, "full4, floyd3 or general")
      ->required()
      ->check(CLI::IsMember({"full4", "floyd3", "general"}));
  count->add_option("--rhs", count_spec.rhs_text, "comma-separated right-hand sides");
  count->add_option("--l", count_spec.l, "uniform right-hand side value");
  count->add_option("--k", count_spec.k, "number of equations (general + --l)");
  count->add_option("--engine", count_engine, "auto, oracle, closed, strip or gf")
      ->check(CLI::IsMember({"auto", "oracle", "closed", "strip", "gf"}));
  count->add_option("--format", count_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  count->add_option("--max-cells", count_cells, "cell cap for the gf engine");

  std::optional<std::uint64_t> enum_limit;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "list solutions in lexicographic order");
  enumerate->add_option("--system", enum_spec.system, "full4, floyd3 or general")
      ->required()
      ->check(CLI::IsMember({"full4", "floyd3", "general"}));
  enumerate->add_option("--rhs", enum_spec.rhs_text, "comma-separated right-hand sides");
  enumerate->add_option("--l", enum_spec.l, "uniform right-hand side value");
  enumerate->add_option("--k", enum_spec.k, "number of equations (general + --l)");
  enumerate->add_option("--limit", enum_limit, "stop after this many solutions")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--format", enum_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string verify_suite;
  std::optional<long long> verify_max_l;
  auto* verify = app.add_subcommand("verify", "run a cross-engine verification sweep");
  verify->add_option("--suite", verify_suite, "which sweep to run")
      ->required()
      ->check(CLI::IsMember({"closed-vs-oracle", "strip-vs-oracle", "strip-vs-closed",
                             "floyd", "gf", "proof-blocks", "all"}));
  verify->add_option("--max-l", verify_max_l, "sweep bound (per-suite default otherwise)")
      ->check(CLI::NonNegativeNumber);

  long long table_max_l = 0;
  std::string table_engine = "auto", table_format = "csv", table_out;
  std::uint64_t table_cells = 0;
  auto* table = app.add_subcommand("table", "emit counts for l = 0..max-l");
  table->add_option("--system", table_spec.system, "full4, floyd3 or general")
      ->required()
      ->check(CLI::IsMember({"full4", "floyd3", "general"}));
  table->add_option("--max-l", table_max_l, "largest uniform rhs value")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table->add_option("--k", table_spec.k, "number of equations (general)");
  table->add_option("--engine", table_engine, "auto, oracle, closed, strip or gf")
      ->check(CLI::IsMember({"auto", "oracle", "closed", "strip", "gf"}));
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "write to this file instead of stdout");
  table->add_option("--max-cells", table_cells, "cell cap for the gf engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(count_spec, count_engine, count_format, count_cells);
    if (enumerate->parsed()) return cmd_enumerate(enum_spec, enum_limit, enum_format);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_max_l);
    if (table->parsed()) {
      return cmd_table(table_spec, table_max_l, table_engine, table_format, table_out,
                       table_cells);
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dio::WrongArity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dio::NegativeRhs& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
