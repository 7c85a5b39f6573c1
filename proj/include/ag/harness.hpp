#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ag/cayley.hpp"
#include "ag/fuzzy.hpp"

namespace ag::harness {

/// One registered statement of the verified catalog. Every labeled claim
/// appears exactly once; ids are stable CLI/report surface.
enum class Statement : unsigned {
  P1, C1, T1a, T1b, P2_fwd, P2_rev,
  L1i, L1ii, L1iii, L1iv, L2, L3, L4,
  P3, C2, T2, T3, P4, T4i, T4ii, T5,
  L5, L6, R1, R2, L7, L8, L9, L10,
  P5i, P5ii, L11, L12, P6, C3, T6,
  T7, P7, T8, C4, T9,
};

inline constexpr std::size_t kStatementCount = 41;

std::string_view to_string(Statement s);
std::string_view claim_of(Statement s);  // one-line plain description
std::optional<Statement> statement_from_string(std::string_view name);
std::span<const Statement> all_statements();

enum class Verdict { verified, falsified, skipped_no_population };
std::string_view to_string(Verdict v);

/// Everything needed to independently re-evaluate a falsification.
struct CheckWitness {
  CayleyTable table;
  std::vector<FuzzySubset> subsets;  // statement-specific order
  std::vector<Elem> elements;
  std::string detail;
};

struct CheckReport {
  Statement statement;
  unsigned chain_resolution = 1;
  Verdict verdict = Verdict::skipped_no_population;
  std::uint64_t population = 0;           // structures passing the hypothesis
  std::uint64_t hypothesis_excluded = 0;  // structures filtered out
  std::uint64_t structures_tested = 0;    // statement-specific instance count
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;  // recorded when sampling was used
  std::optional<CheckWitness> witness;
  std::string note;
};

struct SuiteOptions {
  std::vector<unsigned> orders{1, 2, 3};
  std::vector<unsigned> chains{1, 2};  // grade-chain resolutions
  std::optional<std::vector<Statement>> ids;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_budget = 20000;
  std::uint32_t samples = 1000;  // per structure, above the budget
  bool up_to_isomorphism = false;
  int jobs = 0;  // 0 = OpenMP default
};

/// Runs one statement over an explicit population at one chain resolution.
/// Structures failing the statement's hypothesis count as excluded, never
/// as evidence. Reports are deterministic given identical inputs and seed.
CheckReport run_check(Statement s, std::span<const CayleyTable> population,
                      GradeChain chain, const SuiteOptions& opts = {});

/// Full catalog (or the ids filter) over enumerated AG-groupoids of the
/// requested orders, one report per (statement, chain).
std::vector<CheckReport> run_suite(const SuiteOptions& opts = {});

/// Harness self-test: statements that presume the left invertive law, run
/// over a deliberately non-left-invertive table. The expected outcome is
/// falsified with re-checkable witnesses.
std::vector<CheckReport> negative_control();

/// JSON document for a whole run; byte-identical across runs with the same
/// options. The human summary table is derived from the same reports.
std::string suite_report_json(std::span<const CheckReport> reports,
                              const SuiteOptions& opts);
std::string render_summary(std::span<const CheckReport> reports);

}  // namespace ag::harness
