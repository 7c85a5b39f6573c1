#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ag/cayley.hpp"

namespace ag {

inline constexpr unsigned kEnumBound = 5;       // backtracking search bound
inline constexpr unsigned kNaiveEnumBound = 3;  // full-space filter bound

struct EnumSpec {
  unsigned order = 1;
  bool require_left_identity = false;
  bool up_to_isomorphism = false;
  std::optional<std::uint64_t> limit;  // cap on emitted tables
};

struct EnumResult {
  std::vector<CayleyTable> tables;  // lexicographically ascending
  std::uint64_t count_labeled = 0;
  std::optional<std::uint64_t> count_iso_classes;
  bool exhausted = true;  // false only when `limit` truncated the stream
};

/// All AG-groupoids matching the spec, by backtracking table completion
/// with left-invertive-law propagation. With up_to_isomorphism the emitted
/// tables are canonical forms (pairwise distinct); count_labeled still
/// reports the labeled total. jobs > 1 partitions the search by first-row
/// prefix; the result is identical to the serial scan.
EnumResult enumerate_ag(const EnumSpec& spec, int jobs = 0);

/// Serial reference: same contract, plain depth-first scan.
EnumResult enumerate_ag_serial(const EnumSpec& spec);

/// Independent oracle: generates every table in the full n^(n*n) space and
/// filters. Bounded at order 3.
EnumResult enumerate_naive(const EnumSpec& spec);

/// Enumeration output format: tables separated by blank lines, then a
/// summary line `count_labeled=<n> count_iso=<m> exhausted=<bool>`.
std::string format_enum_result(const EnumResult& r);

}  // namespace ag
