#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ag/cayley.hpp"

namespace ag {

/// Membership grade: an exact level on a finite chain 0..k standing in for
/// 0, 1/k, ..., 1. Level 0 is non-membership, level k is full membership.
using Grade = std::uint8_t;

struct GradeChain {
  unsigned resolution;  // k >= 1

  explicit GradeChain(unsigned k);
  Grade full() const { return static_cast<Grade>(resolution); }
  friend auto operator<=>(const GradeChain&, const GradeChain&) = default;
};

/// Grade vector over the carrier. Immutable value type; all operations on
/// mismatched carriers or chains raise UsageError.
class FuzzySubset {
 public:
  FuzzySubset(GradeChain chain, std::vector<Grade> levels);

  unsigned order() const { return static_cast<unsigned>(levels_.size()); }
  GradeChain chain() const { return chain_; }
  Grade operator[](std::size_t i) const { return levels_[i]; }
  std::span<const Grade> levels() const { return levels_; }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;
  friend auto operator<=>(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  GradeChain chain_;
  std::vector<Grade> levels_;
};

/// a_lambda: grade lambda > 0 at the anchor, 0 elsewhere.
struct FuzzyPoint {
  Elem anchor;
  Grade height;

  FuzzyPoint(Elem a, Grade h);
};

// --- constructors -----------------------------------------------------

FuzzySubset zero_subset(unsigned order, GradeChain chain);
FuzzySubset top(unsigned order, GradeChain chain);  // S(x)=1 everywhere
FuzzySubset characteristic(const CrispSubset& a, GradeChain chain);
FuzzySubset point_subset(FuzzyPoint p, unsigned order, GradeChain chain);

// --- the sup-min calculus ----------------------------------------------

/// (f o g)(x) = max over factorizations x = yz of min(f(y), g(z));
/// 0 where x has no factorization.
FuzzySubset product(const FuzzySubset& f, const FuzzySubset& g,
                    const CayleyTable& t);

FuzzySubset fuzzy_union(const FuzzySubset& f, const FuzzySubset& g);
FuzzySubset fuzzy_intersection(const FuzzySubset& f, const FuzzySubset& g);
bool subset_of(const FuzzySubset& f, const FuzzySubset& g);

std::vector<FuzzyPoint> fuzzy_points_of(const FuzzySubset& f);
FuzzySubset union_of_points(std::span<const FuzzyPoint> points, unsigned order,
                            GradeChain chain);

// --- ideal predicates ---------------------------------------------------

/// First failing instance of a pointwise fuzzy inequality. `required` is
/// the lower bound the grade `got` failed to reach.
struct FuzzyWitness {
  std::string_view predicate;
  std::array<Elem, 3> at{};
  unsigned arity = 0;
  Grade got = 0;
  Grade required = 0;
};

std::optional<FuzzyWitness> is_fuzzy_subgroupoid(const FuzzySubset& f,
                                                 const CayleyTable& t);
std::optional<FuzzyWitness> is_fuzzy_left_ideal(const FuzzySubset& f,
                                                const CayleyTable& t);
std::optional<FuzzyWitness> is_fuzzy_right_ideal(const FuzzySubset& f,
                                                 const CayleyTable& t);
std::optional<FuzzyWitness> is_fuzzy_ideal(const FuzzySubset& f,
                                           const CayleyTable& t);
/// AG-subgroupoid with f((xy)z) >= f(x) ^ f(z).
std::optional<FuzzyWitness> is_fuzzy_bi_ideal(const FuzzySubset& f,
                                              const CayleyTable& t);
/// f((xa)y) >= f(a).
std::optional<FuzzyWitness> is_fuzzy_interior_ideal(const FuzzySubset& f,
                                                    const CayleyTable& t);

bool is_fuzzy_idempotent(const FuzzySubset& f, const CayleyTable& t);

// --- generated left ideals ----------------------------------------------

/// <a_lambda>_L on a left-invertive table with left identity:
/// grade lambda at every x = ba, 0 elsewhere. The left-identity hypothesis
/// is enforced; the oracle below covers the general case.
FuzzySubset generated_left_ideal(FuzzyPoint p, const CayleyTable& t,
                                 GradeChain chain);

/// Closure fixpoint from a_lambda: raise g(xy) to g(y) until stable. Yields
/// the pointwise-least fuzzy left ideal containing the point; no left
/// identity required.
FuzzySubset generated_left_ideal_oracle(FuzzyPoint p, const CayleyTable& t,
                                        GradeChain chain);

/// {x : f(x) >= threshold}; threshold must be positive.
CrispSubset level_set(const FuzzySubset& f, Grade threshold);

// --- subset-space indexing ----------------------------------------------

/// (k+1)^n, the number of chain-valued fuzzy subsets of the carrier.
std::uint64_t subset_space_size(unsigned order, GradeChain chain);

/// Index <-> subset bijection; ascending index is ascending lexicographic
/// order on grade vectors.
FuzzySubset subset_at_index(std::uint64_t index, unsigned order,
                            GradeChain chain);
std::uint64_t index_of_subset(const FuzzySubset& f);

// --- literal format -------------------------------------------------------

/// `k=<resolution>; <level_0> ... <level_{n-1}>`
FuzzySubset parse_fuzzy_literal(std::string_view text);
std::string format_fuzzy_literal(const FuzzySubset& f);

}  // namespace ag
