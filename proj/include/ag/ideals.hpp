#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ag/cayley.hpp"
#include "ag/fuzzy.hpp"

namespace ag {

enum class IdealKind { left, right, two_sided, interior, bi };
std::string_view to_string(IdealKind kind);
std::optional<IdealKind> ideal_kind_from_string(std::string_view s);

/// Containment test for one non-empty subset (left: SA <= A, right: AS <= A,
/// interior: (SA)S <= A, bi: AG-subgroupoid with (AS)A <= A).
bool is_crisp_ideal(const CayleyTable& t, CrispSubset a, IdealKind kind);

struct CrispIdealFamily {
  IdealKind kind;
  std::vector<CrispSubset> members;  // lexicographic by bitmask
};
CrispIdealFamily enumerate_crisp_ideals(const CayleyTable& t, IdealKind kind);

enum class FuzzyIdealKind { left, right, two_sided };
std::string_view to_string(FuzzyIdealKind kind);

struct FuzzyIdealFamily {
  FuzzyIdealKind kind;
  GradeChain chain;
  std::vector<FuzzySubset> members;  // ascending grade-vector order
};

struct FamilyOptions {
  std::uint64_t exhaustive_budget = 20000;  // bound for the direct filter
  bool level_chain = true;                  // allow the scalable path
};

/// Exactly the chain-valued fuzzy subsets passing the kind's predicate.
/// The scalable path assembles them as descending chains of crisp ideals;
/// the direct filter over all (k+1)^n subsets is kept as its oracle and is
/// refused (CapabilityError) above the budget.
FuzzyIdealFamily enumerate_fuzzy_ideals(const CayleyTable& t, GradeChain chain,
                                        FuzzyIdealKind kind,
                                        const FamilyOptions& opts = {});
FuzzyIdealFamily enumerate_fuzzy_ideals_filter(const CayleyTable& t,
                                               GradeChain chain,
                                               FuzzyIdealKind kind,
                                               std::uint64_t budget = 20000);

// --- primeness -------------------------------------------------------------

/// P prime: AB <= P forces A <= P or B <= P over all two-sided ideals.
/// P must itself be a two-sided ideal.
bool is_crisp_prime(const CayleyTable& t, CrispSubset p);
/// Same implication quantified over left ideals; P must be a left ideal.
bool is_crisp_quasi_prime(const CayleyTable& t, CrispSubset p);

bool is_fuzzy_prime(const FuzzySubset& f, const CayleyTable& t);
bool is_fuzzy_quasi_prime(const FuzzySubset& f, const CayleyTable& t);
/// g^2 <= f forces g <= f over fuzzy left ideals g; f must be a left ideal.
bool is_fuzzy_semiprime(const FuzzySubset& f, const CayleyTable& t);

bool is_fully_fuzzy_prime(const CayleyTable& t, GradeChain chain);
bool is_fully_fuzzy_quasi_prime(const CayleyTable& t, GradeChain chain);

/// nullopt when the family is a chain under inclusion; otherwise the first
/// incomparable member pair (indices into the family).
std::optional<std::pair<std::size_t, std::size_t>> totally_ordered(
    const FuzzyIdealFamily& family);

// --- composed structures -----------------------------------------------

/// Closed operation table over a member list; axioms checked on construction.
struct MonoidTable {
  std::vector<FuzzySubset> elements;
  std::vector<std::size_t> op;  // row-major element indices
  std::optional<std::size_t> identity;

  std::size_t at(std::size_t i, std::size_t j) const {
    return op[i * elements.size() + j];
  }
};

/// A law failure found while assembling a MonoidTable. `members` holds the
/// subsets the law was instantiated at; for closure failures `product` is
/// the escaping subset.
struct LawViolation {
  std::string law;
  std::vector<FuzzySubset> members;
  std::optional<FuzzySubset> product;
};

using MonoidResult = std::variant<MonoidTable, LawViolation>;

/// Idempotent fuzzy left ideals under o (requires a left identity).
/// Verifies closure, commutativity, associativity and that top is the
/// identity; a violation is reported, not thrown.
MonoidResult idempotent_left_ideal_monoid(const CayleyTable& t,
                                          GradeChain chain);

/// Fuzzy quasi-prime left ideals under o. Requires a left identity and a
/// fully fuzzy quasi-prime table (UsageError naming the failing hypothesis
/// otherwise). Verifies closure, commutativity, associativity, idempotence
/// and that f o g = f n g across the whole left-ideal family.
MonoidResult quasi_prime_semilattice(const CayleyTable& t, GradeChain chain);

// --- equivalent-conditions profile ------------------------------------

/// Independently computed truth values that are expected to coincide:
/// (i) AA = A for every crisp left ideal, (ii) every fuzzy left ideal is
/// o-idempotent, (iii) f o g = f n g for all fuzzy left ideal pairs,
/// (iv) every fuzzy left ideal is fuzzy semiprime. Requires a left identity.
struct Theorem9Profile {
  bool crisp_left_ideals_idempotent;
  bool fuzzy_left_ideals_idempotent;
  bool products_are_intersections;
  bool fuzzy_left_ideals_semiprime;

  bool all_equal() const {
    return crisp_left_ideals_idempotent == fuzzy_left_ideals_idempotent &&
           fuzzy_left_ideals_idempotent == products_are_intersections &&
           products_are_intersections == fuzzy_left_ideals_semiprime;
  }
};
Theorem9Profile theorem9_profile(const CayleyTable& t, GradeChain chain);

}  // namespace ag
