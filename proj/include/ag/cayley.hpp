#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ag/errors.hpp"

namespace ag {

/// Carrier elements are 0-based indices into the Cayley table.
using Elem = std::uint8_t;

inline constexpr unsigned kMaxOrder = 32;       // parseable table bound
inline constexpr unsigned kCanonicalBound = 6;  // permutation search bound

/// Subset of the carrier, stored as a bitmask.
class CrispSubset {
 public:
  CrispSubset() : order_(0), bits_(0) {}
  CrispSubset(unsigned order, std::uint32_t bits);

  static CrispSubset empty_set(unsigned order) { return {order, 0}; }
  static CrispSubset full_set(unsigned order);

  unsigned order() const { return order_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(Elem x) const { return (bits_ >> x) & 1u; }
  CrispSubset& add(Elem x);
  bool empty() const { return bits_ == 0; }
  unsigned size() const;
  std::vector<Elem> members() const;

  friend auto operator<=>(const CrispSubset&, const CrispSubset&) = default;

 private:
  unsigned order_;
  std::uint32_t bits_;
};

/// Total binary operation on {0..n-1}. Immutable after construction.
class CayleyTable {
 public:
  CayleyTable(unsigned order, std::vector<Elem> entries);

  /// a*b = (b-a) mod n; an AG-groupoid with left identity 0 for every n.
  static CayleyTable subtraction_mod(unsigned n);
  /// a*b = a. Not an AG-groupoid for n >= 2; used as a negative control.
  static CayleyTable left_zero(unsigned n);

  unsigned order() const { return order_; }
  Elem operator()(Elem a, Elem b) const { return entries_[a * order_ + b]; }
  std::span<const Elem> entries() const { return entries_; }

  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

 private:
  unsigned order_;
  std::vector<Elem> entries_;
};

/// Bounds-checked table lookup.
Elem apply(const CayleyTable& t, Elem a, Elem b);

/// First failing instance of a structural identity, in lexicographic scan
/// order. Re-evaluating the named identity at `at` reproduces lhs != rhs.
struct Witness {
  std::string_view law;
  std::array<Elem, 4> at{};
  unsigned arity = 0;
  Elem lhs = 0;
  Elem rhs = 0;
};

/// Identity checks return the first counterexample, or nullopt on pass.
std::optional<Witness> check_left_invertive(const CayleyTable& t);  // (ab)c=(cb)a
std::optional<Witness> check_medial(const CayleyTable& t);          // (ab)(cd)=(ac)(bd)
std::optional<Witness> check_paramedial(const CayleyTable& t);      // (ab)(cd)=(dc)(ba)
std::optional<Witness> check_aux_identity(const CayleyTable& t);    // a(bc)=b(ac)

std::optional<Witness> check_identity(const CayleyTable& t, std::string_view law);

std::vector<Elem> left_identities(const CayleyTable& t);
std::vector<Elem> right_identities(const CayleyTable& t);
bool has_left_identity(const CayleyTable& t);
bool is_commutative(const CayleyTable& t);
bool is_associative(const CayleyTable& t);
CrispSubset idempotent_elements(const CayleyTable& t);

struct StructureFlags {
  bool is_ag = false;
  std::vector<Elem> left_identities;
  bool is_commutative = false;
  bool is_associative = false;
  CrispSubset idempotent_elements;
};
StructureFlags structure_flags(const CayleyTable& t);

/// Lexicographically least relabeling of t; equal canonical forms are
/// exactly the isomorphic tables. Order above kCanonicalBound is rejected.
CayleyTable canonical_form(const CayleyTable& t);

/// Crisp product AB = {ab : a in A, b in B}.
CrispSubset set_product(const CayleyTable& t, CrispSubset a, CrispSubset b);
bool subset_of(CrispSubset a, CrispSubset b);
CrispSubset set_union(CrispSubset a, CrispSubset b);
CrispSubset set_intersection(CrispSubset a, CrispSubset b);

// Text format: line 1 is the order n, then n rows of n entries; '#' starts
// a comment line. Parsing is strict and reports 1-based line/column.
CayleyTable parse_table(std::string_view text);
std::vector<CayleyTable> parse_tables(std::string_view text);
std::string format_table(const CayleyTable& t);
std::string format_witness(const Witness& w);

}  // namespace ag
