#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ag/cayley.hpp"

#include <vector>

using namespace ag;

namespace {

CayleyTable table_from(unsigned n, std::initializer_list<Elem> e) {
  return CayleyTable(n, std::vector<Elem>(e));
}

CayleyTable addition_mod(unsigned n) {
  std::vector<Elem> e(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) e[a * n + b] = static_cast<Elem>((a + b) % n);
  return CayleyTable(n, std::move(e));
}

// Re-evaluates a witness by direct table lookups.
bool witness_is_genuine(const CayleyTable& t, const Witness& w) {
  const Elem a = w.at[0], b = w.at[1], c = w.at[2], d = w.at[3];
  Elem lhs, rhs;
  if (w.law == "left-invertive") {
    lhs = t(t(a, b), c);
    rhs = t(t(c, b), a);
  } else if (w.law == "medial") {
    lhs = t(t(a, b), t(c, d));
    rhs = t(t(a, c), t(b, d));
  } else if (w.law == "paramedial") {
    lhs = t(t(a, b), t(c, d));
    rhs = t(t(d, c), t(b, a));
  } else if (w.law == "aux") {
    lhs = t(a, t(b, c));
    rhs = t(b, t(a, c));
  } else {
    return false;
  }
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

}  // namespace

TEST_CASE("apply looks up products and validates arguments") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(apply(z3, 1, 2) == 1);
  CHECK(apply(z3, 2, 1) == 2);
  for (Elem x = 0; x < 3; ++x) CHECK(apply(z3, 0, x) == x);  // left identity 0
  CHECK_THROWS_AS(apply(z3, 3, 0), UsageError);
  CHECK_THROWS_AS(apply(z3, 0, 5), UsageError);
}

TEST_CASE("table construction validates entries") {
  CHECK_THROWS_AS(CayleyTable(0, {}), UsageError);
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 2, 0}), UsageError);  // entry 2 >= n
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 0}), UsageError);     // wrong count
}

TEST_CASE("left invertive law") {
  CHECK(!check_left_invertive(CayleyTable::subtraction_mod(3)));
  CHECK(!check_left_invertive(addition_mod(3)));  // commutative + associative

  // fails whenever a != c, so the lexicographically first triple is (0,0,1)
  const auto w = check_left_invertive(CayleyTable::left_zero(2));
  REQUIRE(w);
  CHECK(w->at == std::array<Elem, 4>{0, 0, 1, 0});
  CHECK(w->lhs == 0);
  CHECK(w->rhs == 1);
}

TEST_CASE("medial law") {
  CHECK(!check_medial(CayleyTable::subtraction_mod(3)));
  CHECK(!check_medial(CayleyTable::subtraction_mod(1)));
  // Left-zero satisfies mediality: both sides reduce to the first operand.
  CHECK(!check_medial(CayleyTable::left_zero(2)));
  // A table that genuinely fails it.
  const auto w = check_medial(table_from(2, {0, 0, 1, 0}));
  REQUIRE(w);
  CHECK(witness_is_genuine(table_from(2, {0, 0, 1, 0}), *w));
}

TEST_CASE("paramedial and auxiliary identities") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(!check_paramedial(z3));
  CHECK(!check_aux_identity(z3));
  CHECK(!check_paramedial(CayleyTable::subtraction_mod(1)));
  CHECK(!check_aux_identity(addition_mod(2)));

  const CayleyTable lz = CayleyTable::left_zero(2);
  CHECK(check_paramedial(lz));
  const auto w = check_aux_identity(lz);
  REQUIRE(w);
  CHECK(w->at == std::array<Elem, 4>{0, 1, 0, 0});
  CHECK(w->lhs == 0);
  CHECK(w->rhs == 1);
}

TEST_CASE("identity and idempotent element detection") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(left_identities(z3) == std::vector<Elem>{0});
  CHECK(right_identities(z3).empty());
  CHECK(left_identities(CayleyTable::left_zero(2)).empty());
  CHECK(left_identities(addition_mod(3)) == std::vector<Elem>{0});
  CHECK(right_identities(addition_mod(3)) == std::vector<Elem>{0});

  CHECK(idempotent_elements(z3).bits() == 0b001);
  CHECK(idempotent_elements(addition_mod(3)).bits() == 0b001);
  CHECK(idempotent_elements(table_from(2, {0, 0, 0, 0})).bits() == 0b01);
}

TEST_CASE("structure flags") {
  const auto flags = structure_flags(CayleyTable::subtraction_mod(3));
  CHECK(flags.is_ag);
  CHECK(flags.left_identities == std::vector<Elem>{0});
  CHECK(!flags.is_commutative);
  CHECK(!flags.is_associative);
  CHECK(flags.idempotent_elements.bits() == 0b001);
}

TEST_CASE("canonical form") {
  const CayleyTable one = CayleyTable::subtraction_mod(1);
  CHECK(canonical_form(one) == one);

  // Z3SUB relabeled by the swap (1 2) is isomorphic to Z3SUB.
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  const std::vector<Elem> perm{0, 2, 1};
  std::vector<Elem> relab(9);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      relab[perm[a] * 3 + perm[b]] =
          perm[z3(static_cast<Elem>(a), static_cast<Elem>(b))];
  CHECK(canonical_form(z3) == canonical_form(CayleyTable(3, relab)));

  // Left-zero and right-zero order-2 tables are not isomorphic.
  const CayleyTable lz = CayleyTable::left_zero(2);
  const CayleyTable rz = table_from(2, {0, 1, 0, 1});
  CHECK(canonical_form(lz) != canonical_form(rz));

  CHECK_THROWS_AS(canonical_form(CayleyTable::subtraction_mod(7)),
                  CapabilityError);
}

TEST_CASE("canonical form is idempotent over all order-2 tables") {
  for (unsigned code = 0; code < 16; ++code) {
    std::vector<Elem> e(4);
    for (unsigned i = 0; i < 4; ++i) e[i] = static_cast<Elem>((code >> i) & 1);
    const CayleyTable t(2, e);
    const CayleyTable c = canonical_form(t);
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("every returned witness re-evaluates to a genuine inequality") {
  std::vector<CayleyTable> tables;
  for (unsigned code = 0; code < 16; ++code) {
    std::vector<Elem> e(4);
    for (unsigned i = 0; i < 4; ++i) e[i] = static_cast<Elem>((code >> i) & 1);
    tables.emplace_back(2, e);
  }
  tables.push_back(table_from(3, {0, 1, 2, 2, 2, 2, 1, 1, 1}));
  tables.push_back(CayleyTable::left_zero(3));
  for (const auto& t : tables) {
    for (auto* check : {check_left_invertive, check_medial, check_paramedial,
                        check_aux_identity}) {
      if (auto w = check(t)) CHECK(witness_is_genuine(t, *w));
    }
  }
}

TEST_CASE("crisp subset products") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CrispSubset a(3, 0b010);  // {1}
  CrispSubset b(3, 0b100);  // {2}
  CHECK(set_product(z3, a, b).bits() == 0b010);  // 1*2 = 1
  CHECK(set_product(z3, CrispSubset::full_set(3), CrispSubset::full_set(3))
            .bits() == 0b111);
  CHECK(subset_of(a, CrispSubset::full_set(3)));
  CHECK(!subset_of(CrispSubset::full_set(3), a));
  CHECK(set_union(a, b).bits() == 0b110);
  CHECK(set_intersection(a, b).bits() == 0);
}

TEST_CASE("table text parsing round trip") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(parse_table(format_table(z3)) == z3);

  const char* with_comments =
      "# subtraction mod 3\n"
      "3\n"
      "0 1 2\n"
      "2 0 1  # row 2\n"
      "1 2 0\n";
  CHECK(parse_table(with_comments) == z3);

  const auto many = parse_tables(format_table(z3) + "\n" +
                                 format_table(CayleyTable::left_zero(2)));
  REQUIRE(many.size() == 2);
  CHECK(many[0] == z3);
  CHECK(many[1] == CayleyTable::left_zero(2));
}

TEST_CASE("parse errors name line and column") {
  try {
    parse_table("3\n0 1 2\n2 0\n1 2 0\n");  // short row
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_table("2\n0 1\n0 7\n");  // entry out of range
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_table(""), ParseError);
  CHECK_THROWS_AS(parse_table("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_table("2\n0 1\n0 1\nextra\n"), ParseError);
  CHECK_THROWS_AS(parse_table("x\n"), ParseError);
  CHECK_THROWS_AS(parse_table("0\n"), ParseError);
}
