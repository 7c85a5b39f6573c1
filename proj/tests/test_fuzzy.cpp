#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ag/enumerate.hpp"
#include "ag/fuzzy.hpp"

#include <algorithm>
#include <vector>

using namespace ag;

namespace {

FuzzySubset fs(unsigned k, std::initializer_list<Grade> levels) {
  return FuzzySubset(GradeChain(k), std::vector<Grade>(levels));
}

// Independent sup-min product: plain loop over all factor pairs.
FuzzySubset product_oracle(const FuzzySubset& f, const FuzzySubset& g,
                           const CayleyTable& t) {
  std::vector<Grade> out(t.order(), 0);
  for (Elem y = 0; y < t.order(); ++y)
    for (Elem z = 0; z < t.order(); ++z) {
      const Elem x = t(y, z);
      out[x] = std::max(out[x], std::min(f[y], g[z]));
    }
  return FuzzySubset(f.chain(), std::move(out));
}

std::vector<CayleyTable> ag_tables(unsigned max_order, bool li_only = false) {
  std::vector<CayleyTable> out;
  for (unsigned order = 1; order <= max_order; ++order) {
    EnumResult r =
        enumerate_ag({.order = order, .require_left_identity = li_only});
    for (auto& t : r.tables) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("grade chain and subset validation") {
  CHECK_THROWS_AS(GradeChain(0), UsageError);
  CHECK_THROWS_AS(FuzzySubset(GradeChain(1), {0, 2}), UsageError);
  CHECK_THROWS_AS(FuzzyPoint(0, 0), UsageError);
  CHECK_THROWS_AS(product(fs(1, {0, 1}), fs(2, {0, 1}),
                          CayleyTable::subtraction_mod(2)),
                  UsageError);
  CHECK_THROWS_AS(product(fs(1, {0, 1}), fs(1, {0, 1}),
                          CayleyTable::subtraction_mod(3)),
                  UsageError);
}

TEST_CASE("sup-min product basics") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  const GradeChain k1(1);

  // all-zero right factor kills the product
  CHECK(product(fs(1, {1, 1, 1}), zero_subset(3, k1), z3) ==
        zero_subset(3, k1));
  CHECK(product(zero_subset(3, k1), fs(1, {1, 1, 1}), z3) ==
        zero_subset(3, k1));

  // indicator{1} o indicator{2}: only positive pair is (1,2), 1*2 = 1
  CHECK(product(fs(1, {0, 1, 0}), fs(1, {0, 0, 1}), z3) == fs(1, {0, 1, 0}));

  // matches the pair-loop oracle on every subset pair, k <= 2
  for (unsigned k = 1; k <= 2; ++k) {
    const GradeChain chain(k);
    const std::uint64_t m = subset_space_size(3, chain);
    for (std::uint64_t i = 0; i < m; ++i)
      for (std::uint64_t j = 0; j < m; ++j) {
        const FuzzySubset f = subset_at_index(i, 3, chain);
        const FuzzySubset g = subset_at_index(j, 3, chain);
        CHECK(product(f, g, z3) == product_oracle(f, g, z3));
      }
  }
}

TEST_CASE("characteristic functions turn crisp products into fuzzy ones") {
  for (const auto& t : ag_tables(3)) {
    const GradeChain k1(1);
    const unsigned n = t.order();
    for (std::uint32_t a = 0; a < (1u << n); ++a)
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const CrispSubset A(n, a), B(n, b);
        CHECK(product(characteristic(A, k1), characteristic(B, k1), t) ==
              characteristic(set_product(t, A, B), k1));
        CHECK(fuzzy_intersection(characteristic(A, k1),
                                 characteristic(B, k1)) ==
              characteristic(set_intersection(A, B), k1));
      }
  }
}

TEST_CASE("lattice operations") {
  const FuzzySubset f = fs(2, {0, 2, 1});
  CHECK(fuzzy_union(f, f) == f);
  CHECK(fuzzy_intersection(f, f) == f);
  CHECK(fuzzy_union(fs(1, {0, 1, 0}), fs(1, {0, 0, 1})) == fs(1, {0, 1, 1}));
  CHECK(subset_of(zero_subset(3, GradeChain(2)), f));
  CHECK(subset_of(f, top(3, GradeChain(2))));
  CHECK(!subset_of(fs(1, {0, 1, 0}), fs(1, {0, 0, 1})));
}

TEST_CASE("top is the whole carrier at full grade") {
  CHECK(top(3, GradeChain(1)) == fs(1, {1, 1, 1}));
  CHECK(level_set(top(3, GradeChain(2)), 1) == CrispSubset::full_set(3));
  // S o S = S on every table with a left identity
  for (const auto& t : ag_tables(3, /*li_only=*/true)) {
    const FuzzySubset s = top(t.order(), GradeChain(2));
    CHECK(product(s, s, t) == s);
  }
}

TEST_CASE("characteristic of empty and full sets") {
  const GradeChain k2(2);
  CHECK(characteristic(CrispSubset::empty_set(4), k2) == zero_subset(4, k2));
  CHECK(characteristic(CrispSubset::full_set(4), k2) == top(4, k2));
}

TEST_CASE("fuzzy points decompose and reassemble subsets") {
  const GradeChain k2(2);
  CHECK(fuzzy_points_of(zero_subset(3, k2)).empty());

  const FuzzySubset f = fs(2, {0, 2, 1});
  const auto points = fuzzy_points_of(f);
  REQUIRE(points.size() == 2);
  CHECK(points[0].anchor == 1);
  CHECK(points[0].height == 2);
  CHECK(points[1].anchor == 2);
  CHECK(points[1].height == 1);

  // f = union of its fuzzy points, for every f over n=3, k=2
  const std::uint64_t m = subset_space_size(3, k2);
  for (std::uint64_t i = 0; i < m; ++i) {
    const FuzzySubset g = subset_at_index(i, 3, k2);
    CHECK(union_of_points(fuzzy_points_of(g), 3, k2) == g);
  }
}

TEST_CASE("subgroupoid predicate and witnesses") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(!is_fuzzy_subgroupoid(top(3, GradeChain(1)), z3));
  const auto w = is_fuzzy_subgroupoid(fs(1, {0, 1, 0}), z3);
  REQUIRE(w);  // f(1*1) = f(0) = 0 < 1
  CHECK(w->at == std::array<Elem, 3>{1, 1, 0});
  CHECK(w->got == 0);
  CHECK(w->required == 1);
}

TEST_CASE("pointwise predicates match their product-inclusion forms") {
  for (const auto& t : ag_tables(3)) {
    for (unsigned k = 1; k <= 2; ++k) {
      const GradeChain chain(k);
      const FuzzySubset s = top(t.order(), chain);
      const std::uint64_t m = subset_space_size(t.order(), chain);
      for (std::uint64_t i = 0; i < m; ++i) {
        const FuzzySubset f = subset_at_index(i, t.order(), chain);
        CHECK(!is_fuzzy_subgroupoid(f, t) ==
              subset_of(product(f, f, t), f));
        CHECK(!is_fuzzy_left_ideal(f, t) == subset_of(product(s, f, t), f));
        CHECK(!is_fuzzy_right_ideal(f, t) == subset_of(product(f, s, t), f));
        CHECK(!is_fuzzy_ideal(f, t) == (subset_of(product(s, f, t), f) &&
                                        subset_of(product(f, s, t), f)));
      }
    }
  }
}

TEST_CASE("right ideals are left ideals under a left identity") {
  for (const auto& t : ag_tables(3, /*li_only=*/true)) {
    const GradeChain chain(2);
    const std::uint64_t m = subset_space_size(t.order(), chain);
    for (std::uint64_t i = 0; i < m; ++i) {
      const FuzzySubset f = subset_at_index(i, t.order(), chain);
      if (!is_fuzzy_right_ideal(f, t)) CHECK(!is_fuzzy_left_ideal(f, t));
    }
  }
}

TEST_CASE("bi and interior ideal predicates") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(!is_fuzzy_bi_ideal(top(3, GradeChain(2)), z3));
  CHECK(!is_fuzzy_interior_ideal(top(3, GradeChain(2)), z3));

  // inclusion forms for subgroupoids (n <= 2 exhaustively, both k)
  for (const auto& t : ag_tables(2)) {
    for (unsigned k = 1; k <= 2; ++k) {
      const GradeChain chain(k);
      const FuzzySubset s = top(t.order(), chain);
      const std::uint64_t m = subset_space_size(t.order(), chain);
      for (std::uint64_t i = 0; i < m; ++i) {
        const FuzzySubset f = subset_at_index(i, t.order(), chain);
        if (is_fuzzy_subgroupoid(f, t)) continue;
        CHECK(!is_fuzzy_bi_ideal(f, t) ==
              subset_of(product(product(f, s, t), f, t), f));
        CHECK(!is_fuzzy_interior_ideal(f, t) ==
              subset_of(product(product(s, f, t), s, t), f));
      }
    }
  }
}

TEST_CASE("fuzzy idempotence") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  CHECK(is_fuzzy_idempotent(top(3, GradeChain(1)), z3));
  CHECK(is_fuzzy_idempotent(zero_subset(3, GradeChain(1)), z3));
  // indicator{1} o indicator{1} = indicator{0} since 1*1 = 0
  CHECK(product(fs(1, {0, 1, 0}), fs(1, {0, 1, 0}), z3) == fs(1, {1, 0, 0}));
  CHECK(!is_fuzzy_idempotent(fs(1, {0, 1, 0}), z3));
}

TEST_CASE("generated left ideal closed form") {
  const CayleyTable z3 = CayleyTable::subtraction_mod(3);
  const GradeChain k2(2);
  // {b*1 : b} covers the whole carrier, so the ideal is constant
  CHECK(generated_left_ideal(FuzzyPoint(1, 2), z3, k2) == fs(2, {2, 2, 2}));
  CHECK(generated_left_ideal(FuzzyPoint(1, 1), z3, k2) == fs(2, {1, 1, 1}));

  // the anchor always gets the full height: a = e*a
  for (const auto& t : ag_tables(3, /*li_only=*/true))
    for (Elem a = 0; a < t.order(); ++a) {
      const FuzzySubset g = generated_left_ideal(FuzzyPoint(a, 2), t, k2);
      CHECK(g[a] == 2);
    }

  CHECK_THROWS_AS(
      generated_left_ideal(FuzzyPoint(0, 1), CayleyTable(2, {0, 0, 0, 0}),
                           GradeChain(1)),
      UsageError);
}

TEST_CASE("closure oracle yields the smallest containing left ideal") {
  for (const auto& t : ag_tables(3)) {  // including tables without identity
    for (unsigned k = 1; k <= 2; ++k) {
      const GradeChain chain(k);
      const std::uint64_t m = subset_space_size(t.order(), chain);
      for (Elem a = 0; a < t.order(); ++a)
        for (Grade lam = 1; lam <= k; ++lam) {
          const FuzzyPoint p(a, lam);
          const FuzzySubset g = generated_left_ideal_oracle(p, t, chain);
          const FuzzySubset pt = point_subset(p, t.order(), chain);
          CHECK(!is_fuzzy_left_ideal(g, t));
          CHECK(subset_of(pt, g));
          // minimality against the exhaustively enumerated left ideals
          for (std::uint64_t i = 0; i < m; ++i) {
            const FuzzySubset h = subset_at_index(i, t.order(), chain);
            if (is_fuzzy_left_ideal(h, t) || !subset_of(pt, h)) continue;
            CHECK(subset_of(g, h));
          }
        }
    }
  }
}

TEST_CASE("closed form equals the oracle under a left identity") {
  for (const auto& t : ag_tables(3, /*li_only=*/true))
    for (unsigned k = 1; k <= 2; ++k)
      for (Elem a = 0; a < t.order(); ++a)
        for (Grade lam = 1; lam <= k; ++lam) {
          const GradeChain chain(k);
          const FuzzyPoint p(a, lam);
          CHECK(generated_left_ideal(p, t, chain) ==
                generated_left_ideal_oracle(p, t, chain));
        }
}

TEST_CASE("level sets") {
  const FuzzySubset f = fs(2, {0, 1, 2});
  CHECK(level_set(f, 1).bits() == 0b110);
  CHECK(level_set(f, 2).bits() == 0b100);
  CHECK_THROWS_AS(level_set(f, 0), UsageError);
  const GradeChain k2(2);
  const CrispSubset a(3, 0b101);
  CHECK(level_set(characteristic(a, k2), 2) == a);
}

TEST_CASE("left ideals correspond to chains of crisp left-closed level sets") {
  // Holds on arbitrary tables, not only left-invertive ones.
  std::vector<CayleyTable> tables = ag_tables(3);
  tables.push_back(CayleyTable::left_zero(2));
  for (const auto& t : tables) {
    const GradeChain chain(2);
    const std::uint64_t m = subset_space_size(t.order(), chain);
    for (std::uint64_t i = 0; i < m; ++i) {
      const FuzzySubset f = subset_at_index(i, t.order(), chain);
      bool levels_closed = true;
      for (Grade th = 1; th <= 2; ++th) {
        const CrispSubset ls = level_set(f, th);
        if (ls.empty()) continue;
        if (!subset_of(set_product(t, CrispSubset::full_set(t.order()), ls),
                       ls))
          levels_closed = false;
      }
      CHECK(!is_fuzzy_left_ideal(f, t) == levels_closed);
    }
  }
}

TEST_CASE("subset indexing is a lexicographic bijection") {
  const GradeChain k2(2);
  CHECK(subset_space_size(3, k2) == 27);
  FuzzySubset prev = subset_at_index(0, 3, k2);
  CHECK(index_of_subset(prev) == 0);
  for (std::uint64_t i = 1; i < 27; ++i) {
    const FuzzySubset cur = subset_at_index(i, 3, k2);
    CHECK(index_of_subset(cur) == i);
    CHECK(prev < cur);
    prev = cur;
  }
  CHECK_THROWS_AS(subset_at_index(27, 3, k2), UsageError);
}

TEST_CASE("fuzzy literals") {
  const FuzzySubset f = fs(2, {0, 2, 1});
  CHECK(format_fuzzy_literal(f) == "k=2; 0 2 1");
  CHECK(parse_fuzzy_literal("k=2; 0 2 1") == f);
  CHECK(parse_fuzzy_literal("  k = 2 ;  0 2 1 ") == f);
  CHECK(parse_fuzzy_literal(format_fuzzy_literal(f)) == f);

  CHECK_THROWS_AS(parse_fuzzy_literal("0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_fuzzy_literal("k=1; 0 2"), ParseError);  // 2 > k
  CHECK_THROWS_AS(parse_fuzzy_literal("k=0; 0"), ParseError);
  CHECK_THROWS_AS(parse_fuzzy_literal("k=1;"), ParseError);
  CHECK_THROWS_AS(parse_fuzzy_literal("k=1; x"), ParseError);
}
