// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Runs the library surfaces end to end at desk scale.

#include <chrono>
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ag/enumerate.hpp"
#include "ag/harness.hpp"
#include "ag/ideals.hpp"

using namespace ag;
namespace h = ag::harness;

namespace {

using Clock = std::chrono::steady_clock;

bool g_all_pass = true;

void report(int number, const std::string& what, bool pass, double secs) {
  std::printf("criterion %2d: %s  (%.1fs)  %s\n", number,
              pass ? "PASS" : "FAIL", secs, what.c_str());
  if (!pass) g_all_pass = false;
}

std::vector<CayleyTable> population_of(unsigned lo, unsigned hi,
                                       bool li_only = false) {
  std::vector<CayleyTable> out;
  for (unsigned order = lo; order <= hi; ++order) {
    EnumResult r =
        enumerate_ag({.order = order, .require_left_identity = li_only});
    for (auto& t : r.tables) out.push_back(std::move(t));
  }
  return out;
}

std::set<std::vector<Elem>> table_set(const EnumResult& r) {
  std::set<std::vector<Elem>> out;
  for (const auto& t : r.tables)
    out.insert(std::vector<Elem>(t.entries().begin(), t.entries().end()));
  return out;
}

// 1. enumerate and enumerate_naive produce identical table sets for orders
//    1-3 under all four flag combinations, within 10 seconds.
void criterion_1() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (unsigned order = 1; order <= 3; ++order)
    for (bool li : {false, true})
      for (bool iso : {false, true}) {
        const EnumSpec spec{.order = order,
                            .require_left_identity = li,
                            .up_to_isomorphism = iso};
        ok = ok && table_set(enumerate_ag(spec)) ==
                       table_set(enumerate_naive(spec));
      }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(1, "enumeration equals the naive oracle (orders 1-3, all flags)",
         ok && secs < 10.0, secs);
}

// 2. every enumerated AG-groupoid of order <= 4 satisfies the medial law;
//    those with a left identity also satisfy paramedial and the auxiliary
//    identity.
void criterion_2() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& t : population_of(1, 4)) {
    if (check_medial(t)) ok = false;
    if (!left_identities(t).empty())
      if (check_paramedial(t) || check_aux_identity(t)) ok = false;
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(2, "structural laws hold on every AG-groupoid of order <= 4", ok,
         secs);
}

// 3. the left-invertive and medial laws of the fuzzy product algebra:
//    exhaustive at k=1 for orders <= 3, >= 1000 seeded samples per
//    structure at k=2 and at order 4; within 2 minutes.
void criterion_3() {
  const auto t0 = Clock::now();
  bool ok = true;
  h::SuiteOptions opts;  // budget 20000, samples 1000, seed 0

  const auto small = population_of(1, 3);
  for (h::Statement s : {h::Statement::P1, h::Statement::C1}) {
    const auto k1 = h::run_check(s, small, GradeChain(1), opts);
    ok = ok && k1.verdict == h::Verdict::verified && k1.exhaustive;
    const auto k2 = h::run_check(s, small, GradeChain(2), opts);
    ok = ok && k2.verdict == h::Verdict::verified;
  }
  const auto big = population_of(4, 4);
  for (h::Statement s : {h::Statement::P1, h::Statement::C1})
    for (unsigned k : {1u, 2u}) {
      const auto r = h::run_check(s, big, GradeChain(k), opts);
      ok = ok && r.verdict == h::Verdict::verified;
      // sampled regime: at least 1000 tuples per structure
      ok = ok && r.structures_tested >= 1000 * r.population;
    }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(3, "fuzzy product algebra laws (exhaustive small, sampled large)",
         ok && secs < 120.0, secs);
}

// 4. generated_left_ideal equals the closure oracle on every enumerated
//    AG-groupoid with left identity of order <= 4, all anchors and levels,
//    k in {1,2}: exact equality.
void criterion_4() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& t : population_of(1, 4, /*li_only=*/true))
    for (unsigned k = 1; k <= 2; ++k)
      for (Elem a = 0; a < t.order(); ++a)
        for (Grade lam = 1; lam <= k; ++lam) {
          const GradeChain chain(k);
          const FuzzyPoint p(a, lam);
          if (generated_left_ideal(p, t, chain) !=
              generated_left_ideal_oracle(p, t, chain))
            ok = false;
        }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(4, "generated left ideal equals the closure oracle (order <= 4)", ok,
         secs);
}

// 5. the four pointwise/product-inclusion equivalences, exhaustively over
//    all fuzzy subsets for n <= 3, k <= 2.
void criterion_5() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& t : population_of(1, 3))
    for (unsigned k = 1; k <= 2; ++k) {
      const GradeChain chain(k);
      const FuzzySubset s = top(t.order(), chain);
      const std::uint64_t m = subset_space_size(t.order(), chain);
      for (std::uint64_t i = 0; i < m; ++i) {
        const FuzzySubset f = subset_at_index(i, t.order(), chain);
        if (!is_fuzzy_subgroupoid(f, t).has_value() !=
            subset_of(product(f, f, t), f))
          ok = false;
        if (!is_fuzzy_left_ideal(f, t).has_value() !=
            subset_of(product(s, f, t), f))
          ok = false;
        if (!is_fuzzy_right_ideal(f, t).has_value() !=
            subset_of(product(f, s, t), f))
          ok = false;
        if (!is_fuzzy_ideal(f, t).has_value() !=
            (subset_of(product(s, f, t), f) &&
             subset_of(product(f, s, t), f)))
          ok = false;
      }
    }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(5, "predicate / product-inclusion equivalences (n <= 3, k <= 2)", ok,
         secs);
}

// 6. the ordered-structure results: the fully-fuzzy-prime biconditional,
//    idempotence under full quasi-primeness, o = n under full
//    quasi-primeness, and the four-way equivalent-conditions profile; on
//    every AG-groupoid with left identity of order <= 3 at k in {1,2}.
void criterion_6() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& t : population_of(1, 3, /*li_only=*/true))
    for (unsigned k = 1; k <= 2; ++k) {
      const GradeChain chain(k);
      const auto family =
          enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::two_sided);
      bool all_idem = true;
      for (const auto& f : family.members)
        if (!is_fuzzy_idempotent(f, t)) all_idem = false;
      const bool ordered = !totally_ordered(family).has_value();
      if (is_fully_fuzzy_prime(t, chain) != (all_idem && ordered)) ok = false;

      if (is_fully_fuzzy_quasi_prime(t, chain)) {
        const auto left =
            enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::left);
        for (const auto& f : left.members) {
          if (!is_fuzzy_idempotent(f, t)) ok = false;
          for (const auto& g : left.members)
            if (product(f, g, t) != fuzzy_intersection(f, g)) ok = false;
        }
      }
      if (!theorem9_profile(t, chain).all_equal()) ok = false;
    }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(6, "ordered-structure theorems (order <= 3, k in {1,2})", ok, secs);
}

// 7. the idempotent-left-ideal monoid construction succeeds with top as
//    identity, and every Q-set forms a commutative monoid, on the same
//    population.
void criterion_7() {
  const auto t0 = Clock::now();
  bool ok = true;
  const auto li_tables = population_of(1, 3, /*li_only=*/true);
  for (const auto& t : li_tables)
    for (unsigned k = 1; k <= 2; ++k) {
      const auto res = idempotent_left_ideal_monoid(t, GradeChain(k));
      const auto* table = std::get_if<MonoidTable>(&res);
      if (!table || !table->identity ||
          table->elements[*table->identity] != top(t.order(), GradeChain(k)))
        ok = false;
    }
  h::SuiteOptions opts;
  const auto all_tables = population_of(1, 3);
  for (unsigned k = 1; k <= 2; ++k) {
    const auto r =
        h::run_check(h::Statement::T2, all_tables, GradeChain(k), opts);
    if (r.verdict != h::Verdict::verified) ok = false;
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(7, "monoid constructions (idempotent left ideals, Q-sets)", ok, secs);
}

// 8. every k=1 fuzzy decision agrees with its crisp counterpart through
//    characteristic functions, including C_A o C_B = C_{AB} on all subset
//    pairs for n <= 3.
void criterion_8() {
  const auto t0 = Clock::now();
  bool ok = true;
  const GradeChain k1(1);
  for (const auto& t : population_of(1, 3)) {
    const unsigned n = t.order();
    for (std::uint32_t a = 0; a < (1u << n); ++a)
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const CrispSubset A(n, a), B(n, b);
        if (product(characteristic(A, k1), characteristic(B, k1), t) !=
            characteristic(set_product(t, A, B), k1))
          ok = false;
      }
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
      const CrispSubset A(n, a);
      const FuzzySubset cA = characteristic(A, k1);
      if (is_crisp_ideal(t, A, IdealKind::left) !=
          !is_fuzzy_left_ideal(cA, t).has_value())
        ok = false;
      if (is_crisp_ideal(t, A, IdealKind::right) !=
          !is_fuzzy_right_ideal(cA, t).has_value())
        ok = false;
      if (is_crisp_ideal(t, A, IdealKind::two_sided) !=
          !is_fuzzy_ideal(cA, t).has_value())
        ok = false;
      if (is_crisp_ideal(t, A, IdealKind::bi) !=
          !is_fuzzy_bi_ideal(cA, t).has_value())
        ok = false;
      if (is_crisp_ideal(t, A, IdealKind::interior) !=
          !is_fuzzy_interior_ideal(cA, t).has_value())
        ok = false;
      if (is_crisp_ideal(t, A, IdealKind::two_sided))
        if (is_crisp_prime(t, A) != is_fuzzy_prime(cA, t)) ok = false;
      if (is_crisp_ideal(t, A, IdealKind::left))
        if (is_crisp_quasi_prime(t, A) != is_fuzzy_quasi_prime(cA, t))
          ok = false;
    }
    // fully-prime decisions
    bool crisp_fully_prime = true;
    for (const auto& p : enumerate_crisp_ideals(t, IdealKind::two_sided).members)
      if (!is_crisp_prime(t, p)) crisp_fully_prime = false;
    if (is_fully_fuzzy_prime(t, k1) != crisp_fully_prime) ok = false;
    bool crisp_fully_quasi = true;
    for (const auto& p : enumerate_crisp_ideals(t, IdealKind::left).members)
      if (!is_crisp_quasi_prime(t, p)) crisp_fully_quasi = false;
    if (is_fully_fuzzy_quasi_prime(t, k1) != crisp_fully_quasi) ok = false;
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(8, "crisp/fuzzy bridge at k=1 (products, ideals, primeness)", ok,
         secs);
}

// 9. the negative control falsifies with a re-checkable witness.
void criterion_9() {
  const auto t0 = Clock::now();
  bool ok = true;
  const auto reports = h::negative_control();
  if (reports.empty()) ok = false;
  for (const auto& r : reports) {
    if (r.verdict != h::Verdict::falsified || !r.witness) {
      ok = false;
      continue;
    }
    const auto& w = *r.witness;
    if (w.subsets.size() != 3) {
      ok = false;
      continue;
    }
    const auto& f = w.subsets[0];
    const auto& g = w.subsets[1];
    const auto& hh = w.subsets[2];
    if (product(product(f, g, w.table), hh, w.table) ==
        product(product(hh, g, w.table), f, w.table))
      ok = false;
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(9, "negative control falsifies with a re-checkable witness", ok,
         secs);
}

// 10. two suite runs with identical flags and seed produce byte-identical
//     reports.
void criterion_10() {
  const auto t0 = Clock::now();
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("ag_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const std::string f1 = (dir / "run1.json").string();
  const std::string f2 = (dir / "run2.json").string();
  const std::string base = std::string(AGTOOL_PATH) +
                           " suite --orders 1,2,3 --k 1,2 --seed 5 --out ";
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  bool ok = std::system((base + f1 + " >/dev/null").c_str()) == 0;
  ok = ok && std::system((base + f2 + " >/dev/null").c_str()) == 0;
  const std::string a = slurp(f1);
  ok = ok && !a.empty() && a == slurp(f2);
  ok = ok && a.find("\"falsified\": 0") != std::string::npos;
  fs::remove_all(dir);
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(10, "suite reports are byte-identical across identical runs", ok,
         secs);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("acceptance: %s\n", g_all_pass ? "ALL PASS" : "FAILURES");
  return g_all_pass ? 0 : 1;
}
