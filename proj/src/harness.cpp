#include "ag/harness.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ag/enumerate.hpp"
#include "ag/ideals.hpp"
#include "ag/parallel.hpp"
#include "json.hpp"

namespace ag::harness {

namespace {

struct Info {
  Statement id;
  std::string_view name;
  std::string_view claim;
  bool needs_left_identity;
};

constexpr std::array<Info, kStatementCount> kRegistry{{
    {Statement::P1, "P1", "products of fuzzy subsets satisfy the left invertive law", false},
    {Statement::C1, "C1", "products of fuzzy subsets satisfy the medial law", false},
    {Statement::T1a, "T1a", "f o (g o h) = g o (f o h) under a left identity", true},
    {Statement::T1b, "T1b", "(f o g) o (h o k) = (k o h) o (g o f) under a left identity", true},
    {Statement::P2_fwd, "P2-fwd", "commutative semigroups satisfy (f o g) o h = f o (h o g)", false},
    {Statement::P2_rev, "P2-rev", "(f o g) o h = f o (h o g) forces a commutative semigroup when every subset factors", false},
    {Statement::L1i, "L1i", "subgroupoid inequality is equivalent to f o f <= f", false},
    {Statement::L1ii, "L1ii", "left-ideal inequality is equivalent to S o f <= f", false},
    {Statement::L1iii, "L1iii", "right-ideal inequality is equivalent to f o S <= f", false},
    {Statement::L1iv, "L1iv", "two-sided inequality is equivalent to S o f <= f and f o S <= f", false},
    {Statement::L2, "L2", "intersections preserve subgroupoids and left/right/two-sided ideals", false},
    {Statement::L3, "L3", "S o S = S under a left identity", true},
    {Statement::L4, "L4", "S o f = f for fuzzy left ideals under a left identity", true},
    {Statement::P3, "P3", "f o g = h o k forces g o f = k o h for left ideals f,k under a left identity", true},
    {Statement::C2, "C2", "the two permuted product identities hold together or fail together", false},
    {Statement::T2, "T2", "{f : f o h = f} is a commutative monoid for each idempotent h", false},
    {Statement::T3, "T3", "the generated left ideal equals the closure oracle under a left identity", true},
    {Statement::P4, "P4", "idempotent fuzzy left ideals are two-sided", false},
    {Statement::T4i, "T4i", "S o f is idempotent for idempotent f under a left identity", true},
    {Statement::T4ii, "T4ii", "idempotent f commutes with every fuzzy left ideal under a left identity", true},
    {Statement::T5, "T5", "idempotent fuzzy left ideals form a commutative monoid with top as identity", true},
    {Statement::L5, "L5", "fuzzy right ideals are two-sided under a left identity", true},
    {Statement::L6, "L6", "f u (f o S) and f u (f o f) are two-sided for fuzzy left ideals f", true},
    {Statement::R1, "R1", "left and right ideal coincide on idempotent subsets under a left identity", true},
    {Statement::R2, "R2", "f u (S o f) and f u (f o f) are two-sided for fuzzy right ideals f", true},
    {Statement::L7, "L7", "bi-ideal is equivalent to (f o S) o f <= f for subgroupoids", false},
    {Statement::L8, "L8", "products of fuzzy right ideals are bi-ideals under a left identity", true},
    {Statement::L9, "L9", "intersections of fuzzy bi-ideals are bi-ideals", false},
    {Statement::L10, "L10", "interior ideal is equivalent to (S o f) o S <= f for subgroupoids", false},
    {Statement::P5i, "P5i", "idempotent fuzzy left ideals are bi-ideals", false},
    {Statement::P5ii, "P5ii", "idempotent fuzzy left ideals are interior ideals", false},
    {Statement::L11, "L11", "right ideal is equivalent to interior ideal under a left identity", true},
    {Statement::L12, "L12", "fuzzy left ideals that are interior ideals are bi-ideals under a left identity", true},
    {Statement::P6, "P6", "f o f is a two-sided ideal for one-sided ideals f under a left identity", true},
    {Statement::C3, "C3", "f o f is a bi-ideal and interior ideal for fuzzy left ideals f under a left identity", true},
    {Statement::T6, "T6", "fuzzy two-sided ideals are bi-ideals and interior ideals", false},
    {Statement::T7, "T7", "fully fuzzy prime iff every fuzzy ideal is idempotent and the ideals are totally ordered", true},
    {Statement::P7, "P7", "fully fuzzy quasi-prime forces every fuzzy left ideal idempotent", true},
    {Statement::T8, "T8", "fully fuzzy quasi-prime forces f o g = f n g on fuzzy left ideals", true},
    {Statement::C4, "C4", "fuzzy quasi-prime ideals form a semilattice under a left identity", true},
    {Statement::T9, "T9", "idempotence of (fuzzy) left ideals, o = n, and semiprimeness are equivalent", true},
}};

const Info& info_of(Statement s) { return kRegistry[static_cast<unsigned>(s)]; }

// ----------------------------------------------------------------------
// per-structure context and quantifier scans
// ----------------------------------------------------------------------

struct Ctx {
  const CayleyTable& t;
  GradeChain chain;
  std::uint64_t budget;
  std::uint32_t samples;
  std::uint64_t seed;
  int jobs;

  Ctx(const CayleyTable& table, GradeChain c, std::uint64_t budget_,
      std::uint32_t samples_, std::uint64_t seed_, int jobs_)
      : t(table),
        chain(c),
        budget(budget_),
        samples(samples_),
        seed(seed_),
        jobs(jobs_) {}

  unsigned n() const { return t.order(); }
  std::uint64_t space() const { return subset_space_size(t.order(), chain); }
  FuzzySubset at(std::uint64_t i) const {
    return subset_at_index(i, t.order(), chain);
  }
  FuzzySubset top() const { return ag::top(t.order(), chain); }

  const std::vector<FuzzySubset>& left_family() {
    if (!left_)
      left_ = enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::left).members;
    return *left_;
  }
  const std::vector<FuzzySubset>& right_family() {
    if (!right_)
      right_ = enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::right).members;
    return *right_;
  }
  const std::vector<FuzzySubset>& two_family() {
    if (!two_)
      two_ =
          enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::two_sided).members;
    return *two_;
  }

 private:
  std::optional<std::vector<FuzzySubset>> left_, right_, two_;
};

struct Outcome {
  bool excluded = false;
  std::uint64_t instances = 0;
  bool sampled = false;
  std::optional<CheckWitness> witness;
  std::string note;
};

Outcome excluded_outcome() {
  Outcome o;
  o.excluded = true;
  return o;
}

using Tuple = std::array<std::uint64_t, 4>;

struct ScanResult {
  std::uint64_t checked = 0;
  bool sampled = false;
  std::optional<Tuple> violation;
};

// Exhaustive lexicographic scan of the mixed-radix tuple space when it fits
// the budget (first violation returned), seeded uniform sampling otherwise.
template <std::size_t Arity, class Violates>
ScanResult scan(Ctx& c, const std::array<std::uint64_t, Arity>& dims,
                Violates&& violates) {
  static_assert(Arity >= 1 && Arity <= 4);
  ScanResult r;
  std::uint64_t space = 1;
  for (std::uint64_t d : dims) {
    if (d == 0) return r;  // empty quantification domain
    if (space > std::numeric_limits<std::uint64_t>::max() / d) {
      space = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    space *= d;
  }
  auto decode = [&](std::uint64_t flat) {
    Tuple ix{};
    for (std::size_t pos = Arity; pos-- > 0;) {
      ix[pos] = flat % dims[pos];
      flat /= dims[pos];
    }
    return ix;
  };
  if (space <= c.budget) {
    auto hit = par::min_satisfying(
        space, [&](std::uint64_t flat) { return violates(decode(flat)); },
        c.jobs);
    if (hit) {
      r.violation = decode(*hit);
      r.checked = *hit + 1;
    } else {
      r.checked = space;
    }
    return r;
  }
  r.sampled = true;
  par::SplitMix64 rng(c.seed);
  for (std::uint32_t s = 0; s < c.samples; ++s) {
    Tuple ix{};
    for (std::size_t d = 0; d < Arity; ++d) ix[d] = rng.below(dims[d]);
    ++r.checked;
    if (violates(ix)) {
      r.violation = ix;
      return r;
    }
  }
  return r;
}

CheckWitness make_witness(const Ctx& c, std::vector<FuzzySubset> subsets,
                          std::vector<Elem> elements, std::string detail) {
  return CheckWitness{c.t, std::move(subsets), std::move(elements),
                      std::move(detail)};
}

template <class Build>
Outcome from_scan(Ctx&, const ScanResult& r, Build&& build) {
  Outcome o;
  o.instances = r.checked;
  o.sampled = r.sampled;
  if (r.violation) o.witness = build(*r.violation);
  return o;
}

bool passes(const std::optional<FuzzyWitness>& w) { return !w.has_value(); }

// ----------------------------------------------------------------------
// checkers
// ----------------------------------------------------------------------

Outcome check_P1(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]), h = c.at(ix[2]);
    return product(product(f, g, c.t), h, c.t) !=
           product(product(h, g, c.t), f, c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]), h = c.at(ix[2]);
    return make_witness(
        c, {f, g, h}, {},
        "(f o g) o h = " +
            format_fuzzy_literal(product(product(f, g, c.t), h, c.t)) +
            " but (h o g) o f = " +
            format_fuzzy_literal(product(product(h, g, c.t), f, c.t)));
  });
}

Outcome check_C1(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m, m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]), h = c.at(ix[2]),
               k = c.at(ix[3]);
    return product(product(f, g, c.t), product(h, k, c.t), c.t) !=
           product(product(f, h, c.t), product(g, k, c.t), c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), c.at(ix[1]), c.at(ix[2]), c.at(ix[3])},
                        {}, "(f o g) o (h o k) != (f o h) o (g o k)");
  });
}

Outcome check_T1a(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]), h = c.at(ix[2]);
    return product(f, product(g, h, c.t), c.t) !=
           product(g, product(f, h, c.t), c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), c.at(ix[1]), c.at(ix[2])}, {},
                        "f o (g o h) != g o (f o h)");
  });
}

Outcome check_T1b(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m, m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]), h = c.at(ix[2]),
               k = c.at(ix[3]);
    return product(product(f, g, c.t), product(h, k, c.t), c.t) !=
           product(product(k, h, c.t), product(g, f, c.t), c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), c.at(ix[1]), c.at(ix[2]), c.at(ix[3])},
                        {}, "(f o g) o (h o k) != (k o h) o (g o f)");
  });
}

Outcome check_P2_fwd(Ctx& c) {
  if (!is_commutative(c.t) || !is_associative(c.t)) return excluded_outcome();
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]), h = c.at(ix[2]);
    return product(product(f, g, c.t), h, c.t) !=
           product(f, product(h, g, c.t), c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), c.at(ix[1]), c.at(ix[2])}, {},
                        "(f o g) o h != f o (h o g) on a commutative semigroup");
  });
}

Outcome check_P2_rev(Ctx& c) {
  const std::uint64_t m = c.space();
  // Gate: every chain-valued subset is a product of two. Both the gate and
  // the antecedent scan must be exhaustive for the conclusion to be sound.
  if (m > 2048 || m * m * m > c.budget) {
    Outcome o = excluded_outcome();
    o.note = "quantifier space exceeds budget; converse undecided";
    return o;
  }
  std::vector<char> is_product(m, 0);
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < m; ++j)
      is_product[index_of_subset(product(c.at(i), c.at(j), c.t))] = 1;
  if (std::find(is_product.begin(), is_product.end(), 0) != is_product.end())
    return excluded_outcome();  // hypothesis F(S) = F(S)^2 fails

  auto identity_violation = par::min_satisfying(
      m * m * m,
      [&](std::uint64_t flat) {
        const auto f = c.at(flat / (m * m)), g = c.at(flat / m % m),
                   h = c.at(flat % m);
        return product(product(f, g, c.t), h, c.t) !=
               product(f, product(h, g, c.t), c.t);
      },
      c.jobs);
  Outcome o;
  o.instances = 1;
  if (identity_violation) return o;  // antecedent fails: vacuously fine
  if (!is_commutative(c.t) || !is_associative(c.t))
    o.witness = make_witness(
        c, {}, {},
        "every subset factors and the permuted identity holds for all "
        "triples, yet the table is not a commutative semigroup");
  return o;
}

Outcome check_L1(Ctx& c, int variant) {
  const std::uint64_t m = c.space();
  const FuzzySubset s = c.top();
  auto mismatch = [&](const FuzzySubset& f) {
    switch (variant) {
      case 0:
        return passes(is_fuzzy_subgroupoid(f, c.t)) !=
               subset_of(product(f, f, c.t), f);
      case 1:
        return passes(is_fuzzy_left_ideal(f, c.t)) !=
               subset_of(product(s, f, c.t), f);
      case 2:
        return passes(is_fuzzy_right_ideal(f, c.t)) !=
               subset_of(product(f, s, c.t), f);
      default:
        return passes(is_fuzzy_ideal(f, c.t)) !=
               (subset_of(product(s, f, c.t), f) &&
                subset_of(product(f, s, c.t), f));
    }
  };
  auto r = scan(c, std::array{m},
                [&](const Tuple& ix) { return mismatch(c.at(ix[0])); });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0])}, {},
                        "pointwise predicate and product inclusion disagree");
  });
}

Outcome check_L2(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]);
    const auto fg = fuzzy_intersection(f, g);
    if (passes(is_fuzzy_subgroupoid(f, c.t)) &&
        passes(is_fuzzy_subgroupoid(g, c.t)) &&
        !passes(is_fuzzy_subgroupoid(fg, c.t)))
      return true;
    if (passes(is_fuzzy_left_ideal(f, c.t)) &&
        passes(is_fuzzy_left_ideal(g, c.t)) &&
        !passes(is_fuzzy_left_ideal(fg, c.t)))
      return true;
    if (passes(is_fuzzy_right_ideal(f, c.t)) &&
        passes(is_fuzzy_right_ideal(g, c.t)) &&
        !passes(is_fuzzy_right_ideal(fg, c.t)))
      return true;
    return passes(is_fuzzy_ideal(f, c.t)) && passes(is_fuzzy_ideal(g, c.t)) &&
           !passes(is_fuzzy_ideal(fg, c.t));
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), c.at(ix[1])}, {},
                        "intersection escapes the common kind");
  });
}

Outcome check_L3(Ctx& c) {
  Outcome o;
  o.instances = 1;
  const FuzzySubset s = c.top();
  const FuzzySubset ss = product(s, s, c.t);
  if (ss != s)
    o.witness =
        make_witness(c, {ss}, {}, "S o S = " + format_fuzzy_literal(ss));
  return o;
}

Outcome check_L4(Ctx& c) {
  Outcome o;
  const FuzzySubset s = c.top();
  for (const auto& f : c.left_family()) {
    ++o.instances;
    if (product(s, f, c.t) != f) {
      o.witness = make_witness(c, {f, product(s, f, c.t)}, {}, "S o f != f");
      return o;
    }
  }
  return o;
}

Outcome check_P3(Ctx& c) {
  const auto& fam = c.left_family();
  const std::uint64_t fm = fam.size(), m = c.space();
  auto r = scan(c, std::array{fm, fm, m, m}, [&](const Tuple& ix) {
    const auto& f = fam[ix[0]];
    const auto& k0 = fam[ix[1]];
    const auto g = c.at(ix[2]), h = c.at(ix[3]);
    return product(f, g, c.t) == product(h, k0, c.t) &&
           product(g, f, c.t) != product(k0, h, c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {fam[ix[0]], fam[ix[1]], c.at(ix[2]), c.at(ix[3])},
                        {}, "f o g = h o k but g o f != k o h");
  });
}

Outcome check_C2(Ctx& c) {
  const std::uint64_t m = c.space();
  if (m > 2048 || m * m * m > c.budget) {
    Outcome o = excluded_outcome();
    o.note = "quantifier space exceeds budget; equivalence undecided";
    return o;
  }
  auto first_violation = [&](bool second_form) {
    return par::min_satisfying(
        m * m * m,
        [&](std::uint64_t flat) {
          const auto f = c.at(flat / (m * m)), g = c.at(flat / m % m),
                     h = c.at(flat % m);
          const auto lhs = product(product(f, g, c.t), h, c.t);
          const auto rhs =
              second_form
                  ? product(g, product(h, f, c.t), c.t)
                  : product(g, product(f, h, c.t), c.t);
          return lhs != rhs;
        },
        c.jobs);
  };
  const auto via_first = first_violation(false);
  const auto via_second = first_violation(true);
  Outcome o;
  o.instances = 1;
  if (via_first.has_value() != via_second.has_value()) {
    const std::uint64_t flat = via_first ? *via_first : *via_second;
    o.witness = make_witness(
        c, {c.at(flat / (m * m)), c.at(flat / m % m), c.at(flat % m)}, {},
        std::string("condition ") + (via_first ? "(ii)" : "(i)") +
            " holds for all triples while the displayed triple violates " +
            (via_first ? "(i)" : "(ii)"));
  }
  return o;
}

Outcome check_T2(Ctx& c) {
  const std::uint64_t m = c.space();
  if (m > c.budget) {
    Outcome o = excluded_outcome();
    o.note = "subset space exceeds budget";
    return o;
  }
  Outcome o;
  o.note =
      "monoid structure of Q only; the proof's closing remark about a right "
      "identity in the carrier has no carrier-level statement to execute";
  for (std::uint64_t hi = 0; hi < m; ++hi) {
    const FuzzySubset h = c.at(hi);
    if (product(h, h, c.t) != h) continue;
    ++o.instances;
    std::vector<FuzzySubset> q;
    for (std::uint64_t fi = 0; fi < m; ++fi) {
      FuzzySubset f = c.at(fi);
      if (product(f, h, c.t) == f) q.push_back(std::move(f));
    }
    for (const auto& f : q) {
      if (product(h, f, c.t) != f || product(f, h, c.t) != f) {
        o.witness = make_witness(c, {h, f}, {}, "h is not an identity on Q");
        return o;
      }
      for (const auto& g : q) {
        const FuzzySubset fg = product(f, g, c.t);
        if (product(fg, h, c.t) != fg) {
          o.witness = make_witness(c, {h, f, g}, {}, "Q is not closed under o");
          return o;
        }
        if (fg != product(g, f, c.t)) {
          o.witness = make_witness(c, {h, f, g}, {}, "Q is not commutative");
          return o;
        }
      }
    }
    const std::uint64_t qn = q.size();
    auto r = scan(c, std::array{qn, qn, qn}, [&](const Tuple& ix) {
      return product(product(q[ix[0]], q[ix[1]], c.t), q[ix[2]], c.t) !=
             product(q[ix[0]], product(q[ix[1]], q[ix[2]], c.t), c.t);
    });
    o.sampled |= r.sampled;
    if (r.violation) {
      const Tuple& ix = *r.violation;
      o.witness = make_witness(c, {h, q[ix[0]], q[ix[1]], q[ix[2]]}, {},
                               "Q is not associative");
      return o;
    }
  }
  return o;
}

Outcome check_T3(Ctx& c) {
  Outcome o;
  for (Elem a = 0; a < c.n(); ++a)
    for (Grade lam = 1; lam <= c.chain.resolution; ++lam) {
      ++o.instances;
      const FuzzyPoint p(a, lam);
      const FuzzySubset direct = generated_left_ideal(p, c.t, c.chain);
      const FuzzySubset closed = generated_left_ideal_oracle(p, c.t, c.chain);
      if (direct != closed) {
        o.witness = make_witness(
            c, {direct, closed}, {a},
            "closed form and closure oracle disagree at anchor " +
                std::to_string(static_cast<unsigned>(a)) + ", level " +
                std::to_string(static_cast<unsigned>(lam)));
        return o;
      }
    }
  return o;
}

Outcome check_P4(Ctx& c) {
  Outcome o;
  for (const auto& f : c.left_family()) {
    if (!is_fuzzy_idempotent(f, c.t)) continue;
    ++o.instances;
    if (!passes(is_fuzzy_ideal(f, c.t))) {
      o.witness =
          make_witness(c, {f}, {}, "idempotent fuzzy left ideal is not two-sided");
      return o;
    }
  }
  return o;
}

Outcome check_T4i(Ctx& c) {
  const std::uint64_t m = c.space();
  const FuzzySubset s = c.top();
  auto r = scan(c, std::array{m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]);
    if (!is_fuzzy_idempotent(f, c.t)) return false;
    const auto sf = product(s, f, c.t);
    return !is_fuzzy_idempotent(sf, c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0])}, {}, "S o f is not idempotent");
  });
}

Outcome check_T4ii(Ctx& c) {
  const auto& fam = c.left_family();
  const std::uint64_t m = c.space(), fm = fam.size();
  auto r = scan(c, std::array{m, fm}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]);
    if (!is_fuzzy_idempotent(f, c.t)) return false;
    return product(f, fam[ix[1]], c.t) != product(fam[ix[1]], f, c.t);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), fam[ix[1]]}, {},
                        "idempotent f does not commute with left ideal g");
  });
}

CheckWitness witness_from_violation(const Ctx& c, const LawViolation& v,
                                    std::string_view where) {
  std::vector<FuzzySubset> subs = v.members;
  if (v.product) subs.push_back(*v.product);
  return CheckWitness{c.t, std::move(subs), {},
                      std::string(where) + ": " + v.law + " violated"};
}

Outcome check_T5(Ctx& c) {
  Outcome o;
  o.instances = 1;
  MonoidResult res = idempotent_left_ideal_monoid(c.t, c.chain);
  if (auto* violation = std::get_if<LawViolation>(&res)) {
    o.witness =
        witness_from_violation(c, *violation, "idempotent left-ideal monoid");
    return o;
  }
  const auto& table = std::get<MonoidTable>(res);
  if (!table.identity ||
      table.elements[*table.identity] != c.top())
    o.witness = make_witness(c, {}, {}, "top is not the monoid identity");
  return o;
}

Outcome check_L5(Ctx& c) {
  Outcome o;
  for (const auto& f : c.right_family()) {
    ++o.instances;
    if (!passes(is_fuzzy_ideal(f, c.t))) {
      o.witness = make_witness(c, {f}, {}, "fuzzy right ideal is not two-sided");
      return o;
    }
  }
  return o;
}

Outcome check_L6(Ctx& c) {
  Outcome o;
  const FuzzySubset s = c.top();
  for (const auto& f : c.left_family()) {
    ++o.instances;
    const FuzzySubset u1 = fuzzy_union(f, product(f, s, c.t));
    const FuzzySubset u2 = fuzzy_union(f, product(f, f, c.t));
    if (!passes(is_fuzzy_ideal(u1, c.t))) {
      o.witness = make_witness(c, {f, u1}, {}, "f u (f o S) is not two-sided");
      return o;
    }
    if (!passes(is_fuzzy_ideal(u2, c.t))) {
      o.witness = make_witness(c, {f, u2}, {}, "f u (f o f) is not two-sided");
      return o;
    }
  }
  return o;
}

Outcome check_R1(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]);
    if (!is_fuzzy_idempotent(f, c.t)) return false;
    return passes(is_fuzzy_left_ideal(f, c.t)) !=
           passes(is_fuzzy_right_ideal(f, c.t));
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0])}, {},
                        "idempotent subset is one-sided only");
  });
}

Outcome check_R2(Ctx& c) {
  Outcome o;
  const FuzzySubset s = c.top();
  for (const auto& f : c.right_family()) {
    ++o.instances;
    const FuzzySubset u1 = fuzzy_union(f, product(s, f, c.t));
    const FuzzySubset u2 = fuzzy_union(f, product(f, f, c.t));
    if (!passes(is_fuzzy_ideal(u1, c.t))) {
      o.witness = make_witness(c, {f, u1}, {}, "f u (S o f) is not two-sided");
      return o;
    }
    if (!passes(is_fuzzy_ideal(u2, c.t))) {
      o.witness = make_witness(c, {f, u2}, {}, "f u (f o f) is not two-sided");
      return o;
    }
  }
  return o;
}

Outcome check_L7(Ctx& c) {
  const std::uint64_t m = c.space();
  const FuzzySubset s = c.top();
  auto r = scan(c, std::array{m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]);
    if (!passes(is_fuzzy_subgroupoid(f, c.t))) return false;
    return passes(is_fuzzy_bi_ideal(f, c.t)) !=
           subset_of(product(product(f, s, c.t), f, c.t), f);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0])}, {},
                        "bi-ideal predicate and (f o S) o f <= f disagree");
  });
}

Outcome check_L8(Ctx& c) {
  const auto& fam = c.right_family();
  const std::uint64_t fm = fam.size();
  auto r = scan(c, std::array{fm, fm}, [&](const Tuple& ix) {
    return !passes(is_fuzzy_bi_ideal(product(fam[ix[0]], fam[ix[1]], c.t), c.t));
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {fam[ix[0]], fam[ix[1]]}, {},
                        "product of right ideals is not a bi-ideal");
  });
}

Outcome check_L9(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m, m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]), g = c.at(ix[1]);
    return passes(is_fuzzy_bi_ideal(f, c.t)) &&
           passes(is_fuzzy_bi_ideal(g, c.t)) &&
           !passes(is_fuzzy_bi_ideal(fuzzy_intersection(f, g), c.t));
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0]), c.at(ix[1])}, {},
                        "intersection of bi-ideals is not a bi-ideal");
  });
}

Outcome check_L10(Ctx& c) {
  const std::uint64_t m = c.space();
  const FuzzySubset s = c.top();
  auto r = scan(c, std::array{m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]);
    if (!passes(is_fuzzy_subgroupoid(f, c.t))) return false;
    return passes(is_fuzzy_interior_ideal(f, c.t)) !=
           subset_of(product(product(s, f, c.t), s, c.t), f);
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0])}, {},
                        "interior predicate and (S o f) o S <= f disagree");
  });
}

Outcome check_P5(Ctx& c, bool interior) {
  Outcome o;
  for (const auto& f : c.left_family()) {
    if (!is_fuzzy_idempotent(f, c.t)) continue;
    ++o.instances;
    const bool ok = interior ? passes(is_fuzzy_interior_ideal(f, c.t))
                             : passes(is_fuzzy_bi_ideal(f, c.t));
    if (!ok) {
      o.witness = make_witness(c, {f}, {},
                               interior
                                   ? "idempotent left ideal is not interior"
                                   : "idempotent left ideal is not a bi-ideal");
      return o;
    }
  }
  return o;
}

Outcome check_L11(Ctx& c) {
  const std::uint64_t m = c.space();
  auto r = scan(c, std::array{m}, [&](const Tuple& ix) {
    const auto f = c.at(ix[0]);
    return passes(is_fuzzy_right_ideal(f, c.t)) !=
           passes(is_fuzzy_interior_ideal(f, c.t));
  });
  return from_scan(c, r, [&](const Tuple& ix) {
    return make_witness(c, {c.at(ix[0])}, {},
                        "right-ideal and interior-ideal predicates disagree");
  });
}

Outcome check_L12(Ctx& c) {
  Outcome o;
  for (const auto& f : c.left_family()) {
    if (!passes(is_fuzzy_interior_ideal(f, c.t))) continue;
    ++o.instances;
    if (!passes(is_fuzzy_bi_ideal(f, c.t))) {
      o.witness = make_witness(c, {f}, {},
                               "interior fuzzy left ideal is not a bi-ideal");
      return o;
    }
  }
  return o;
}

Outcome check_P6(Ctx& c) {
  Outcome o;
  auto run = [&](const std::vector<FuzzySubset>& fam,
                 std::string_view side) -> bool {
    for (const auto& f : fam) {
      ++o.instances;
      const FuzzySubset ff = product(f, f, c.t);
      if (!passes(is_fuzzy_ideal(ff, c.t))) {
        o.witness = make_witness(
            c, {f, ff}, {},
            "f o f is not two-sided for a fuzzy " + std::string(side) +
                " ideal");
        return false;
      }
    }
    return true;
  };
  if (!run(c.left_family(), "left")) return o;
  run(c.right_family(), "right");
  return o;
}

Outcome check_C3(Ctx& c) {
  Outcome o;
  for (const auto& f : c.left_family()) {
    ++o.instances;
    const FuzzySubset ff = product(f, f, c.t);
    if (!passes(is_fuzzy_bi_ideal(ff, c.t)) ||
        !passes(is_fuzzy_interior_ideal(ff, c.t))) {
      o.witness = make_witness(c, {f, ff}, {},
                               "f o f is not a bi-ideal and interior ideal");
      return o;
    }
  }
  return o;
}

Outcome check_T6(Ctx& c) {
  Outcome o;
  for (const auto& f : c.two_family()) {
    ++o.instances;
    if (!passes(is_fuzzy_bi_ideal(f, c.t)) ||
        !passes(is_fuzzy_interior_ideal(f, c.t))) {
      o.witness = make_witness(
          c, {f}, {}, "fuzzy ideal is not a bi-ideal and interior ideal");
      return o;
    }
  }
  return o;
}

Outcome check_T7(Ctx& c) {
  Outcome o;
  o.instances = 1;
  const auto family =
      enumerate_fuzzy_ideals(c.t, c.chain, FuzzyIdealKind::two_sided);
  const bool fully_prime = is_fully_fuzzy_prime(c.t, c.chain);
  bool all_idempotent = true;
  for (const auto& f : family.members)
    if (!is_fuzzy_idempotent(f, c.t)) {
      all_idempotent = false;
      break;
    }
  const bool chain_ordered = !totally_ordered(family).has_value();
  if (fully_prime != (all_idempotent && chain_ordered)) {
    std::ostringstream detail;
    detail << "fully_fuzzy_prime=" << (fully_prime ? "true" : "false")
           << " all_ideals_idempotent=" << (all_idempotent ? "true" : "false")
           << " totally_ordered=" << (chain_ordered ? "true" : "false");
    o.witness = make_witness(c, {}, {}, detail.str());
  }
  return o;
}

Outcome check_P7(Ctx& c) {
  if (!is_fully_fuzzy_quasi_prime(c.t, c.chain)) return excluded_outcome();
  Outcome o;
  for (const auto& f : c.left_family()) {
    ++o.instances;
    if (!is_fuzzy_idempotent(f, c.t)) {
      o.witness = make_witness(
          c, {f}, {},
          "fuzzy left ideal is not idempotent on a fully quasi-prime table");
      return o;
    }
  }
  return o;
}

Outcome check_T8(Ctx& c) {
  if (!is_fully_fuzzy_quasi_prime(c.t, c.chain)) return excluded_outcome();
  Outcome o;
  const auto& fam = c.left_family();
  for (const auto& f : fam)
    for (const auto& g : fam) {
      ++o.instances;
      if (product(f, g, c.t) != fuzzy_intersection(f, g)) {
        o.witness = make_witness(c, {f, g}, {}, "f o g != f n g");
        return o;
      }
    }
  return o;
}

Outcome check_C4(Ctx& c) {
  if (!is_fully_fuzzy_quasi_prime(c.t, c.chain)) return excluded_outcome();
  Outcome o;
  o.instances = 1;
  MonoidResult res = quasi_prime_semilattice(c.t, c.chain);
  if (auto* violation = std::get_if<LawViolation>(&res))
    o.witness =
        witness_from_violation(c, *violation, "quasi-prime semilattice");
  return o;
}

Outcome check_T9(Ctx& c) {
  Outcome o;
  o.instances = 1;
  const Theorem9Profile p = theorem9_profile(c.t, c.chain);
  if (!p.all_equal()) {
    std::ostringstream detail;
    detail << "crisp_idempotent=" << p.crisp_left_ideals_idempotent
           << " fuzzy_idempotent=" << p.fuzzy_left_ideals_idempotent
           << " product_is_intersection=" << p.products_are_intersections
           << " semiprime=" << p.fuzzy_left_ideals_semiprime;
    o.witness = make_witness(c, {}, {}, detail.str());
  }
  return o;
}

Outcome dispatch(Statement s, Ctx& c) {
  if (info_of(s).needs_left_identity && !has_left_identity(c.t))
    return excluded_outcome();
  switch (s) {
    case Statement::P1: return check_P1(c);
    case Statement::C1: return check_C1(c);
    case Statement::T1a: return check_T1a(c);
    case Statement::T1b: return check_T1b(c);
    case Statement::P2_fwd: return check_P2_fwd(c);
    case Statement::P2_rev: return check_P2_rev(c);
    case Statement::L1i: return check_L1(c, 0);
    case Statement::L1ii: return check_L1(c, 1);
    case Statement::L1iii: return check_L1(c, 2);
    case Statement::L1iv: return check_L1(c, 3);
    case Statement::L2: return check_L2(c);
    case Statement::L3: return check_L3(c);
    case Statement::L4: return check_L4(c);
    case Statement::P3: return check_P3(c);
    case Statement::C2: return check_C2(c);
    case Statement::T2: return check_T2(c);
    case Statement::T3: return check_T3(c);
    case Statement::P4: return check_P4(c);
    case Statement::T4i: return check_T4i(c);
    case Statement::T4ii: return check_T4ii(c);
    case Statement::T5: return check_T5(c);
    case Statement::L5: return check_L5(c);
    case Statement::L6: return check_L6(c);
    case Statement::R1: return check_R1(c);
    case Statement::R2: return check_R2(c);
    case Statement::L7: return check_L7(c);
    case Statement::L8: return check_L8(c);
    case Statement::L9: return check_L9(c);
    case Statement::L10: return check_L10(c);
    case Statement::P5i: return check_P5(c, false);
    case Statement::P5ii: return check_P5(c, true);
    case Statement::L11: return check_L11(c);
    case Statement::L12: return check_L12(c);
    case Statement::P6: return check_P6(c);
    case Statement::C3: return check_C3(c);
    case Statement::T6: return check_T6(c);
    case Statement::T7: return check_T7(c);
    case Statement::P7: return check_P7(c);
    case Statement::T8: return check_T8(c);
    case Statement::C4: return check_C4(c);
    case Statement::T9: return check_T9(c);
  }
  throw UsageError("unknown statement");
}

}  // namespace

std::string_view to_string(Statement s) { return info_of(s).name; }
std::string_view claim_of(Statement s) { return info_of(s).claim; }

std::optional<Statement> statement_from_string(std::string_view name) {
  for (const Info& info : kRegistry)
    if (info.name == name) return info.id;
  return std::nullopt;
}

std::span<const Statement> all_statements() {
  static const std::array<Statement, kStatementCount> ids = [] {
    std::array<Statement, kStatementCount> out{};
    for (std::size_t i = 0; i < kStatementCount; ++i) out[i] = kRegistry[i].id;
    return out;
  }();
  return ids;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::falsified: return "falsified";
    case Verdict::skipped_no_population: return "skipped-no-population";
  }
  return "?";
}

CheckReport run_check(Statement s, std::span<const CayleyTable> population,
                      GradeChain chain, const SuiteOptions& opts) {
  CheckReport rep;
  rep.statement = s;
  rep.chain_resolution = chain.resolution;
  rep.note = "";

  std::vector<Outcome> outcomes(population.size());
  const int jobs = par::effective_jobs(opts.jobs);
  const int inner_jobs = population.size() <= 1 ? jobs : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) \
    if (population.size() > 1)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(population.size());
       ++i) {
    Ctx ctx{population[i],
            chain,
            opts.exhaustive_budget,
            opts.samples,
            par::mix_seed(opts.seed, static_cast<std::uint64_t>(s),
                          static_cast<std::uint64_t>(i)),
            inner_jobs};
    outcomes[i] = dispatch(s, ctx);
  }

  bool sampled_any = false;
  for (const Outcome& o : outcomes) {
    if (o.excluded) {
      ++rep.hypothesis_excluded;
      continue;
    }
    ++rep.population;
    rep.structures_tested += o.instances;
    sampled_any |= o.sampled;
    if (o.witness && !rep.witness) rep.witness = o.witness;
    if (!o.note.empty() && rep.note.empty()) rep.note = o.note;
  }
  rep.exhaustive = !sampled_any;
  if (sampled_any) rep.seed = opts.seed;
  if (rep.witness)
    rep.verdict = Verdict::falsified;
  else if (rep.population > 0)
    rep.verdict = Verdict::verified;
  else
    rep.verdict = Verdict::skipped_no_population;
  return rep;
}

std::vector<CheckReport> run_suite(const SuiteOptions& opts) {
  std::vector<CayleyTable> population;
  for (unsigned order : opts.orders) {
    EnumSpec spec{.order = order,
                  .require_left_identity = false,
                  .up_to_isomorphism = opts.up_to_isomorphism,
                  .limit = std::nullopt};
    EnumResult r = enumerate_ag(spec, opts.jobs);
    for (auto& t : r.tables) population.push_back(std::move(t));
  }
  std::vector<Statement> ids(all_statements().begin(), all_statements().end());
  if (opts.ids) ids = *opts.ids;

  std::vector<CheckReport> reports;
  for (Statement s : ids)
    for (unsigned k : opts.chains)
      reports.push_back(run_check(s, population, GradeChain(k), opts));
  return reports;
}

std::vector<CheckReport> negative_control() {
  const std::vector<CayleyTable> population{CayleyTable::left_zero(2)};
  SuiteOptions opts;
  return {run_check(Statement::P1, population, GradeChain(1), opts)};
}

namespace {

nlohmann::ordered_json witness_json(const CheckWitness& w) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (unsigned a = 0; a < w.table.order(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (unsigned b = 0; b < w.table.order(); ++b)
      row.push_back(static_cast<unsigned>(
          w.table(static_cast<Elem>(a), static_cast<Elem>(b))));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  auto subs = nlohmann::ordered_json::array();
  for (const auto& f : w.subsets) subs.push_back(format_fuzzy_literal(f));
  j["subsets"] = std::move(subs);
  auto elems = nlohmann::ordered_json::array();
  for (Elem e : w.elements) elems.push_back(static_cast<unsigned>(e));
  j["elements"] = std::move(elems);
  j["detail"] = w.detail;
  return j;
}

nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["statement"] = std::string(to_string(r.statement));
  j["claim"] = std::string(claim_of(r.statement));
  j["chain"] = r.chain_resolution;
  j["verdict"] = std::string(to_string(r.verdict));
  j["population"] = r.population;
  j["hypothesis_excluded"] = r.hypothesis_excluded;
  j["instances"] = r.structures_tested;
  j["exhaustive"] = r.exhaustive;
  if (r.seed) j["seed"] = *r.seed;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string suite_report_json(std::span<const CheckReport> reports,
                              const SuiteOptions& opts) {
  nlohmann::ordered_json doc;
  doc["tool"] = "agtool";
  doc["version"] = "0.1.0";
  nlohmann::ordered_json options;
  options["orders"] = opts.orders;
  options["chains"] = opts.chains;
  if (opts.ids) {
    auto ids = nlohmann::ordered_json::array();
    for (Statement s : *opts.ids) ids.push_back(std::string(to_string(s)));
    options["ids"] = std::move(ids);
  }
  options["seed"] = opts.seed;
  options["budget"] = opts.exhaustive_budget;
  options["samples"] = opts.samples;
  options["up_to_isomorphism"] = opts.up_to_isomorphism;
  doc["options"] = std::move(options);

  auto arr = nlohmann::ordered_json::array();
  std::uint64_t verified = 0, falsified = 0, skipped = 0;
  for (const CheckReport& r : reports) {
    arr.push_back(report_json(r));
    switch (r.verdict) {
      case Verdict::verified: ++verified; break;
      case Verdict::falsified: ++falsified; break;
      case Verdict::skipped_no_population: ++skipped; break;
    }
  }
  doc["reports"] = std::move(arr);
  doc["summary"] = {{"verified", verified},
                    {"falsified", falsified},
                    {"skipped", skipped}};
  return doc.dump(2) + "\n";
}

std::string render_summary(std::span<const CheckReport> reports) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "statement" << std::setw(4) << "k"
     << std::setw(23) << "verdict" << std::right << std::setw(11)
     << "population" << std::setw(10) << "excluded" << std::setw(12)
     << "instances" << "  exhaustive\n";
  std::uint64_t verified = 0, falsified = 0, skipped = 0;
  for (const CheckReport& r : reports) {
    os << std::left << std::setw(10) << to_string(r.statement) << std::setw(4)
       << r.chain_resolution << std::setw(23) << to_string(r.verdict)
       << std::right << std::setw(11) << r.population << std::setw(10)
       << r.hypothesis_excluded << std::setw(12) << r.structures_tested
       << "  " << (r.exhaustive ? "yes" : "no") << '\n';
    switch (r.verdict) {
      case Verdict::verified: ++verified; break;
      case Verdict::falsified: ++falsified; break;
      case Verdict::skipped_no_population: ++skipped; break;
    }
  }
  os << "summary: " << verified << " verified, " << falsified
     << " falsified, " << skipped << " skipped\n";
  return os.str();
}

}  // namespace ag::harness
