#include "ag/ideals.hpp"

#include <algorithm>
#include <map>

namespace ag {

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two-sided";
    case IdealKind::interior: return "interior";
    case IdealKind::bi: return "bi";
  }
  return "?";
}

std::optional<IdealKind> ideal_kind_from_string(std::string_view s) {
  if (s == "left") return IdealKind::left;
  if (s == "right") return IdealKind::right;
  if (s == "two-sided") return IdealKind::two_sided;
  if (s == "interior") return IdealKind::interior;
  if (s == "bi") return IdealKind::bi;
  return std::nullopt;
}

std::string_view to_string(FuzzyIdealKind kind) {
  switch (kind) {
    case FuzzyIdealKind::left: return "left";
    case FuzzyIdealKind::right: return "right";
    case FuzzyIdealKind::two_sided: return "two-sided";
  }
  return "?";
}

bool is_crisp_ideal(const CayleyTable& t, CrispSubset a, IdealKind kind) {
  if (a.order() != t.order()) throw UsageError("carrier mismatch");
  if (a.empty()) return false;  // families contain non-empty subsets only
  const CrispSubset s = CrispSubset::full_set(t.order());
  switch (kind) {
    case IdealKind::left:
      return subset_of(set_product(t, s, a), a);
    case IdealKind::right:
      return subset_of(set_product(t, a, s), a);
    case IdealKind::two_sided:
      return subset_of(set_product(t, s, a), a) &&
             subset_of(set_product(t, a, s), a);
    case IdealKind::interior:
      return subset_of(set_product(t, set_product(t, s, a), s), a);
    case IdealKind::bi:
      return subset_of(set_product(t, a, a), a) &&
             subset_of(set_product(t, set_product(t, a, s), a), a);
  }
  return false;
}

CrispIdealFamily enumerate_crisp_ideals(const CayleyTable& t, IdealKind kind) {
  const unsigned n = t.order();
  CrispIdealFamily family{kind, {}};
  const std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    CrispSubset a(n, bits);
    if (is_crisp_ideal(t, a, kind)) family.members.push_back(a);
  }
  return family;
}

namespace {

std::optional<FuzzyWitness> fuzzy_kind_check(const FuzzySubset& f,
                                             const CayleyTable& t,
                                             FuzzyIdealKind kind) {
  switch (kind) {
    case FuzzyIdealKind::left: return is_fuzzy_left_ideal(f, t);
    case FuzzyIdealKind::right: return is_fuzzy_right_ideal(f, t);
    case FuzzyIdealKind::two_sided: return is_fuzzy_ideal(f, t);
  }
  return std::nullopt;
}

IdealKind crisp_kind_of(FuzzyIdealKind kind) {
  switch (kind) {
    case FuzzyIdealKind::left: return IdealKind::left;
    case FuzzyIdealKind::right: return IdealKind::right;
    case FuzzyIdealKind::two_sided: return IdealKind::two_sided;
  }
  return IdealKind::left;
}

}  // namespace

FuzzyIdealFamily enumerate_fuzzy_ideals_filter(const CayleyTable& t,
                                               GradeChain chain,
                                               FuzzyIdealKind kind,
                                               std::uint64_t budget) {
  const std::uint64_t space = subset_space_size(t.order(), chain);
  if (space > budget)
    throw CapabilityError(
        "direct filter over " + std::to_string(space) +
        " subsets exceeds budget " + std::to_string(budget) +
        "; use the level-chain construction");
  FuzzyIdealFamily family{kind, chain, {}};
  for (std::uint64_t i = 0; i < space; ++i) {
    FuzzySubset f = subset_at_index(i, t.order(), chain);
    if (!fuzzy_kind_check(f, t, kind)) family.members.push_back(std::move(f));
  }
  return family;
}

FuzzyIdealFamily enumerate_fuzzy_ideals(const CayleyTable& t, GradeChain chain,
                                        FuzzyIdealKind kind,
                                        const FamilyOptions& opts) {
  if (!opts.level_chain)
    return enumerate_fuzzy_ideals_filter(t, chain, kind,
                                         opts.exhaustive_budget);
  // A chain-valued subset is a fuzzy ideal of the kind exactly when every
  // non-empty level set is a crisp ideal of the kind. Build all descending
  // chains L_1 >= L_2 >= ... >= L_k over crisp ideals (empty allowed) and
  // read each back as the grade vector f(x) = max { j : x in L_j }.
  const unsigned n = t.order();
  const unsigned k = chain.resolution;
  auto crisp = enumerate_crisp_ideals(t, crisp_kind_of(kind));
  std::vector<std::uint32_t> masks{0};
  for (const auto& m : crisp.members) masks.push_back(m.bits());

  std::vector<std::vector<Grade>> found;
  std::vector<std::uint32_t> chosen(k, 0);
  auto emit = [&] {
    std::vector<Grade> levels(n, 0);
    for (unsigned j = 0; j < k; ++j)
      for (unsigned x = 0; x < n; ++x)
        if ((chosen[j] >> x) & 1u) levels[x] = static_cast<Grade>(j + 1);
    found.push_back(std::move(levels));
  };
  auto rec = [&](auto&& self, unsigned depth) -> void {
    if (depth == k) {
      emit();
      return;
    }
    for (std::uint32_t mask : masks) {
      if (depth > 0 && (mask & ~chosen[depth - 1]) != 0) continue;
      chosen[depth] = mask;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  FuzzyIdealFamily family{kind, chain, {}};
  family.members.reserve(found.size());
  for (auto& levels : found)
    family.members.emplace_back(chain, std::move(levels));
  return family;
}

namespace {

// Quantified prime checks share this cached view of a family: every
// pairwise product is computed once.
class FamilyProducts {
 public:
  FamilyProducts(const CayleyTable& t, const FuzzyIdealFamily& family)
      : family_(family) {
    const std::size_t m = family.members.size();
    products_.reserve(m * m);
    for (const auto& g : family.members)
      for (const auto& h : family.members)
        products_.push_back(product(g, h, t));
  }

  const FuzzySubset& at(std::size_t i, std::size_t j) const {
    return products_[i * family_.members.size() + j];
  }
  const FuzzyIdealFamily& family() const { return family_; }

 private:
  const FuzzyIdealFamily& family_;
  std::vector<FuzzySubset> products_;
};

bool prime_in(const FuzzySubset& f, const FamilyProducts& cache) {
  const auto& members = cache.family().members;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (subset_of(cache.at(i, j), f) &&
          !(subset_of(members[i], f) || subset_of(members[j], f)))
        return false;
  return true;
}

bool semiprime_in(const FuzzySubset& f, const FamilyProducts& cache) {
  const auto& members = cache.family().members;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (subset_of(cache.at(i, i), f) && !subset_of(members[i], f))
      return false;
  return true;
}

}  // namespace

bool is_crisp_prime(const CayleyTable& t, CrispSubset p) {
  if (!is_crisp_ideal(t, p, IdealKind::two_sided))
    throw UsageError("is_crisp_prime: subset is not a two-sided ideal");
  const auto family = enumerate_crisp_ideals(t, IdealKind::two_sided);
  for (const auto& a : family.members)
    for (const auto& b : family.members)
      if (subset_of(set_product(t, a, b), p) &&
          !(subset_of(a, p) || subset_of(b, p)))
        return false;
  return true;
}

bool is_crisp_quasi_prime(const CayleyTable& t, CrispSubset p) {
  if (!is_crisp_ideal(t, p, IdealKind::left))
    throw UsageError("is_crisp_quasi_prime: subset is not a left ideal");
  const auto family = enumerate_crisp_ideals(t, IdealKind::left);
  for (const auto& a : family.members)
    for (const auto& b : family.members)
      if (subset_of(set_product(t, a, b), p) &&
          !(subset_of(a, p) || subset_of(b, p)))
        return false;
  return true;
}

bool is_fuzzy_prime(const FuzzySubset& f, const CayleyTable& t) {
  if (is_fuzzy_ideal(f, t))
    throw UsageError("is_fuzzy_prime: subset is not a fuzzy ideal");
  const auto family =
      enumerate_fuzzy_ideals(t, f.chain(), FuzzyIdealKind::two_sided);
  FamilyProducts cache(t, family);
  return prime_in(f, cache);
}

bool is_fuzzy_quasi_prime(const FuzzySubset& f, const CayleyTable& t) {
  if (is_fuzzy_left_ideal(f, t))
    throw UsageError("is_fuzzy_quasi_prime: subset is not a fuzzy left ideal");
  const auto family =
      enumerate_fuzzy_ideals(t, f.chain(), FuzzyIdealKind::left);
  FamilyProducts cache(t, family);
  return prime_in(f, cache);
}

bool is_fuzzy_semiprime(const FuzzySubset& f, const CayleyTable& t) {
  if (is_fuzzy_left_ideal(f, t))
    throw UsageError("is_fuzzy_semiprime: subset is not a fuzzy left ideal");
  const auto family =
      enumerate_fuzzy_ideals(t, f.chain(), FuzzyIdealKind::left);
  FamilyProducts cache(t, family);
  return semiprime_in(f, cache);
}

bool is_fully_fuzzy_prime(const CayleyTable& t, GradeChain chain) {
  const auto family =
      enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::two_sided);
  FamilyProducts cache(t, family);
  for (const auto& f : family.members)
    if (!prime_in(f, cache)) return false;
  return true;
}

bool is_fully_fuzzy_quasi_prime(const CayleyTable& t, GradeChain chain) {
  const auto family = enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::left);
  FamilyProducts cache(t, family);
  for (const auto& f : family.members)
    if (!prime_in(f, cache)) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> totally_ordered(
    const FuzzyIdealFamily& family) {
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!subset_of(m[i], m[j]) && !subset_of(m[j], m[i]))
        return std::make_pair(i, j);
  return std::nullopt;
}

namespace {

// Builds the operation table over `elements` and checks closure,
// commutativity and associativity. Returns the violation, if any.
std::optional<LawViolation> build_op(const CayleyTable& t,
                                     const std::vector<FuzzySubset>& elements,
                                     std::vector<std::size_t>& op) {
  const std::size_t m = elements.size();
  std::map<std::vector<Grade>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i)
    index.emplace(std::vector<Grade>(elements[i].levels().begin(),
                                     elements[i].levels().end()),
                  i);
  op.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      FuzzySubset p = product(elements[i], elements[j], t);
      auto it = index.find(
          std::vector<Grade>(p.levels().begin(), p.levels().end()));
      if (it == index.end())
        return LawViolation{"closure", {elements[i], elements[j]},
                            std::move(p)};
      op[i * m + j] = it->second;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (op[i * m + j] != op[j * m + i])
        return LawViolation{"commutativity", {elements[i], elements[j]},
                            std::nullopt};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        if (op[op[i * m + j] * m + l] != op[i * m + op[j * m + l]])
          return LawViolation{
              "associativity", {elements[i], elements[j], elements[l]},
              std::nullopt};
  return std::nullopt;
}

}  // namespace

MonoidResult idempotent_left_ideal_monoid(const CayleyTable& t,
                                          GradeChain chain) {
  if (!has_left_identity(t))
    throw UsageError("idempotent_left_ideal_monoid requires a left identity");
  const auto family = enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::left);
  MonoidTable table;
  for (const auto& f : family.members)
    if (is_fuzzy_idempotent(f, t)) table.elements.push_back(f);
  if (auto violation = build_op(t, table.elements, table.op))
    return *std::move(violation);
  const FuzzySubset unit = top(t.order(), chain);
  const std::size_t m = table.elements.size();
  std::optional<std::size_t> unit_index;
  for (std::size_t i = 0; i < m; ++i)
    if (table.elements[i] == unit) unit_index = i;
  if (!unit_index)
    return LawViolation{"identity-missing", {}, unit};
  for (std::size_t i = 0; i < m; ++i)
    if (table.at(*unit_index, i) != i || table.at(i, *unit_index) != i)
      return LawViolation{"identity", {unit, table.elements[i]}, std::nullopt};
  table.identity = unit_index;
  return table;
}

MonoidResult quasi_prime_semilattice(const CayleyTable& t, GradeChain chain) {
  if (!has_left_identity(t))
    throw UsageError("quasi_prime_semilattice requires a left identity");
  if (!is_fully_fuzzy_quasi_prime(t, chain))
    throw UsageError(
        "quasi_prime_semilattice requires a fully fuzzy quasi-prime table");
  const auto family = enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::left);
  FamilyProducts cache(t, family);

  MonoidTable table;
  for (std::size_t i = 0; i < family.members.size(); ++i)
    if (prime_in(family.members[i], cache))
      table.elements.push_back(family.members[i]);

  // f o g = f n g across the whole left-ideal family comes first: the
  // semilattice structure rides on it.
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (std::size_t j = 0; j < family.members.size(); ++j)
      if (cache.at(i, j) !=
          fuzzy_intersection(family.members[i], family.members[j]))
        return LawViolation{"product-equals-intersection",
                            {family.members[i], family.members[j]},
                            cache.at(i, j)};

  if (auto violation = build_op(t, table.elements, table.op))
    return *std::move(violation);
  const std::size_t m = table.elements.size();
  for (std::size_t i = 0; i < m; ++i)
    if (table.at(i, i) != i)
      return LawViolation{"idempotence", {table.elements[i]}, std::nullopt};
  const FuzzySubset unit = top(t.order(), chain);
  for (std::size_t i = 0; i < m; ++i)
    if (table.elements[i] == unit) table.identity = i;
  return table;
}

Theorem9Profile theorem9_profile(const CayleyTable& t, GradeChain chain) {
  if (!has_left_identity(t))
    throw UsageError("theorem9_profile requires a left identity");
  Theorem9Profile profile{};

  const auto crisp = enumerate_crisp_ideals(t, IdealKind::left);
  profile.crisp_left_ideals_idempotent = true;
  for (const auto& a : crisp.members)
    if (set_product(t, a, a) != a) {
      profile.crisp_left_ideals_idempotent = false;
      break;
    }

  const auto family = enumerate_fuzzy_ideals(t, chain, FuzzyIdealKind::left);
  FamilyProducts cache(t, family);
  const auto& members = family.members;

  profile.fuzzy_left_ideals_idempotent = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (cache.at(i, i) != members[i]) {
      profile.fuzzy_left_ideals_idempotent = false;
      break;
    }

  profile.products_are_intersections = true;
  for (std::size_t i = 0;
       i < members.size() && profile.products_are_intersections; ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (cache.at(i, j) != fuzzy_intersection(members[i], members[j])) {
        profile.products_are_intersections = false;
        break;
      }

  profile.fuzzy_left_ideals_semiprime = true;
  for (const auto& f : members)
    if (!semiprime_in(f, cache)) {
      profile.fuzzy_left_ideals_semiprime = false;
      break;
    }
  return profile;
}

}  // namespace ag
