#include "ag/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ag {

GradeChain::GradeChain(unsigned k) : resolution(k) {
  if (k == 0) throw UsageError("grade chain resolution must be >= 1");
  if (k > 200) throw UsageError("grade chain resolution exceeds bound");
}

FuzzySubset::FuzzySubset(GradeChain chain, std::vector<Grade> levels)
    : chain_(chain), levels_(std::move(levels)) {
  if (levels_.empty()) throw UsageError("fuzzy subset over empty carrier");
  for (Grade g : levels_)
    if (g > chain_.resolution)
      throw UsageError("grade level exceeds chain resolution");
}

FuzzyPoint::FuzzyPoint(Elem a, Grade h) : anchor(a), height(h) {
  if (h == 0) throw UsageError("fuzzy point height must be positive");
}

namespace {

void require_same_frame(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.order() != g.order()) throw UsageError("carrier mismatch");
  if (f.chain() != g.chain()) throw UsageError("grade chain mismatch");
}

void require_table_frame(const FuzzySubset& f, const CayleyTable& t) {
  if (f.order() != t.order())
    throw UsageError("fuzzy subset does not match table carrier");
}

}  // namespace

FuzzySubset zero_subset(unsigned order, GradeChain chain) {
  return {chain, std::vector<Grade>(order, 0)};
}

FuzzySubset top(unsigned order, GradeChain chain) {
  return {chain, std::vector<Grade>(order, chain.full())};
}

FuzzySubset characteristic(const CrispSubset& a, GradeChain chain) {
  std::vector<Grade> levels(a.order(), 0);
  for (unsigned x = 0; x < a.order(); ++x)
    if (a.contains(static_cast<Elem>(x))) levels[x] = chain.full();
  return {chain, std::move(levels)};
}

FuzzySubset point_subset(FuzzyPoint p, unsigned order, GradeChain chain) {
  if (p.anchor >= order) throw UsageError("fuzzy point anchor outside carrier");
  if (p.height > chain.resolution)
    throw UsageError("fuzzy point height exceeds chain resolution");
  std::vector<Grade> levels(order, 0);
  levels[p.anchor] = p.height;
  return {chain, std::move(levels)};
}

FuzzySubset product(const FuzzySubset& f, const FuzzySubset& g,
                    const CayleyTable& t) {
  require_same_frame(f, g);
  require_table_frame(f, t);
  const unsigned n = t.order();
  std::vector<Grade> out(n, 0);  // elements with no factorization stay 0
  for (Elem y = 0; y < n; ++y) {
    const Grade fy = f[y];
    if (fy == 0) continue;
    for (Elem z = 0; z < n; ++z) {
      const Grade v = std::min(fy, g[z]);
      Grade& slot = out[t(y, z)];
      if (v > slot) slot = v;
    }
  }
  return {f.chain(), std::move(out)};
}

FuzzySubset fuzzy_union(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_frame(f, g);
  std::vector<Grade> out(f.order());
  for (unsigned i = 0; i < f.order(); ++i) out[i] = std::max(f[i], g[i]);
  return {f.chain(), std::move(out)};
}

FuzzySubset fuzzy_intersection(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_frame(f, g);
  std::vector<Grade> out(f.order());
  for (unsigned i = 0; i < f.order(); ++i) out[i] = std::min(f[i], g[i]);
  return {f.chain(), std::move(out)};
}

bool subset_of(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_frame(f, g);
  for (unsigned i = 0; i < f.order(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

std::vector<FuzzyPoint> fuzzy_points_of(const FuzzySubset& f) {
  std::vector<FuzzyPoint> out;
  for (unsigned x = 0; x < f.order(); ++x)
    if (f[x] > 0) out.emplace_back(static_cast<Elem>(x), f[x]);
  return out;
}

FuzzySubset union_of_points(std::span<const FuzzyPoint> points, unsigned order,
                            GradeChain chain) {
  FuzzySubset acc = zero_subset(order, chain);
  for (const FuzzyPoint& p : points)
    acc = fuzzy_union(acc, point_subset(p, order, chain));
  return acc;
}

std::optional<FuzzyWitness> is_fuzzy_subgroupoid(const FuzzySubset& f,
                                                 const CayleyTable& t) {
  require_table_frame(f, t);
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Grade need = std::min(f[a], f[b]);
      if (f[t(a, b)] < need)
        return FuzzyWitness{"subgroupoid", {a, b, 0}, 2, f[t(a, b)], need};
    }
  return std::nullopt;
}

std::optional<FuzzyWitness> is_fuzzy_left_ideal(const FuzzySubset& f,
                                                const CayleyTable& t) {
  require_table_frame(f, t);
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (f[t(a, b)] < f[b])
        return FuzzyWitness{"left-ideal", {a, b, 0}, 2, f[t(a, b)], f[b]};
  return std::nullopt;
}

std::optional<FuzzyWitness> is_fuzzy_right_ideal(const FuzzySubset& f,
                                                 const CayleyTable& t) {
  require_table_frame(f, t);
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (f[t(a, b)] < f[a])
        return FuzzyWitness{"right-ideal", {a, b, 0}, 2, f[t(a, b)], f[a]};
  return std::nullopt;
}

std::optional<FuzzyWitness> is_fuzzy_ideal(const FuzzySubset& f,
                                           const CayleyTable& t) {
  if (auto w = is_fuzzy_left_ideal(f, t)) return w;
  return is_fuzzy_right_ideal(f, t);
}

std::optional<FuzzyWitness> is_fuzzy_bi_ideal(const FuzzySubset& f,
                                              const CayleyTable& t) {
  if (auto w = is_fuzzy_subgroupoid(f, t)) return w;
  const unsigned n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Grade need = std::min(f[x], f[z]);
        if (f[t(t(x, y), z)] < need)
          return FuzzyWitness{"bi-ideal", {x, y, z}, 3, f[t(t(x, y), z)], need};
      }
  return std::nullopt;
}

std::optional<FuzzyWitness> is_fuzzy_interior_ideal(const FuzzySubset& f,
                                                    const CayleyTable& t) {
  require_table_frame(f, t);
  const unsigned n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem a = 0; a < n; ++a)
      for (Elem y = 0; y < n; ++y)
        if (f[t(t(x, a), y)] < f[a])
          return FuzzyWitness{"interior-ideal", {x, a, y}, 3,
                              f[t(t(x, a), y)], f[a]};
  return std::nullopt;
}

bool is_fuzzy_idempotent(const FuzzySubset& f, const CayleyTable& t) {
  return product(f, f, t) == f;
}

FuzzySubset generated_left_ideal(FuzzyPoint p, const CayleyTable& t,
                                 GradeChain chain) {
  if (!has_left_identity(t))
    throw UsageError(
        "generated_left_ideal requires a left identity (hypothesis of the "
        "closed-form construction); use the closure oracle otherwise");
  const unsigned n = t.order();
  if (p.anchor >= n) throw UsageError("fuzzy point anchor outside carrier");
  if (p.height > chain.resolution)
    throw UsageError("fuzzy point height exceeds chain resolution");
  std::vector<Grade> out(n, 0);
  for (Elem b = 0; b < n; ++b) out[t(b, p.anchor)] = p.height;
  return {chain, std::move(out)};
}

FuzzySubset generated_left_ideal_oracle(FuzzyPoint p, const CayleyTable& t,
                                        GradeChain chain) {
  const unsigned n = t.order();
  if (p.anchor >= n) throw UsageError("fuzzy point anchor outside carrier");
  if (p.height > chain.resolution)
    throw UsageError("fuzzy point height exceeds chain resolution");
  std::vector<Grade> g(n, 0);
  g[p.anchor] = p.height;
  // Monotone closure: each sweep can only raise grades, which are bounded,
  // so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Grade& slot = g[t(x, y)];
        if (slot < g[y]) {
          slot = g[y];
          changed = true;
        }
      }
  }
  return {chain, std::move(g)};
}

CrispSubset level_set(const FuzzySubset& f, Grade threshold) {
  if (threshold == 0)
    throw UsageError("level set threshold must be positive");
  CrispSubset out(f.order(), 0);
  for (unsigned x = 0; x < f.order(); ++x)
    if (f[x] >= threshold) out.add(static_cast<Elem>(x));
  return out;
}

std::uint64_t subset_space_size(unsigned order, GradeChain chain) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < order; ++i) {
    const std::uint64_t base = chain.resolution + 1;
    if (size > ~std::uint64_t{0} / base)
      throw CapabilityError("subset space size overflows");
    size *= base;
  }
  return size;
}

FuzzySubset subset_at_index(std::uint64_t index, unsigned order,
                            GradeChain chain) {
  const std::uint64_t base = chain.resolution + 1;
  std::vector<Grade> levels(order);
  for (unsigned pos = order; pos-- > 0;) {
    levels[pos] = static_cast<Grade>(index % base);
    index /= base;
  }
  if (index != 0) throw UsageError("subset index outside space");
  return {chain, std::move(levels)};
}

std::uint64_t index_of_subset(const FuzzySubset& f) {
  const std::uint64_t base = f.chain().resolution + 1;
  std::uint64_t index = 0;
  for (unsigned i = 0; i < f.order(); ++i) index = index * base + f[i];
  return index;
}

FuzzySubset parse_fuzzy_literal(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto read_uint = [&](const char* what) -> unsigned long {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start)
      throw ParseError(std::string("expected ") + what, 1,
                       static_cast<int>(start) + 1);
    unsigned long v = 0;
    for (std::size_t j = start; j < i; ++j) {
      v = v * 10 + static_cast<unsigned long>(text[j] - '0');
      if (v > 100000)
        throw ParseError(std::string(what) + " out of range", 1,
                         static_cast<int>(start) + 1);
    }
    return v;
  };
  skip_ws();
  if (i >= text.size() || text[i] != 'k')
    throw ParseError("expected 'k=<resolution>;' prefix", 1,
                     static_cast<int>(i) + 1);
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '=')
    throw ParseError("expected '=' after 'k'", 1, static_cast<int>(i) + 1);
  ++i;
  const unsigned long k = read_uint("resolution");
  if (k == 0) throw ParseError("resolution must be >= 1", 1, 1);
  skip_ws();
  if (i >= text.size() || text[i] != ';')
    throw ParseError("expected ';' after resolution", 1,
                     static_cast<int>(i) + 1);
  ++i;
  std::vector<Grade> levels;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    const std::size_t col = i;
    const unsigned long v = read_uint("grade level");
    if (v > k)
      throw ParseError("grade level " + std::to_string(v) +
                           " exceeds resolution " + std::to_string(k),
                       1, static_cast<int>(col) + 1);
    levels.push_back(static_cast<Grade>(v));
  }
  if (levels.empty())
    throw ParseError("expected at least one grade level", 1,
                     static_cast<int>(i) + 1);
  return {GradeChain(static_cast<unsigned>(k)), std::move(levels)};
}

std::string format_fuzzy_literal(const FuzzySubset& f) {
  std::ostringstream os;
  os << "k=" << f.chain().resolution << ';';
  for (unsigned i = 0; i < f.order(); ++i)
    os << ' ' << static_cast<unsigned>(f[i]);
  return os.str();
}

}  // namespace ag
