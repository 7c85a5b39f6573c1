#include "ag/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "ag/parallel.hpp"

namespace ag {

namespace {

constexpr Elem kUndef = 0xFF;
constexpr unsigned kMaxCells = (kEnumBound + 1) * (kEnumBound + 1);

// Backtracking table completion. Cells are filled row-major in ascending
// value order, so complete tables appear in lexicographic order. After each
// assignment only the left-invertive instances that read the new cell are
// re-examined; an instance is decided the moment its last operand product
// becomes defined.
class Search {
 public:
  explicit Search(unsigned n) : n_(n) { cells_.fill(kUndef); }

  Elem* cells() { return cells_.data(); }
  const Elem* cells() const { return cells_.data(); }

  void assign(unsigned idx, Elem v) { cells_[idx] = v; }
  void clear(unsigned idx) { cells_[idx] = kUndef; }

  // Emit is called with the cell array on every complete consistent table;
  // returning false aborts the search.
  template <class Emit>
  bool run(unsigned idx, unsigned stop_idx, Emit&& emit) {
    if (idx == stop_idx) return emit(cells_.data());
    for (Elem v = 0; v < n_; ++v) {
      cells_[idx] = v;
      if (consistent_after(idx / n_, idx % n_)) {
        if (!run(idx + 1, stop_idx, emit)) {
          cells_[idx] = kUndef;
          return false;
        }
      }
    }
    cells_[idx] = kUndef;
    return true;
  }

  // All left-invertive instances (a,b,c) whose evaluation reads cell (r,c0):
  //   value of a*b        -> (a,b) == (r,c0)
  //   value of (a*b)*c    -> a*b == r, c == c0
  //   value of c*b        -> (c,b) == (r,c0)
  //   value of (c*b)*a    -> c*b == r, a == c0
  bool consistent_after(unsigned r, unsigned c0) const {
    for (unsigned x = 0; x < n_; ++x) {
      if (!triple_ok(r, c0, x)) return false;           // (a,b) = (r,c0)
      if (!triple_ok(x, c0, r)) return false;           // (c,b) = (r,c0)
    }
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b) {
        if (cells_[a * n_ + b] != r) continue;
        if (!triple_ok(a, b, c0)) return false;         // (a*b)*c reads (r,c0)
        if (!triple_ok(c0, b, a)) return false;         // (c*b)*a reads (r,c0)
      }
    return true;
  }

 private:
  // (a*b)*c == (c*b)*a when all four lookups are defined.
  bool triple_ok(unsigned a, unsigned b, unsigned c) const {
    const Elem ab = cells_[a * n_ + b];
    if (ab == kUndef) return true;
    const Elem lhs = cells_[ab * n_ + c];
    if (lhs == kUndef) return true;
    const Elem cb = cells_[c * n_ + b];
    if (cb == kUndef) return true;
    const Elem rhs = cells_[cb * n_ + a];
    if (rhs == kUndef) return true;
    return lhs == rhs;
  }

  unsigned n_;
  std::array<Elem, kMaxCells> cells_;
};

bool row_is_left_identity(const Elem* cells, unsigned n, unsigned e) {
  for (unsigned x = 0; x < n; ++x)
    if (cells[e * n + x] != x) return false;
  return true;
}

bool some_left_identity(const Elem* cells, unsigned n) {
  for (unsigned e = 0; e < n; ++e)
    if (row_is_left_identity(cells, n, e)) return true;
  return false;
}

struct Collector {
  Collector(const EnumSpec& s, unsigned order) : spec(s), n(order) {}

  const EnumSpec& spec;
  unsigned n;
  std::uint64_t count_labeled = 0;
  std::vector<CayleyTable> tables;           // labeled mode
  std::set<std::vector<Elem>> canon_seen;    // iso mode
  bool truncated = false;

  // Returns false once the limit is reached.
  bool on_table(const Elem* cells) {
    if (spec.require_left_identity && !some_left_identity(cells, n))
      return true;
    ++count_labeled;
    std::vector<Elem> entries(cells, cells + static_cast<std::size_t>(n) * n);
    if (spec.up_to_isomorphism) {
      CayleyTable canon = canonical_form(CayleyTable(n, std::move(entries)));
      canon_seen.insert(
          std::vector<Elem>(canon.entries().begin(), canon.entries().end()));
      if (spec.limit && canon_seen.size() >= *spec.limit) {
        truncated = true;
        return false;
      }
    } else {
      tables.emplace_back(n, std::move(entries));
      if (spec.limit && tables.size() >= *spec.limit) {
        truncated = true;
        return false;
      }
    }
    return true;
  }

  EnumResult finish(bool aborted) {
    EnumResult r;
    r.count_labeled = count_labeled;
    if (spec.up_to_isomorphism) {
      r.count_iso_classes = canon_seen.size();
      for (const auto& e : canon_seen) r.tables.emplace_back(n, e);
    } else {
      std::set<std::vector<Elem>> canon;
      for (const auto& t : tables) {
        CayleyTable c = canonical_form(t);
        canon.insert(
            std::vector<Elem>(c.entries().begin(), c.entries().end()));
      }
      r.count_iso_classes = canon.size();
      r.tables = std::move(tables);
    }
    r.exhausted = !aborted;
    return r;
  }
};

void validate(const EnumSpec& spec, unsigned bound) {
  if (spec.order == 0) throw UsageError("order must be positive");
  if (spec.order > bound)
    throw CapabilityError("enumeration bounded at order " +
                          std::to_string(bound));
}

}  // namespace

EnumResult enumerate_ag_serial(const EnumSpec& spec) {
  validate(spec, kEnumBound);
  const unsigned n = spec.order;
  Search search(n);
  Collector sink{spec, n};
  const bool completed =
      search.run(0, n * n, [&](const Elem* cells) { return sink.on_table(cells); });
  return sink.finish(!completed);
}

EnumResult enumerate_ag(const EnumSpec& spec, int jobs) {
  validate(spec, kEnumBound);
  const unsigned n = spec.order;
  jobs = par::effective_jobs(jobs);
  // Early-stop semantics of `limit` are exact only in a sequential scan.
  if (spec.limit || jobs <= 1 || n < 3) return enumerate_ag_serial(spec);

#ifdef _OPENMP
  // Partition the tree by complete first-row assignments; every subtree is
  // explored independently and results are merged in prefix order, which is
  // exactly the serial lexicographic order.
  std::vector<std::array<Elem, kMaxCells>> prefixes;
  {
    Search search(n);
    search.run(0, n, [&](const Elem* cells) {
      std::array<Elem, kMaxCells> p;
      std::copy(cells, cells + kMaxCells, p.begin());
      prefixes.push_back(p);
      return true;
    });
  }
  std::vector<Collector> parts(prefixes.size(), Collector{spec, n});
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size());
       ++i) {
    Search search(n);
    std::copy(prefixes[i].begin(), prefixes[i].end(), search.cells());
    search.run(n, n * n,
               [&](const Elem* cells) { return parts[i].on_table(cells); });
  }
  Collector merged{spec, n};
  for (auto& part : parts) {
    merged.count_labeled += part.count_labeled;
    for (auto& t : part.tables) merged.tables.push_back(std::move(t));
    merged.canon_seen.merge(part.canon_seen);
  }
  return merged.finish(false);
#else
  return enumerate_ag_serial(spec);
#endif
}

EnumResult enumerate_naive(const EnumSpec& spec) {
  validate(spec, kNaiveEnumBound);
  const unsigned n = spec.order;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<Elem> entries(cells, 0);
  Collector sink{spec, n};
  bool aborted = false;
  while (true) {
    if (!check_left_invertive(CayleyTable(n, entries))) {
      if (!sink.on_table(entries.data())) {
        aborted = true;
        break;
      }
    }
    // odometer over the full table space, most significant cell first
    std::size_t pos = cells;
    while (pos > 0 && entries[pos - 1] == n - 1) entries[--pos] = 0;
    if (pos == 0) break;
    ++entries[pos - 1];
  }
  return sink.finish(aborted);
}

std::string format_enum_result(const EnumResult& r) {
  std::ostringstream os;
  for (const auto& t : r.tables) os << format_table(t) << '\n';
  os << "count_labeled=" << r.count_labeled;
  os << " count_iso=";
  if (r.count_iso_classes)
    os << *r.count_iso_classes;
  else
    os << "unknown";
  os << " exhausted=" << (r.exhausted ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace ag
