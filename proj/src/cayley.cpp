#include "ag/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <bit>
#include <numeric>
#include <sstream>

namespace ag {

CrispSubset::CrispSubset(unsigned order, std::uint32_t bits)
    : order_(order), bits_(bits) {
  if (order > kMaxOrder) throw UsageError("subset order exceeds bound");
  if (order < 32 && (bits >> order) != 0)
    throw UsageError("subset bits outside carrier");
}

CrispSubset CrispSubset::full_set(unsigned order) {
  return {order, order >= 32 ? ~0u : ((1u << order) - 1u)};
}

CrispSubset& CrispSubset::add(Elem x) {
  if (x >= order_) throw UsageError("element outside carrier");
  bits_ |= 1u << x;
  return *this;
}

unsigned CrispSubset::size() const {
  return static_cast<unsigned>(std::popcount(bits_));
}

std::vector<Elem> CrispSubset::members() const {
  std::vector<Elem> out;
  for (unsigned x = 0; x < order_; ++x)
    if (contains(static_cast<Elem>(x))) out.push_back(static_cast<Elem>(x));
  return out;
}

CayleyTable::CayleyTable(unsigned order, std::vector<Elem> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order == 0) throw UsageError("table order must be positive");
  if (order > kMaxOrder) throw UsageError("table order exceeds bound");
  if (entries_.size() != static_cast<std::size_t>(order) * order)
    throw UsageError("table entry count does not match order");
  for (Elem e : entries_)
    if (e >= order) throw UsageError("table entry outside carrier");
}

CayleyTable CayleyTable::subtraction_mod(unsigned n) {
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      e[a * n + b] = static_cast<Elem>((b + n - a) % n);
  return {n, std::move(e)};
}

CayleyTable CayleyTable::left_zero(unsigned n) {
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) e[a * n + b] = static_cast<Elem>(a);
  return {n, std::move(e)};
}

Elem apply(const CayleyTable& t, Elem a, Elem b) {
  if (a >= t.order() || b >= t.order())
    throw UsageError("apply: element outside carrier");
  return t(a, b);
}

std::optional<Witness> check_left_invertive(const CayleyTable& t) {
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = t(t(a, b), c);
        const Elem rhs = t(t(c, b), a);
        if (lhs != rhs)
          return Witness{"left-invertive", {a, b, c, 0}, 3, lhs, rhs};
      }
  return std::nullopt;
}

std::optional<Witness> check_medial(const CayleyTable& t) {
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const Elem lhs = t(t(a, b), t(c, d));
          const Elem rhs = t(t(a, c), t(b, d));
          if (lhs != rhs) return Witness{"medial", {a, b, c, d}, 4, lhs, rhs};
        }
  return std::nullopt;
}

std::optional<Witness> check_paramedial(const CayleyTable& t) {
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const Elem lhs = t(t(a, b), t(c, d));
          const Elem rhs = t(t(d, c), t(b, a));
          if (lhs != rhs)
            return Witness{"paramedial", {a, b, c, d}, 4, lhs, rhs};
        }
  return std::nullopt;
}

std::optional<Witness> check_aux_identity(const CayleyTable& t) {
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = t(a, t(b, c));
        const Elem rhs = t(b, t(a, c));
        if (lhs != rhs) return Witness{"aux", {a, b, c, 0}, 3, lhs, rhs};
      }
  return std::nullopt;
}

std::optional<Witness> check_identity(const CayleyTable& t,
                                      std::string_view law) {
  if (law == "left-invertive") return check_left_invertive(t);
  if (law == "medial") return check_medial(t);
  if (law == "paramedial") return check_paramedial(t);
  if (law == "aux") return check_aux_identity(t);
  throw UsageError("unknown identity: " + std::string(law));
}

std::vector<Elem> left_identities(const CayleyTable& t) {
  const unsigned n = t.order();
  std::vector<Elem> out;
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = t(e, x) == x;
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<Elem> right_identities(const CayleyTable& t) {
  const unsigned n = t.order();
  std::vector<Elem> out;
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = t(x, e) == x;
    if (ok) out.push_back(e);
  }
  return out;
}

bool has_left_identity(const CayleyTable& t) {
  return !left_identities(t).empty();
}

bool is_commutative(const CayleyTable& t) {
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t(a, b) != t(b, a)) return false;
  return true;
}

bool is_associative(const CayleyTable& t) {
  const unsigned n = t.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

CrispSubset idempotent_elements(const CayleyTable& t) {
  CrispSubset out(t.order(), 0);
  for (Elem a = 0; a < t.order(); ++a)
    if (t(a, a) == a) out.add(a);
  return out;
}

StructureFlags structure_flags(const CayleyTable& t) {
  return StructureFlags{
      .is_ag = !check_left_invertive(t).has_value(),
      .left_identities = left_identities(t),
      .is_commutative = is_commutative(t),
      .is_associative = is_associative(t),
      .idempotent_elements = idempotent_elements(t),
  };
}

CayleyTable canonical_form(const CayleyTable& t) {
  const unsigned n = t.order();
  if (n > kCanonicalBound)
    throw CapabilityError("canonical form bounded at order " +
                          std::to_string(kCanonicalBound));
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best(t.entries().begin(), t.entries().end());
  std::vector<Elem> relabeled(best.size());
  do {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        relabeled[perm[a] * n + perm[b]] = perm[t(static_cast<Elem>(a),
                                                  static_cast<Elem>(b))];
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, std::move(best)};
}

CrispSubset set_product(const CayleyTable& t, CrispSubset a, CrispSubset b) {
  if (a.order() != t.order() || b.order() != t.order())
    throw UsageError("set_product: carrier mismatch");
  CrispSubset out(t.order(), 0);
  for (Elem x = 0; x < t.order(); ++x) {
    if (!a.contains(x)) continue;
    for (Elem y = 0; y < t.order(); ++y)
      if (b.contains(y)) out.add(t(x, y));
  }
  return out;
}

bool subset_of(CrispSubset a, CrispSubset b) {
  if (a.order() != b.order()) throw UsageError("subset_of: carrier mismatch");
  return (a.bits() & ~b.bits()) == 0;
}

CrispSubset set_union(CrispSubset a, CrispSubset b) {
  if (a.order() != b.order()) throw UsageError("set_union: carrier mismatch");
  return {a.order(), a.bits() | b.bits()};
}

CrispSubset set_intersection(CrispSubset a, CrispSubset b) {
  if (a.order() != b.order())
    throw UsageError("set_intersection: carrier mismatch");
  return {a.order(), a.bits() & b.bits()};
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits into tokens, dropping '#' comments. Lines and columns are 1-based.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    std::vector<Token> toks;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && line[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      toks.push_back(Token{std::string(line.substr(start, i - start)), line_no,
                           static_cast<int>(start) + 1});
    }
    lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

long parse_int(const Token& tok, const char* what) {
  long value = 0;
  if (tok.text.empty() || tok.text.find_first_not_of("0123456789") !=
                              std::string::npos)
    throw ParseError(std::string("expected ") + what + ", got '" + tok.text +
                         "'",
                     tok.line, tok.column);
  for (char c : tok.text) {
    value = value * 10 + (c - '0');
    if (value > 1'000'000)
      throw ParseError(std::string(what) + " out of range", tok.line,
                       tok.column);
  }
  return value;
}

// Reads one table starting at `row` (which must be non-empty); advances
// `row` past the table.
CayleyTable parse_one(const std::vector<std::vector<Token>>& lines,
                      std::size_t& row) {
  const auto& head = lines[row];
  if (head.size() != 1)
    throw ParseError("expected a single integer order", head[1].line,
                     head[1].column);
  const long order = parse_int(head[0], "order");
  if (order < 1)
    throw ParseError("order must be positive", head[0].line, head[0].column);
  if (order > static_cast<long>(kMaxOrder))
    throw ParseError("order exceeds bound " + std::to_string(kMaxOrder),
                     head[0].line, head[0].column);
  const int head_line = head[0].line;
  ++row;
  std::vector<Elem> entries;
  entries.reserve(static_cast<std::size_t>(order) * order);
  for (long r = 0; r < order; ++r) {
    while (row < lines.size() && lines[row].empty()) ++row;
    if (row >= lines.size())
      throw ParseError("expected " + std::to_string(order) +
                           " rows, got " + std::to_string(r),
                       head_line, 1);
    const auto& toks = lines[row];
    if (static_cast<long>(toks.size()) != order) {
      const Token& at = toks.size() > static_cast<std::size_t>(order)
                            ? toks[static_cast<std::size_t>(order)]
                            : toks.back();
      throw ParseError("expected " + std::to_string(order) +
                           " entries in row, got " +
                           std::to_string(toks.size()),
                       at.line, at.column);
    }
    for (const Token& tok : toks) {
      const long v = parse_int(tok, "entry");
      if (v >= order)
        throw ParseError("entry " + std::to_string(v) +
                             " outside carrier 0.." + std::to_string(order - 1),
                         tok.line, tok.column);
      entries.push_back(static_cast<Elem>(v));
    }
    ++row;
  }
  return {static_cast<unsigned>(order), std::move(entries)};
}

}  // namespace

CayleyTable parse_table(std::string_view text) {
  const auto lines = tokenize_lines(text);
  std::size_t row = 0;
  while (row < lines.size() && lines[row].empty()) ++row;
  if (row >= lines.size()) throw ParseError("empty input", 1, 1);
  CayleyTable t = parse_one(lines, row);
  for (; row < lines.size(); ++row)
    if (!lines[row].empty())
      throw ParseError("unexpected content after table", lines[row][0].line,
                       lines[row][0].column);
  return t;
}

std::vector<CayleyTable> parse_tables(std::string_view text) {
  const auto lines = tokenize_lines(text);
  std::vector<CayleyTable> out;
  std::size_t row = 0;
  while (true) {
    while (row < lines.size() && lines[row].empty()) ++row;
    if (row >= lines.size()) break;
    out.push_back(parse_one(lines, row));
  }
  return out;
}

std::string format_table(const CayleyTable& t) {
  std::ostringstream os;
  os << t.order() << '\n';
  for (unsigned a = 0; a < t.order(); ++a) {
    for (unsigned b = 0; b < t.order(); ++b) {
      if (b) os << ' ';
      os << static_cast<unsigned>(t(static_cast<Elem>(a), static_cast<Elem>(b)));
    }
    os << '\n';
  }
  return os.str();
}

std::string format_witness(const Witness& w) {
  std::ostringstream os;
  os << w.law << " fails at (";
  for (unsigned i = 0; i < w.arity; ++i) {
    if (i) os << ',';
    os << static_cast<unsigned>(w.at[i]);
  }
  os << "): lhs=" << static_cast<unsigned>(w.lhs)
     << " rhs=" << static_cast<unsigned>(w.rhs);
  return os.str();
}

}  // namespace ag
