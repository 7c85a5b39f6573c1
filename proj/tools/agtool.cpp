// Command-line front door: parse tables, enumerate AG-groupoids, compute
// fuzzy products and generated ideals, list ideal families, and run the
// statement-verification suite.
//
// Exit codes: 0 = pass/ok, 1 = witness or falsification, 2 = usage, parse,
// or capability error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ag/enumerate.hpp"
#include "ag/harness.hpp"
#include "ag/ideals.hpp"
#include "json.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ag::UsageError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ag::UsageError("cannot write file: " + path);
  out << text;
}

std::vector<ag::harness::Statement> parse_ids(
    const std::vector<std::string>& names) {
  std::vector<ag::harness::Statement> ids;
  for (const std::string& name : names) {
    auto s = ag::harness::statement_from_string(name);
    if (!s) throw ag::UsageError("unknown statement id: " + name);
    ids.push_back(*s);
  }
  return ids;
}

std::string crisp_to_string(const ag::CrispSubset& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (ag::Elem x : a.members()) {
    if (!first) os << ", ";
    os << static_cast<unsigned>(x);
    first = false;
  }
  os << '}';
  return os.str();
}

struct EnumerateArgs {
  unsigned order = 1;
  bool left_identity = false;
  bool up_to_iso = false;
  std::uint64_t limit = 0;
  std::string out;
  int jobs = 0;
};

int run_enumerate(const EnumerateArgs& a) {
  ag::EnumSpec spec{.order = a.order,
                    .require_left_identity = a.left_identity,
                    .up_to_isomorphism = a.up_to_iso,
                    .limit = a.limit ? std::optional(a.limit) : std::nullopt};
  ag::EnumResult r = ag::enumerate_ag(spec, a.jobs);
  write_output(a.out, ag::format_enum_result(r));
  return 0;
}

struct CheckArgs {
  std::string table_file;
  std::string identity = "left-invertive";
};

int run_check(const CheckArgs& a) {
  const ag::CayleyTable t = ag::parse_table(slurp(a.table_file));
  std::vector<std::string> laws;
  if (a.identity == "all")
    laws = {"left-invertive", "medial", "paramedial", "aux"};
  else
    laws = {a.identity};
  bool failed = false;
  for (const std::string& law : laws) {
    auto w = ag::check_identity(t, law);
    if (w) {
      std::cout << ag::format_witness(*w) << '\n';
      failed = true;
    } else {
      std::cout << law << ": pass\n";
    }
  }
  return failed ? 1 : 0;
}

struct ProductArgs {
  std::string table_file;
  std::string f_literal;
  std::string g_literal;
};

int run_product(const ProductArgs& a) {
  const ag::CayleyTable t = ag::parse_table(slurp(a.table_file));
  const ag::FuzzySubset f = ag::parse_fuzzy_literal(a.f_literal);
  const ag::FuzzySubset g = ag::parse_fuzzy_literal(a.g_literal);
  std::cout << ag::format_fuzzy_literal(ag::product(f, g, t)) << '\n';
  return 0;
}

struct GenIdealArgs {
  std::string table_file;
  unsigned anchor = 0;
  unsigned level = 1;
  unsigned k = 2;
  bool oracle = false;
  bool both = false;
};

int run_gen_ideal(const GenIdealArgs& a) {
  const ag::CayleyTable t = ag::parse_table(slurp(a.table_file));
  if (a.anchor >= t.order())
    throw ag::UsageError("anchor outside carrier");
  if (a.level == 0 || a.level > a.k)
    throw ag::UsageError("level must be in 1..k");
  const ag::FuzzyPoint p(static_cast<ag::Elem>(a.anchor),
                         static_cast<ag::Grade>(a.level));
  const ag::GradeChain chain(a.k);
  if (a.both) {
    const ag::FuzzySubset direct = ag::generated_left_ideal(p, t, chain);
    const ag::FuzzySubset closed =
        ag::generated_left_ideal_oracle(p, t, chain);
    std::cout << "formula: " << ag::format_fuzzy_literal(direct) << '\n';
    std::cout << "oracle:  " << ag::format_fuzzy_literal(closed) << '\n';
    const bool agree = direct == closed;
    std::cout << "verdict: " << (agree ? "agree" : "disagree") << '\n';
    return agree ? 0 : 1;
  }
  const ag::FuzzySubset result =
      a.oracle ? ag::generated_left_ideal_oracle(p, t, chain)
               : ag::generated_left_ideal(p, t, chain);
  std::cout << ag::format_fuzzy_literal(result) << '\n';
  return 0;
}

struct IdealsArgs {
  std::string table_file;
  std::string kind = "left";
  bool fuzzy = false;
  unsigned k = 2;
  bool monoid = false;
  bool json = false;
};

int run_ideals(const IdealsArgs& a) {
  const ag::CayleyTable t = ag::parse_table(slurp(a.table_file));
  const ag::GradeChain chain(a.k);
  nlohmann::ordered_json doc;

  if (a.monoid) {
    ag::MonoidResult res = ag::idempotent_left_ideal_monoid(t, chain);
    if (auto* v = std::get_if<ag::LawViolation>(&res)) {
      std::cout << "monoid construction failed: " << v->law << '\n';
      for (const auto& f : v->members)
        std::cout << "  " << ag::format_fuzzy_literal(f) << '\n';
      if (v->product)
        std::cout << "  product: " << ag::format_fuzzy_literal(*v->product)
                  << '\n';
      return 1;
    }
    const auto& m = std::get<ag::MonoidTable>(res);
    if (a.json) {
      auto elems = nlohmann::ordered_json::array();
      for (const auto& f : m.elements)
        elems.push_back(ag::format_fuzzy_literal(f));
      doc["elements"] = std::move(elems);
      auto rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < m.elements.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.elements.size(); ++j)
          row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
      }
      doc["op"] = std::move(rows);
      doc["identity"] = *m.identity;
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "elements: " << m.elements.size() << '\n';
      for (std::size_t i = 0; i < m.elements.size(); ++i)
        std::cout << "  [" << i << "] "
                  << ag::format_fuzzy_literal(m.elements[i]) << '\n';
      std::cout << "identity: [" << *m.identity << "]\n";
      for (std::size_t i = 0; i < m.elements.size(); ++i) {
        std::cout << " ";
        for (std::size_t j = 0; j < m.elements.size(); ++j)
          std::cout << ' ' << m.at(i, j);
        std::cout << '\n';
      }
    }
    return 0;
  }

  if (a.fuzzy) {
    ag::FuzzyIdealKind kind;
    if (a.kind == "left")
      kind = ag::FuzzyIdealKind::left;
    else if (a.kind == "right")
      kind = ag::FuzzyIdealKind::right;
    else if (a.kind == "two-sided")
      kind = ag::FuzzyIdealKind::two_sided;
    else
      throw ag::UsageError("fuzzy families support kinds left, right, "
                           "two-sided; got: " + a.kind);
    const auto family = ag::enumerate_fuzzy_ideals(t, chain, kind);
    if (a.json) {
      doc["kind"] = a.kind;
      doc["chain"] = a.k;
      auto members = nlohmann::ordered_json::array();
      for (const auto& f : family.members)
        members.push_back(ag::format_fuzzy_literal(f));
      doc["members"] = std::move(members);
      doc["count"] = family.members.size();
      std::cout << doc.dump(2) << '\n';
    } else {
      for (const auto& f : family.members)
        std::cout << ag::format_fuzzy_literal(f) << '\n';
      std::cout << "count=" << family.members.size() << '\n';
    }
    return 0;
  }

  const auto kind = ag::ideal_kind_from_string(a.kind);
  if (!kind) throw ag::UsageError("unknown ideal kind: " + a.kind);
  const auto family = ag::enumerate_crisp_ideals(t, *kind);
  if (a.json) {
    doc["kind"] = a.kind;
    auto members = nlohmann::ordered_json::array();
    for (const auto& s : family.members) {
      auto elems = nlohmann::ordered_json::array();
      for (ag::Elem x : s.members()) elems.push_back(static_cast<unsigned>(x));
      members.push_back(std::move(elems));
    }
    doc["members"] = std::move(members);
    doc["count"] = family.members.size();
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& s : family.members)
      std::cout << crisp_to_string(s) << '\n';
    std::cout << "count=" << family.members.size() << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string table_file;
  std::vector<std::string> ids;
  std::vector<unsigned> chains{1, 2};
  std::uint64_t seed = 0;
  std::uint64_t budget = 20000;
  std::uint32_t samples = 1000;
  int jobs = 0;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const std::vector<ag::CayleyTable> population{
      ag::parse_table(slurp(a.table_file))};
  ag::harness::SuiteOptions opts;
  opts.chains = a.chains;
  opts.seed = a.seed;
  opts.exhaustive_budget = a.budget;
  opts.samples = a.samples;
  opts.jobs = a.jobs;
  std::vector<ag::harness::Statement> ids(
      ag::harness::all_statements().begin(),
      ag::harness::all_statements().end());
  if (!a.ids.empty()) ids = parse_ids(a.ids);
  opts.ids = ids;

  std::vector<ag::harness::CheckReport> reports;
  for (ag::harness::Statement s : ids)
    for (unsigned k : a.chains)
      reports.push_back(
          ag::harness::run_check(s, population, ag::GradeChain(k), opts));
  if (a.json)
    std::cout << ag::harness::suite_report_json(reports, opts);
  else
    std::cout << ag::harness::render_summary(reports);
  for (const auto& r : reports)
    if (r.verdict == ag::harness::Verdict::falsified) return 1;
  return 0;
}

struct SuiteArgs {
  std::vector<unsigned> orders{1, 2, 3};
  std::vector<unsigned> chains{1, 2};
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  std::uint64_t budget = 20000;
  std::uint32_t samples = 1000;
  bool iso = false;
  int jobs = 0;
  std::string out;
  bool json = false;
};

int run_suite_cmd(const SuiteArgs& a) {
  ag::harness::SuiteOptions opts;
  opts.orders = a.orders;
  opts.chains = a.chains;
  if (!a.ids.empty()) opts.ids = parse_ids(a.ids);
  opts.seed = a.seed;
  opts.exhaustive_budget = a.budget;
  opts.samples = a.samples;
  opts.up_to_isomorphism = a.iso;
  opts.jobs = a.jobs;

  const auto reports = ag::harness::run_suite(opts);
  const std::string json = ag::harness::suite_report_json(reports, opts);
  if (!a.out.empty()) {
    write_output(a.out, json);
    std::cout << ag::harness::render_summary(reports);
  } else if (a.json) {
    std::cout << json;
  } else {
    std::cout << ag::harness::render_summary(reports);
  }
  for (const auto& r : reports)
    if (r.verdict == ag::harness::Verdict::falsified) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Workbench for finite AG-groupoids: enumeration, fuzzy-ideal "
      "calculus, and property verification"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "Enumerate AG-groupoids of a given order");
  cmd_enum->add_option("order", enum_args.order, "carrier order")->required();
  cmd_enum->add_flag("--left-identity", enum_args.left_identity,
                     "only tables with a left identity");
  cmd_enum->add_flag("--up-to-iso", enum_args.up_to_iso,
                     "emit one canonical table per isomorphism class");
  cmd_enum->add_option("--limit", enum_args.limit, "cap on emitted tables");
  cmd_enum->add_option("--out", enum_args.out, "output file (default stdout)");
  cmd_enum->add_option("--jobs", enum_args.jobs, "worker count (0 = default)");

  CheckArgs check_args;
  auto* cmd_check =
      app.add_subcommand("check", "Check a structural identity on a table");
  cmd_check->add_option("table", check_args.table_file, "Cayley table file")
      ->required();
  cmd_check
      ->add_option("--identity", check_args.identity,
                   "left-invertive | medial | paramedial | aux | all")
      ->check(CLI::IsMember(
          {"left-invertive", "medial", "paramedial", "aux", "all"}));

  ProductArgs product_args;
  auto* cmd_product = app.add_subcommand(
      "product", "Sup-min product of two fuzzy subset literals");
  cmd_product->add_option("table", product_args.table_file, "Cayley table file")
      ->required();
  cmd_product->add_option("f", product_args.f_literal, "first literal")
      ->required();
  cmd_product->add_option("g", product_args.g_literal, "second literal")
      ->required();

  GenIdealArgs gen_args;
  auto* cmd_gen = app.add_subcommand(
      "gen-ideal", "Fuzzy left ideal generated by a fuzzy point");
  cmd_gen->add_option("table", gen_args.table_file, "Cayley table file")
      ->required();
  cmd_gen->add_option("anchor", gen_args.anchor, "anchor element")->required();
  cmd_gen->add_option("level", gen_args.level, "grade level (1..k)")
      ->required();
  cmd_gen->add_option("--k", gen_args.k, "chain resolution (default 2)");
  cmd_gen->add_flag("--oracle", gen_args.oracle,
                    "use the closure fixpoint (no left identity needed)");
  cmd_gen->add_flag("--both", gen_args.both,
                    "print formula and oracle results with a verdict");

  IdealsArgs ideals_args;
  auto* cmd_ideals =
      app.add_subcommand("ideals", "Enumerate crisp or fuzzy ideal families");
  cmd_ideals->add_option("table", ideals_args.table_file, "Cayley table file")
      ->required();
  cmd_ideals->add_option("--kind", ideals_args.kind,
                         "left | right | two-sided | interior | bi");
  cmd_ideals->add_flag("--fuzzy", ideals_args.fuzzy,
                       "fuzzy family over the chain");
  cmd_ideals->add_option("--k", ideals_args.k, "chain resolution (default 2)");
  cmd_ideals->add_flag("--monoid", ideals_args.monoid,
                       "idempotent fuzzy left ideal monoid");
  cmd_ideals->add_flag("--json", ideals_args.json, "JSON output");

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run statement checks against one table");
  cmd_verify->add_option("table", verify_args.table_file, "Cayley table file")
      ->required();
  cmd_verify->add_option("--ids", verify_args.ids, "statement ids")
      ->delimiter(',');
  cmd_verify->add_option("--k", verify_args.chains, "chain resolutions")
      ->delimiter(',');
  cmd_verify->add_option("--seed", verify_args.seed, "sampling seed");
  cmd_verify->add_option("--budget", verify_args.budget,
                         "exhaustive scan budget");
  cmd_verify->add_option("--samples", verify_args.samples,
                         "samples above the budget");
  cmd_verify->add_option("--jobs", verify_args.jobs, "worker count");
  cmd_verify->add_flag("--json", verify_args.json, "JSON output");

  SuiteArgs suite_args;
  auto* cmd_suite = app.add_subcommand(
      "suite", "Run the statement catalog over enumerated populations");
  cmd_suite->add_option("--orders", suite_args.orders, "carrier orders")
      ->delimiter(',');
  cmd_suite->add_option("--k", suite_args.chains, "chain resolutions")
      ->delimiter(',');
  cmd_suite->add_option("--ids", suite_args.ids, "statement ids")
      ->delimiter(',');
  cmd_suite->add_option("--seed", suite_args.seed, "sampling seed");
  cmd_suite->add_option("--budget", suite_args.budget,
                        "exhaustive scan budget");
  cmd_suite->add_option("--samples", suite_args.samples,
                        "samples above the budget");
  cmd_suite->add_flag("--iso", suite_args.iso,
                      "population up to isomorphism");
  cmd_suite->add_option("--jobs", suite_args.jobs, "worker count");
  cmd_suite->add_option("--out", suite_args.out, "JSON report file");
  cmd_suite->add_flag("--json", suite_args.json,
                      "JSON to stdout instead of the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_enum) return run_enumerate(enum_args);
    if (*cmd_check) return run_check(check_args);
    if (*cmd_product) return run_product(product_args);
    if (*cmd_gen) return run_gen_ideal(gen_args);
    if (*cmd_ideals) return run_ideals(ideals_args);
    if (*cmd_verify) return run_verify(verify_args);
    if (*cmd_suite) return run_suite_cmd(suite_args);
  } catch (const ag::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ag::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << '\n';
    return 2;
  } catch (const ag::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
