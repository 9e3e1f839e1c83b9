#include "vkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>

#include "vkit/codec.hpp"
#include "vkit/corpus.hpp"
#include "vkit/error.hpp"
#include "vkit/evaluator.hpp"
#include "vkit/exposing.hpp"
#include "vkit/oracles.hpp"
#include "vkit/suites.hpp"

namespace vkit {

namespace {

struct Options {
  int m = 2;
  std::string table;
  bool formal = false;
  std::string input;
  std::string format = "gauss";
  std::string config;
  bool trace = false;
  bool memo = false;
  std::string suite = "all";
  std::string family = "twist";
  int min = 8;
  int max = 64;
  int trials = 1;
  int k0 = 0;
  std::uint64_t seed = 1;
  std::string csv;
};

ArrowConfiguration bundled_configuration(const Options& o) {
  if (!o.config.empty()) return load_configuration(o.config);
  const std::string path = data_dir() + "/c2.config";
  if (std::filesystem::exists(path)) return load_configuration(path);
  return select_configuration(load_corpus(data_dir() + "/corpus.txt")).chosen;
}

/// --table, else the formal table with --formal, else the bundled c2 table.
ActualityTable resolve_table(const Options& o) {
  if (!o.table.empty()) return parse_table(read_document(o.table, Format::Table).payload);
  if (o.formal) return formal_table(o.m);
  if (o.m > 2) throw Error(ErrorCode::LookupMiss, "no bundled numeric table of degree " + std::to_string(o.m) + "; pass --table or --formal");
  return build_actuality_table(o.m, c2_oracle(bundled_configuration(o)));
}

SingularGaussCode read_input(const Options& o) {
  const auto text = read_document(o.input, o.format == "pd" ? Format::PD : Format::Gauss).payload;
  return o.format == "pd" ? pd_to_gauss(parse_pd(text)) : parse_gauss(text);
}

int cmd_eval(const Options& o, std::ostream& out) {
  EvalConfig cfg{o.m, resolve_table(o)};
  cfg.memo = o.memo;
  const auto r = eval(read_input(o), cfg);
  if (o.trace) {
    out << trace_json(r.trace, r.value) << "\n";
  } else {
    out << r.value.to_string() << "\n";
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto table = o.formal ? formal_table(o.m) : build_actuality_table(o.m, c2_oracle(bundled_configuration(o)));
  const auto text = serialize_table(table);
  if (o.table.empty()) {
    out << text;
  } else {
    write_document(o.table, {Format::Table, text});
  }
  return 0;
}

std::vector<int> bench_sizes(int lo, int hi) {
  std::vector<int> ns;
  for (int n = lo; n < hi; n *= 2) ns.push_back(n);
  ns.push_back(hi);
  return ns;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.min < 1 || o.max < o.min) throw Error(ErrorCode::BoundViolation, "need 1 <= --min <= --max");
  const Family family = o.family == "twist" ? Family::Twist : Family::RandomDescendingPerturbed;
  const auto rows = scaling_experiment(family, bench_sizes(o.min, o.max), o.m, o.trials, o.seed, resolve_table(o), o.k0);
  const auto text = scaling_csv(rows);
  if (o.csv.empty()) {
    out << text;
  } else {
    write_document(o.csv, {Format::Table, text});
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.m = o.m;
  so.seed = o.seed;
  so.corpus_path = o.input;
  so.config_path = o.config;
  const auto results = run_suite(o.suite, so);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << ": " << r.detail << "\n";
    failed += r.passed ? 0 : 1;
  }
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " properties passed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_expose(const Options& o, std::ostream& out) {
  const auto pd = parse_pd(read_document(o.input, Format::PD).payload);
  const auto res = expose_all(pd);
  auto j = nlohmann::json::parse(res.report.json());
  j["iterations"] = res.iterations;
  j["events"] = res.events.size();
  j["new_crossings"] = res.new_crossings;
  j["fully_exposed"] = unexposed_doubles(res.diagram).empty();
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-type invariant evaluator"};
  app.require_subcommand(1);

  auto type_flag = [&](CLI::App* c) { c->add_option("--type", o.m, "Invariant type m")->check(CLI::Range(0, 6)); };
  auto table_flags = [&](CLI::App* c) {
    c->add_option("--table", o.table, "Actuality table file");
    c->add_flag("--formal", o.formal, "Use the universal formal table");
    c->add_option("--config", o.config, "Two-crossing configuration file");
  };

  auto* ev = app.add_subcommand("eval", "Evaluate an invariant on one diagram");
  type_flag(ev);
  table_flags(ev);
  ev->add_option("--input", o.input, "Diagram file")->required();
  ev->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"gauss", "pd"}));
  ev->add_flag("--trace", o.trace, "Print the trace as JSON");
  ev->add_flag("--memo", o.memo, "Cache node results");

  auto* tb = app.add_subcommand("table", "Build an actuality table");
  type_flag(tb);
  tb->add_option("--table", o.table, "Output file (stdout if absent)");
  tb->add_flag("--formal", o.formal, "Emit the formal table");
  tb->add_option("--config", o.config, "Two-crossing configuration file");

  auto* be = app.add_subcommand("bench", "Scaling benchmark as CSV");
  type_flag(be);
  table_flags(be);
  be->add_option("--family", o.family, "Diagram family")->check(CLI::IsMember({"twist", "random"}));
  be->add_option("--min", o.min, "Smallest n");
  be->add_option("--max", o.max, "Largest n");
  be->add_option("--trials", o.trials, "Trials per n")->check(CLI::PositiveNumber);
  be->add_option("--seed", o.seed, "Seed");
  be->add_option("--k0", o.k0, "Double points in each family member")->check(CLI::Range(0, 1));
  be->add_option("--csv", o.csv, "Output file (stdout if absent)");

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  type_flag(ve);
  ve->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  ve->add_option("--seed", o.seed, "Seed");
  ve->add_option("--input", o.input, "Corpus file (bundled if absent)");
  ve->add_option("--config", o.config, "Two-crossing configuration file");

  auto* ex = app.add_subcommand("expose", "Expose every double point of a PD diagram");
  ex->add_option("--input", o.input, "PD file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (ev->parsed()) return cmd_eval(o, out);
    if (tb->parsed()) return cmd_table(o, out);
    if (be->parsed()) return cmd_bench(o, out);
    if (ve->parsed()) return cmd_verify(o, out);
    return cmd_expose(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::Io ? 3 : 2;
  }
}

}  // namespace vkit
