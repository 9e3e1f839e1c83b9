// One line per acceptance criterion; exit status 1 if any fails.
#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "support/alexander.hpp"
#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/corpus.hpp"
#include "vkit/evaluator.hpp"
#include "vkit/exposing.hpp"
#include "vkit/oracles.hpp"
#include "vkit/plat.hpp"
#include "vkit/suites.hpp"

using namespace vkit;

namespace {

// Tolerances and limits.
constexpr double kSlopeSlack = 0.3;
constexpr double kFitRelTol = 1e-9;  // floating point slack on the fitted C
constexpr double kLimitC1 = 10, kLimitC2 = 60, kLimitC6 = 300;
constexpr int kMaxCorpusCrossings = 12;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Every trace produced during the run, for criteria 4 and 5.
struct TraceAudit {
  std::int64_t traces = 0;
  std::int64_t nodes = 0;
  std::int64_t p_violations = 0;
  std::int64_t vertex_violations = 0;
  double a_max = 0;
  int max_excess = -1000000;  // max over traces of event vertices - (n + m + 1)
} audit;

ValueWithTrace evaluate(const SingularGaussCode& code, const EvalConfig& cfg) {
  auto r = eval(code, cfg);
  ++audit.traces;
  for (const auto& node : r.trace.nodes) {
    ++audit.nodes;
    if (node.p > node.n) ++audit.p_violations;
    if (node.n > 0) audit.a_max = std::max(audit.a_max, static_cast<double>(node.p) / node.n);
    if (node.p == 0) continue;
    const int excess = node.event_vertices - (r.trace.n + r.trace.m + 1);
    audit.max_excess = std::max(audit.max_excess, excess);
    if (excess > 0) ++audit.vertex_violations;
  }
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Context {
  std::vector<CorpusRecord> corpus;
  ArrowConfiguration config;
  BaseOracle c2;
  ActualityTable table;
};

// Oracle equivalence on nonsingular corpus records; also against the
// Alexander polynomial.
Outcome equivalence(const Context& ctx, const ActualityTable& table, const BaseOracle& c2) {
  const EvalConfig cfg{2, table};
  int checked = 0, small = 0, variants = 0, bad = 0, alexander_bad = 0;
  for (const auto& r : ctx.corpus) {
    if (r.gauss.doubles() != 0) continue;
    ++checked;
    small += r.gauss.crossings() <= kMaxCorpusCrossings ? 1 : 0;
    variants += r.parent().empty() ? 0 : 1;
    const auto v = evaluate(r.gauss, cfg).value;
    bad += v == c2(r.gauss) ? 0 : 1;
    alexander_bad += v == InvariantValue(testing_oracle::alexander_c2(r.gauss)) ? 0 : 1;
  }
  std::ostringstream d;
  d << checked << " diagrams (" << small << " with <= " << kMaxCorpusCrossings << " crossings, " << variants
    << " move variants), " << bad << " mismatches vs c2, " << alexander_bad << " vs Alexander oracle";
  return {bad == 0 && alexander_bad == 0 && small >= 30 && variants > 0, d.str()};
}

Outcome criterion1(const Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  auto o = equivalence(ctx, ctx.table, ctx.c2);
  o.seconds = seconds_since(t0);
  o.pass = o.pass && o.seconds < kLimitC1;
  return o;
}

SingularGaussCode positive_at(const SingularGaussCode& k, int id) {
  return k.crossing_sign(id) > 0 ? k : change_crossing(k, id);
}

Outcome criterion2(const Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  const EvalConfig numeric{2, ctx.table};
  const EvalConfig formal{2, formal_table(2)};
  int bad_numeric = 0, bad_formal = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 15);
    const int k = static_cast<int>(rng() % 3);
    const auto code = random_diagram(n, k, rng());
    const auto ids = code.crossing_ids();
    const int id = ids[rng() % ids.size()];
    const auto kp = positive_at(code, id);
    const auto km = change_crossing(kp, id);
    const auto kx = make_singular(code, id);
    bad_numeric += evaluate(kp, numeric).value - evaluate(km, numeric).value == evaluate(kx, numeric).value ? 0 : 1;
    bad_formal += evaluate(kp, formal).value - evaluate(km, formal).value == evaluate(kx, formal).value ? 0 : 1;
  }
  Outcome o;
  o.seconds = seconds_since(t0);
  o.detail = "1000 trials, " + std::to_string(bad_numeric) + " numeric and " + std::to_string(bad_formal) + " formal failures";
  o.pass = bad_numeric == 0 && bad_formal == 0 && o.seconds < kLimitC2;
  return o;
}

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed + 3);
  int bad = 0;
  for (int m = 0; m <= 3; ++m) {
    const EvalConfig cfg{m, formal_table(m)};
    for (int t = 0; t < 200; ++t) {
      const auto r = evaluate(random_diagram(static_cast<int>(rng() % 16), m + 1, rng()), cfg);
      bad += r.value.is_zero() && r.trace.table_lookups == 0 ? 0 : 1;
    }
  }
  return {bad == 0, "800 diagrams with k = m+1, m in 0..3, " + std::to_string(bad) + " nonzero or with lookups",
          seconds_since(t0)};
}

Outcome criterion6(const Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int> ns{16, 32, 64, 128, 256};
  std::ostringstream d;
  bool pass = true;
  for (int m = 1; m <= 3; ++m) {
    const EvalConfig cfg{m, m == 2 ? ctx.table : formal_table(m)};
    std::vector<double> x, y;
    for (int n : ns) {
      const auto r = evaluate(family_code(Family::Twist, n, 0, 0), cfg);
      x.push_back(n);
      y.push_back(static_cast<double>(r.trace.elementary_ops));
    }
    const double slope = loglog_slope(x, y);
    pass = pass && slope <= m + kSlopeSlack;
    d << "m=" << m << " slope " << fmt("%.3f", slope) << (m < 3 ? ", " : "");
  }
  Outcome o{pass, d.str(), seconds_since(t0)};
  o.pass = o.pass && o.seconds < kLimitC6;
  return o;
}

double formal_norm(const InvariantValue& v) { return v.norm().convert_to<double>(); }

Outcome criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> fit_ns, check_ns{40, 48, 64, 96, 128, 192, 256};
  for (int n = 4; n <= 32; n += 2) fit_ns.push_back(n);
  std::ostringstream d;
  bool pass = true;
  for (int k0 = 0; k0 <= 1; ++k0) {
    for (int m = std::max(1, k0); m <= 3; ++m) {
      const int deg = m - k0;
      const EvalConfig cfg{m, formal_table(m)};
      Eigen::MatrixXd a(static_cast<Eigen::Index>(fit_ns.size()), deg + 1);
      Eigen::VectorXd b(static_cast<Eigen::Index>(fit_ns.size()));
      for (std::size_t i = 0; i < fit_ns.size(); ++i) {
        const double n = fit_ns[i];
        for (int j = 0; j <= deg; ++j) a(static_cast<Eigen::Index>(i), j) = std::pow(n, j);
        b(static_cast<Eigen::Index>(i)) = formal_norm(evaluate(family_code(Family::Twist, fit_ns[i], k0, 0), cfg).value);
      }
      const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
      const double big_c = c.cwiseAbs().sum() * (1 + kFitRelTol);
      double worst = 0;
      for (int n : check_ns) {
        const double v = formal_norm(evaluate(family_code(Family::Twist, n, k0, 0), cfg).value);
        worst = std::max(worst, v / (big_c * std::pow(n, deg)));
      }
      pass = pass && worst <= 1;
      d << "k0=" << k0 << " m=" << m << " C=" << fmt("%.3g", big_c) << " ratio " << fmt("%.3f", worst) << "; ";
    }
  }
  auto detail = d.str();
  detail.resize(detail.size() - 2);
  return {pass, detail, seconds_since(t0)};
}

Outcome criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed + 8);
  int over_bound = 0, multi = 0, paths = 0, maps = 0;
  while (maps < 500) {
    const int n = static_cast<int>(rng() % 13);
    const int k = static_cast<int>(rng() % 4);
    if (n + k == 0) continue;
    ++maps;
    const auto pd = random_planar_knot(n + k, k, rng());
    const auto [ps, rep] = route_exposing_paths(pd, unexposed_doubles(pd));
    paths += static_cast<int>(ps.size());
    over_bound += rep.total_intersections <= k * (2 * (k + n) + 1) ? 0 : 1;
    for (const auto& p : ps) {
      std::map<int, int> mult;
      for (const auto& s : p.steps) multi += ++mult[s.edge] > 1 ? 1 : 0;
    }
  }
  std::ostringstream d;
  d << maps << " maps, " << paths << " paths, " << over_bound << " over bound, " << multi << " repeated edges";
  return {over_bound == 0 && multi == 0, d.str(), seconds_since(t0)};
}

Outcome criterion9(const Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  int instances = 0, pulls = 0, bad = 0, geometric_bad = 0;
  for (const auto& r : ctx.corpus) {
    if (r.format != Format::PD) continue;
    const int k = r.pd.doubles();
    if (k < 1 || k > 2 || r.pd.crossings() > 8) continue;
    const auto unexposed = unexposed_doubles(r.pd);
    if (unexposed.empty()) continue;
    ++instances;
    const auto lhs = naive_singular_eval(r.gauss, ctx.c2);
    geometric_bad += lhs == InvariantValue(testing_oracle::geometric_c2(r.pd)) ? 0 : 1;
    for (const auto& p : route_exposing_paths(r.pd, unexposed).first) {
      ++pulls;
      const auto res = pull_double_point(r.pd, p);
      auto rhs = naive_singular_eval(pd_to_gauss(res.diagram), ctx.c2);
      for (const auto& e : res.emitted_events) rhs += e.sign * naive_singular_eval(e.diagram, ctx.c2);
      bad += rhs == lhs ? 0 : 1;
    }
  }
  std::ostringstream d;
  d << instances << " PD instances, " << pulls << " pulls, " << bad << " telescoping failures, " << geometric_bad
    << " disagreements with geometric resolution";
  return {instances >= 50 && bad == 0 && geometric_bad == 0, d.str(), seconds_since(t0)};
}

Outcome criterion10(const Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = select_configuration(ctx.corpus);
  const auto path = (std::filesystem::temp_directory_path() / "vkit_acceptance_c2.config").string();
  write_document(path, {Format::Table, format_configuration(rep.chosen)});
  // Cold start: only the persisted file is used from here on.
  const auto loaded = load_configuration(path);
  const auto c2 = c2_oracle(loaded);
  const auto again = equivalence(ctx, build_actuality_table(2, c2), c2);
  const bool bundled = load_configuration(data_dir() + "/c2.config") == rep.chosen;
  std::ostringstream d;
  d << rep.survivors.size() << " survivors, chose " << rep.chosen.name() << (rep.ambiguous ? " (ambiguous)" : "")
    << ", bundled config " << (bundled ? "matches" : "differs") << "; rerun: " << again.detail;
  return {!rep.survivors.empty() && loaded == rep.chosen && bundled && again.pass, d.str(), seconds_since(t0)};
}

}  // namespace

int main() {
  Context ctx;
  ctx.corpus = load_corpus(data_dir() + "/corpus.txt");
  ctx.config = load_configuration(data_dir() + "/c2.config");
  ctx.c2 = c2_oracle(ctx.config);
  ctx.table = build_actuality_table(2, ctx.c2);

  std::map<int, std::pair<std::string, Outcome>> results;
  auto run = [&](int id, const std::string& name, const std::function<Outcome()>& f) {
    try {
      results[id] = {name, f()};
    } catch (const std::exception& e) {
      results[id] = {name, Outcome{false, std::string("exception: ") + e.what(), 0}};
    }
  };
  run(1, "oracle equivalence", [&] { return criterion1(ctx); });
  run(2, "skein identity", [&] { return criterion2(ctx); });
  run(3, "type vanishing", [&] { return criterion3(); });
  run(6, "complexity scaling", [&] { return criterion6(ctx); });
  run(7, "value growth", [&] { return criterion7(); });
  run(8, "intersection bound", [&] { return criterion8(); });
  run(9, "pulling telescoping", [&] { return criterion9(ctx); });
  run(10, "configuration derivation", [&] { return criterion10(ctx); });

  std::ostringstream traces;
  traces << audit.traces << " traces, " << audit.nodes << " path nodes";
  results[4] = {"events per node", Outcome{audit.p_violations == 0 && audit.a_max <= 1.0,
                                          traces.str() + ", a_max " + fmt("%.3f", audit.a_max) + ", " +
                                              std::to_string(audit.p_violations) + " nodes with p > n",
                                          0}};
  results[5] = {"event vertex count", Outcome{audit.vertex_violations == 0,
                                             traces.str() + ", max excess over n+m+1 is " + std::to_string(audit.max_excess) +
                                                 ", " + std::to_string(audit.vertex_violations) + " violations",
                                             0}};

  int failed = 0;
  for (const auto& [id, entry] : results) {
    const auto& [name, o] = entry;
    std::printf("criterion %2d %s %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                o.seconds);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
