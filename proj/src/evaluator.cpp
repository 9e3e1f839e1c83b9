#include "vkit/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/error.hpp"
#include "vkit/planar.hpp"
#include "vkit/plat.hpp"

namespace vkit {

namespace {

using Accumulator = std::unordered_map<std::string, std::int64_t>;

struct Context {
  const EvalConfig& cfg;
  EvalTrace& trace;
  std::unordered_map<std::string, Accumulator> cache;
};

void count_node(EvalTrace& tr, int level) {
  if (tr.nodes_per_level.size() <= static_cast<std::size_t>(level)) {
    tr.nodes_per_level.resize(static_cast<std::size_t>(level) + 1, 0);
  }
  ++tr.nodes_per_level[static_cast<std::size_t>(level)];
}

void add(Accumulator& acc, const std::string& word, std::int64_t c) {
  auto& slot = acc[word];
  slot = checked_add(slot, c);
}

std::string cache_key(const std::vector<GaussToken>& tokens) {
  std::string key;
  key.reserve(tokens.size() * 4);
  for (const auto& t : tokens) {
    key += static_cast<char>('0' + static_cast<int>(t.kind));
    key += std::to_string(t.id);
    key += t.sign > 0 ? '+' : (t.sign < 0 ? '-' : '.');
  }
  return key;
}

void visit(Context& ctx, std::vector<GaussToken>& tokens, int level, std::int64_t sign, Accumulator& acc);

void visit_node(Context& ctx, std::vector<GaussToken>& tokens, int level, std::int64_t sign, Accumulator& acc) {
  auto& tr = ctx.trace;
  const int m = ctx.cfg.m;
  const std::size_t len = tokens.size();

  // Double-point positions in order, labelled by id; chord depth per position.
  std::vector<std::pair<std::size_t, int>> dpos;
  std::vector<int> depth(len + 1, 0);
  int max_id = 0;
  int max_double = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (tokens[i].kind == Visit::Double) {
      dpos.emplace_back(i, tokens[i].id);
      max_double = std::max(max_double, tokens[i].id);
    } else {
      max_id = std::max(max_id, tokens[i].id);
    }
  }
  {
    std::vector<int> first(static_cast<std::size_t>(max_double) + 1, -1);
    for (auto [pos, id] : dpos) {
      auto& f = first[static_cast<std::size_t>(id)];
      if (f < 0) {
        f = static_cast<int>(pos);
      } else {
        ++depth[static_cast<std::size_t>(f) + 1];
        --depth[pos];
      }
    }
    for (std::size_t i = 1; i <= len; ++i) depth[i] += depth[i - 1];
  }
  std::vector<int> partner(len, -1);
  {
    std::vector<int> first(static_cast<std::size_t>(max_id) + 1, -1);
    for (std::size_t i = 0; i < len; ++i) {
      if (tokens[i].kind == Visit::Double) continue;
      auto& f = first[static_cast<std::size_t>(tokens[i].id)];
      if (f < 0) {
        f = static_cast<int>(i);
      } else {
        partner[static_cast<std::size_t>(f)] = static_cast<int>(i);
      }
    }
  }
  tr.elementary_ops += static_cast<std::int64_t>(len);

  const int k = static_cast<int>(dpos.size() / 2);
  NodeRecord rec{level, static_cast<int>(len / 2) - k, k, 0, 0};
  std::vector<int> labels;
  labels.reserve(dpos.size() + 2);
  for (std::size_t a = 0; a < len; ++a) {
    const int b = partner[a];
    if (b < 0) continue;
    const bool over = tokens[a].kind == Visit::Over;
    if (over == target_over_first(ctx.cfg.target, depth[a], depth[static_cast<std::size_t>(b)])) continue;
    const std::int64_t s = tokens[a].sign;
    ++rec.p;
    rec.event_vertices = rec.n + rec.k;
    if (k + 1 == m) {
      // The child is a level-m leaf: only its chord word matters.
      labels.clear();
      bool placed_a = false;
      bool placed_b = false;
      for (auto [pos, id] : dpos) {
        if (!placed_a && a < pos) {
          labels.push_back(-1);
          placed_a = true;
        }
        if (!placed_b && static_cast<std::size_t>(b) < pos) {
          labels.push_back(-1);
          placed_b = true;
        }
        labels.push_back(id);
      }
      if (!placed_a) labels.push_back(-1);
      if (!placed_b) labels.push_back(-1);
      count_node(tr, level + 1);
      ++tr.table_lookups;
      tr.elementary_ops += static_cast<std::int64_t>(labels.size());
      add(acc, canonical_word(labels), sign * s);
    } else {
      std::vector<GaussToken> child = tokens;
      child[a] = child[static_cast<std::size_t>(b)] = GaussToken{Visit::Double, max_double + 1, 0};
      visit(ctx, child, level + 1, sign * s, acc);
    }
    for (std::size_t p : {a, static_cast<std::size_t>(b)}) {
      tokens[p].kind = tokens[p].kind == Visit::Over ? Visit::Under : Visit::Over;
      tokens[p].sign = -tokens[p].sign;
    }
  }
  labels.clear();
  for (auto [pos, id] : dpos) labels.push_back(id);
  tr.elementary_ops += static_cast<std::int64_t>(labels.size());
  ++tr.table_lookups;
  add(acc, canonical_word(labels), sign);
  tr.nodes.push_back(rec);
}

void visit(Context& ctx, std::vector<GaussToken>& tokens, int level, std::int64_t sign, Accumulator& acc) {
  auto& tr = ctx.trace;
  const int m = ctx.cfg.m;
  int k = 0;
  for (const auto& t : tokens) k += t.kind == Visit::Double ? 1 : 0;
  k /= 2;
  count_node(tr, level);
  tr.max_crossings_seen = std::max(tr.max_crossings_seen, static_cast<int>(tokens.size() / 2));
  if (k > m) return;
  if (k == m) {
    std::vector<int> labels;
    for (const auto& t : tokens) {
      if (t.kind == Visit::Double) labels.push_back(t.id);
    }
    tr.elementary_ops += static_cast<std::int64_t>(tokens.size());
    ++tr.table_lookups;
    add(acc, canonical_word(labels), sign);
    return;
  }
  if (!ctx.cfg.memo) {
    visit_node(ctx, tokens, level, sign, acc);
    return;
  }
  const std::string key = cache_key(tokens);
  auto it = ctx.cache.find(key);
  if (it == ctx.cache.end()) {
    Accumulator local;
    visit_node(ctx, tokens, level, 1, local);
    it = ctx.cache.emplace(key, std::move(local)).first;
  }
  for (const auto& [word, c] : it->second) add(acc, word, checked_mul(c, sign));
}

}  // namespace

std::vector<int> EvalTrace::p_per_node() const {
  std::vector<int> out;
  out.reserve(nodes.size());
  for (const auto& r : nodes) out.push_back(r.p);
  return out;
}

std::int64_t EvalTrace::total_nodes() const {
  std::int64_t total = 0;
  for (auto c : nodes_per_level) total += c;
  return total;
}

ValueWithTrace eval(const SingularGaussCode& code, const EvalConfig& cfg) {
  ValueWithTrace out;
  auto& tr = out.trace;
  tr.n = code.crossings();
  tr.k = code.doubles();
  tr.m = cfg.m;
  Context ctx{cfg, tr, {}};
  Accumulator acc;
  std::vector<GaussToken> tokens = code.tokens();
  visit(ctx, tokens, code.doubles(), 1, acc);

  const ValueKind kind = cfg.table.kind().value_or(ValueKind::Numeric);
  out.value = InvariantValue::zero(kind);
  for (const auto& [word, c] : acc) {
    if (c == 0) continue;
    out.coefficients.emplace(word, c);
  }
  for (const auto& [word, c] : out.coefficients) out.value += c * cfg.table.lookup(word);
  return out;
}

BoundReport check_bounds(const EvalTrace& trace, const InvariantValue& value, double c_k) {
  BoundReport r;
  r.n = trace.n;
  r.m = trace.m;
  r.k0 = trace.k;
  for (const auto& node : trace.nodes) {
    r.max_p = std::max(r.max_p, node.p);
    r.max_event_vertices = std::max(r.max_event_vertices, node.event_vertices);
    if (node.n > 0) r.a_max = std::max(r.a_max, static_cast<double>(node.p) / node.n);
    if (node.p > node.n) {
      r.violations.push_back("node at level " + std::to_string(node.level) + " emitted " + std::to_string(node.p) +
                             " events with " + std::to_string(node.n) + " crossings");
    }
    if (node.p > 0 && node.event_vertices > node.n + node.k + 1) {
      r.violations.push_back("event diagram with " + std::to_string(node.event_vertices) + " vertices from a node with n+k+1 = " +
                             std::to_string(node.n + node.k + 1));
    }
  }
  const int root_vertices = trace.n + trace.k;
  if (r.max_event_vertices > trace.n + trace.m + 1) {
    r.violations.push_back("event diagram exceeds n+m+1 = " + std::to_string(trace.n + trace.m + 1) + " vertices");
  }
  if (trace.max_crossings_seen > root_vertices) {
    r.violations.push_back("node diagram with " + std::to_string(trace.max_crossings_seen) + " vertices exceeds the input's " +
                           std::to_string(root_vertices));
  }
  r.b_max = static_cast<double>(trace.max_crossings_seen) / std::max(trace.n, 1);
  r.total_nodes = 0;
  for (std::size_t lvl = 0; lvl < trace.nodes_per_level.size(); ++lvl) {
    if (static_cast<int>(lvl) <= trace.m) r.total_nodes += trace.nodes_per_level[lvl];
  }
  r.node_bound = 0;
  const double scaled = std::max(r.a_max, 0.0) * trace.n;
  for (int j = 0; j <= trace.m - trace.k; ++j) r.node_bound += std::pow(std::max(scaled, 1.0), j);
  if (trace.k <= trace.m && static_cast<double>(r.total_nodes) > r.node_bound) {
    r.violations.push_back("node count " + std::to_string(r.total_nodes) + " exceeds " + std::to_string(r.node_bound));
  }
  r.value_norm = value.norm().convert_to<double>();
  r.bound_rhs = c_k * std::pow(static_cast<double>(trace.n), trace.m - trace.k);
  return r;
}

void require_bounds(const BoundReport& report) {
  if (report.ok()) return;
  std::string all;
  for (const auto& v : report.violations) all += (all.empty() ? "" : "; ") + v;
  throw Error(ErrorCode::BoundViolation, all);
}

std::string trace_json(const EvalTrace& trace, const InvariantValue& value) {
  nlohmann::json j;
  j["n"] = trace.n;
  j["k"] = trace.k;
  j["m"] = trace.m;
  j["value"] = value.to_string();
  j["nodes_per_level"] = trace.nodes_per_level;
  j["p_per_node"] = trace.p_per_node();
  j["max_crossings_seen"] = trace.max_crossings_seen;
  j["elementary_ops"] = trace.elementary_ops;
  j["table_lookups"] = trace.table_lookups;
  return j.dump(2);
}

SingularGaussCode family_code(Family family, int n, int k0, std::uint64_t seed) {
  if (family == Family::Twist) {
    auto pd = twist_knot(n);
    if (k0 > 0) pd = with_double_points(pd, {n - 1});
    return pd_to_gauss(pd);
  }
  std::mt19937_64 rng(seed);
  auto base = random_diagram(n, k0, rng());
  auto tokens = base.tokens();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (auto& t : tokens) {
    if (t.kind == Visit::Double) continue;
    const bool first = !seen[static_cast<std::size_t>(t.id)];
    seen[static_cast<std::size_t>(t.id)] = true;
    t.kind = first ? Visit::Over : Visit::Under;
  }
  SingularGaussCode code(std::move(tokens));
  // Flip a quarter of the crossings away from descending.
  for (int id = 1; id <= n; ++id) {
    if (rng() % 4 == 0) code = change_crossing(code, id);
  }
  return code;
}

std::vector<ScalingRow> scaling_experiment(Family family, const std::vector<int>& ns, int m, int trials,
                                           std::uint64_t seed, const ActualityTable& table, int k0) {
  std::vector<ScalingRow> rows;
  EvalConfig cfg{m, table, PathTarget::Stacked, false};
  for (int n : ns) {
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t cell_seed = seed * 1000003ULL + static_cast<std::uint64_t>(n) * 7919ULL + static_cast<std::uint64_t>(trial);
      const auto code = family_code(family, n, k0, cell_seed);
      const auto result = eval(code, cfg);
      const auto report = check_bounds(result.trace, result.value);
      rows.push_back({n, trial, m, result.trace.elementary_ops, result.trace.total_nodes(), report.value_norm,
                      report.a_max, report.b_max});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.trial) < std::tie(b.n, b.trial);
  });
  return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "n,trial,m,elementary_ops,nodes,value_norm,a_max,b_max\n";
  out.precision(12);
  for (const auto& r : rows) {
    out << r.n << ',' << r.trial << ',' << r.m << ',' << r.elementary_ops << ',' << r.nodes << ',' << r.value_norm
        << ',' << r.a_max << ',' << r.b_max << '\n';
  }
  return out.str();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  return denom == 0 ? 0 : (static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace vkit
