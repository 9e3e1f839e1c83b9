#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vkit/gauss.hpp"
#include "vkit/table.hpp"
#include "vkit/value.hpp"

namespace vkit {

struct EvalConfig {
  int m = 0;
  ActualityTable table;
  PathTarget target = PathTarget::Stacked;
  /// Cache node results by full code. Off for scaling measurements.
  bool memo = false;
};

/// One node that generated a crossing-change path.
struct NodeRecord {
  int level = 0;
  int n = 0;  // regular crossings of the node's diagram
  int k = 0;  // double points of the node's diagram
  int p = 0;  // events emitted
  int event_vertices = 0;  // vertices of every event diagram it emitted
};

struct EvalTrace {
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<std::int64_t> nodes_per_level;
  std::vector<NodeRecord> nodes;
  int max_crossings_seen = 0;  // largest vertex count of any node diagram
  std::int64_t elementary_ops = 0;
  std::int64_t table_lookups = 0;

  std::vector<int> p_per_node() const;
  std::int64_t total_nodes() const;
};

struct ValueWithTrace {
  InvariantValue value;
  EvalTrace trace;
  /// V(K) = sum of coefficient * table[word].
  FormalSum coefficients;
};

/// Throws LookupMiss when the table lacks a word the recursion reaches.
ValueWithTrace eval(const SingularGaussCode& code, const EvalConfig& cfg);

struct BoundReport {
  int n = 0;
  int m = 0;
  int k0 = 0;
  double a_max = 0;
  double b_max = 0;
  int max_p = 0;
  int max_event_vertices = 0;
  std::int64_t total_nodes = 0;
  double node_bound = 0;
  double value_norm = 0;
  double bound_rhs = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Recomputes the path bounds from a trace; `c_k` scales the value bound
/// C_k * n^(m-k0). Violations are listed, never silently dropped.
BoundReport check_bounds(const EvalTrace& trace, const InvariantValue& value, double c_k = 0);

/// Throws BoundViolation if the report lists any violation.
void require_bounds(const BoundReport& report);

std::string trace_json(const EvalTrace& trace, const InvariantValue& value);

enum class Family { Twist, RandomDescendingPerturbed };

/// Family member with n crossings; k0 of them (0 or 1) made singular.
SingularGaussCode family_code(Family family, int n, int k0, std::uint64_t seed);

struct ScalingRow {
  int n = 0;
  int trial = 0;
  int m = 0;
  std::int64_t elementary_ops = 0;
  std::int64_t nodes = 0;
  double value_norm = 0;
  double a_max = 0;
  double b_max = 0;
};

std::vector<ScalingRow> scaling_experiment(Family family, const std::vector<int>& ns, int m, int trials,
                                           std::uint64_t seed, const ActualityTable& table, int k0 = 0);

std::string scaling_csv(const std::vector<ScalingRow>& rows);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace vkit
