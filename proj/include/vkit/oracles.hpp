#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vkit/codec.hpp"
#include "vkit/gauss.hpp"
#include "vkit/table.hpp"
#include "vkit/value.hpp"

namespace vkit {

/// Relative position of two crossings a, b with a visited first:
/// Interleaved a1<b1<a2<b2, Nested a1<b1<b2<a2, Disjoint a1<a2<b1<b2.
enum class ArrowShape { Interleaved, Nested, Disjoint };

/// A two-crossing pattern; the formula sums scale*sign(a)*sign(b) over the
/// ordered pairs matching the shape whose first visits have the given roles.
struct ArrowConfiguration {
  ArrowShape shape = ArrowShape::Interleaved;
  Visit first_role = Visit::Over;
  Visit second_role = Visit::Under;
  int scale = 1;

  std::string name() const;
  friend bool operator==(const ArrowConfiguration&, const ArrowConfiguration&) = default;
};

/// All 12 shape/role combinations with scale +1, in name order.
std::vector<ArrowConfiguration> candidate_configurations();

std::string format_configuration(const ArrowConfiguration& c);
ArrowConfiguration parse_configuration(std::string_view text);

/// The counting formula; regular crossings only, double points are skipped.
InvariantValue configuration_value(const SingularGaussCode& code, const ArrowConfiguration& c);

using BaseOracle = std::function<InvariantValue(const SingularGaussCode&)>;

BaseOracle c2_oracle(const ArrowConfiguration& c);

/// The three-crossing trefoil O1+ U2+ O3+ U1+ O2+ U3+.
SingularGaussCode trefoil_code();

struct SelectionReport {
  std::vector<ArrowConfiguration> survivors;
  ArrowConfiguration chosen;
  bool ambiguous = false;
  /// Survivors when only one move class of variants is checked.
  std::map<std::string, int> survivors_per_class;
  int variants_checked = 0;
};

/// Keeps the candidates that vanish on the empty code, agree on every
/// nonsingular corpus record and its parent, and are nonzero on the trefoil.
/// Throws NoConfigurationFound.
SelectionReport select_configuration(const std::vector<CorpusRecord>& corpus);

/// Sum over all resolutions, Negative branches counted with sign -1.
InvariantValue naive_singular_eval(const SingularGaussCode& code, const BaseOracle& oracle);

ActualityTable build_actuality_table(int m, const BaseOracle& oracle);
ActualityTable formal_table(int m);

}  // namespace vkit
