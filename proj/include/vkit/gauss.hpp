#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace vkit {

enum class Visit : std::uint8_t { Over, Under, Double };

/// One visit of the long knot to a crossing or a double point.
struct GaussToken {
  Visit kind = Visit::Double;
  int id = 0;    // crossing ids and double ids are separate namespaces
  int sign = 0;  // +1 / -1 on Over and Under, always 0 on Double

  friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

/// A long-knot diagram with regular crossings and double points, given by
/// the ordered visits along the strand. Immutable once built.
class SingularGaussCode {
 public:
  SingularGaussCode() = default;

  /// Validates the crossing/double bookkeeping; throws vkit::Error.
  explicit SingularGaussCode(std::vector<GaussToken> tokens);

  const std::vector<GaussToken>& tokens() const noexcept { return tokens_; }
  std::size_t length() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  int crossings() const noexcept { return crossings_; }
  int doubles() const noexcept { return doubles_; }
  int vertices() const noexcept { return crossings_ + doubles_; }

  bool has_crossing(int id) const noexcept;
  bool has_double(int id) const noexcept;

  /// Token positions of the two visits, first visit first.
  std::pair<std::size_t, std::size_t> crossing_visits(int id) const;
  std::pair<std::size_t, std::size_t> double_visits(int id) const;

  int crossing_sign(int id) const;

  /// Crossing ids ordered by first visit.
  std::vector<int> crossing_ids() const;
  std::vector<int> double_ids() const;

  int fresh_crossing_id() const noexcept;
  int fresh_double_id() const noexcept;

  friend bool operator==(const SingularGaussCode& a, const SingularGaussCode& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<GaussToken> tokens_;
  int crossings_ = 0;
  int doubles_ = 0;
};

enum class Branch { Positive, Negative };

SingularGaussCode change_crossing(const SingularGaussCode& code, int id);
SingularGaussCode make_singular(const SingularGaussCode& code, int id);

/// Positive makes the first visit Over with sign +1; Negative is its
/// crossing change (first visit Under, sign -1).
SingularGaussCode resolve_double(const SingularGaussCode& code, int double_id, Branch branch);

/// Every regular crossing is first visited on the over-strand.
bool is_descending(const SingularGaussCode& code);

/// Number of chords (double points) whose two visits strictly enclose each
/// token position.
std::vector<int> nesting_depths(const SingularGaussCode& code);

/// Every regular crossing has its deeper visit over; at equal depth the
/// first visit is over. Coincides with is_descending when there are no
/// double points.
bool is_stacked(const SingularGaussCode& code);

enum class PathTarget { Descending, Stacked };

/// Whether a crossing with visits at depths (first, second) should be first
/// visited Over under the given target.
constexpr bool target_over_first(PathTarget target, int first_depth, int second_depth) noexcept {
  return target == PathTarget::Descending || first_depth >= second_depth;
}

/// A (k+1)-singular diagram seen along a path of crossing changes.
/// Before the change: V(current) = V(switched) + sign * V(diagram).
struct CrossingChangeEvent {
  int sign = 0;
  SingularGaussCode diagram;
  int changed_id = 0;
};

struct DescendingPath {
  std::vector<CrossingChangeEvent> events;
  SingularGaussCode terminal;
};

/// Left-to-right sweep by first-visit position, switching every crossing
/// that disagrees with the target.
DescendingPath crossing_change_path(const SingularGaussCode& code, PathTarget target);

inline DescendingPath descending_path(const SingularGaussCode& code) {
  return crossing_change_path(code, PathTarget::Descending);
}

inline DescendingPath stacked_path(const SingularGaussCode& code) {
  return crossing_change_path(code, PathTarget::Stacked);
}

enum class RMoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

/// A Reidemeister move on a Gauss code.
///
/// R1Plus: site = {p}, inserts a kink before token p; `first_visit` and
/// `sign` choose the kink. R1Minus: site = {p}, deletes the adjacent pair at
/// p, p+1. R2Plus: site = {p, q} with p <= q (positions in the original
/// code); inserts two crossings visited first at p with kind `first_visit`
/// and then at q with the other kind, the first crossing carrying `sign` and
/// the second its negative; `reversed` makes the q-side order (b, a).
/// R2Minus: site = {p, q}, deletes the bigon pairs at p and q.
/// R3: site = {p1, p2, p3}, three adjacent pairs forming a triangle with one
/// strand over both of its crossings; swaps the order within each pair.
struct RMove {
  RMoveKind kind = RMoveKind::R1Plus;
  std::vector<std::size_t> site;
  Visit first_visit = Visit::Over;
  int sign = +1;
  bool reversed = false;
};

SingularGaussCode apply_rmove(const SingularGaussCode& code, const RMove& move);

/// Every site where the deleting/rewriting move kinds (R1Minus, R2Minus, R3)
/// match the pattern.
std::vector<RMove> rmove_sites(const SingularGaussCode& code, RMoveKind kind);

/// Seeded uniform shuffle of n crossings and k double points with random
/// signs and random over/under order.
SingularGaussCode random_diagram(int n, int k, std::uint64_t seed);

}  // namespace vkit
