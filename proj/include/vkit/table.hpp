#pragma once

#include <map>
#include <optional>
#include <string>

#include "vkit/chords.hpp"
#include "vkit/value.hpp"

namespace vkit {

/// Values of an invariant on the chosen representatives of all chord
/// diagrams of degree at most m.
class ActualityTable {
 public:
  ActualityTable() = default;
  explicit ActualityTable(int degree) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const std::map<std::string, InvariantValue>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Throws DuplicateKey, NonCanonicalWord or MixedValueKinds.
  void insert(const ChordDiagram& d, InvariantValue value);

  std::optional<ValueKind> kind() const noexcept { return kind_; }

  /// Throws LookupMiss.
  const InvariantValue& lookup(const std::string& word) const;
  bool contains(const std::string& word) const { return entries_.count(word) != 0; }

  /// Covers every canonical word of degree <= degree().
  bool complete() const;

  friend bool operator==(const ActualityTable&, const ActualityTable&) = default;

 private:
  int degree_ = 0;
  std::optional<ValueKind> kind_;
  std::map<std::string, InvariantValue> entries_;
};

}  // namespace vkit
