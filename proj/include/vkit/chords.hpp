#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vkit/gauss.hpp"

namespace vkit {

/// A linear chord diagram in canonical form: each letter appears twice and
/// first occurrences run A, B, C, ...
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Throws NonCanonicalWord unless `word` is already canonical.
  explicit ChordDiagram(std::string word);

  const std::string& word() const noexcept { return word_; }
  int degree() const noexcept { return static_cast<int>(word_.size() / 2); }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::string word_;
};

bool is_canonical(std::string_view word) noexcept;

/// Relabels an arbitrary pairing word (labels may be any ints) into the
/// canonical letter word.
std::string canonical_word(const std::vector<int>& labels);

ChordDiagram extract(const SingularGaussCode& code);

/// All canonical words of degree d, sorted.
std::vector<ChordDiagram> enumerate(int d);

/// A code consisting only of the double points of D, in word order.
SingularGaussCode realize_kd(const ChordDiagram& d);

}  // namespace vkit
