#include "vkit/chords.hpp"

#include <algorithm>
#include <array>

#include "vkit/error.hpp"

namespace vkit {

namespace {

constexpr int kMaxDegree = 26;

void matchings(std::vector<int>& word, int next, std::vector<std::string>& out) {
  auto free = std::find(word.begin(), word.end(), -1);
  if (free == word.end()) {
    out.push_back(canonical_word(word));
    return;
  }
  *free = next;
  for (auto it = free + 1; it != word.end(); ++it) {
    if (*it != -1) continue;
    *it = next;
    matchings(word, next + 1, out);
    *it = -1;
  }
  *free = -1;
}

}  // namespace

ChordDiagram::ChordDiagram(std::string word) : word_(std::move(word)) {
  if (!is_canonical(word_)) throw Error(ErrorCode::NonCanonicalWord, "'" + word_ + "'");
}

bool is_canonical(std::string_view word) noexcept {
  std::array<int, kMaxDegree> count{};
  char next = 'A';
  for (char c : word) {
    if (c < 'A' || c > 'Z') return false;
    auto& seen = count[static_cast<std::size_t>(c - 'A')];
    if (seen == 0) {
      if (c != next) return false;
      ++next;
    }
    if (++seen > 2) return false;
  }
  for (char c = 'A'; c < next; ++c) {
    if (count[static_cast<std::size_t>(c - 'A')] != 2) return false;
  }
  return true;
}

std::string canonical_word(const std::vector<int>& labels) {
  std::vector<std::pair<int, char>> seen;
  std::string word;
  word.reserve(labels.size());
  for (int label : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [label](const auto& p) { return p.first == label; });
    if (it == seen.end()) {
      if (seen.size() >= kMaxDegree) throw Error(ErrorCode::NonCanonicalWord, "more than 26 chords");
      seen.emplace_back(label, static_cast<char>('A' + seen.size()));
      word.push_back(seen.back().second);
    } else {
      word.push_back(it->second);
    }
  }
  return word;
}

ChordDiagram extract(const SingularGaussCode& code) {
  std::vector<int> labels;
  for (const auto& t : code.tokens()) {
    if (t.kind == Visit::Double) labels.push_back(t.id);
  }
  return ChordDiagram(canonical_word(labels));
}

std::vector<ChordDiagram> enumerate(int d) {
  std::vector<std::string> words;
  std::vector<int> slots(static_cast<std::size_t>(2 * std::max(d, 0)), -1);
  matchings(slots, 0, words);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<ChordDiagram> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(std::move(w));
  return out;
}

SingularGaussCode realize_kd(const ChordDiagram& d) {
  std::vector<GaussToken> tokens;
  for (char c : d.word()) tokens.push_back({Visit::Double, c - 'A' + 1, 0});
  return SingularGaussCode(std::move(tokens));
}

}  // namespace vkit
