#include "vkit/gauss.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "vkit/error.hpp"

namespace vkit {

namespace {

struct VisitAccount {
  std::size_t count = 0;
  std::size_t first = 0;
  std::size_t second = 0;
};

std::string describe(Visit kind, int id) {
  return std::string(kind == Visit::Double ? "D" : "crossing ") + std::to_string(id);
}

Visit flipped(Visit v) { return v == Visit::Over ? Visit::Under : Visit::Over; }

}  // namespace

SingularGaussCode::SingularGaussCode(std::vector<GaussToken> tokens) : tokens_(std::move(tokens)) {
  std::map<int, VisitAccount> crossings;
  std::map<int, VisitAccount> doubles;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (t.id <= 0) throw Error(ErrorCode::MalformedToken, "non-positive id " + std::to_string(t.id));
    if (t.kind == Visit::Double) {
      if (t.sign != 0) throw Error(ErrorCode::MalformedToken, "double point D" + std::to_string(t.id) + " carries a sign");
    } else if (t.sign != 1 && t.sign != -1) {
      throw Error(ErrorCode::MalformedToken, "crossing " + std::to_string(t.id) + " needs sign +1 or -1");
    }
    auto& acc = (t.kind == Visit::Double ? doubles : crossings)[t.id];
    if (acc.count == 0) acc.first = i;
    if (acc.count == 1) acc.second = i;
    ++acc.count;
  }
  for (const auto& [id, acc] : crossings) {
    if (acc.count != 2) {
      throw Error(ErrorCode::UnbalancedCrossing,
                  describe(Visit::Over, id) + " visited " + std::to_string(acc.count) + " times");
    }
    const auto& a = tokens_[acc.first];
    const auto& b = tokens_[acc.second];
    if (a.kind == b.kind) {
      throw Error(ErrorCode::UnbalancedCrossing, describe(Visit::Over, id) + " needs one O and one U visit");
    }
    if (a.sign != b.sign) throw Error(ErrorCode::SignMismatch, describe(Visit::Over, id));
  }
  for (const auto& [id, acc] : doubles) {
    if (acc.count != 2) {
      throw Error(ErrorCode::UnbalancedCrossing,
                  describe(Visit::Double, id) + " visited " + std::to_string(acc.count) + " times");
    }
  }
  crossings_ = static_cast<int>(crossings.size());
  doubles_ = static_cast<int>(doubles.size());
}

bool SingularGaussCode::has_crossing(int id) const noexcept {
  return std::any_of(tokens_.begin(), tokens_.end(),
                     [id](const GaussToken& t) { return t.kind != Visit::Double && t.id == id; });
}

bool SingularGaussCode::has_double(int id) const noexcept {
  return std::any_of(tokens_.begin(), tokens_.end(),
                     [id](const GaussToken& t) { return t.kind == Visit::Double && t.id == id; });
}

std::pair<std::size_t, std::size_t> SingularGaussCode::crossing_visits(int id) const {
  std::size_t found = 0;
  std::size_t pos[2] = {0, 0};
  for (std::size_t i = 0; i < tokens_.size() && found < 2; ++i) {
    if (tokens_[i].kind != Visit::Double && tokens_[i].id == id) pos[found++] = i;
  }
  if (found != 2) throw Error(ErrorCode::UnknownCrossing, std::to_string(id));
  return {pos[0], pos[1]};
}

std::pair<std::size_t, std::size_t> SingularGaussCode::double_visits(int id) const {
  std::size_t found = 0;
  std::size_t pos[2] = {0, 0};
  for (std::size_t i = 0; i < tokens_.size() && found < 2; ++i) {
    if (tokens_[i].kind == Visit::Double && tokens_[i].id == id) pos[found++] = i;
  }
  if (found != 2) throw Error(ErrorCode::UnknownDouble, std::to_string(id));
  return {pos[0], pos[1]};
}

int SingularGaussCode::crossing_sign(int id) const { return tokens_[crossing_visits(id).first].sign; }

std::vector<int> SingularGaussCode::crossing_ids() const {
  std::vector<int> ids;
  std::vector<int> seen;
  for (const auto& t : tokens_) {
    if (t.kind == Visit::Double) continue;
    if (std::find(seen.begin(), seen.end(), t.id) != seen.end()) continue;
    seen.push_back(t.id);
    ids.push_back(t.id);
  }
  return ids;
}

std::vector<int> SingularGaussCode::double_ids() const {
  std::vector<int> ids;
  for (const auto& t : tokens_) {
    if (t.kind == Visit::Double && std::find(ids.begin(), ids.end(), t.id) == ids.end()) ids.push_back(t.id);
  }
  return ids;
}

int SingularGaussCode::fresh_crossing_id() const noexcept {
  int top = 0;
  for (const auto& t : tokens_) {
    if (t.kind != Visit::Double) top = std::max(top, t.id);
  }
  return top + 1;
}

int SingularGaussCode::fresh_double_id() const noexcept {
  int top = 0;
  for (const auto& t : tokens_) {
    if (t.kind == Visit::Double) top = std::max(top, t.id);
  }
  return top + 1;
}

SingularGaussCode change_crossing(const SingularGaussCode& code, int id) {
  const auto [a, b] = code.crossing_visits(id);
  auto tokens = code.tokens();
  for (auto p : {a, b}) {
    tokens[p].kind = flipped(tokens[p].kind);
    tokens[p].sign = -tokens[p].sign;
  }
  return SingularGaussCode(std::move(tokens));
}

SingularGaussCode make_singular(const SingularGaussCode& code, int id) {
  const auto [a, b] = code.crossing_visits(id);
  const int fresh = code.fresh_double_id();
  auto tokens = code.tokens();
  for (auto p : {a, b}) tokens[p] = GaussToken{Visit::Double, fresh, 0};
  return SingularGaussCode(std::move(tokens));
}

SingularGaussCode resolve_double(const SingularGaussCode& code, int double_id, Branch branch) {
  const auto [a, b] = code.double_visits(double_id);
  const int fresh = code.fresh_crossing_id();
  auto tokens = code.tokens();
  if (branch == Branch::Positive) {
    tokens[a] = GaussToken{Visit::Over, fresh, +1};
    tokens[b] = GaussToken{Visit::Under, fresh, +1};
  } else {
    tokens[a] = GaussToken{Visit::Under, fresh, -1};
    tokens[b] = GaussToken{Visit::Over, fresh, -1};
  }
  return SingularGaussCode(std::move(tokens));
}

bool is_descending(const SingularGaussCode& code) {
  std::vector<int> seen;
  for (const auto& t : code.tokens()) {
    if (t.kind == Visit::Double) continue;
    if (std::find(seen.begin(), seen.end(), t.id) != seen.end()) continue;
    if (t.kind != Visit::Over) return false;
    seen.push_back(t.id);
  }
  return true;
}

std::vector<int> nesting_depths(const SingularGaussCode& code) {
  const auto& tokens = code.tokens();
  std::vector<int> depth(tokens.size(), 0);
  for (int id : code.double_ids()) {
    const auto [a, b] = code.double_visits(id);
    for (std::size_t i = a + 1; i < b; ++i) ++depth[i];
  }
  return depth;
}

bool is_stacked(const SingularGaussCode& code) {
  const auto depth = nesting_depths(code);
  for (int id : code.crossing_ids()) {
    const auto [a, b] = code.crossing_visits(id);
    const bool over_first = code.tokens()[a].kind == Visit::Over;
    if (over_first != target_over_first(PathTarget::Stacked, depth[a], depth[b])) return false;
  }
  return true;
}

DescendingPath crossing_change_path(const SingularGaussCode& code, PathTarget target) {
  const auto depth = nesting_depths(code);
  DescendingPath path;
  SingularGaussCode current = code;
  for (int id : code.crossing_ids()) {
    const auto [a, b] = current.crossing_visits(id);
    const auto& first = current.tokens()[a];
    if ((first.kind == Visit::Over) == target_over_first(target, depth[a], depth[b])) continue;
    path.events.push_back(CrossingChangeEvent{first.sign, make_singular(current, id), id});
    current = change_crossing(current, id);
  }
  path.terminal = std::move(current);
  return path;
}

namespace {

bool is_crossing(const GaussToken& t) { return t.kind != Visit::Double; }

[[noreturn]] void mismatch(const char* what) { throw Error(ErrorCode::PatternMismatch, what); }

bool r2_pattern(const std::vector<GaussToken>& t, std::size_t p, std::size_t q) {
  if (q < p + 2 || q + 1 >= t.size()) return false;
  const auto &a = t[p], &b = t[p + 1], &c = t[q], &d = t[q + 1];
  if (!is_crossing(a) || !is_crossing(b) || !is_crossing(c) || !is_crossing(d)) return false;
  if (a.id == b.id || a.kind != b.kind || c.kind != d.kind || a.kind == c.kind) return false;
  const bool same = c.id == a.id && d.id == b.id;
  const bool swapped = c.id == b.id && d.id == a.id;
  return (same || swapped) && a.sign == -b.sign;
}

bool r3_pattern(const std::vector<GaussToken>& t, std::size_t p1, std::size_t p2, std::size_t p3) {
  if (p2 < p1 + 2 || p3 < p2 + 2 || p3 + 1 >= t.size()) return false;
  const std::size_t pos[3] = {p1, p2, p3};
  int overs[3];
  std::vector<int> ids;
  for (int i = 0; i < 3; ++i) {
    const auto &x = t[pos[i]], &y = t[pos[i] + 1];
    if (!is_crossing(x) || !is_crossing(y) || x.id == y.id) return false;
    overs[i] = (x.kind == Visit::Over) + (y.kind == Visit::Over);
    ids.push_back(x.id);
    ids.push_back(y.id);
  }
  std::sort(ids.begin(), ids.end());
  if (!(ids[0] == ids[1] && ids[2] == ids[3] && ids[4] == ids[5] && ids[1] != ids[2] && ids[3] != ids[4])) {
    return false;
  }
  std::sort(overs, overs + 3);
  return overs[0] == 0 && overs[1] == 1 && overs[2] == 2;
}

}  // namespace

SingularGaussCode apply_rmove(const SingularGaussCode& code, const RMove& move) {
  auto tokens = code.tokens();
  const auto& site = move.site;
  switch (move.kind) {
    case RMoveKind::R1Plus: {
      if (site.size() != 1 || site[0] > tokens.size()) mismatch("R1+ needs one insertion position");
      if (move.first_visit == Visit::Double || (move.sign != 1 && move.sign != -1)) mismatch("R1+ kink kind");
      const int id = code.fresh_crossing_id();
      const GaussToken first{move.first_visit, id, move.sign};
      const GaussToken second{flipped(move.first_visit), id, move.sign};
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(site[0]), {first, second});
      break;
    }
    case RMoveKind::R1Minus: {
      if (site.size() != 1 || site[0] + 1 >= tokens.size()) mismatch("R1- site out of range");
      const auto &a = tokens[site[0]], &b = tokens[site[0] + 1];
      if (!is_crossing(a) || !is_crossing(b) || a.id != b.id) mismatch("R1- needs an adjacent kink pair");
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(site[0]),
                   tokens.begin() + static_cast<std::ptrdiff_t>(site[0] + 2));
      break;
    }
    case RMoveKind::R2Plus: {
      if (site.size() != 2 || site[0] > site[1] || site[1] > tokens.size()) mismatch("R2+ needs p <= q");
      if (move.first_visit == Visit::Double || (move.sign != 1 && move.sign != -1)) mismatch("R2+ kind");
      const int a = code.fresh_crossing_id();
      const int b = a + 1;
      const Visit x = move.first_visit;
      const Visit y = flipped(x);
      const GaussToken xa{x, a, move.sign}, xb{x, b, -move.sign};
      const GaussToken ya{y, a, move.sign}, yb{y, b, -move.sign};
      const auto q = static_cast<std::ptrdiff_t>(site[1]);
      if (move.reversed) {
        tokens.insert(tokens.begin() + q, {yb, ya});
      } else {
        tokens.insert(tokens.begin() + q, {ya, yb});
      }
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(site[0]), {xa, xb});
      break;
    }
    case RMoveKind::R2Minus: {
      if (site.size() != 2 || !r2_pattern(tokens, site[0], site[1])) mismatch("R2- bigon pattern");
      const auto p = static_cast<std::ptrdiff_t>(site[0]);
      const auto q = static_cast<std::ptrdiff_t>(site[1]);
      tokens.erase(tokens.begin() + q, tokens.begin() + q + 2);
      tokens.erase(tokens.begin() + p, tokens.begin() + p + 2);
      break;
    }
    case RMoveKind::R3: {
      if (site.size() != 3 || !r3_pattern(tokens, site[0], site[1], site[2])) mismatch("R3 triangle pattern");
      for (auto p : site) std::swap(tokens[p], tokens[p + 1]);
      break;
    }
  }
  return SingularGaussCode(std::move(tokens));
}

std::vector<RMove> rmove_sites(const SingularGaussCode& code, RMoveKind kind) {
  const auto& t = code.tokens();
  std::vector<RMove> sites;
  const std::size_t len = t.size();
  switch (kind) {
    case RMoveKind::R1Minus:
      for (std::size_t p = 0; p + 1 < len; ++p) {
        if (is_crossing(t[p]) && is_crossing(t[p + 1]) && t[p].id == t[p + 1].id) {
          sites.push_back(RMove{RMoveKind::R1Minus, {p}});
        }
      }
      break;
    case RMoveKind::R2Minus:
      for (std::size_t p = 0; p + 1 < len; ++p) {
        for (std::size_t q = p + 2; q + 1 < len; ++q) {
          if (r2_pattern(t, p, q)) sites.push_back(RMove{RMoveKind::R2Minus, {p, q}});
        }
      }
      break;
    case RMoveKind::R3:
      for (std::size_t a = 0; a + 1 < len; ++a) {
        for (std::size_t b = a + 2; b + 1 < len; ++b) {
          for (std::size_t c = b + 2; c + 1 < len; ++c) {
            if (r3_pattern(t, a, b, c)) sites.push_back(RMove{RMoveKind::R3, {a, b, c}});
          }
        }
      }
      break;
    default:
      break;
  }
  return sites;
}

SingularGaussCode random_diagram(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto below = [&rng](std::uint64_t bound) { return rng() % bound; };

  std::vector<GaussToken> tokens;
  tokens.reserve(static_cast<std::size_t>(2 * (n + k)));
  for (int id = 1; id <= n; ++id) {
    tokens.push_back({Visit::Over, id, 0});
    tokens.push_back({Visit::Over, id, 0});
  }
  for (int id = 1; id <= k; ++id) {
    tokens.push_back({Visit::Double, id, 0});
    tokens.push_back({Visit::Double, id, 0});
  }
  for (std::size_t i = tokens.size(); i > 1; --i) std::swap(tokens[i - 1], tokens[below(i)]);

  std::vector<int> sign(static_cast<std::size_t>(n) + 1);
  std::vector<bool> over_first(static_cast<std::size_t>(n) + 1);
  for (int id = 1; id <= n; ++id) {
    sign[static_cast<std::size_t>(id)] = below(2) ? 1 : -1;
    over_first[static_cast<std::size_t>(id)] = below(2) == 1;
  }
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  for (auto& t : tokens) {
    if (t.kind == Visit::Double) continue;
    const auto id = static_cast<std::size_t>(t.id);
    const bool first = !visited[id];
    visited[id] = true;
    t.kind = (first == over_first[id]) ? Visit::Over : Visit::Under;
    t.sign = sign[id];
  }
  return SingularGaussCode(std::move(tokens));
}

}  // namespace vkit
