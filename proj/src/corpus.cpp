#include "vkit/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "vkit/exposing.hpp"
#include "vkit/oracles.hpp"
#include "vkit/plat.hpp"

#ifndef VKIT_DATA_DIR
#define VKIT_DATA_DIR "data"
#endif

namespace vkit {

namespace {

struct Base {
  std::string name;
  Plat plat;
  bool braid = false;
};

std::vector<Base> named_bases() {
  std::vector<Base> out;
  auto braid = [&](std::string name, int strands, std::vector<int> gens) {
    out.push_back({std::move(name), braid_closure(strands, gens), true});
  };
  braid("unknot1", 2, {1});
  braid("unknot2", 3, {1, -2});
  braid("unknot3", 4, {1, -2, 3});
  braid("3_1", 2, {1, 1, 1});
  braid("3_1m", 2, {-1, -1, -1});
  braid("4_1", 3, {1, -2, 1, -2});
  braid("5_1", 2, {1, 1, 1, 1, 1});
  braid("5_1m", 2, {-1, -1, -1, -1, -1});
  braid("5_2", 3, {1, 1, 1, 2, -1, 2});
  braid("6_1", 4, {1, 1, 2, -1, -3, 2, -3});
  braid("6_2", 3, {1, 1, 1, -2, 1, -2});
  braid("6_3", 3, {1, 1, -2, 1, -2, -2});
  braid("7_1", 2, {1, 1, 1, 1, 1, 1, 1});
  braid("8_19", 3, {1, 2, 1, 2, 1, 2, 1, 2});
  braid("3_1x4_1", 4, {1, 1, 1, 2, -3, 2, -3});
  for (int n = 3; n <= 8; ++n) out.push_back({"twist" + std::to_string(n), twist_plat(n), false});
  return out;
}

std::vector<Base> random_bases(int count) {
  std::vector<Base> out;
  std::mt19937_64 rng(20240611);
  while (static_cast<int>(out.size()) < count) {
    const int strands = 3 + static_cast<int>(rng() % 2);
    const int len = 6 + static_cast<int>(rng() % 7);
    std::vector<int> gens;
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(strands - 1));
      gens.push_back(rng() % 2 ? g : -g);
    }
    auto plat = braid_closure(strands, gens);
    if (!trace_plat(plat)) continue;
    out.push_back({"rand" + std::to_string(out.size()), plat, true});
  }
  return out;
}

CorpusRecord gauss_record(std::string name, const SingularGaussCode& code) {
  CorpusRecord r;
  r.name = std::move(name);
  r.format = Format::Gauss;
  r.gauss = code;
  return r;
}

CorpusRecord pd_record(std::string name, const PlanarDiagram& pd) {
  CorpusRecord r;
  r.name = std::move(name);
  r.format = Format::PD;
  r.pd = pd;
  r.gauss = pd_to_gauss(pd);
  return r;
}

/// Replaces (i,e)(j,d)(i,d) by (j,d)(i,d)(j,e), or the reverse pattern.
bool braid_r3(std::vector<BraidLetter>& w, std::size_t p) {
  if (p + 2 >= w.size()) return false;
  const auto x = w[p], y = w[p + 1], z = w[p + 2];
  if (x.column != z.column || std::abs(x.column - y.column) != 1) return false;
  if (y.sign == z.sign) {
    w[p] = y;
    w[p + 1] = {x.column, y.sign};
    w[p + 2] = {y.column, x.sign};
    return true;
  }
  if (x.sign == y.sign) {
    w[p] = {y.column, z.sign};
    w[p + 1] = {x.column, x.sign};
    w[p + 2] = {y.column, x.sign};
    return true;
  }
  return false;
}

void add_variants(const Base& b, std::vector<CorpusRecord>& out, std::mt19937_64& rng) {
  const auto pd = trace_plat(b.plat);
  const auto code = pd_to_gauss(*pd);
  out.push_back(gauss_record(b.name, code));

  for (int i = 0; i < 2; ++i) {
    RMove move;
    move.kind = RMoveKind::R1Plus;
    move.site = {static_cast<std::size_t>(rng() % (code.length() + 1))};
    move.first_visit = rng() % 2 ? Visit::Over : Visit::Under;
    move.sign = rng() % 2 ? 1 : -1;
    out.push_back(gauss_record(b.name + "/r1." + std::to_string(i), apply_rmove(code, move)));
  }

  const auto& letters = b.plat.letters;
  for (int i = 0; i < 2; ++i) {
    Plat p = b.plat;
    const auto at = static_cast<std::ptrdiff_t>(rng() % (letters.size() + 1));
    const int col = static_cast<int>(rng() % static_cast<std::uint64_t>(p.width - 1));
    const int s = rng() % 2 ? 1 : -1;
    p.letters.insert(p.letters.begin() + at, {BraidLetter{col, s}, BraidLetter{col, -s}});
    if (auto v = trace_plat(p)) out.push_back(gauss_record(b.name + "/r2." + std::to_string(i), pd_to_gauss(*v)));
  }

  // R3 directly where the word allows it, else after an R2 that creates the pattern.
  int r3 = 0;
  for (std::size_t p = 0; p + 2 < letters.size() && r3 < 2; ++p) {
    Plat q = b.plat;
    if (!braid_r3(q.letters, p)) continue;
    if (auto v = trace_plat(q)) out.push_back(gauss_record(b.name + "/r3." + std::to_string(r3++), pd_to_gauss(*v)));
  }
  for (std::size_t p = 0; p + 1 < letters.size() && r3 < 2; ++p) {
    const auto x = letters[p], y = letters[p + 1];
    if (std::abs(x.column - y.column) != 1) continue;
    Plat mid = b.plat;
    const auto at = mid.letters.begin() + static_cast<std::ptrdiff_t>(p + 2);
    mid.letters.insert(at, {BraidLetter{x.column, y.sign}, BraidLetter{x.column, -y.sign}});
    const auto mid_pd = trace_plat(mid);
    Plat q = mid;
    if (!mid_pd || !braid_r3(q.letters, p)) continue;
    const auto v = trace_plat(q);
    if (!v) continue;
    const std::string parent = b.name + "/r2p." + std::to_string(r3);
    out.push_back(gauss_record(parent, pd_to_gauss(*mid_pd)));
    out.push_back(gauss_record(parent + "/r3.0", pd_to_gauss(*v)));
    ++r3;
  }

  if (b.braid && letters.size() > 1) {
    Plat p = b.plat;
    std::rotate(p.letters.begin(), p.letters.begin() + 1, p.letters.end());
    if (auto v = trace_plat(p)) out.push_back(gauss_record(b.name + "/conj.0", pd_to_gauss(*v)));
  }
}

void add_pull_instances(const Base& b, std::vector<CorpusRecord>& out, int limit) {
  const auto pd = trace_plat(b.plat);
  const int v = pd->vertex_count();
  if (v > 8) return;
  int added = 0;
  std::vector<std::vector<int>> choices;
  for (int a = 0; a < v; ++a) choices.push_back({a});
  for (int a = 0; a < v; ++a) {
    for (int c = a + 1; c < v; ++c) choices.push_back({a, c});
  }
  // Interleave singles and pairs so both k = 1 and k = 2 appear.
  std::stable_partition(choices.begin(), choices.end(), [](const auto& c) { return c.size() == 1; });
  std::vector<std::vector<int>> ordered;
  std::size_t singles = static_cast<std::size_t>(v);
  for (std::size_t i = 0; i < std::max(singles, choices.size() - singles); ++i) {
    if (i < singles) ordered.push_back(choices[i]);
    if (singles + i < choices.size()) ordered.push_back(choices[singles + i]);
  }
  for (const auto& c : ordered) {
    if (added >= limit) break;
    const auto sing = with_double_points(*pd, c);
    if (unexposed_doubles(sing).empty()) continue;
    out.push_back(pd_record(b.name + ".s" + std::to_string(added++), sing));
  }
}

}  // namespace

std::vector<CorpusRecord> generate_corpus() {
  std::vector<CorpusRecord> out;
  std::mt19937_64 rng(7);
  out.push_back(gauss_record("unknot0", SingularGaussCode()));
  out.push_back(gauss_record("trefoil", trefoil_code()));
  for (int i = 0; i < 2; ++i) {
    RMove move{RMoveKind::R1Plus, {static_cast<std::size_t>(2 * i + 1)}, i ? Visit::Under : Visit::Over, i ? -1 : 1};
    out.push_back(gauss_record("trefoil/r1." + std::to_string(i), apply_rmove(out[1].gauss, move)));
  }
  auto bases = named_bases();
  for (auto& b : random_bases(20)) bases.push_back(std::move(b));
  for (const auto& b : bases) add_variants(b, out, rng);
  for (const auto& b : bases) {
    const auto pd = trace_plat(b.plat);
    if (pd->vertex_count() <= 8) out.push_back(pd_record(b.name + ".pd", *pd));
  }
  for (const auto& b : bases) add_pull_instances(b, out, 3);

  for (std::uint64_t seed = 1;; ++seed) {
    auto pd = random_planar_knot(6, 3, seed);
    if (unexposed_doubles(pd).size() == 1) {
      out.push_back(pd_record("figure3", pd));
      break;
    }
  }
  return out;
}

std::string corpus_text(const std::vector<CorpusRecord>& records) {
  std::string out = "# name format code\n";
  for (const auto& r : records) out += format_corpus_record(r) + "\n";
  return out;
}

std::string data_dir() { return VKIT_DATA_DIR; }

std::vector<CorpusRecord> load_corpus(const std::string& path) {
  return parse_corpus(read_document(path, Format::Corpus).payload);
}

}  // namespace vkit
