#include "vkit/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "vkit/chords.hpp"
#include "vkit/corpus.hpp"
#include "vkit/error.hpp"
#include "vkit/evaluator.hpp"
#include "vkit/exposing.hpp"
#include "vkit/plat.hpp"

namespace vkit {

namespace {

struct Env {
  SuiteOptions opts;
  std::vector<CorpusRecord> corpus;
  ArrowConfiguration config;
  BaseOracle c2;
  ActualityTable table;
};

class Checker {
 public:
  Checker(std::string suite, std::vector<PropertyResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, const std::function<std::string()>& body) {
    PropertyResult r{suite_, name, true, ""};
    try {
      r.detail = body();
      if (r.detail.rfind("FAIL ", 0) == 0) {
        r.passed = false;
        r.detail.erase(0, 5);
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<PropertyResult>& out_;
};

std::string counted(int bad, int total, const std::string& what) {
  if (bad > 0) return "FAIL " + std::to_string(bad) + " of " + std::to_string(total) + " " + what;
  return std::to_string(total) + " " + what;
}

SingularGaussCode positive_at(const SingularGaussCode& k, int id) {
  return k.crossing_sign(id) > 0 ? k : change_crossing(k, id);
}

/// Nonsingular corpus diagrams with up to two crossings made singular.
std::vector<SingularGaussCode> singular_instances(const Env& env, std::mt19937_64& rng, int per_record) {
  std::vector<SingularGaussCode> out;
  for (const auto& r : env.corpus) {
    if (r.gauss.doubles() > 0) {
      if (r.gauss.doubles() <= 2) out.push_back(r.gauss);
      continue;
    }
    const auto ids = r.gauss.crossing_ids();
    if (ids.empty()) continue;
    for (int t = 0; t < per_record; ++t) {
      auto code = r.gauss;
      const int k = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < k && code.crossings() > 0; ++i) {
        const auto live = code.crossing_ids();
        code = make_singular(code, live[rng() % live.size()]);
      }
      out.push_back(code);
    }
  }
  return out;
}

void codec_suite(Env& env, Checker& c) {
  c.check("gauss-roundtrip", [&] {
    int bad = 0;
    for (const auto& r : env.corpus) bad += parse_gauss(format_gauss(r.gauss)) == r.gauss ? 0 : 1;
    return counted(bad, static_cast<int>(env.corpus.size()), "codes");
  });
  c.check("pd-euler", [&] {
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.format != Format::PD) continue;
      ++total;
      const int v = r.pd.vertex_count();
      const int f = static_cast<int>(faces(r.pd).size());
      if (r.pd.edge_count() != 2 * v + 1 || v - (r.pd.edge_count() - 1) + f != 2) ++bad;
      if (parse_pd(format_pd(r.pd)) != r.pd) ++bad;
    }
    return counted(bad, total, "PD records");
  });
  c.check("gauss-fuzz", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int accepted = 0, rejected = 0;
    const std::string alphabet = "OUD+-0123456789 ";
    for (int t = 0; t < 500; ++t) {
      auto text = format_gauss(env.corpus[rng() % env.corpus.size()].gauss);
      if (text.empty()) text = "O1+ U1+";
      const auto pos = rng() % text.size();
      text[pos] = alphabet[rng() % alphabet.size()];
      try {
        const auto code = parse_gauss(text);
        accepted += parse_gauss(format_gauss(code)) == code ? 1 : 0;
      } catch (const Error&) {
        ++rejected;
      }
    }
    return std::to_string(rejected) + " rejected, " + std::to_string(accepted) + " reparsed as valid codes";
  });
  c.check("table-roundtrip", [&] {
    int bad = 0;
    for (const auto& t : {env.table, formal_table(3)}) bad += parse_table(serialize_table(t)) == t ? 0 : 1;
    return counted(bad, 2, "tables");
  });
}

void gauss_suite(Env& env, Checker& c) {
  c.check("path-bounds", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0;
    for (int t = 0; t < 500; ++t) {
      const int n = static_cast<int>(rng() % 16);
      const int k = static_cast<int>(rng() % 3);
      const auto code = random_diagram(n, k, rng());
      for (auto target : {PathTarget::Descending, PathTarget::Stacked}) {
        const auto path = crossing_change_path(code, target);
        bool ok = static_cast<int>(path.events.size()) <= n;
        for (const auto& e : path.events) {
          ok = ok && e.diagram.doubles() == k + 1 && e.diagram.crossings() == n - 1 && e.diagram.vertices() <= n + k + 1;
        }
        ok = ok && extract(path.terminal) == extract(code);
        ok = ok && (target == PathTarget::Descending ? is_descending(path.terminal) : is_stacked(path.terminal));
        bad += ok ? 0 : 1;
      }
    }
    return counted(bad, 1000, "paths");
  });
  c.check("telescoping", [&] {
    std::mt19937_64 rng(env.opts.seed + 1);
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.gauss.doubles() > 1 || r.gauss.crossings() > 12) continue;
      ++total;
      const auto path = stacked_path(r.gauss);
      auto rhs = naive_singular_eval(path.terminal, env.c2);
      for (const auto& e : path.events) rhs += e.sign * naive_singular_eval(e.diagram, env.c2);
      bad += rhs == naive_singular_eval(r.gauss, env.c2) ? 0 : 1;
    }
    return counted(bad, total, "corpus paths");
  });
  c.check("involutions", [&] {
    std::mt19937_64 rng(env.opts.seed + 2);
    int bad = 0;
    for (int t = 0; t < 300; ++t) {
      const auto code = random_diagram(1 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 2), rng());
      const auto ids = code.crossing_ids();
      const int id = ids[rng() % ids.size()];
      if (change_crossing(change_crossing(code, id), id) != code) ++bad;
      const int d = code.double_ids().front();
      const auto pos = resolve_double(code, d, Branch::Positive);
      const auto neg = resolve_double(code, d, Branch::Negative);
      if (change_crossing(pos, code.fresh_crossing_id()) != neg) ++bad;
    }
    return counted(bad, 300, "diagrams");
  });
  c.check("stacked-canonical", [&] {
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.gauss.doubles() == 0 || r.gauss.doubles() > 2) continue;
      ++total;
      const auto terminal = stacked_path(r.gauss).terminal;
      bad += naive_singular_eval(terminal, env.c2) == env.table.lookup(extract(terminal).word()) ? 0 : 1;
    }
    return counted(bad, total, "realizable stacked singular diagrams");
  });
}

/// Matchings of 2d points by a route independent of enumerate().
std::vector<std::string> brute_matchings(int d) {
  std::vector<int> perm(static_cast<std::size_t>(2 * d));
  for (int i = 0; i < 2 * d; ++i) perm[static_cast<std::size_t>(i)] = i / 2;
  std::vector<std::string> words;
  do {
    words.push_back(canonical_word(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

void chords_suite(Env& env, Checker& c) {
  c.check("enumeration-count", [&] {
    int bad = 0;
    long long dfact = 1;
    for (int d = 0; d <= 5; ++d) {
      if (d > 0) dfact *= 2 * d - 1;
      const auto e = enumerate(d);
      std::vector<std::string> words;
      for (const auto& x : e) words.push_back(x.word());
      if (static_cast<long long>(e.size()) != dfact || words != brute_matchings(d)) ++bad;
    }
    return counted(bad, 6, "degrees");
  });
  c.check("extract-relabel", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0;
    for (int t = 0; t < 300; ++t) {
      const auto code = random_diagram(static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 4), rng());
      auto tokens = code.tokens();
      std::vector<int> ids = code.double_ids();
      auto shuffled = ids;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& tok : tokens) {
        if (tok.kind != Visit::Double) continue;
        const auto at = std::find(ids.begin(), ids.end(), tok.id) - ids.begin();
        tok.id = shuffled[static_cast<std::size_t>(at)] + 100;
      }
      bad += extract(SingularGaussCode(tokens)) == extract(code) ? 0 : 1;
    }
    return counted(bad, 300, "relabelings");
  });
  c.check("realize-roundtrip", [&] {
    int bad = 0, total = 0;
    for (int d = 0; d <= 3; ++d) {
      for (const auto& cd : enumerate(d)) {
        ++total;
        const auto k = realize_kd(cd);
        if (extract(k) != cd || k.crossings() != 0 || k.doubles() != d || !is_descending(k)) ++bad;
      }
    }
    return counted(bad, total, "chord diagrams");
  });
}

InvariantValue naive_reverse(const SingularGaussCode& code, const BaseOracle& oracle) {
  const auto ids = code.double_ids();
  if (ids.empty()) return oracle(code);
  const int d = *std::max_element(ids.begin(), ids.end());
  auto v = naive_reverse(resolve_double(code, d, Branch::Positive), oracle);
  v -= naive_reverse(resolve_double(code, d, Branch::Negative), oracle);
  return v;
}

void oracles_suite(Env& env, Checker& c) {
  c.check("c2-skein", [&] {
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.gauss.doubles() != 0) continue;
      for (int id : r.gauss.crossing_ids()) {
        ++total;
        const auto kp = positive_at(r.gauss, id);
        const auto km = change_crossing(kp, id);
        bad += env.c2(kp) - env.c2(km) == naive_singular_eval(make_singular(r.gauss, id), env.c2) ? 0 : 1;
      }
    }
    return counted(bad, total, "crossings");
  });
  c.check("c2-invariance", [&] {
    std::map<std::string, const CorpusRecord*> by_name;
    for (const auto& r : env.corpus) by_name[r.name] = &r;
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      auto it = by_name.find(r.parent());
      if (r.gauss.doubles() != 0 || it == by_name.end()) continue;
      ++total;
      bad += env.c2(r.gauss) == env.c2(it->second->gauss) ? 0 : 1;
    }
    return counted(bad, total, "variants");
  });
  c.check("naive-order", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0;
    const auto inst = singular_instances(env, rng, 1);
    for (const auto& k : inst) bad += naive_singular_eval(k, env.c2) == naive_reverse(k, env.c2) ? 0 : 1;
    return counted(bad, static_cast<int>(inst.size()), "expansions");
  });
  c.check("vanishing-above-type", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0;
    for (int t = 0; t < 100; ++t) bad += naive_singular_eval(random_diagram(static_cast<int>(rng() % 8), 3, rng()), env.c2).is_zero() ? 0 : 1;
    return counted(bad, 100, "3-singular diagrams");
  });
  c.check("table-deterministic", [&] {
    const auto again = build_actuality_table(2, env.c2);
    return again == env.table && parse_table(serialize_table(again)) == again ? std::string("rebuilt table identical")
                                                                              : std::string("FAIL table differs");
  });
  c.check("formal-norm-triangle", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0;
    const auto words = enumerate(2);
    for (int t = 0; t < 200; ++t) {
      FormalSum a, b;
      for (const auto& w : words) {
        a[w.word()] = static_cast<std::int64_t>(rng() % 11) - 5;
        b[w.word()] = static_cast<std::int64_t>(rng() % 11) - 5;
      }
      const InvariantValue va(a), vb(b);
      bad += (va + vb).norm() <= va.norm() + vb.norm() ? 0 : 1;
    }
    return counted(bad, 200, "pairs");
  });
}

void equivalence_suite(Env& env, Checker& c) {
  c.check("oracle-equivalence", [&] {
    EvalConfig cfg{2, env.table};
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.gauss.doubles() != 0) continue;
      ++total;
      bad += eval(r.gauss, cfg).value == env.c2(r.gauss) ? 0 : 1;
    }
    return counted(bad, total, "nonsingular corpus diagrams");
  });
}

void singular_suite(Env& env, Checker& c) {
  c.check("singular-equivalence", [&] {
    std::mt19937_64 rng(env.opts.seed);
    EvalConfig cfg{2, env.table};
    const auto inst = singular_instances(env, rng, 1);
    int bad = 0;
    for (const auto& k : inst) bad += eval(k, cfg).value == naive_singular_eval(k, env.c2) ? 0 : 1;
    return counted(bad, static_cast<int>(inst.size()), "singular diagrams");
  });
}

void skein_suite(Env& env, Checker& c) {
  const int fm = std::max(env.opts.m, 1);
  const EvalConfig numeric{2, env.table};
  const EvalConfig formal{fm, formal_table(fm)};
  for (const auto* cfg : {&numeric, &formal}) {
    c.check(cfg == &numeric ? "skein-numeric" : "skein-formal", [&] {
      std::mt19937_64 rng(env.opts.seed);
      int bad = 0;
      for (int t = 0; t < 200; ++t) {
        const auto code = random_diagram(1 + static_cast<int>(rng() % 15), static_cast<int>(rng() % 3), rng());
        const auto ids = code.crossing_ids();
        const int id = ids[rng() % ids.size()];
        const auto kp = positive_at(code, id);
        const auto lhs = eval(kp, *cfg).value - eval(change_crossing(kp, id), *cfg).value;
        bad += lhs == eval(make_singular(code, id), *cfg).value ? 0 : 1;
      }
      return counted(bad, 200, "crossings");
    });
  }
}

void vanishing_suite(Env& env, Checker& c) {
  c.check("vanishing", [&] {
    std::mt19937_64 rng(env.opts.seed);
    const int m = env.opts.m;
    const EvalConfig cfg{m, formal_table(m)};
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
      const auto r = eval(random_diagram(static_cast<int>(rng() % 16), m + 1, rng()), cfg);
      bad += r.value.is_zero() && r.trace.table_lookups == 0 ? 0 : 1;
    }
    return counted(bad, 200, "diagrams with k = m+1");
  });
}

void rmove_suite(Env& env, Checker& c) {
  c.check("rmove-invariance", [&] {
    std::map<std::string, const CorpusRecord*> by_name;
    for (const auto& r : env.corpus) by_name[r.name] = &r;
    const EvalConfig cfg{2, env.table};
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      auto it = by_name.find(r.parent());
      if (r.gauss.doubles() != 0 || it == by_name.end()) continue;
      ++total;
      bad += eval(r.gauss, cfg).value == eval(it->second->gauss, cfg).value ? 0 : 1;
    }
    return counted(bad, total, "variants");
  });
}

bool same_trace(const EvalTrace& a, const EvalTrace& b) {
  return a.nodes_per_level == b.nodes_per_level && a.p_per_node() == b.p_per_node() &&
         a.elementary_ops == b.elementary_ops && a.table_lookups == b.table_lookups &&
         a.max_crossings_seen == b.max_crossings_seen;
}

void determinism_suite(Env& env, Checker& c) {
  c.check("trace-determinism", [&] {
    const EvalConfig cfg{2, env.table};
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      ++total;
      const auto a = eval(r.gauss, cfg);
      const auto b = eval(r.gauss, cfg);
      bad += a.value == b.value && same_trace(a.trace, b.trace) ? 0 : 1;
    }
    return counted(bad, total, "repeated evaluations");
  });
  c.check("memo-agreement", [&] {
    EvalConfig plain{3, formal_table(3)};
    EvalConfig memo = plain;
    memo.memo = true;
    int bad = 0;
    for (int n : {6, 10, 14}) bad += eval(family_code(Family::Twist, n, 0, 0), plain).value == eval(family_code(Family::Twist, n, 0, 0), memo).value ? 0 : 1;
    return counted(bad, 3, "memoized evaluations");
  });
  c.check("csv-determinism", [&] {
    const auto a = scaling_csv(scaling_experiment(Family::RandomDescendingPerturbed, {8, 16}, 2, 2, env.opts.seed, env.table));
    const auto b = scaling_csv(scaling_experiment(Family::RandomDescendingPerturbed, {8, 16}, 2, 2, env.opts.seed, env.table));
    return a == b ? std::string("identical CSV") : std::string("FAIL CSV differs");
  });
}

void bounds_suite(Env& env, Checker& c) {
  c.check("path-bounds", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0, total = 0;
    auto run = [&](const SingularGaussCode& code, const EvalConfig& cfg) {
      ++total;
      const auto r = eval(code, cfg);
      const auto rep = check_bounds(r.trace, r.value);
      bad += rep.ok() && rep.a_max <= 1 && r.trace.max_crossings_seen <= code.vertices() ? 0 : 1;
    };
    const EvalConfig numeric{2, env.table};
    for (const auto& r : env.corpus) run(r.gauss, numeric);
    for (int m = 0; m <= 3; ++m) {
      const EvalConfig formal{m, formal_table(m)};
      for (int t = 0; t < 50; ++t) run(random_diagram(static_cast<int>(rng() % 20), static_cast<int>(rng() % (m + 1)), rng()), formal);
    }
    return counted(bad, total, "traces");
  });
}

void exposing_suite(Env& env, Checker& c) {
  c.check("routing-bound", [&] {
    std::mt19937_64 rng(env.opts.seed);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
      const int v = 1 + static_cast<int>(rng() % 12);
      const auto pd = random_planar_knot(v, std::min(v, static_cast<int>(rng() % 4)), rng());
      const auto [paths, rep] = route_exposing_paths(pd, unexposed_doubles(pd));
      bad += rep.total_intersections <= rep.bound && rep.max_edge_multiplicity <= 1 ? 0 : 1;
    }
    return counted(bad, 200, "random maps");
  });
  c.check("shortcut-reduction", [&] {
    std::mt19937_64 rng(env.opts.seed + 1);
    int bad = 0, total = 0;
    for (int t = 0; t < 200; ++t) {
      const auto pd = random_planar_knot(2 + static_cast<int>(rng() % 10), 1, rng());
      const auto un = unexposed_doubles(pd);
      if (un.empty()) continue;
      ++total;
      const auto reduced = shortcut_reduce(random_walk_path(pd, un.front(), rng()));
      const auto fs = face_structure(pd);
      std::map<int, int> mult;
      bool ok = true;
      for (const auto& s : reduced.steps) ok = ok && ++mult[s.edge] == 1;
      try {
        validate_path(pd, fs, reduced);
      } catch (const Error&) {
        ok = false;
      }
      bad += ok ? 0 : 1;
    }
    return counted(bad, total, "reduced random walks");
  });
  c.check("pull-telescoping", [&] {
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.format != Format::PD || r.pd.doubles() == 0 || r.pd.doubles() > 2) continue;
      const auto [paths, rep] = route_exposing_paths(r.pd, unexposed_doubles(r.pd));
      for (const auto& p : paths) {
        ++total;
        const auto res = pull_double_point(r.pd, p);
        auto rhs = naive_singular_eval(pd_to_gauss(res.diagram), env.c2);
        for (const auto& e : res.emitted_events) rhs += e.sign * naive_singular_eval(e.diagram, env.c2);
        const bool ok = rhs == naive_singular_eval(r.gauss, env.c2) &&
                        extract(pd_to_gauss(res.diagram)) == extract(r.gauss) &&
                        res.new_crossings <= 4 * p.intersections();
        bad += ok ? 0 : 1;
      }
    }
    return counted(bad, total, "pulls");
  });
  c.check("expose-all", [&] {
    int bad = 0, total = 0;
    for (const auto& r : env.corpus) {
      if (r.format != Format::PD || r.pd.doubles() == 0) continue;
      ++total;
      const auto res = expose_all(r.pd);
      const int k = r.pd.doubles();
      const int lin = k * (2 * (k + r.pd.crossings()) + 1);
      const bool ok = unexposed_doubles(res.diagram).empty() && res.iterations <= k &&
                      static_cast<int>(res.events.size()) <= 4 * lin && res.new_crossings <= 4 * lin;
      bad += ok ? 0 : 1;
    }
    return counted(bad, total, "PD diagrams");
  });
}

using SuiteFn = void (*)(Env&, Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"codec", codec_suite},         {"gauss", gauss_suite},       {"chords", chords_suite},
      {"oracles", oracles_suite},     {"equivalence", equivalence_suite}, {"singular", singular_suite},
      {"skein", skein_suite},         {"vanishing", vanishing_suite}, {"rmove", rmove_suite},
      {"determinism", determinism_suite}, {"bounds", bounds_suite},   {"exposing", exposing_suite},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  names.push_back("all");
  return names;
}

ArrowConfiguration load_configuration(const std::string& path) {
  return parse_configuration(read_document(path, Format::Table).payload);
}

std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto& reg = registry();
  const bool all = name == "all";
  if (!all && std::none_of(reg.begin(), reg.end(), [&](const auto& s) { return s.first == name; })) {
    throw Error(ErrorCode::MalformedToken, "unknown suite '" + name + "'");
  }
  Env env;
  env.opts = opts;
  env.corpus = load_corpus(opts.corpus_path.empty() ? data_dir() + "/corpus.txt" : opts.corpus_path);
  env.config = load_configuration(opts.config_path.empty() ? data_dir() + "/c2.config" : opts.config_path);
  env.c2 = c2_oracle(env.config);
  env.table = build_actuality_table(2, env.c2);
  std::vector<PropertyResult> out;
  for (const auto& [suite, fn] : reg) {
    if (!all && suite != name) continue;
    Checker c(suite, out);
    fn(env, c);
  }
  return out;
}

}  // namespace vkit
