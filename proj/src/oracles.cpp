#include "vkit/oracles.hpp"

#include <algorithm>
#include <sstream>

#include "vkit/chords.hpp"
#include "vkit/error.hpp"

namespace vkit {

namespace {

struct CrossingVisits {
  std::size_t first;
  std::size_t second;
  Visit first_kind;
  int sign;
};

std::string_view shape_name(ArrowShape s) {
  switch (s) {
    case ArrowShape::Interleaved: return "interleaved";
    case ArrowShape::Nested: return "nested";
    case ArrowShape::Disjoint: return "disjoint";
  }
  return "";
}

std::string_view role_name(Visit v) { return v == Visit::Over ? "over" : "under"; }

std::vector<CrossingVisits> crossing_table(const SingularGaussCode& code) {
  std::vector<CrossingVisits> out;
  std::map<int, std::size_t> index;
  const auto& t = code.tokens();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind == Visit::Double) continue;
    auto [it, fresh] = index.emplace(t[i].id, out.size());
    if (fresh) {
      out.push_back({i, 0, t[i].kind, t[i].sign});
    } else {
      out[it->second].second = i;
    }
  }
  return out;
}

bool shape_matches(ArrowShape s, const CrossingVisits& a, const CrossingVisits& b) {
  switch (s) {
    case ArrowShape::Interleaved: return b.first < a.second && a.second < b.second;
    case ArrowShape::Nested: return b.second < a.second;
    case ArrowShape::Disjoint: return a.second < b.first;
  }
  return false;
}

}  // namespace

std::string ArrowConfiguration::name() const {
  return std::string(shape_name(shape)) + "-" + std::string(role_name(first_role)) + "-" +
         std::string(role_name(second_role));
}

std::vector<ArrowConfiguration> candidate_configurations() {
  std::vector<ArrowConfiguration> out;
  for (auto s : {ArrowShape::Interleaved, ArrowShape::Nested, ArrowShape::Disjoint}) {
    for (auto a : {Visit::Over, Visit::Under}) {
      for (auto b : {Visit::Over, Visit::Under}) out.push_back({s, a, b, 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name() < y.name(); });
  return out;
}

std::string format_configuration(const ArrowConfiguration& c) {
  std::ostringstream out;
  out << "# two-crossing counting formula\n"
      << "shape " << shape_name(c.shape) << "\n"
      << "first " << role_name(c.first_role) << "\n"
      << "second " << role_name(c.second_role) << "\n"
      << "scale " << c.scale << "\n";
  return out.str();
}

ArrowConfiguration parse_configuration(std::string_view text) {
  ArrowConfiguration c;
  std::istringstream in{std::string(text)};
  std::string line;
  int seen = 0;
  auto role = [](const std::string& v) {
    if (v == "over") return Visit::Over;
    if (v == "under") return Visit::Under;
    throw Error(ErrorCode::MalformedToken, "role '" + v + "'");
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key) || key[0] == '#') continue;
    if (!(ls >> value)) throw Error(ErrorCode::MalformedToken, "configuration line '" + line + "'");
    if (key == "shape") {
      if (value == "interleaved") c.shape = ArrowShape::Interleaved;
      else if (value == "nested") c.shape = ArrowShape::Nested;
      else if (value == "disjoint") c.shape = ArrowShape::Disjoint;
      else throw Error(ErrorCode::MalformedToken, "shape '" + value + "'");
    } else if (key == "first") {
      c.first_role = role(value);
    } else if (key == "second") {
      c.second_role = role(value);
    } else if (key == "scale") {
      if (value != "1" && value != "-1") throw Error(ErrorCode::MalformedToken, "scale '" + value + "'");
      c.scale = value == "1" ? 1 : -1;
    } else {
      throw Error(ErrorCode::MalformedToken, "configuration key '" + key + "'");
    }
    ++seen;
  }
  if (seen != 4) throw Error(ErrorCode::MalformedToken, "configuration needs shape, first, second and scale");
  return c;
}

InvariantValue configuration_value(const SingularGaussCode& code, const ArrowConfiguration& c) {
  const auto xs = crossing_table(code);
  long long total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].first_kind != c.first_role) continue;
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[j].first_kind != c.second_role) continue;
      if (shape_matches(c.shape, xs[i], xs[j])) total += xs[i].sign * xs[j].sign;
    }
  }
  return InvariantValue(Rational(total * c.scale));
}

BaseOracle c2_oracle(const ArrowConfiguration& c) {
  return [c](const SingularGaussCode& code) { return configuration_value(code, c); };
}

SingularGaussCode trefoil_code() {
  return SingularGaussCode({{Visit::Over, 1, 1},
                            {Visit::Under, 2, 1},
                            {Visit::Over, 3, 1},
                            {Visit::Under, 1, 1},
                            {Visit::Over, 2, 1},
                            {Visit::Under, 3, 1}});
}

SelectionReport select_configuration(const std::vector<CorpusRecord>& corpus) {
  std::map<std::string, const CorpusRecord*> by_name;
  for (const auto& r : corpus) by_name[r.name] = &r;
  std::vector<std::pair<const CorpusRecord*, const CorpusRecord*>> pairs;
  for (const auto& r : corpus) {
    if (r.gauss.doubles() != 0) continue;
    auto it = by_name.find(r.parent());
    if (it == by_name.end() || it->second->gauss.doubles() != 0) continue;
    pairs.emplace_back(&r, it->second);
  }

  auto survives = [&](const ArrowConfiguration& c, const std::string& only_class) {
    if (!configuration_value(SingularGaussCode(), c).is_zero()) return false;
    if (configuration_value(trefoil_code(), c).is_zero()) return false;
    for (const auto& [child, parent] : pairs) {
      if (!only_class.empty() && child->move_class() != only_class) continue;
      if (configuration_value(child->gauss, c) != configuration_value(parent->gauss, c)) return false;
    }
    return true;
  };

  SelectionReport report;
  report.variants_checked = static_cast<int>(pairs.size());
  std::vector<std::string> classes;
  for (const auto& [child, parent] : pairs) {
    if (std::find(classes.begin(), classes.end(), child->move_class()) == classes.end()) {
      classes.push_back(child->move_class());
    }
  }
  for (const auto& cls : classes) {
    int count = 0;
    for (const auto& c : candidate_configurations()) count += survives(c, cls) ? 1 : 0;
    report.survivors_per_class[cls] = count;
  }
  for (const auto& c : candidate_configurations()) {
    if (survives(c, "")) report.survivors.push_back(c);
  }
  if (report.survivors.empty()) throw Error(ErrorCode::NoConfigurationFound, "no candidate survives the corpus");
  report.ambiguous = report.survivors.size() > 1;
  report.chosen = report.survivors.front();
  if (configuration_value(trefoil_code(), report.chosen).numeric() < 0) report.chosen.scale = -1;
  return report;
}

InvariantValue naive_singular_eval(const SingularGaussCode& code, const BaseOracle& oracle) {
  const auto ids = code.double_ids();
  if (ids.empty()) return oracle(code);
  // Resolve the lowest-id double point; the expansion is symmetric.
  const int d = *std::min_element(ids.begin(), ids.end());
  auto value = naive_singular_eval(resolve_double(code, d, Branch::Positive), oracle);
  value -= naive_singular_eval(resolve_double(code, d, Branch::Negative), oracle);
  return value;
}

ActualityTable build_actuality_table(int m, const BaseOracle& oracle) {
  ActualityTable t(m);
  for (int d = 0; d <= m; ++d) {
    for (const auto& cd : enumerate(d)) t.insert(cd, naive_singular_eval(realize_kd(cd), oracle));
  }
  return t;
}

ActualityTable formal_table(int m) {
  ActualityTable t(m);
  for (int d = 0; d <= m; ++d) {
    for (const auto& cd : enumerate(d)) t.insert(cd, InvariantValue::basis(cd.word()));
  }
  return t;
}

}  // namespace vkit
