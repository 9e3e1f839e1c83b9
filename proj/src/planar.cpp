#include "vkit/planar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vkit/error.hpp"

namespace vkit {

namespace {

struct Occurrence {
  int vertex;
  int slot;
};

using OccurrenceMap = std::map<int, std::vector<Occurrence>>;

OccurrenceMap occurrences(const std::vector<PdVertex>& vertices) {
  OccurrenceMap occ;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (int s = 0; s < 4; ++s) occ[vertices[v].edges[static_cast<std::size_t>(s)]].push_back({static_cast<int>(v), s});
  }
  return occ;
}

/// Follows the strand from `start`; returns the label sequence and the
/// number of vertex slots visited.
std::vector<int> trace(const std::vector<PdVertex>& vertices, const OccurrenceMap& occ, int start,
                       std::size_t& visited) {
  std::vector<int> labels{start};
  visited = 0;
  const auto& first = occ.at(start);
  if (first.size() != 1) throw Error(ErrorCode::BadIncidence, "start edge must end at infinity");
  Occurrence at = first.front();
  const std::size_t limit = 4 * vertices.size();
  while (visited < limit) {
    visited += 2;
    const int out_slot = (at.slot + 2) % 4;
    const int label = vertices[static_cast<std::size_t>(at.vertex)].edges[static_cast<std::size_t>(out_slot)];
    labels.push_back(label);
    const auto& ends = occ.at(label);
    if (ends.size() == 1) return labels;
    const auto& a = ends[0];
    const auto& b = ends[1];
    at = (a.vertex == at.vertex && a.slot == out_slot) ? b : a;
  }
  return labels;
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<PdVertex> vertices) : vertices_(std::move(vertices)) {
  const int v_count = vertex_count();
  const int e_count = edge_count();
  for (const auto& v : vertices_) {
    for (int label : v.edges) {
      if (label < 1 || label > e_count) {
        throw Error(ErrorCode::BadIncidence, "edge label " + std::to_string(label) + " outside 1.." + std::to_string(e_count));
      }
    }
    if (v.kind == VertexKind::Crossing && v.over != 0 && v.over != 1) {
      throw Error(ErrorCode::BadIncidence, "over-strand designation must be 0 or 1");
    }
  }
  const auto occ = occurrences(vertices_);
  for (int label = 1; label <= e_count; ++label) {
    auto it = occ.find(label);
    const std::size_t want = (label == 1 || label == e_count) ? 1 : 2;
    const std::size_t got = it == occ.end() ? 0 : it->second.size();
    if (got != want && !(v_count == 0)) {
      throw Error(ErrorCode::BadIncidence, "edge " + std::to_string(label) + " used " + std::to_string(got) +
                                               " times, expected " + std::to_string(want));
    }
  }
  if (v_count > 0) {
    std::size_t visited = 0;
    const auto labels = trace(vertices_, occ, 1, visited);
    if (visited != 4 * vertices_.size()) {
      throw Error(ErrorCode::NotConnected, "traversal from edge 1 misses " +
                                               std::to_string(4 * vertices_.size() - visited) + " vertex slots");
    }
    for (int i = 0; i < e_count; ++i) {
      if (labels[static_cast<std::size_t>(i)] != i + 1) {
        throw Error(ErrorCode::BadIncidence, "edge labels do not follow the orientation at edge " +
                                                 std::to_string(labels[static_cast<std::size_t>(i)]));
      }
    }
  }
  index();
  const int f = static_cast<int>(face_structure(*this).faces.size());
  if (f != v_count + 2) {
    throw Error(ErrorCode::EulerViolation, "V-E+F = " + std::to_string(v_count - (e_count - 1) + f) + " after closure");
  }
}

PlanarDiagram PlanarDiagram::relabeled(std::vector<PdVertex> vertices, int start) {
  if (vertices.empty()) return PlanarDiagram();
  const auto occ = occurrences(vertices);
  std::size_t visited = 0;
  const auto labels = trace(vertices, occ, start, visited);
  if (visited != 4 * vertices.size()) throw Error(ErrorCode::NotConnected, "relabel traversal incomplete");
  // The traversal meets every edge once, so old->new is a bijection.
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) renumber[labels[i]] = static_cast<int>(i) + 1;
  // An edge with both ends at one vertex shares its old id, so rewrite by
  // slot sequence instead of by id.
  Occurrence at = occ.at(start).front();
  int label = 1;
  std::vector<PdVertex> out = vertices;
  for (std::size_t step = 0; step < vertices.size() * 2; ++step) {
    auto& v = out[static_cast<std::size_t>(at.vertex)];
    v.edges[static_cast<std::size_t>(at.slot)] = label;
    const int out_slot = (at.slot + 2) % 4;
    v.edges[static_cast<std::size_t>(out_slot)] = ++label;
    const int old = vertices[static_cast<std::size_t>(at.vertex)].edges[static_cast<std::size_t>(out_slot)];
    const auto& ends = occ.at(old);
    if (ends.size() == 1) break;
    at = (ends[0].vertex == at.vertex && ends[0].slot == out_slot) ? ends[1] : ends[0];
  }
  return PlanarDiagram(std::move(out));
}

void PlanarDiagram::index() {
  const auto e_count = static_cast<std::size_t>(edge_count());
  tails_.assign(e_count + 1, EdgeEnd{});
  heads_.assign(e_count + 1, EdgeEnd{});
  ids_.assign(vertices_.size(), 0);
  int next_crossing = 0;
  int next_double = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& vx = vertices_[v];
    ids_[v] = vx.kind == VertexKind::Crossing ? ++next_crossing : ++next_double;
    for (int s = 0; s < 2; ++s) {
      const int a = vx.edges[static_cast<std::size_t>(s)];
      const int b = vx.edges[static_cast<std::size_t>(s + 2)];
      const int in_slot = (b == a + 1) ? s : s + 2;
      const int out_slot = (in_slot + 2) % 4;
      heads_[static_cast<std::size_t>(vx.edges[static_cast<std::size_t>(in_slot)])] = {static_cast<int>(v), in_slot};
      tails_[static_cast<std::size_t>(vx.edges[static_cast<std::size_t>(out_slot)])] = {static_cast<int>(v), out_slot};
    }
  }
}

int PlanarDiagram::crossings() const noexcept {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [](const PdVertex& v) { return v.kind == VertexKind::Crossing; }));
}

int PlanarDiagram::doubles() const noexcept { return vertex_count() - crossings(); }

bool PlanarDiagram::incoming(int vertex, int slot) const {
  const auto& v = vertices_.at(static_cast<std::size_t>(vertex));
  return heads_[static_cast<std::size_t>(v.edges[static_cast<std::size_t>(slot)])] == EdgeEnd{vertex, slot};
}

int PlanarDiagram::first_visit_label(int vertex) const {
  const auto& v = vertices_.at(static_cast<std::size_t>(vertex));
  int best = edge_count() + 1;
  for (int s = 0; s < 4; ++s) {
    if (incoming(vertex, s)) best = std::min(best, v.edges[static_cast<std::size_t>(s)]);
  }
  return best;
}

int PlanarDiagram::sign(int vertex) const {
  const auto& v = vertices_.at(static_cast<std::size_t>(vertex));
  if (v.kind == VertexKind::Double) return 0;
  const int under = 1 - v.over;
  const int under_in = incoming(vertex, under) ? under : under + 2;
  const int over_out = incoming(vertex, v.over) ? v.over + 2 : v.over;
  return over_out == (under_in + 1) % 4 ? 1 : -1;
}

FaceStructure face_structure(const PlanarDiagram& pd) {
  const int e_count = pd.edge_count();
  FaceStructure fs;
  fs.dart_face.assign(static_cast<std::size_t>(2 * e_count), -1);
  auto slot_of = [](Dart d) { return static_cast<std::size_t>(2 * (d.edge - 1) + (d.forward ? 0 : 1)); };
  auto next = [&](Dart d) -> Dart {
    const EdgeEnd at = d.forward ? pd.head(d.edge) : pd.tail(d.edge);
    if (at.vertex < 0) {
      // Arriving at infinity: continue along the other boundary edge.
      return d.forward ? Dart{1, true} : Dart{e_count, false};
    }
    const int out = (at.slot + 1) % 4;
    const int edge = pd.vertices()[static_cast<std::size_t>(at.vertex)].edges[static_cast<std::size_t>(out)];
    return Dart{edge, pd.tail(edge) == EdgeEnd{at.vertex, out}};
  };
  for (int e = 1; e <= e_count; ++e) {
    for (bool fwd : {true, false}) {
      Dart d{e, fwd};
      if (fs.dart_face[slot_of(d)] >= 0) continue;
      Face face;
      const int id = static_cast<int>(fs.faces.size());
      while (fs.dart_face[slot_of(d)] < 0) {
        fs.dart_face[slot_of(d)] = id;
        face.darts.push_back(d);
        d = next(d);
      }
      fs.faces.push_back(std::move(face));
    }
  }
  fs.outer = fs.face_of(Dart{1, true});
  fs.faces[static_cast<std::size_t>(fs.outer)].outer = true;
  return fs;
}

std::vector<Face> faces(const PlanarDiagram& pd) { return face_structure(pd).faces; }

int corner_face(const PlanarDiagram& pd, const FaceStructure& fs, int vertex, int slot) {
  const int edge = pd.vertices().at(static_cast<std::size_t>(vertex)).edges[static_cast<std::size_t>(slot)];
  // The dart arriving at `slot` turns into slot+1 with this corner on its right.
  return fs.face_of(Dart{edge, pd.head(edge) == EdgeEnd{vertex, slot}});
}

SingularGaussCode pd_to_gauss(const PlanarDiagram& pd) {
  std::vector<GaussToken> tokens;
  tokens.reserve(static_cast<std::size_t>(2 * pd.vertex_count()));
  for (int e = 1; e < pd.edge_count(); ++e) {
    const EdgeEnd at = pd.head(e);
    const auto& v = pd.vertices()[static_cast<std::size_t>(at.vertex)];
    const int id = pd.gauss_id(at.vertex);
    if (v.kind == VertexKind::Double) {
      tokens.push_back({Visit::Double, id, 0});
    } else {
      const bool over = at.slot % 2 == v.over;
      tokens.push_back({over ? Visit::Over : Visit::Under, id, pd.sign(at.vertex)});
    }
  }
  return SingularGaussCode(std::move(tokens));
}

PlanarDiagram parse_pd(std::string_view text) {
  std::vector<PdVertex> vertices;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> records;
  while (std::getline(in, line)) {
    std::string chunk;
    std::istringstream parts(line);
    while (std::getline(parts, chunk, ';')) records.push_back(chunk);
  }
  for (const auto& rec : records) {
    std::istringstream words(rec);
    std::string tag;
    if (!(words >> tag) || tag[0] == '#') continue;
    if (tag != "X" && tag != "P") throw Error(ErrorCode::MalformedToken, "PD vertex tag '" + tag + "'");
    PdVertex v;
    v.kind = tag == "X" ? VertexKind::Crossing : VertexKind::Double;
    for (auto& e : v.edges) {
      std::string w;
      if (!(words >> w)) throw Error(ErrorCode::MalformedToken, "PD vertex needs four labels: '" + rec + "'");
      try {
        std::size_t used = 0;
        e = std::stoi(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedToken, "PD edge label '" + w + "'");
      }
    }
    std::string extra;
    if (words >> extra) throw Error(ErrorCode::MalformedToken, "trailing text in PD vertex '" + rec + "'");
    v.over = 1;
    vertices.push_back(v);
  }
  PlanarDiagram pd(vertices);
  for (int i = 0; i < pd.vertex_count(); ++i) {
    if (pd.vertices()[static_cast<std::size_t>(i)].kind == VertexKind::Crossing && !pd.incoming(i, 0)) {
      throw Error(ErrorCode::BadIncidence, "crossing " + std::to_string(i + 1) + " must list the incoming under-strand first");
    }
  }
  return pd;
}

std::string format_pd(const PlanarDiagram& pd, std::string_view separator) {
  std::string out;
  for (int i = 0; i < pd.vertex_count(); ++i) {
    const auto& v = pd.vertices()[static_cast<std::size_t>(i)];
    int start = 0;
    if (v.kind == VertexKind::Crossing) {
      const int under = 1 - v.over;
      start = pd.incoming(i, under) ? under : under + 2;
    }
    if (!out.empty()) out += separator;
    out += v.kind == VertexKind::Crossing ? "X" : "P";
    for (int s = 0; s < 4; ++s) out += " " + std::to_string(v.edges[static_cast<std::size_t>((start + s) % 4)]);
  }
  return out;
}

}  // namespace vkit
