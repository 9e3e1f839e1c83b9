#include "vkit/exposing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include <json.hpp>

#include "vkit/error.hpp"

namespace vkit {

namespace {

struct DualEdge {
  int edge;
  int to;
};

std::vector<std::vector<DualEdge>> dual_graph(const PlanarDiagram& pd, const FaceStructure& fs) {
  std::vector<std::vector<DualEdge>> adj(fs.faces.size());
  for (int e = 1; e <= pd.edge_count(); ++e) {
    const int a = fs.face_of({e, true});
    const int b = fs.face_of({e, false});
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)].push_back({e, b});
    adj[static_cast<std::size_t>(b)].push_back({e, a});
  }
  return adj;
}

ExposingPath shortest_path(const PlanarDiagram& pd, const FaceStructure& fs,
                           const std::vector<std::vector<DualEdge>>& adj, int v) {
  ExposingPath path;
  path.double_point = v;
  const std::size_t nf = fs.faces.size();
  std::vector<int> prev_face(nf, -2), prev_edge(nf, 0), source_corner(nf, -1);
  std::deque<int> queue;
  for (int s = 0; s < 4; ++s) {
    const int f = corner_face(pd, fs, v, s);
    if (prev_face[static_cast<std::size_t>(f)] != -2) continue;
    prev_face[static_cast<std::size_t>(f)] = -1;
    source_corner[static_cast<std::size_t>(f)] = s;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    if (f == fs.outer) break;
    for (const auto& de : adj[static_cast<std::size_t>(f)]) {
      auto& p = prev_face[static_cast<std::size_t>(de.to)];
      if (p != -2) continue;
      p = f;
      prev_edge[static_cast<std::size_t>(de.to)] = de.edge;
      source_corner[static_cast<std::size_t>(de.to)] = source_corner[static_cast<std::size_t>(f)];
      queue.push_back(de.to);
    }
  }
  int f = fs.outer;
  while (prev_face[static_cast<std::size_t>(f)] >= 0) {
    path.steps.push_back({prev_edge[static_cast<std::size_t>(f)], f});
    f = prev_face[static_cast<std::size_t>(f)];
  }
  std::reverse(path.steps.begin(), path.steps.end());
  path.start_face = f;
  path.corner = source_corner[static_cast<std::size_t>(fs.outer)];
  return path;
}

struct Graph {
  struct Vertex {
    VertexKind kind;
    std::array<int, 4> edge;
    int over;
  };
  struct Edge {
    EdgeEnd tail;
    EdgeEnd head;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // index 0 unused

  explicit Graph(const PlanarDiagram& pd) {
    for (const auto& v : pd.vertices()) vertices.push_back({v.kind, v.edges, v.over});
    edges.resize(static_cast<std::size_t>(pd.edge_count()) + 1);
    for (int e = 1; e <= pd.edge_count(); ++e) edges[static_cast<std::size_t>(e)] = {pd.tail(e), pd.head(e)};
  }

  int add_vertex(int over) {
    vertices.push_back({VertexKind::Crossing, {0, 0, 0, 0}, over});
    return static_cast<int>(vertices.size()) - 1;
  }

  int add_edge(EdgeEnd tail, EdgeEnd head) {
    edges.push_back({tail, head});
    const int id = static_cast<int>(edges.size()) - 1;
    attach(tail, id);
    attach(head, id);
    return id;
  }

  void attach(EdgeEnd end, int edge) {
    if (end.vertex >= 0) vertices[static_cast<std::size_t>(end.vertex)].edge[static_cast<std::size_t>(end.slot)] = edge;
  }

  /// Splits `edge` by the given new vertices in forward order; each new
  /// vertex carries the edge through slots 2 (in) and 0 (out).
  void split(int edge, const std::vector<int>& cuts) {
    const EdgeEnd old_head = edges[static_cast<std::size_t>(edge)].head;
    edges[static_cast<std::size_t>(edge)].head = {cuts.front(), 2};
    attach({cuts.front(), 2}, edge);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) add_edge({cuts[i], 0}, {cuts[i + 1], 2});
    add_edge({cuts.back(), 0}, old_head);
  }

  PlanarDiagram freeze() const {
    std::vector<PdVertex> out;
    for (const auto& v : vertices) out.push_back({v.kind, v.edge, v.over});
    int start = 0;
    for (std::size_t e = 1; e < edges.size(); ++e) {
      if (edges[e].tail.vertex < 0) start = static_cast<int>(e);
    }
    return PlanarDiagram::relabeled(std::move(out), start);
  }
};

}  // namespace

std::string ExposureReport::json() const {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["k_unexposed"] = k_unexposed;
  j["total_intersections"] = total_intersections;
  j["bound"] = bound;
  j["per_path"] = per_path;
  j["max_edge_multiplicity"] = max_edge_multiplicity;
  j["within_bound"] = total_intersections <= bound;
  return j.dump(2);
}

std::vector<int> unexposed_doubles(const PlanarDiagram& pd, const FaceStructure& fs) {
  std::vector<int> out;
  for (int v = 0; v < pd.vertex_count(); ++v) {
    if (pd.vertices()[static_cast<std::size_t>(v)].kind != VertexKind::Double) continue;
    bool exposed = false;
    for (int s = 0; s < 4; ++s) exposed = exposed || corner_face(pd, fs, v, s) == fs.outer;
    if (!exposed) out.push_back(v);
  }
  return out;
}

std::vector<int> unexposed_doubles(const PlanarDiagram& pd) { return unexposed_doubles(pd, face_structure(pd)); }

std::pair<std::vector<ExposingPath>, ExposureReport> route_exposing_paths(const PlanarDiagram& pd,
                                                                           const std::vector<int>& unexposed) {
  const auto fs = face_structure(pd);
  const auto adj = dual_graph(pd, fs);
  std::vector<ExposingPath> paths;
  ExposureReport report;
  report.n = pd.crossings();
  report.k = pd.doubles();
  report.k_unexposed = static_cast<int>(unexposed.size());
  report.bound = report.k * (2 * (report.k + report.n) + 1);
  for (int v : unexposed) {
    if (v < 0 || v >= pd.vertex_count() || pd.vertices()[static_cast<std::size_t>(v)].kind != VertexKind::Double) {
      throw Error(ErrorCode::InvalidPath, "vertex " + std::to_string(v) + " is not a double point");
    }
    auto path = shortcut_reduce(shortest_path(pd, fs, adj, v));
    std::map<int, int> mult;
    for (const auto& s : path.steps) report.max_edge_multiplicity = std::max(report.max_edge_multiplicity, ++mult[s.edge]);
    report.per_path.push_back(path.intersections());
    report.total_intersections += path.intersections();
    paths.push_back(std::move(path));
  }
  return {std::move(paths), report};
}

ExposingPath shortcut_reduce(const ExposingPath& path) {
  ExposingPath out = path;
  out.steps.clear();
  std::vector<int> faces{path.start_face};
  for (const auto& s : path.steps) {
    auto seen = std::find(faces.begin(), faces.end(), s.face);
    if (seen != faces.end()) {
      // Back in a face already visited: drop the loop.
      const auto keep = static_cast<std::size_t>(seen - faces.begin());
      faces.resize(keep + 1);
      out.steps.resize(keep);
      continue;
    }
    faces.push_back(s.face);
    out.steps.push_back(s);
  }
  return out;
}

ExposingPath random_walk_path(const PlanarDiagram& pd, int double_point, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto fs = face_structure(pd);
  const auto adj = dual_graph(pd, fs);
  ExposingPath path;
  path.double_point = double_point;
  path.corner = static_cast<int>(rng() % 4);
  path.start_face = corner_face(pd, fs, double_point, path.corner);
  int f = path.start_face;
  while (f != fs.outer) {
    const auto& options = adj[static_cast<std::size_t>(f)];
    if (options.empty()) break;
    const auto& de = options[rng() % options.size()];
    path.steps.push_back({de.edge, de.to});
    f = de.to;
  }
  return path;
}

void validate_path(const PlanarDiagram& pd, const FaceStructure& fs, const ExposingPath& path) {
  const int v = path.double_point;
  if (v < 0 || v >= pd.vertex_count() || pd.vertices()[static_cast<std::size_t>(v)].kind != VertexKind::Double) {
    throw Error(ErrorCode::InvalidPath, "path does not start at a double point");
  }
  if (path.corner < 0 || path.corner > 3 || corner_face(pd, fs, v, path.corner) != path.start_face) {
    throw Error(ErrorCode::InvalidPath, "start face is not the face of the chosen corner");
  }
  int f = path.start_face;
  std::vector<int> used;
  for (const auto& s : path.steps) {
    if (s.edge < 1 || s.edge > pd.edge_count()) throw Error(ErrorCode::InvalidPath, "unknown edge");
    const int a = fs.face_of({s.edge, true});
    const int b = fs.face_of({s.edge, false});
    if (a == b || (f != a && f != b) || s.face != (f == a ? b : a)) {
      throw Error(ErrorCode::InvalidPath, "step across edge " + std::to_string(s.edge) + " does not separate the faces");
    }
    if (std::find(used.begin(), used.end(), s.edge) != used.end()) {
      throw Error(ErrorCode::InvalidPath, "edge " + std::to_string(s.edge) + " crossed twice");
    }
    used.push_back(s.edge);
    f = s.face;
  }
  if (f != fs.outer) throw Error(ErrorCode::InvalidPath, "path does not end on the outer face");
}

PullResult pull_double_point(const PlanarDiagram& pd, const ExposingPath& path) {
  const auto fs = face_structure(pd);
  validate_path(pd, fs, path);
  PullResult result;
  if (path.steps.empty()) {
    result.diagram = result.reference = pd;
    return result;
  }
  const int v = path.double_point;
  const int q = path.corner;
  const int v_label = pd.first_visit_label(v);
  const std::array<int, 4> bundle{(q + 1) % 4, (q + 2) % 4, (q + 3) % 4, q};

  Graph g(pd);
  const std::size_t r = path.steps.size();
  // crossing[j][s]: corridor crossing of leg s with the j-th crossed edge.
  std::vector<std::array<int, 4>> crossing(r);
  std::vector<bool> from_right(r);
  std::vector<int> new_vertices;
  int f = path.start_face;
  for (std::size_t j = 0; j < r; ++j) {
    const int e = path.steps[j].edge;
    from_right[j] = fs.face_of({e, true}) == f;
    // Reference heights: an edge met before the double point passes over the corridor.
    const int over = e <= v_label ? 0 : 1;
    std::vector<int> cuts;
    for (int i = 0; i < 4; ++i) {
      const int leg = from_right[j] ? bundle[static_cast<std::size_t>(i)] : bundle[static_cast<std::size_t>(3 - i)];
      const int c = g.add_vertex(over);
      crossing[j][static_cast<std::size_t>(leg)] = c;
      cuts.push_back(c);
      new_vertices.push_back(c);
    }
    g.split(e, cuts);
    f = path.steps[j].face;
  }
  auto front_slot = [&](std::size_t j) { return from_right[j] ? 1 : 3; };
  auto back_slot = [&](std::size_t j) { return from_right[j] ? 3 : 1; };
  for (int s = 0; s < 4; ++s) {
    const int e = g.vertices[static_cast<std::size_t>(v)].edge[static_cast<std::size_t>(s)];
    auto& edge = g.edges[static_cast<std::size_t>(e)];
    const bool into_v = edge.head == EdgeEnd{v, s};
    const EdgeEnd first_back{crossing[0][static_cast<std::size_t>(s)], back_slot(0)};
    if (into_v) {
      edge.head = first_back;
    } else {
      edge.tail = first_back;
    }
    g.attach(first_back, e);
    for (std::size_t j = 0; j + 1 < r; ++j) {
      const EdgeEnd a{crossing[j][static_cast<std::size_t>(s)], front_slot(j)};
      const EdgeEnd b{crossing[j + 1][static_cast<std::size_t>(s)], back_slot(j + 1)};
      if (into_v) g.add_edge(a, b); else g.add_edge(b, a);
    }
    const EdgeEnd last{crossing[r - 1][static_cast<std::size_t>(s)], front_slot(r - 1)};
    if (into_v) g.add_edge(last, {v, s}); else g.add_edge({v, s}, last);
  }
  result.reference = g.freeze();
  result.new_crossings = static_cast<int>(new_vertices.size());

  // Flip the new crossings that are not first visited on the over-strand.
  PlanarDiagram current = result.reference;
  SingularGaussCode code = pd_to_gauss(current);
  std::vector<std::pair<std::size_t, int>> order;
  for (int c : new_vertices) order.emplace_back(code.crossing_visits(current.gauss_id(c)).first, c);
  std::sort(order.begin(), order.end());
  auto vs = current.vertices();
  for (auto [pos, c] : order) {
    const int id = current.gauss_id(c);
    const auto& tok = code.tokens()[pos];
    if (tok.kind == Visit::Over) continue;
    result.emitted_events.push_back({tok.sign, make_singular(code, id), id});
    code = change_crossing(code, id);
    vs[static_cast<std::size_t>(c)].over = 1 - vs[static_cast<std::size_t>(c)].over;
  }
  result.diagram = PlanarDiagram(std::move(vs));
  return result;
}

ExposeAllResult expose_all(const PlanarDiagram& pd) {
  ExposeAllResult out;
  out.diagram = pd;
  out.report = route_exposing_paths(pd, unexposed_doubles(pd)).second;
  for (int guard = 0; guard <= pd.doubles(); ++guard) {
    const auto un = unexposed_doubles(out.diagram);
    if (un.empty()) return out;
    if (guard == pd.doubles()) break;
    auto [paths, report] = route_exposing_paths(out.diagram, {un.front()});
    auto pulled = pull_double_point(out.diagram, paths.front());
    out.new_crossings += pulled.new_crossings;
    for (auto& e : pulled.emitted_events) out.events.push_back(std::move(e));
    out.diagram = std::move(pulled.diagram);
    ++out.iterations;
  }
  throw Error(ErrorCode::BoundViolation, "expose_all did not finish within k iterations");
}

}  // namespace vkit
