#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vkit/gauss.hpp"

namespace vkit {

enum class VertexKind { Crossing, Double };

/// A 4-valent vertex; edges[i] is the edge label at slot i, slots in
/// counter-clockwise order. For crossings the strand through slots
/// {over, over+2} is the over-strand.
struct PdVertex {
  VertexKind kind = VertexKind::Crossing;
  std::array<int, 4> edges{};
  int over = 1;

  friend bool operator==(const PdVertex&, const PdVertex&) = default;
};

/// One end of an edge; vertex == -1 is the boundary at infinity.
struct EdgeEnd {
  int vertex = -1;
  int slot = -1;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Long-knot projection as a rotation system. Edge labels 1..2V+1 follow the
/// orientation from the open start; edges 1 and 2V+1 run to infinity.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Validates incidence, connectivity and planarity.
  explicit PlanarDiagram(std::vector<PdVertex> vertices);

  /// Renumbers arbitrary edge ids along the orientation, starting from the
  /// edge `start` (whose tail is at infinity), then validates.
  static PlanarDiagram relabeled(std::vector<PdVertex> vertices, int start);

  const std::vector<PdVertex>& vertices() const noexcept { return vertices_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return 2 * vertex_count() + 1; }
  int crossings() const noexcept;
  int doubles() const noexcept;

  EdgeEnd tail(int edge) const { return tails_.at(static_cast<std::size_t>(edge)); }
  EdgeEnd head(int edge) const { return heads_.at(static_cast<std::size_t>(edge)); }

  /// Slot where the strand through `slot` leaves/enters, and whether `slot`
  /// is an incoming end.
  bool incoming(int vertex, int slot) const;

  /// Label of the edge arriving at the first visit of `vertex`.
  int first_visit_label(int vertex) const;

  /// +1 / -1 for crossings, 0 for double points.
  int sign(int vertex) const;

  /// Crossing and double ids assigned by vertex order within each kind.
  int gauss_id(int vertex) const { return ids_.at(static_cast<std::size_t>(vertex)); }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) { return a.vertices_ == b.vertices_; }

 private:
  void index();

  std::vector<PdVertex> vertices_;
  std::vector<EdgeEnd> tails_{EdgeEnd{}, EdgeEnd{}};
  std::vector<EdgeEnd> heads_{EdgeEnd{}, EdgeEnd{}};
  std::vector<int> ids_;
};

/// A directed side of an edge; the face of a dart lies on its right.
struct Dart {
  int edge = 1;
  bool forward = true;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  std::vector<Dart> darts;
  bool outer = false;
};

/// Faces of the diagram with the two boundary edges joined through infinity.
struct FaceStructure {
  std::vector<Face> faces;
  std::vector<int> dart_face;  // index 2*(edge-1) + (forward ? 0 : 1)
  int outer = 0;

  int face_of(Dart d) const { return dart_face.at(static_cast<std::size_t>(2 * (d.edge - 1) + (d.forward ? 0 : 1))); }
};

FaceStructure face_structure(const PlanarDiagram& pd);
std::vector<Face> faces(const PlanarDiagram& pd);

/// Face containing the corner between slots `slot` and `slot+1` of `vertex`.
int corner_face(const PlanarDiagram& pd, const FaceStructure& fs, int vertex, int slot);

SingularGaussCode pd_to_gauss(const PlanarDiagram& pd);

/// Lines "X a b c d" (first label = incoming under-strand) and "P a b c d".
PlanarDiagram parse_pd(std::string_view text);
std::string format_pd(const PlanarDiagram& pd, std::string_view separator = "\n");

}  // namespace vkit
