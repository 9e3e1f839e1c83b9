#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vkit/gauss.hpp"
#include "vkit/planar.hpp"

namespace vkit {

/// One crossing of the path through an edge into the next face.
struct DualStep {
  int edge = 0;
  int face = 0;

  friend bool operator==(const DualStep&, const DualStep&) = default;
};

/// A vertex-avoiding route from a corner of a double point to the outer
/// face, as a walk in the dual graph.
struct ExposingPath {
  int double_point = -1;  // vertex index
  int corner = 0;         // leaves through the corner between slots corner, corner+1
  int start_face = 0;
  std::vector<DualStep> steps;

  int intersections() const { return static_cast<int>(steps.size()); }
};

struct ExposureReport {
  int n = 0;
  int k = 0;
  int k_unexposed = 0;
  int total_intersections = 0;
  int bound = 0;  // k(2(k+n)+1)
  std::vector<int> per_path;
  int max_edge_multiplicity = 0;

  std::string json() const;
};

/// Double-point vertices with no corner on the outer face.
std::vector<int> unexposed_doubles(const PlanarDiagram& pd);
std::vector<int> unexposed_doubles(const PlanarDiagram& pd, const FaceStructure& fs);

/// Shortest dual path for each listed double point.
std::pair<std::vector<ExposingPath>, ExposureReport> route_exposing_paths(const PlanarDiagram& pd,
                                                                           const std::vector<int>& unexposed);

/// Cuts out every loop of the face sequence, so no face and hence no edge
/// is crossed twice.
ExposingPath shortcut_reduce(const ExposingPath& path);

/// Random dual walk to the outer face (no reduction); for fuzzing.
ExposingPath random_walk_path(const PlanarDiagram& pd, int double_point, std::uint64_t seed);

/// Throws InvalidPath unless the steps form a dual walk from the corner to
/// the outer face.
void validate_path(const PlanarDiagram& pd, const FaceStructure& fs, const ExposingPath& path);

struct PullResult {
  PlanarDiagram diagram;
  int new_crossings = 0;
  std::vector<CrossingChangeEvent> emitted_events;
  /// The isotopic diagram before any crossing flips.
  PlanarDiagram reference;
};

PullResult pull_double_point(const PlanarDiagram& pd, const ExposingPath& path);

struct ExposeAllResult {
  PlanarDiagram diagram;
  std::vector<CrossingChangeEvent> events;
  ExposureReport report;  // routing of the input diagram
  int iterations = 0;
  int new_crossings = 0;
};

ExposeAllResult expose_all(const PlanarDiagram& pd);

}  // namespace vkit
