#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlgc/graph.hpp"
#include "mlgc/types.hpp"

namespace mlgc {

/// Points in the plane with their generating class.
struct PointCloud {
  Matrix points;  // n x 2
  std::vector<int> labels;
};

struct GaussianComponent {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double variance = 1.0;  // isotropic

  bool operator==(const GaussianComponent&) const = default;
};

/// Five-component isotropic Gaussian mixture; component c generates class c.
struct GmmSpec {
  static constexpr std::size_t kComponents = 5;

  std::vector<GaussianComponent> components;
  Index points_per_component = 500;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless there are 5 components with positive
  /// variances and points_per_component >= 1.
  void validate() const;
  bool operator==(const GmmSpec&) const = default;
};

/// Class c occupies indices [c * ppc, (c + 1) * ppc). Deterministic in spec.seed.
PointCloud generate_letter_cloud(const GmmSpec& spec);

/// Symmetrised k-nearest-neighbour graph: (i, j) is an edge if either point
/// is among the other's nearest `kneighbors`; weight 1 / |x_i - x_j|.
/// Throws DuplicatePoints if two points are closer than 1e-12.
Graph knn_graph(const Matrix& points, Index kneighbors);
inline Graph knn_graph(const PointCloud& cloud, Index kneighbors) { return knn_graph(cloud.points, kneighbors); }

struct Dataset {
  MultiLayerGraph graph;
  Partition truth;
};

struct LetterSpec {
  std::string name;
  std::vector<GaussianComponent> components;

  bool operator==(const LetterSpec&) const = default;
};

/// Geometry of the three-letter benchmark; sampling seeds are supplied at
/// generation time.
struct LettersPreset {
  std::vector<LetterSpec> letters;
  Index points_per_component = 500;
  Index kneighbors = 5;

  bool operator==(const LettersPreset&) const = default;
};

/// The frozen preset (mirrors data/letters_preset.txt).
const LettersPreset& default_letters_preset();

LettersPreset read_letters_preset(std::istream& in);
void write_letters_preset(std::ostream& out, const LettersPreset& preset);

/// Letter layers over one shared vertex set: vertex v has class
/// v / points_per_component in every layer while each letter's coordinates
/// are sampled independently. Throws DisconnectedGraph if a layer's k-NN
/// graph is disconnected for this seed.
Dataset letters_dataset(std::uint64_t seed, const LettersPreset& preset = default_letters_preset());

/// 12 vertices, 3 classes; layers 0 and 1 agree with the classes, layer 2
/// groups the vertices differently.
Dataset toy_fixture_a();

/// 12 vertices, 3 classes; layer 0 agrees with the classes, layers 1 and 2
/// agree with each other on a different grouping.
Dataset toy_fixture_b();

}  // namespace mlgc
