#include "mlgc/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "mlgc/error.hpp"
#include "mlgc/kernels.hpp"

namespace mlgc {

void GmmSpec::validate() const {
  if (components.size() != kComponents) {
    std::ostringstream msg;
    msg << "mixture needs " << kComponents << " components, got " << components.size();
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  for (const auto& c : components) {
    if (!(c.variance > 0.0)) throw Error(ErrorCode::InvalidArgument, "component variance must be positive");
  }
  if (points_per_component < 1) throw Error(ErrorCode::InvalidArgument, "points_per_component must be >= 1");
}

namespace {

double unit_open(std::mt19937_64& rng) {
  // (0, 1]: safe for log().
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

// Box-Muller on the raw engine output so results do not depend on the
// standard library's distribution implementations.
std::pair<double, double> standard_normal_pair(std::mt19937_64& rng) {
  const double r = std::sqrt(-2.0 * std::log(unit_open(rng)));
  const double t = 2.0 * std::numbers::pi * unit_open(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

PointCloud generate_letter_cloud(const GmmSpec& spec) {
  spec.validate();
  const Index ppc = spec.points_per_component;
  const auto comps = static_cast<Index>(spec.components.size());
  PointCloud cloud;
  cloud.points.resize(comps * ppc, 2);
  cloud.labels.resize(static_cast<std::size_t>(comps * ppc));
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32)};
  std::mt19937_64 rng(seq);
  for (Index c = 0; c < comps; ++c) {
    const GaussianComponent& g = spec.components[static_cast<std::size_t>(c)];
    const double sd = std::sqrt(g.variance);
    for (Index p = 0; p < ppc; ++p) {
      const Index row = c * ppc + p;
      const auto [zx, zy] = standard_normal_pair(rng);
      cloud.points(row, 0) = g.mean_x + sd * zx;
      cloud.points(row, 1) = g.mean_y + sd * zy;
      cloud.labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
    }
  }
  return cloud;
}

Graph knn_graph(const Matrix& points, Index kneighbors) {
  if (kneighbors < 1) throw Error(ErrorCode::InvalidArgument, "kneighbors must be >= 1");
  const Index n = points.rows();
  if (n < 2) throw Error(ErrorCode::TooFewPoints, "k-NN graph needs at least two points");
  const kernels::NeighborLists lists = kernels::knn_parallel(points, kneighbors);
  std::map<std::pair<Index, Index>, double> edges;
  for (Index i = 0; i < n; ++i) {
    for (const kernels::Neighbor& nb : lists[static_cast<std::size_t>(i)]) {
      if (nb.distance < 1e-12) {
        std::ostringstream msg;
        msg << "points " << std::min(i, nb.index) << " and " << std::max(i, nb.index)
            << " coincide; reciprocal distance undefined";
        throw Error(ErrorCode::DuplicatePoints, msg.str());
      }
      edges.emplace(std::minmax(i, nb.index), 1.0 / nb.distance);
    }
  }
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [key, w] : edges) list.push_back({key.first, key.second, w});
  return Graph::from_edges(n, list);
}

const LettersPreset& default_letters_preset() {
  // Every letter places three groups at the corners of the same triangle:
  // two groups hold a pair of nearly merged classes, the third a single
  // class. Means sit on the letter's strokes and each letter pairs the
  // classes differently, so no single layer separates all five.
  static const LettersPreset preset = [] {
    LettersPreset p;
    p.points_per_component = 500;
    p.kneighbors = 5;
    p.letters = {
        // Left stroke, right stroke, middle of the diagonal.
        {"N", {{0.0, -0.55, 0.3}, {0.0, 0.55, 0.3}, {3.8, -0.55, 0.3}, {3.8, 0.55, 0.3}, {1.9, 3.291, 0.3}}},
        // Stem, leg, lower edge of the bowl.
        {"R", {{0.0, -0.55, 0.3}, {3.44, 0.416, 0.3}, {0.0, 0.55, 0.3}, {1.9, 3.291, 0.3}, {4.16, -0.416, 0.3}}},
        // Top arc, lower-left arc, bottom tail.
        {"C", {{1.9, 3.291, 0.3}, {-0.55, 0.0, 0.3}, {0.55, 0.0, 0.3}, {3.25, 0.0, 0.3}, {4.35, 0.0, 0.3}}},
    };
    return p;
  }();
  return preset;
}

LettersPreset read_letters_preset(std::istream& in) {
  LettersPreset p;
  p.letters.clear();
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "letters preset line " << lineno << ": " << what;
    throw Error(ErrorCode::ParseError, msg.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key.front() == '#') continue;
    if (key == "points_per_component") {
      if (!(ls >> p.points_per_component)) fail("expected an integer");
    } else if (key == "kneighbors") {
      if (!(ls >> p.kneighbors)) fail("expected an integer");
    } else if (key == "letter") {
      LetterSpec letter;
      if (!(ls >> letter.name)) fail("expected a letter name");
      p.letters.push_back(std::move(letter));
    } else if (key == "component") {
      if (p.letters.empty()) fail("component before any letter");
      GaussianComponent c;
      if (!(ls >> c.mean_x >> c.mean_y >> c.variance)) fail("expected mean_x mean_y variance");
      p.letters.back().components.push_back(c);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (p.letters.empty()) fail("no letters");
  return p;
}

namespace {

// Shortest text that parses back to the same double.
std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_letters_preset(std::ostream& out, const LettersPreset& preset) {
  out << "# mlgc-letters-preset v1\n";
  out << "points_per_component " << preset.points_per_component << "\n";
  out << "kneighbors " << preset.kneighbors << "\n";
  for (const LetterSpec& letter : preset.letters) {
    out << "letter " << letter.name << "\n";
    for (const GaussianComponent& c : letter.components) {
      out << "component " << shortest(c.mean_x) << " " << shortest(c.mean_y) << " " << shortest(c.variance) << "\n";
    }
  }
}

Dataset letters_dataset(std::uint64_t seed, const LettersPreset& preset) {
  if (preset.letters.empty()) throw Error(ErrorCode::InvalidDataset, "letters preset has no letters");
  std::vector<Graph> layers;
  std::vector<int> truth;
  for (std::size_t l = 0; l < preset.letters.size(); ++l) {
    GmmSpec spec;
    spec.components = preset.letters[l].components;
    spec.points_per_component = preset.points_per_component;
    spec.seed = seed * 0x100000001b3ULL + l;
    PointCloud cloud = generate_letter_cloud(spec);
    Graph g = knn_graph(cloud, preset.kneighbors);
    if (!is_connected(g)) {
      std::ostringstream msg;
      msg << "letter " << preset.letters[l].name << " k-NN graph is disconnected for seed " << seed;
      throw Error(ErrorCode::DisconnectedGraph, msg.str());
    }
    layers.push_back(std::move(g));
    if (l == 0) truth = std::move(cloud.labels);
  }
  return {MultiLayerGraph(std::move(layers)), Partition(std::move(truth), static_cast<int>(GmmSpec::kComponents))};
}

namespace {

using Group = std::vector<Index>;

void add_clique(std::vector<Edge>& edges, const Group& g) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const auto [i, j] = std::minmax(g[a], g[b]);
      edges.push_back({i, j, 1.0});
    }
  }
}

Graph grouped_layer(const std::vector<Group>& groups, const std::vector<std::pair<Index, Index>>& bridges,
                    const std::vector<std::pair<Index, Index>>& removed = {}) {
  std::vector<Edge> edges;
  for (const Group& g : groups) add_clique(edges, g);
  std::erase_if(edges, [&](const Edge& e) {
    return std::find(removed.begin(), removed.end(), std::make_pair(e.i, e.j)) != removed.end();
  });
  for (const auto& [i, j] : bridges) edges.push_back({i, j, 1.0});
  return Graph::from_edges(12, edges);
}

Partition toy_truth() { return Partition({0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2}, 3); }

}  // namespace

Dataset toy_fixture_a() {
  const std::vector<Group> truth_groups{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  const std::vector<Group> scrambled{{0, 4, 8, 1}, {5, 9, 2, 6}, {10, 3, 7, 11}};
  std::vector<Graph> layers;
  layers.push_back(grouped_layer(truth_groups, {{3, 4}, {7, 8}}));
  layers.push_back(grouped_layer(truth_groups, {{1, 6}, {5, 10}, {2, 9}}, {{0, 1}, {4, 5}, {8, 9}}));
  layers.push_back(grouped_layer(scrambled, {{1, 5}, {6, 10}}));
  return {MultiLayerGraph(std::move(layers)), toy_truth()};
}

Dataset toy_fixture_b() {
  const std::vector<Group> truth_groups{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  const std::vector<Group> scrambled{{0, 4, 8, 1}, {5, 9, 2, 6}, {10, 3, 7, 11}};
  std::vector<Graph> layers;
  layers.push_back(grouped_layer(truth_groups, {{3, 4}, {7, 8}}));
  layers.push_back(grouped_layer(scrambled, {{1, 5}, {6, 10}}));
  layers.push_back(grouped_layer(scrambled, {{8, 9}, {2, 3}}, {{0, 4}, {5, 9}}));
  return {MultiLayerGraph(std::move(layers)), toy_truth()};
}

}  // namespace mlgc
