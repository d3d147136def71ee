#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlgc/clustering.hpp"
#include "mlgc/metrics.hpp"

// Command implementations behind the `mlgc` executable. Each writes its
// report to `out` and throws mlgc::Error on failure.
namespace mlgc::cli {

namespace fs = std::filesystem;

struct GenerateOptions {
  std::string dataset;  // letters | toy-a | toy-b
  std::uint64_t seed = 7;
  fs::path out_dir;
  /// Letters only: GMM preset file replacing the built-in one.
  std::optional<fs::path> preset;
};

/// Writes layer<i>.edges, truth.labels and manifest.txt into out_dir, plus
/// preset.txt for the letters dataset.
void cmd_generate(const GenerateOptions& opts, std::ostream& out);

struct ClusterOptions {
  fs::path manifest;
  Index k = 2;
  Method method = Method::ScMl;
  /// Unset: the manifest header default, else 0.5. Per-layer overrides win.
  std::optional<double> alpha;
  std::uint64_t seed = 0;
  int restarts = 20;
  fs::path out;
  std::optional<std::size_t> layer;
  /// With sc-single over all layers, picks the best layer by NMI.
  std::optional<fs::path> truth;
  std::optional<fs::path> dump_embedding;
  bool allow_disconnected = false;
};

/// Writes the predicted labels to `out` and a key=value run report to
/// `<out>.report`. sc-single without a layer writes `<out>.layer<i>` for
/// every layer, and `out` itself only when a truth file selects the best.
void cmd_cluster(const ClusterOptions& opts, std::ostream& out);

struct DistanceOptions {
  fs::path manifest;
  Index k = 2;
  std::optional<double> alpha;
};

void cmd_distance(const DistanceOptions& opts, std::ostream& out);

struct EvaluateOptions {
  fs::path pred;
  fs::path truth;
  std::vector<Metric> metrics{Metric::Purity, Metric::Nmi, Metric::RandIndex};
};

void cmd_evaluate(const EvaluateOptions& opts, std::ostream& out);

struct SweepOptions {
  fs::path manifest;
  fs::path truth;
  Index k = 2;
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  int steps = 11;
  std::uint64_t seed = 0;
  int restarts = 20;
};

struct SweepRow {
  double alpha = 0.0;
  double purity = 0.0;
  double nmi = 0.0;
  double rand_index = 0.0;
};

/// Even grid alpha_min + j (alpha_max - alpha_min) / (steps - 1).
std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps);

std::vector<SweepRow> sweep(const MultiLayerGraph& mlg, const Partition& truth, Index k,
                            const std::vector<double>& alphas, const KMeansConfig& kmcfg);

void cmd_sweep(const SweepOptions& opts, std::ostream& out);

}  // namespace mlgc::cli
