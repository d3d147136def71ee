#include "mlgc/commands.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "mlgc/datasets.hpp"
#include "mlgc/error.hpp"
#include "mlgc/io.hpp"

namespace mlgc::cli {

namespace {

// Default weight written into generated letters manifests.
constexpr double kLettersAlpha = 0.64;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Partition labels_to_partition(std::vector<int> labels, const fs::path& source) {
  if (labels.empty()) throw Error(ErrorCode::ParseError, source.string() + ": no labels");
  return Partition::from_labels(std::move(labels));
}

KMeansConfig kmeans_config(Index k, std::uint64_t seed, int restarts) {
  KMeansConfig cfg;
  cfg.k = k;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

MergeConfig merge_config(const io::LayerManifest& manifest, std::optional<double> requested, Index k) {
  const double alpha = requested.value_or(manifest.alpha.value_or(0.5));
  MergeConfig cfg = MergeConfig::scalar(alpha, k);
  if (manifest.has_alpha_overrides()) {
    cfg.alpha.clear();
    for (const auto& a : manifest.alphas) cfg.alpha.push_back(a.value_or(alpha));
  }
  return cfg;
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + fixed6(values[i]);
  return s;
}

}  // namespace

void cmd_generate(const GenerateOptions& opts, std::ostream& out) {
  Dataset data;
  std::optional<LettersPreset> preset;
  if (opts.preset && opts.dataset != "letters") {
    throw Error(ErrorCode::InvalidArgument, "--preset only applies to the letters dataset");
  }
  if (opts.dataset == "letters") {
    preset = default_letters_preset();
    if (opts.preset) {
      std::istringstream in(io::read_file(*opts.preset));
      preset = read_letters_preset(in);
    }
    data = letters_dataset(opts.seed, *preset);
  } else if (opts.dataset == "toy-a") {
    data = toy_fixture_a();
  } else if (opts.dataset == "toy-b") {
    data = toy_fixture_b();
  } else {
    throw Error(ErrorCode::InvalidDataset, "unknown dataset '" + opts.dataset + "' (letters | toy-a | toy-b)");
  }
  std::error_code ec;
  fs::create_directories(opts.out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + opts.out_dir.string());

  io::LayerManifest manifest;
  manifest.n = data.graph.size();
  for (std::size_t i = 0; i < data.graph.num_layers(); ++i) {
    const std::string name = "layer" + std::to_string(i) + ".edges";
    io::save_edge_list(opts.out_dir / name, data.graph.layer(i));
    manifest.layers.emplace_back(name);
    manifest.alphas.emplace_back();
  }
  if (preset) manifest.alpha = kLettersAlpha;
  io::save_manifest(opts.out_dir / "manifest.txt", manifest);
  io::save_labels(opts.out_dir / "truth.labels", data.truth.labels);
  if (preset) {
    std::ostringstream text;
    write_letters_preset(text, *preset);
    io::atomic_write(opts.out_dir / "preset.txt", text.str());
  }
  out << "dataset=" << opts.dataset << "\n"
      << "seed=" << opts.seed << "\n"
      << "n=" << data.graph.size() << "\n"
      << "layers=" << data.graph.num_layers() << "\n"
      << "classes=" << data.truth.k << "\n"
      << "manifest=" << (opts.out_dir / "manifest.txt").string() << "\n";
}

void cmd_cluster(const ClusterOptions& opts, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const io::LayerManifest manifest = io::load_manifest(opts.manifest);
  const MultiLayerGraph mlg = io::load_layers(manifest);
  const KMeansConfig kmcfg = kmeans_config(opts.k, opts.seed, opts.restarts);
  SpectralOptions sopts;
  sopts.allow_disconnected = opts.allow_disconnected;

  std::ostringstream report;
  report << "method=" << to_string(opts.method) << "\n"
         << "k=" << opts.k << "\n"
         << "seed=" << opts.seed << "\n"
         << "restarts=" << opts.restarts << "\n"
         << "restart_seeds=" << opts.seed << ".." << opts.seed + static_cast<std::uint64_t>(opts.restarts) - 1
         << "\n"
         << "layers=" << mlg.num_layers() << "\n"
         << "n=" << mlg.size() << "\n";

  ClusterResult result;
  bool write_main = true;
  switch (opts.method) {
    case Method::ScSingle: {
      if (opts.layer) {
        if (*opts.layer >= mlg.num_layers()) {
          throw Error(ErrorCode::InvalidArgument, "--layer " + std::to_string(*opts.layer) + " out of range");
        }
        result = sc_single(mlg.layer(*opts.layer), opts.k, kmcfg, sopts);
        report << "layer=" << *opts.layer << "\n";
        break;
      }
      const std::vector<ClusterResult> all = sc_single_all(mlg, opts.k, kmcfg, sopts);
      for (std::size_t i = 0; i < all.size(); ++i) {
        fs::path p = opts.out;
        p += ".layer" + std::to_string(i);
        io::save_labels(p, all[i].partition.labels);
        report << "layer" << i << "_objective=" << fixed6(all[i].objective) << "\n";
      }
      if (opts.truth) {
        const Partition truth = labels_to_partition(io::load_labels(*opts.truth), *opts.truth);
        const std::size_t best = best_result(all, truth, Metric::Nmi);
        report << "best_layer=" << best << "\n";
        result = all[best];
      } else {
        write_main = false;
        result = all.front();
      }
      break;
    }
    case Method::ScSum:
      result = sc_sum(mlg, opts.k, kmcfg, sopts);
      break;
    case Method::ScKSum:
      result = sc_ksum(mlg, opts.k, kmcfg, sopts);
      break;
    case Method::ScMl: {
      const MergeConfig cfg = merge_config(manifest, opts.alpha, opts.k);
      cfg.validate(mlg.num_layers());
      check_layers(mlg, sopts);
      const LayerSpectra spectra = layer_spectra(mlg, opts.k, sopts.eigen);
      const Embedding u = representative_subspace(spectra, cfg, sopts.eigen);
      if (opts.dump_embedding) io::save_embedding(*opts.dump_embedding, u.basis());
      KMeansConfig km = kmcfg;
      km.k = opts.k;
      result = cluster_embedding(u, km, Method::ScMl, sopts.row_eps);
      report << "alpha=" << join(cfg.alpha) << "\n";
      break;
    }
  }
  if (write_main) io::save_labels(opts.out, result.partition.labels);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report << "objective=" << fixed6(result.objective) << "\n"
         << "restart_objectives=" << join(result.restarts_summary) << "\n"
         << "wall_time_s=" << fixed6(secs) << "\n";
  fs::path report_path = opts.out;
  report_path += ".report";
  io::atomic_write(report_path, report.str());
  out << report.str();
}

void cmd_distance(const DistanceOptions& opts, std::ostream& out) {
  const io::LayerManifest manifest = io::load_manifest(opts.manifest);
  const MultiLayerGraph mlg = io::load_layers(manifest);
  const LayerSpectra spectra = layer_spectra(mlg, opts.k);
  const Matrix d = pairwise_projection_distances(spectra.embeddings);
  out << "# projection distances between layer subspaces (k=" << opts.k << ")\n";
  for (Index i = 0; i < d.rows(); ++i) {
    for (Index j = 0; j < d.cols(); ++j) out << (j ? " " : "") << fixed6(d(i, j));
    out << "\n";
  }
  const MergeConfig cfg = merge_config(manifest, opts.alpha, opts.k);
  const Embedding u = representative_subspace(spectra, cfg);
  out << "# distance to the representative subspace (alpha=" << join(cfg.alpha) << ")\n";
  for (std::size_t i = 0; i < spectra.num_layers(); ++i) {
    out << "layer" << i << "=" << fixed6(projection_distance(u, spectra.embeddings[i])) << "\n";
  }
}

void cmd_evaluate(const EvaluateOptions& opts, std::ostream& out) {
  const Partition pred = labels_to_partition(io::load_labels(opts.pred), opts.pred);
  const Partition truth = labels_to_partition(io::load_labels(opts.truth), opts.truth);
  if (pred.size() != truth.size()) {
    std::ostringstream msg;
    msg << opts.pred.string() << " has " << pred.size() << " labels but " << opts.truth.string() << " has "
        << truth.size();
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }
  for (Metric m : opts.metrics) out << to_string(m) << "=" << fixed6(evaluate(m, pred, truth)) << "\n";
}

std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "sweep needs steps >= 1");
  if (!(alpha_min <= alpha_max)) throw Error(ErrorCode::InvalidArgument, "sweep needs alpha_min <= alpha_max");
  if (alpha_min < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  std::vector<double> grid;
  for (int j = 0; j < steps; ++j) {
    grid.push_back(steps == 1 ? alpha_min : alpha_min + j * (alpha_max - alpha_min) / (steps - 1));
  }
  return grid;
}

std::vector<SweepRow> sweep(const MultiLayerGraph& mlg, const Partition& truth, Index k,
                            const std::vector<double>& alphas, const KMeansConfig& kmcfg) {
  check_layers(mlg, {});
  const LayerSpectra spectra = layer_spectra(mlg, k);
  std::vector<SweepRow> rows;
  for (double a : alphas) {
    const ClusterResult r = sc_ml(spectra, MergeConfig::scalar(a, k), kmcfg);
    rows.push_back({a, purity(r.partition, truth), nmi(r.partition, truth), rand_index(r.partition, truth)});
  }
  return rows;
}

void cmd_sweep(const SweepOptions& opts, std::ostream& out) {
  const std::vector<double> grid = alpha_grid(opts.alpha_min, opts.alpha_max, opts.steps);
  const io::LayerManifest manifest = io::load_manifest(opts.manifest);
  const MultiLayerGraph mlg = io::load_layers(manifest);
  const Partition truth = labels_to_partition(io::load_labels(opts.truth), opts.truth);
  if (truth.size() != mlg.size()) throw Error(ErrorCode::LengthMismatch, "truth labels do not match n");
  const std::vector<SweepRow> rows = sweep(mlg, truth, opts.k, grid, kmeans_config(opts.k, opts.seed, opts.restarts));
  out << "alpha purity nmi ri\n";
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << fixed6(rows[i].alpha) << " " << fixed6(rows[i].purity) << " " << fixed6(rows[i].nmi) << " "
        << fixed6(rows[i].rand_index) << "\n";
    if (rows[i].nmi > rows[best].nmi) best = i;
  }
  out << "best_alpha=" << fixed6(rows[best].alpha) << " best_nmi=" << fixed6(rows[best].nmi) << "\n";
}

}  // namespace mlgc::cli
