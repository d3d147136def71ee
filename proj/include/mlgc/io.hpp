#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlgc/graph.hpp"
#include "mlgc/grassmann.hpp"

namespace mlgc::io {

namespace fs = std::filesystem;

// Edge list:   "# mlgc-edges v1 n=<n>" then "i j w" per undirected edge, i < j.
// Labels:      one nonnegative integer per line; line v is vertex v.
// Manifest:    optional "# mlgc-manifest v1 n=<n> [alpha=<x>]", then one layer path per
//              line with an optional trailing "alpha=<x>". Relative paths
//              resolve against the manifest's directory.
// Embedding:   "# mlgc-embedding v1 n=<n> k=<k>" then n rows of k values.
// Weights and embedding entries are written with 17 significant digits.

void write_edge_list(std::ostream& out, const Graph& g);
/// `source` names the stream in ParseError messages.
Graph read_edge_list(std::istream& in, const std::string& source = "<stream>");

void write_labels(std::ostream& out, const std::vector<int>& labels);
std::vector<int> read_labels(std::istream& in, const std::string& source = "<stream>");

struct LayerManifest {
  std::vector<fs::path> layers;
  std::vector<std::optional<double>> alphas;
  /// Declared vertex count; 0 when the manifest carries no header.
  Index n = 0;
  /// Dataset default weight from the header; used when none is given explicitly.
  std::optional<double> alpha;

  bool has_alpha_overrides() const;
};

void write_manifest(std::ostream& out, const LayerManifest& manifest);
/// Paths are stored as written; see load_manifest for resolution.
LayerManifest read_manifest(std::istream& in, const std::string& source = "<stream>");

void write_embedding(std::ostream& out, const Matrix& basis);
Matrix read_embedding(std::istream& in, const std::string& source = "<stream>");

/// Writes to a sibling temporary file and renames it into place.
void atomic_write(const fs::path& path, const std::string& contents);
std::string read_file(const fs::path& path);

Graph load_edge_list(const fs::path& path);
std::vector<int> load_labels(const fs::path& path);
Matrix load_embedding(const fs::path& path);
/// Reads the manifest and resolves layer paths against its directory.
LayerManifest load_manifest(const fs::path& path);
/// Loads every layer; throws ParseError if a layer's n differs from the
/// declared n, IoError naming the path if a layer file is missing.
MultiLayerGraph load_layers(const LayerManifest& manifest);

void save_edge_list(const fs::path& path, const Graph& g);
void save_labels(const fs::path& path, const std::vector<int>& labels);
void save_manifest(const fs::path& path, const LayerManifest& manifest);
void save_embedding(const fs::path& path, const Matrix& basis);

}  // namespace mlgc::io
