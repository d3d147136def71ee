#include "mlgc/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mlgc/error.hpp"

namespace mlgc::io {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw Error(ErrorCode::ParseError, msg.str());
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool parse_double(const std::string& token, double& out) {
  // strtod rather than from_chars: libstdc++ 11 lacks floating from_chars.
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end != token.c_str() && *end == '\0';
}

template <typename T>
bool parse_int(const std::string& token, T& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Returns the raw value of a "<magic> v1 key=value ..." header field.
std::optional<std::string> header_token(const std::string& line, const std::string& magic, const std::string& key) {
  std::istringstream ls(line);
  std::string hash, tag, version;
  if (!(ls >> hash >> tag >> version) || hash != "#" || tag != magic || version != "v1") return std::nullopt;
  std::string token;
  while (ls >> token) {
    if (token.rfind(key + "=", 0) == 0) return token.substr(key.size() + 1);
  }
  return std::nullopt;
}

std::optional<Index> header_field(const std::string& line, const std::string& magic, const std::string& key) {
  const auto token = header_token(line, magic, key);
  Index v = 0;
  if (token && parse_int(*token, v)) return v;
  return std::nullopt;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# mlgc-edges v1 n=" << g.size() << "\n";
  for (const Edge& e : g.edges()) out << e.i << " " << e.j << " " << format_double(e.weight) << "\n";
}

Graph read_edge_list(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) parse_fail(source, lineno, "empty edge list");
  const auto n = header_field(line, "mlgc-edges", "n");
  if (!n || *n < 1) parse_fail(source, lineno, "expected header '# mlgc-edges v1 n=<n>'");
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string si, sj, sw, extra;
    if (!(ls >> si)) continue;
    if (si.front() == '#') continue;
    Edge e;
    if (!(ls >> sj >> sw) || (ls >> extra) || !parse_int(si, e.i) || !parse_int(sj, e.j) ||
        !parse_double(sw, e.weight)) {
      parse_fail(source, lineno, "expected 'i j w'");
    }
    if (e.i < 0 || e.j < 0 || e.i >= *n || e.j >= *n) parse_fail(source, lineno, "vertex index out of range");
    if (e.i == e.j) parse_fail(source, lineno, "self-loop");
    edges.push_back(e);
  }
  try {
    return Graph::from_edges(*n, edges);
  } catch (const Error& err) {
    throw Error(ErrorCode::ParseError, source + ": " + err.what());
  }
}

void write_labels(std::ostream& out, const std::vector<int>& labels) {
  for (int l : labels) out << l << "\n";
}

std::vector<int> read_labels(std::istream& in, const std::string& source) {
  std::vector<int> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string token, extra;
    if (!(ls >> token)) continue;
    int v = 0;
    if ((ls >> extra) || !parse_int(token, v) || v < 0) {
      parse_fail(source, lineno, "expected one nonnegative integer");
    }
    labels.push_back(v);
  }
  return labels;
}

bool LayerManifest::has_alpha_overrides() const {
  for (const auto& a : alphas) {
    if (a) return true;
  }
  return false;
}

void write_manifest(std::ostream& out, const LayerManifest& manifest) {
  if (manifest.n > 0 || manifest.alpha) {
    out << "# mlgc-manifest v1";
    if (manifest.n > 0) out << " n=" << manifest.n;
    if (manifest.alpha) out << " alpha=" << format_double(*manifest.alpha);
    out << "\n";
  }
  for (std::size_t i = 0; i < manifest.layers.size(); ++i) {
    out << manifest.layers[i].generic_string();
    if (i < manifest.alphas.size() && manifest.alphas[i]) out << " alpha=" << format_double(*manifest.alphas[i]);
    out << "\n";
  }
}

LayerManifest read_manifest(std::istream& in, const std::string& source) {
  LayerManifest m;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string path;
    if (!(ls >> path)) continue;
    if (path.front() == '#') {
      if (const auto n = header_field(line, "mlgc-manifest", "n")) m.n = *n;
      if (const auto token = header_token(line, "mlgc-manifest", "alpha")) {
        double a = 0.0;
        if (!parse_double(*token, a) || !(a >= 0.0)) parse_fail(source, lineno, "header alpha must be a nonnegative number");
        m.alpha = a;
      }
      continue;
    }
    std::optional<double> alpha;
    std::string token;
    while (ls >> token) {
      double a = 0.0;
      if (token.rfind("alpha=", 0) != 0 || alpha || !parse_double(token.substr(6), a)) {
        parse_fail(source, lineno, "unexpected token '" + token + "'");
      }
      if (!(a >= 0.0)) parse_fail(source, lineno, "alpha must be nonnegative");
      alpha = a;
    }
    m.layers.emplace_back(path);
    m.alphas.push_back(alpha);
  }
  if (m.layers.empty()) parse_fail(source, lineno, "manifest lists no layers");
  return m;
}

void write_embedding(std::ostream& out, const Matrix& basis) {
  out << "# mlgc-embedding v1 n=" << basis.rows() << " k=" << basis.cols() << "\n";
  for (Index r = 0; r < basis.rows(); ++r) {
    for (Index c = 0; c < basis.cols(); ++c) out << (c ? " " : "") << format_double(basis(r, c));
    out << "\n";
  }
}

Matrix read_embedding(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) parse_fail(source, lineno, "empty embedding file");
  const auto n = header_field(line, "mlgc-embedding", "n");
  const auto k = header_field(line, "mlgc-embedding", "k");
  if (!n || !k || *n < 1 || *k < 1) parse_fail(source, lineno, "expected '# mlgc-embedding v1 n=<n> k=<k>'");
  Matrix out(*n, *k);
  for (Index r = 0; r < *n; ++r) {
    ++lineno;
    if (!std::getline(in, line)) parse_fail(source, lineno, "missing rows");
    std::istringstream ls(line);
    std::string token;
    for (Index c = 0; c < *k; ++c) {
      double v = 0.0;
      if (!(ls >> token) || !parse_double(token, v)) parse_fail(source, lineno, "expected k values");
      out(r, c) = v;
    }
    if (ls >> token) parse_fail(source, lineno, "too many values");
  }
  return out;
}

void atomic_write(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot move output into place at " + path.string());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_edge_list(const fs::path& path) {
  std::ifstream in = open_input(path);
  return read_edge_list(in, path.string());
}

std::vector<int> load_labels(const fs::path& path) {
  std::ifstream in = open_input(path);
  return read_labels(in, path.string());
}

Matrix load_embedding(const fs::path& path) {
  std::ifstream in = open_input(path);
  return read_embedding(in, path.string());
}

LayerManifest load_manifest(const fs::path& path) {
  std::ifstream in = open_input(path);
  LayerManifest m = read_manifest(in, path.string());
  const fs::path base = path.parent_path();
  for (auto& layer : m.layers) {
    if (layer.is_relative()) layer = base / layer;
  }
  return m;
}

MultiLayerGraph load_layers(const LayerManifest& manifest) {
  std::vector<Graph> layers;
  for (const fs::path& p : manifest.layers) {
    Graph g = load_edge_list(p);
    if (manifest.n > 0 && g.size() != manifest.n) {
      std::ostringstream msg;
      msg << p.string() << ": has n=" << g.size() << " but the manifest declares n=" << manifest.n;
      throw Error(ErrorCode::ParseError, msg.str());
    }
    layers.push_back(std::move(g));
  }
  return MultiLayerGraph(std::move(layers));
}

namespace {

template <typename Writer>
void save_with(const fs::path& path, Writer&& writer) {
  std::ostringstream out;
  writer(out);
  atomic_write(path, out.str());
}

}  // namespace

void save_edge_list(const fs::path& path, const Graph& g) {
  save_with(path, [&](std::ostream& o) { write_edge_list(o, g); });
}
void save_labels(const fs::path& path, const std::vector<int>& labels) {
  save_with(path, [&](std::ostream& o) { write_labels(o, labels); });
}
void save_manifest(const fs::path& path, const LayerManifest& manifest) {
  save_with(path, [&](std::ostream& o) { write_manifest(o, manifest); });
}
void save_embedding(const fs::path& path, const Matrix& basis) {
  save_with(path, [&](std::ostream& o) { write_embedding(o, basis); });
}

}  // namespace mlgc::io
