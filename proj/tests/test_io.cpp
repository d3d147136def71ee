#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "mlgc/datasets.hpp"
#include "mlgc/error.hpp"
#include "mlgc/io.hpp"
#include "oracles.hpp"

using namespace mlgc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mlgc::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("edge list round trip is exact") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 5 + trial * 3);
    std::stringstream ss;
    io::write_edge_list(ss, g);
    const Graph back = io::read_edge_list(ss);
    CHECK(back.size() == g.size());
    CHECK((back.weights() - g.weights()).norm() == 0.0);
  }
}

TEST_CASE("edge list format details") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{1, 2, 0.25}, {0, 1, 1.0}});
  std::ostringstream out;
  io::write_edge_list(out, g);
  CHECK(out.str() == "# mlgc-edges v1 n=3\n0 1 1\n1 2 0.25\n");

  std::istringstream reversed("# mlgc-edges v1 n=3\n2 1 0.5\n");
  CHECK(io::read_edge_list(reversed).weights().coeff(1, 2) == 0.5);

  std::istringstream no_header("0 1 1\n");
  CHECK(code_of([&] { io::read_edge_list(no_header); }) == ErrorCode::ParseError);
  std::istringstream bad("# mlgc-edges v1 n=3\n0 1\n");
  CHECK(code_of([&] { io::read_edge_list(bad); }) == ErrorCode::ParseError);
  std::istringstream range("# mlgc-edges v1 n=3\n0 3 1\n");
  CHECK(code_of([&] { io::read_edge_list(range); }) == ErrorCode::ParseError);
  std::istringstream twice("# mlgc-edges v1 n=3\n0 1 1\n1 0 1\n");
  CHECK(code_of([&] { io::read_edge_list(twice); }) == ErrorCode::ParseError);
}

TEST_CASE("labels round trip and errors") {
  const std::vector<int> labels{0, 3, 1, 1, 2};
  std::stringstream ss;
  io::write_labels(ss, labels);
  CHECK(ss.str() == "0\n3\n1\n1\n2\n");
  CHECK(io::read_labels(ss) == labels);
  std::istringstream neg("0\n-1\n");
  CHECK(code_of([&] { io::read_labels(neg); }) == ErrorCode::ParseError);
  std::istringstream junk("0\nx\n");
  CHECK(code_of([&] { io::read_labels(junk); }) == ErrorCode::ParseError);
}

TEST_CASE("manifest round trip with alpha overrides") {
  io::LayerManifest m;
  m.n = 12;
  m.layers = {"a.edges", "sub/b.edges"};
  m.alphas = {std::nullopt, 0.3};
  std::stringstream ss;
  io::write_manifest(ss, m);
  CHECK(ss.str() == "# mlgc-manifest v1 n=12\na.edges\nsub/b.edges alpha=0.29999999999999999\n");
  const io::LayerManifest back = io::read_manifest(ss);
  CHECK(back.n == 12);
  CHECK(back.layers == m.layers);
  CHECK(back.alphas == m.alphas);
  CHECK(back.has_alpha_overrides());

  std::istringstream empty("# nothing\n");
  CHECK(code_of([&] { io::read_manifest(empty); }) == ErrorCode::ParseError);
  std::istringstream bad("a.edges beta=1\n");
  CHECK(code_of([&] { io::read_manifest(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("manifest header carries a default alpha") {
  io::LayerManifest m;
  m.n = 4;
  m.alpha = 0.64;
  m.layers = {"a.edges"};
  m.alphas = {std::nullopt};
  std::stringstream ss;
  io::write_manifest(ss, m);
  CHECK(ss.str() == "# mlgc-manifest v1 n=4 alpha=0.64000000000000001\na.edges\n");
  const io::LayerManifest back = io::read_manifest(ss);
  CHECK(back.n == 4);
  REQUIRE(back.alpha.has_value());
  CHECK(*back.alpha == 0.64);
  CHECK(!back.has_alpha_overrides());

  std::istringstream neg("# mlgc-manifest v1 n=4 alpha=-1\na.edges\n");
  CHECK(code_of([&] { io::read_manifest(neg); }) == ErrorCode::ParseError);
  std::istringstream junk("# mlgc-manifest v1 alpha=x\na.edges\n");
  CHECK(code_of([&] { io::read_manifest(junk); }) == ErrorCode::ParseError);
}

TEST_CASE("embedding dump reloads bit for bit") {
  std::mt19937_64 rng(72);
  const Matrix b = oracle::random_orthonormal(rng, 20, 3);
  std::stringstream ss;
  io::write_embedding(ss, b);
  CHECK(ss.str().rfind("# mlgc-embedding v1 n=20 k=3\n", 0) == 0);
  CHECK(io::read_embedding(ss) == b);
}

TEST_CASE("files: atomic write, manifest resolution, missing layers") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mlgc_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "layers");
  const Dataset toy = toy_fixture_a();
  io::save_edge_list(dir / "layers" / "l0.edges", toy.graph.layer(0));
  io::save_edge_list(dir / "layers" / "l1.edges", toy.graph.layer(1));
  CHECK_FALSE(fs::exists(dir / "layers" / "l0.edges.tmp"));
  io::LayerManifest m;
  m.n = 12;
  m.layers = {"layers/l0.edges", "layers/l1.edges"};
  m.alphas = {std::nullopt, std::nullopt};
  io::save_manifest(dir / "manifest.txt", m);

  const MultiLayerGraph loaded = io::load_layers(io::load_manifest(dir / "manifest.txt"));
  CHECK(loaded.num_layers() == 2);
  CHECK((loaded.layer(1).weights() - toy.graph.layer(1).weights()).norm() == 0.0);

  m.n = 13;
  io::save_manifest(dir / "wrong_n.txt", m);
  CHECK(code_of([&] { io::load_layers(io::load_manifest(dir / "wrong_n.txt")); }) == ErrorCode::ParseError);

  m.n = 12;
  m.layers.push_back("layers/missing.edges");
  m.alphas.emplace_back();
  io::save_manifest(dir / "missing.txt", m);
  try {
    io::load_layers(io::load_manifest(dir / "missing.txt"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
    CHECK(std::string(e.what()).find("missing.edges") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("letters preset text round trip") {
  std::stringstream ss;
  write_letters_preset(ss, default_letters_preset());
  CHECK(read_letters_preset(ss) == default_letters_preset());
}
