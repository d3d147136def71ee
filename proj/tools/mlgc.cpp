// mlgc: multi-layer graph clustering from the command line.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlgc/commands.hpp"
#include "mlgc/error.hpp"

namespace {

std::vector<mlgc::Metric> parse_metrics(const std::vector<std::string>& names) {
  std::vector<mlgc::Metric> out;
  for (const std::string& name : names) {
    const auto m = mlgc::parse_metric(name);
    if (!m) throw mlgc::Error(mlgc::ErrorCode::InvalidArgument, "unknown metric '" + name + "'");
    out.push_back(*m);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral clustering on multi-layer graphs"};
  app.require_subcommand(1);

  mlgc::cli::GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a dataset as edge lists, manifest and truth labels");
  generate->add_option("dataset", gen.dataset, "letters | toy-a | toy-b")->required();
  generate->add_option("--seed", gen.seed, "Sampling seed (letters)");
  generate->add_option("--out", gen.out_dir, "Output directory")->required();
  std::string preset_path;
  auto* preset_opt = generate->add_option("--preset", preset_path, "Letters GMM preset file");

  mlgc::cli::ClusterOptions clu;
  std::string method = "sc-ml";
  std::size_t layer = 0;
  std::string truth_path, dump_path;
  double clu_alpha = 0.5, dist_alpha = 0.5;
  auto* cluster = app.add_subcommand("cluster", "Cluster the vertices of a multi-layer graph");
  cluster->add_option("manifest", clu.manifest, "Layer manifest")->required();
  cluster->add_option("--k", clu.k, "Number of clusters")->required();
  cluster->add_option("--method", method, "sc-ml | sc-single | sc-sum | sc-ksum");
  auto* clu_alpha_opt = cluster->add_option("--alpha", clu_alpha, "Regularisation weight for sc-ml (default: manifest, else 0.5)");
  cluster->add_option("--seed", clu.seed, "Base k-means seed");
  cluster->add_option("--restarts", clu.restarts, "k-means restarts");
  cluster->add_option("--out", clu.out, "Output labels file")->required();
  auto* layer_opt = cluster->add_option("--layer", layer, "Layer index for sc-single");
  auto* truth_opt = cluster->add_option("--truth", truth_path, "Truth labels (sc-single best-layer pick)");
  auto* dump_opt = cluster->add_option("--dump-embedding", dump_path, "Write the sc-ml representative subspace");
  cluster->add_flag("--allow-disconnected", clu.allow_disconnected, "Warn instead of failing on disconnected layers");

  mlgc::cli::DistanceOptions dist;
  auto* distance = app.add_subcommand("distance", "Projection distances between layer subspaces");
  distance->add_option("manifest", dist.manifest, "Layer manifest")->required();
  distance->add_option("--k", dist.k, "Subspace dimension")->required();
  auto* dist_alpha_opt = distance->add_option("--alpha", dist_alpha, "Regularisation weight for the representative subspace");

  mlgc::cli::EvaluateOptions eval;
  std::vector<std::string> metric_names{"purity", "nmi", "ri"};
  auto* evaluate = app.add_subcommand("evaluate", "Score predicted labels against truth");
  evaluate->add_option("pred", eval.pred, "Predicted labels")->required();
  evaluate->add_option("truth", eval.truth, "Truth labels")->required();
  evaluate->add_option("--metrics", metric_names, "Subset of purity, nmi, ri")->delimiter(',');

  mlgc::cli::SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Run sc-ml over an alpha grid");
  sweep->add_option("manifest", sw.manifest, "Layer manifest")->required();
  sweep->add_option("--truth", sw.truth, "Truth labels")->required();
  sweep->add_option("--k", sw.k, "Number of clusters")->required();
  sweep->add_option("--alpha-min", sw.alpha_min, "Smallest alpha");
  sweep->add_option("--alpha-max", sw.alpha_max, "Largest alpha");
  sweep->add_option("--steps", sw.steps, "Grid points");
  sweep->add_option("--seed", sw.seed, "Base k-means seed");
  sweep->add_option("--restarts", sw.restarts, "k-means restarts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mlgc: error[" << mlgc::to_string(mlgc::ErrorCode::InvalidArgument) << "]: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*generate) {
      if (*preset_opt) gen.preset = preset_path;
      mlgc::cli::cmd_generate(gen, std::cout);
    } else if (*cluster) {
      const auto m = mlgc::parse_method(method);
      if (!m) throw mlgc::Error(mlgc::ErrorCode::InvalidArgument, "unknown method '" + method + "'");
      clu.method = *m;
      if (*clu_alpha_opt) clu.alpha = clu_alpha;
      if (*layer_opt) clu.layer = layer;
      if (*truth_opt) clu.truth = truth_path;
      if (*dump_opt) clu.dump_embedding = dump_path;
      if (clu.allow_disconnected) {
        std::cerr << "mlgc: warning: disconnected layers are allowed; results may be unreliable\n";
      }
      mlgc::cli::cmd_cluster(clu, std::cout);
    } else if (*distance) {
      if (*dist_alpha_opt) dist.alpha = dist_alpha;
      mlgc::cli::cmd_distance(dist, std::cout);
    } else if (*evaluate) {
      eval.metrics = parse_metrics(metric_names);
      mlgc::cli::cmd_evaluate(eval, std::cout);
    } else if (*sweep) {
      mlgc::cli::cmd_sweep(sw, std::cout);
    }
  } catch (const mlgc::Error& e) {
    std::cerr << "mlgc: error[" << mlgc::to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "mlgc: error[Internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
