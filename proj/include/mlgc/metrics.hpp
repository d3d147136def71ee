#pragma once

#include <optional>
#include <string_view>

#include "mlgc/graph.hpp"

namespace mlgc {

/// counts(p, t): vertices with predicted cluster p and true class t.
struct ContingencyTable {
  Eigen::MatrixXi counts;
  Index n = 0;
};

/// Throws LengthMismatch if the partitions cover different vertex counts.
ContingencyTable contingency(const Partition& pred, const Partition& truth);

/// Fraction of vertices that belong to the majority class of their predicted
/// cluster. Not symmetric in its arguments.
double purity(const Partition& pred, const Partition& truth);

enum class NmiNormalization { Arithmetic, Geometric };

/// Mutual information over a mean of the two entropies (arithmetic by
/// default). Two single-cluster partitions score 1; a single-cluster
/// partition against a non-trivial one scores 0.
double nmi(const Partition& pred, const Partition& truth,
           NmiNormalization norm = NmiNormalization::Arithmetic);

/// Fraction of vertex pairs on which the partitions agree (both together or
/// both apart). Throws TooFewPoints for n < 2.
double rand_index(const Partition& pred, const Partition& truth);

enum class Metric { Purity, Nmi, RandIndex };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);
double evaluate(Metric m, const Partition& pred, const Partition& truth);

}  // namespace mlgc
