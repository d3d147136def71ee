#include "mlgc/metrics.hpp"

#include <cmath>
#include <sstream>

#include "mlgc/error.hpp"

namespace mlgc {

ContingencyTable contingency(const Partition& pred, const Partition& truth) {
  if (pred.size() != truth.size()) {
    std::ostringstream msg;
    msg << "partitions cover " << pred.size() << " and " << truth.size() << " vertices";
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }
  ContingencyTable t;
  t.n = pred.size();
  t.counts = Eigen::MatrixXi::Zero(pred.k, truth.k);
  for (std::size_t v = 0; v < pred.labels.size(); ++v) ++t.counts(pred.labels[v], truth.labels[v]);
  return t;
}

double purity(const Partition& pred, const Partition& truth) {
  const ContingencyTable t = contingency(pred, truth);
  if (t.n == 0) return 1.0;
  long long hits = 0;
  for (Index p = 0; p < t.counts.rows(); ++p) hits += t.counts.row(p).maxCoeff();
  return static_cast<double>(hits) / static_cast<double>(t.n);
}

namespace {

double entropy(const Eigen::VectorXi& sizes, double n) {
  double h = 0.0;
  for (Index i = 0; i < sizes.size(); ++i) {
    if (sizes[i] > 0) {
      const double p = sizes[i] / n;
      h -= p * std::log(p);
    }
  }
  return h;
}

long long pairs(long long m) { return m * (m - 1) / 2; }

}  // namespace

double nmi(const Partition& pred, const Partition& truth, NmiNormalization norm) {
  const ContingencyTable t = contingency(pred, truth);
  if (t.n == 0) return 1.0;
  const double n = static_cast<double>(t.n);
  const Eigen::VectorXi rows = t.counts.rowwise().sum();
  const Eigen::VectorXi cols = t.counts.colwise().sum().transpose();
  const double h_pred = entropy(rows, n);
  const double h_truth = entropy(cols, n);
  if (h_pred == 0.0 && h_truth == 0.0) return 1.0;
  if (h_pred == 0.0 || h_truth == 0.0) return 0.0;
  double mi = 0.0;
  for (Index p = 0; p < t.counts.rows(); ++p) {
    for (Index c = 0; c < t.counts.cols(); ++c) {
      const int nij = t.counts(p, c);
      if (nij == 0) continue;
      mi += (nij / n) * std::log(n * nij / (static_cast<double>(rows[p]) * cols[c]));
    }
  }
  if (mi <= 0.0) return 0.0;
  const double denom = norm == NmiNormalization::Arithmetic ? 0.5 * (h_pred + h_truth) : std::sqrt(h_pred * h_truth);
  return std::min(1.0, mi / denom);
}

double rand_index(const Partition& pred, const Partition& truth) {
  const ContingencyTable t = contingency(pred, truth);
  if (t.n < 2) throw Error(ErrorCode::TooFewPoints, "rand index needs at least two vertices");
  long long same_both = 0;
  for (Index p = 0; p < t.counts.rows(); ++p) {
    for (Index c = 0; c < t.counts.cols(); ++c) same_both += pairs(t.counts(p, c));
  }
  long long same_pred = 0;
  long long same_truth = 0;
  const Eigen::VectorXi rows = t.counts.rowwise().sum();
  const Eigen::VectorXi cols = t.counts.colwise().sum().transpose();
  for (Index p = 0; p < rows.size(); ++p) same_pred += pairs(rows[p]);
  for (Index c = 0; c < cols.size(); ++c) same_truth += pairs(cols[c]);
  const long long total = pairs(t.n);
  const long long apart_both = total - same_pred - same_truth + same_both;
  return static_cast<double>(same_both + apart_both) / static_cast<double>(total);
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::Purity: return "purity";
    case Metric::Nmi: return "nmi";
    case Metric::RandIndex: return "ri";
  }
  return "unknown";
}

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "purity") return Metric::Purity;
  if (name == "nmi") return Metric::Nmi;
  if (name == "ri" || name == "rand") return Metric::RandIndex;
  return std::nullopt;
}

double evaluate(Metric m, const Partition& pred, const Partition& truth) {
  switch (m) {
    case Metric::Purity: return purity(pred, truth);
    case Metric::Nmi: return nmi(pred, truth);
    case Metric::RandIndex: return rand_index(pred, truth);
  }
  return 0.0;
}

}  // namespace mlgc
