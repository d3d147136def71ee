#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace mlgc {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

}  // namespace mlgc
