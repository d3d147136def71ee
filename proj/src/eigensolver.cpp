#include "mlgc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "mlgc/error.hpp"

namespace mlgc {

void normalize_signs(Matrix& vectors) {
  for (Index c = 0; c < vectors.cols(); ++c) {
    Index arg = 0;
    double best = -1.0;
    for (Index r = 0; r < vectors.rows(); ++r) {
      const double a = std::abs(vectors(r, c));
      if (a > best) {
        best = a;
        arg = r;
      }
    }
    if (vectors(arg, c) < 0.0) vectors.col(c) = -vectors.col(c);
  }
}

namespace {

void check_k(Index n, Index k) {
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "requested " << k << " eigenpairs of a " << n << "x" << n << " matrix";
    throw Error(ErrorCode::KOutOfRange, msg.str());
  }
}

void check_symmetric(double asymmetry, double scale) {
  if (asymmetry > 1e-10 * std::max(1.0, scale)) {
    std::ostringstream msg;
    msg << "matrix is not symmetric (max |S - S^T| = " << asymmetry << ")";
    throw Error(ErrorCode::NotSymmetric, msg.str());
  }
}

std::optional<EigenResult> dense_solve(const Matrix& s, Index k) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  if (es.info() != Eigen::Success) return std::nullopt;
  EigenResult out;
  out.values = es.eigenvalues().head(k);
  out.vectors = es.eigenvectors().leftCols(k);
  return out;
}

double uniform_pm1(std::mt19937_64& rng) {
  // 53 random mantissa bits; identical across standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

/// Growing orthonormal basis V with images AV = S V and projection T = V^T S V.
class KrylovBasis {
 public:
  KrylovBasis(Index n, Index capacity)
      : v_(n, capacity), av_(n, capacity), t_(capacity, capacity) {}

  Index size() const { return m_; }
  Index capacity() const { return v_.cols(); }

  /// Orthonormalises the columns of x against the basis and each other,
  /// replacing (nearly) dependent columns with fresh random directions.
  /// Appends the accepted columns and returns how many there were.
  Index append(Matrix x, std::mt19937_64& rng) {
    const Index n = v_.rows();
    Index added = 0;
    for (Index c = 0; c < x.cols() && m_ + added < capacity(); ++c) {
      Vector w = x.col(c);
      bool ok = orthogonalize(w, added);
      for (int attempt = 0; !ok && attempt < 3; ++attempt) {
        for (Index r = 0; r < n; ++r) w[r] = uniform_pm1(rng);
        ok = orthogonalize(w, added);
      }
      if (!ok) break;
      v_.col(m_ + added) = w;
      ++added;
    }
    return added;
  }

  /// Applies S to columns [m_, m_ + count) and extends T.
  void commit(const SymmetricOperator& op, Index count) {
    const Index lo = m_;
    const Index hi = m_ + count;
    av_.middleCols(lo, count) = op.apply(v_.middleCols(lo, count));
    t_.block(0, lo, hi, count).noalias() = v_.leftCols(hi).transpose() * av_.middleCols(lo, count);
    t_.block(lo, 0, count, lo) = t_.block(0, lo, lo, count).transpose();
    m_ = hi;
  }

  Matrix images(Index lo, Index count) const { return av_.middleCols(lo, count); }

  Matrix projected() const {
    const Matrix t = t_.topLeftCorner(m_, m_);
    return 0.5 * (t + t.transpose());
  }

  /// Thick restart: the basis becomes the Ritz vectors y with images ay and
  /// diagonal projection theta.
  void restart(const Matrix& y, const Matrix& ay, const Vector& theta) {
    const Index p = y.cols();
    v_.leftCols(p) = y;
    av_.leftCols(p) = ay;
    t_.topLeftCorner(p, p) = theta.asDiagonal();
    m_ = p;
  }

  Matrix lift(const Matrix& z) const { return v_.leftCols(m_) * z; }
  Matrix lift_images(const Matrix& z) const { return av_.leftCols(m_) * z; }

 private:
  // Two passes of classical Gram-Schmidt against the accepted basis plus the
  // `pending` columns already staged past m_.
  bool orthogonalize(Vector& w, Index pending) {
    const double original = w.norm();
    if (!(original > 0.0)) return false;
    const Index used = m_ + pending;
    for (int pass = 0; pass < 2; ++pass) {
      if (used > 0) {
        const Vector h = v_.leftCols(used).transpose() * w;
        w.noalias() -= v_.leftCols(used) * h;
      }
    }
    const double norm = w.norm();
    if (!(norm > 1e-10 * original)) return false;
    w /= norm;
    return true;
  }

  Matrix v_;
  Matrix av_;
  Matrix t_;
  Index m_ = 0;
};

std::optional<EigenResult> block_krylov(const SymmetricOperator& op, Index k, const EigenOptions& opts) {
  const Index n = op.size();
  const Index block = std::min(n, std::max<Index>(k, 3));
  Index capacity = opts.max_basis > 0 ? opts.max_basis : std::max<Index>(20 * block, 100);
  capacity = std::min(n, std::max(capacity, k + block));
  // Ritz vectors kept across a restart; room must remain for new blocks.
  const Index keep = std::max(k, std::min(capacity / 2, capacity - 2 * block));
  constexpr int max_restarts = 200;

  std::mt19937_64 rng(opts.seed);
  KrylovBasis basis(n, capacity);
  Matrix start(n, block);
  for (Index c = 0; c < block; ++c) {
    for (Index r = 0; r < n; ++r) start(r, c) = uniform_pm1(rng);
  }

  Index lo = 0;
  Index added = basis.append(std::move(start), rng);
  Index next_check = std::max<Index>(2 * k + block, 24);
  int restarts = 0;
  while (true) {
    basis.commit(op, added);
    const Index m = basis.size();
    const bool full = m == n || m + 1 > capacity - block;
    if (m >= k && (m >= next_check || full)) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(basis.projected());
      if (es.info() != Eigen::Success) return std::nullopt;
      const Index p = std::min(m, full ? keep : k);
      const Matrix z = es.eigenvectors().leftCols(p);
      const Vector theta = es.eigenvalues().head(p);
      const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      Matrix y = basis.lift(z);
      Matrix ay = basis.lift_images(z);
      const Matrix residual = ay.leftCols(k) - y.leftCols(k) * theta.head(k).asDiagonal();
      bool converged = true;
      for (Index j = 0; j < k && converged; ++j) {
        converged = residual.col(j).norm() <= opts.tol * scale;
      }
      if (converged || m == n) {
        EigenResult out;
        out.values = theta.head(k);
        out.vectors = y.leftCols(k);
        out.basis_size = m;
        return out;
      }
      if (full) {
        if (++restarts > max_restarts) return std::nullopt;
        basis.restart(y, ay, theta);
        lo = basis.size();
        added = basis.append(ay.leftCols(k) - y.leftCols(k) * theta.head(k).asDiagonal(), rng);
        if (added == 0) return std::nullopt;
        next_check = basis.size() + 4 * block;
        continue;
      }
      next_check = m + std::max<Index>(block, m / 5);
    }
    const Index count = added;
    added = basis.append(basis.images(lo, count), rng);
    lo += count;
    if (added == 0) return std::nullopt;
  }
}

}  // namespace

EigenResult smallest_k_eigenpairs(const SymmetricOperator& op, Index k, const EigenOptions& opts) {
  const Index n = op.size();
  check_k(n, k);
  std::optional<EigenResult> result;
  if (n > opts.dense_threshold) result = block_krylov(op, k, opts);
  if (!result) result = dense_solve(op.to_dense(), k);
  if (!result) {
    throw Error(ErrorCode::NoConvergence, "symmetric eigensolver failed to converge");
  }
  normalize_signs(result->vectors);
  return *std::move(result);
}

EigenResult smallest_k_eigenpairs(const Matrix& s, Index k, const EigenOptions& opts) {
  if (s.rows() != s.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  check_k(s.rows(), k);
  check_symmetric((s - s.transpose()).cwiseAbs().maxCoeff(), s.cwiseAbs().maxCoeff());
  return smallest_k_eigenpairs(DenseOperator(s), k, opts);
}

EigenResult smallest_k_eigenpairs(const SparseMatrix& s, Index k, const EigenOptions& opts) {
  if (s.rows() != s.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  check_k(s.rows(), k);
  const SparseMatrix diff = s - SparseMatrix(s.transpose());
  double asym = 0.0;
  double scale = 0.0;
  for (Index c = 0; c < diff.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(diff, c); it; ++it) asym = std::max(asym, std::abs(it.value()));
  }
  for (Index c = 0; c < s.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(s, c); it; ++it) scale = std::max(scale, std::abs(it.value()));
  }
  check_symmetric(asym, scale);
  return smallest_k_eigenpairs(SparseOperator(s), k, opts);
}

}  // namespace mlgc
