#include "nanofilter/gaussian.hpp"

#include <cmath>
#include <string>

namespace nanofilter {

namespace {

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

}  // namespace

Gaussian::Gaussian(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(symmetrize(cov)) {
  if (cov_.rows() != cov_.cols() || cov_.rows() != mean_.size()) {
    throw DimensionMismatch("Gaussian: mean dimension " +
                            std::to_string(mean_.size()) + " vs covariance " +
                            std::to_string(cov_.rows()) + "x" +
                            std::to_string(cov_.cols()));
  }
  llt_.compute(cov_);
  if (llt_.info() != Eigen::Success) {
    throw NotPositiveDefinite("Gaussian: covariance is not positive definite");
  }
}

double Gaussian::log_det_cov() const {
  const Eigen::MatrixXd L = llt_.matrixL();
  double sum = 0.0;
  for (int i = 0; i < L.rows(); ++i) sum += std::log(L(i, i));
  return 2.0 * sum;
}

Precision::Precision(Eigen::MatrixXd mat) : mat_(symmetrize(mat)) {
  if (mat_.rows() != mat_.cols()) {
    throw DimensionMismatch("Precision: matrix must be square");
  }
  llt_.compute(mat_);
  if (llt_.info() != Eigen::Success) {
    throw NotPositiveDefinite("Precision: matrix is not positive definite");
  }
}

Precision Precision::from_covariance(const Gaussian& g) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(g.dim(), g.dim());
  return Precision(g.llt().solve(id));
}

Eigen::MatrixXd Precision::inverse() const {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim(), dim());
  return llt_.solve(id);
}

SymmetrizedPsd symmetrize_psd(const Eigen::MatrixXd& m, double jitter_max) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("symmetrize_psd: matrix must be square");
  }
  SymmetrizedPsd out{symmetrize(m), 0.0};
  Eigen::LLT<Eigen::MatrixXd> llt(out.mat);
  if (llt.info() == Eigen::Success) return out;

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (double eps = 1e-12; eps <= jitter_max; eps *= 100.0) {
    llt.compute(out.mat + eps * id);
    if (llt.info() == Eigen::Success) {
      out.mat += eps * id;
      out.jitter = eps;
      return out;
    }
  }
  throw NotPositiveDefinite(
      "symmetrize_psd: not positive definite at jitter_max = " +
      std::to_string(jitter_max));
}

double kl_divergence(const Gaussian& p, const Gaussian& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("kl_divergence: dimension mismatch");
  }
  const int n = p.dim();
  const double trace = q.llt().solve(p.cov()).trace();
  const Eigen::VectorXd d = q.mean() - p.mean();
  const double quad = d.dot(q.llt().solve(d));
  return 0.5 * (trace + quad - n + q.log_det_cov() - p.log_det_cov());
}

}  // namespace nanofilter
