#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "nanofilter/errors.hpp"

namespace nanofilter {

/// A multivariate Gaussian belief N(mean, cov).
///
/// The covariance is symmetrized on construction and must admit a Cholesky
/// factorization; the factor is cached and reused by every consumer that
/// needs solves or log-determinants. Instances are immutable.
class Gaussian {
 public:
  Gaussian(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  int dim() const { return static_cast<int>(mean_.size()); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }
  const Eigen::LLT<Eigen::MatrixXd>& llt() const { return llt_; }

  /// Lower-triangular Cholesky factor L with cov = L Lᵀ.
  Eigen::MatrixXd chol_lower() const { return llt_.matrixL(); }

  /// ln det(cov), accumulated from the Cholesky diagonal.
  double log_det_cov() const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// Symmetric positive-definite precision (inverse covariance) matrix.
class Precision {
 public:
  explicit Precision(Eigen::MatrixXd mat);

  static Precision from_covariance(const Gaussian& g);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& mat() const { return mat_; }
  const Eigen::LLT<Eigen::MatrixXd>& llt() const { return llt_; }

  /// Inverse as an explicit matrix (Cholesky solve against identity).
  Eigen::MatrixXd inverse() const;

 private:
  Eigen::MatrixXd mat_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

struct SymmetrizedPsd {
  Eigen::MatrixXd mat;
  double jitter = 0.0;  // epsilon actually added to the diagonal
};

/// Returns (M + Mᵀ)/2, adding the smallest jitter eps*I from the geometric
/// ladder {1e-12, 1e-10, ...} <= jitter_max that restores positive
/// definiteness. Throws NotPositiveDefinite if the ladder is exhausted,
/// which signals a divergent iteration upstream.
SymmetrizedPsd symmetrize_psd(const Eigen::MatrixXd& m, double jitter_max = 1e-6);

/// KL(p || q) for Gaussians, computed via Cholesky factors:
/// 0.5 [tr(Sq^-1 Sp) + (mq-mp)' Sq^-1 (mq-mp) - n + ln det Sq - ln det Sp].
double kl_divergence(const Gaussian& p, const Gaussian& q);

}  // namespace nanofilter
