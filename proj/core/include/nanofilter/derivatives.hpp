#pragma once

#include <Eigen/Core>
#include <functional>

namespace nanofilter {

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;
using VectorFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using MatrixFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Central-difference Jacobian, entry (i,j) = [f(x+h e_j)_i - f(x-h e_j)_i] / (2h).
/// h <= 0 selects the per-coordinate default 1e-6 * max(1, |x_j|).
/// Throws NonFiniteValue naming the coordinate if f returns NaN/inf.
Eigen::MatrixXd fd_jacobian(const VectorFn& fn, const Eigen::VectorXd& x, double h = 0.0);

/// Second-order central-difference Hessian of a scalar function, symmetrized.
/// h <= 0 selects the per-coordinate default 1e-4 * max(1, |x_j|).
Eigen::MatrixXd fd_hessian(const ScalarFn& fn, const Eigen::VectorXd& x, double h = 0.0);

}  // namespace nanofilter
