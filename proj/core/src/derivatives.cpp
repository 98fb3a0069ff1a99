#include "nanofilter/derivatives.hpp"

#include <cmath>
#include <string>

#include "nanofilter/errors.hpp"

namespace nanofilter {

namespace {

double step_for(double x, double h, double scale) {
  return h > 0.0 ? h : scale * std::max(1.0, std::abs(x));
}

void check_finite(const Eigen::VectorXd& v, int coord, const char* what) {
  if (!v.allFinite()) {
    throw NonFiniteValue(std::string(what) + ": non-finite value near coordinate " +
                         std::to_string(coord));
  }
}

void check_finite(double v, int coord, const char* what) {
  if (!std::isfinite(v)) {
    throw NonFiniteValue(std::string(what) + ": non-finite value near coordinate " +
                         std::to_string(coord));
  }
}

}  // namespace

Eigen::MatrixXd fd_jacobian(const VectorFn& fn, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd xp = x, xm = x;
  Eigen::MatrixXd jac;
  for (int j = 0; j < n; ++j) {
    const double hj = step_for(x(j), h, 1e-6);
    xp(j) = x(j) + hj;
    xm(j) = x(j) - hj;
    const Eigen::VectorXd fp = fn(xp);
    const Eigen::VectorXd fm = fn(xm);
    check_finite(fp, j, "fd_jacobian");
    check_finite(fm, j, "fd_jacobian");
    if (jac.size() == 0) jac.resize(fp.size(), n);
    jac.col(j) = (fp - fm) / (2.0 * hj);
    xp(j) = x(j);
    xm(j) = x(j);
  }
  return jac;
}

Eigen::MatrixXd fd_hessian(const ScalarFn& fn, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd hess(n, n);
  const double f0 = fn(x);
  check_finite(f0, 0, "fd_hessian");
  Eigen::VectorXd xs = x;
  for (int i = 0; i < n; ++i) {
    const double hi = step_for(x(i), h, 1e-4);
    xs(i) = x(i) + hi;
    const double fp = fn(xs);
    xs(i) = x(i) - hi;
    const double fm = fn(xs);
    xs(i) = x(i);
    check_finite(fp, i, "fd_hessian");
    check_finite(fm, i, "fd_hessian");
    hess(i, i) = (fp - 2.0 * f0 + fm) / (hi * hi);
    for (int j = i + 1; j < n; ++j) {
      const double hj = step_for(x(j), h, 1e-4);
      xs(i) = x(i) + hi;
      xs(j) = x(j) + hj;
      const double fpp = fn(xs);
      xs(j) = x(j) - hj;
      const double fpm = fn(xs);
      xs(i) = x(i) - hi;
      const double fmm = fn(xs);
      xs(j) = x(j) + hj;
      const double fmp = fn(xs);
      xs(i) = x(i);
      xs(j) = x(j);
      check_finite(fpp, j, "fd_hessian");
      check_finite(fmm, j, "fd_hessian");
      hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
    }
  }
  return 0.5 * (hess + hess.transpose());
}

}  // namespace nanofilter
