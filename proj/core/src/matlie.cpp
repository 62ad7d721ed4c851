#include "higauge/matlie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace higauge {

Mat expm(const Mat& a) {
  if (!a.allFinite()) throw numeric_error("expm: non-finite input");
  if (inf_norm(a) == 0.0) return Mat::Identity(a.rows(), a.cols());
  return a.exp();
}

Mat logm_near_identity(const Mat& g, double guard) {
  const Mat dev = g - Mat::Identity(g.rows(), g.cols());
  if (inf_norm(dev) > guard) {
    throw numeric_error("logm_near_identity: argument too far from identity");
  }
  return g.log();
}

Mat Ad(const Mat& g, const Mat& b) {
  return g * b * inverse_checked(g);
}

Mat ad(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat right_trivialize(const Mat& h, const Mat& k) {
  return k * inverse_checked(h);
}

Mat fd_differential(const std::function<Mat(const Mat&)>& f, const Mat& base,
                    const Mat& direction, double step) {
  const Mat plus = f(base * expm(step * direction));
  const Mat minus = f(base * expm(-step * direction));
  if (!plus.allFinite() || !minus.allFinite()) {
    throw numeric_error("fd_differential: non-finite evaluation");
  }
  return (plus - minus) / (2.0 * step);
}

Mat fd_curve_derivative(const std::function<Mat(double)>& curve, double step) {
  const Mat plus = curve(step);
  const Mat minus = curve(-step);
  if (!plus.allFinite() || !minus.allFinite()) {
    throw numeric_error("fd_curve_derivative: non-finite evaluation");
  }
  return (plus - minus) / (2.0 * step);
}

}  // namespace higauge
