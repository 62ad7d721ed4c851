#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>

namespace higauge {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Max-abs entry norm. All residual gates in this library are stated
/// against this norm.
template <typename Derived>
double inf_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_group_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of an ambient matrix Lie group. The tag records which group the
/// element is meant to live in; membership is checked by the owning
/// structure, not here.
struct GroupElement {
  Mat m;
  std::string tag;

  GroupElement() = default;
  explicit GroupElement(Mat mat, std::string t = {})
      : m(std::move(mat)), tag(std::move(t)) {}

  int dim() const { return static_cast<int>(m.rows()); }
};

/// Element of a matrix Lie algebra (ambient matrix, no projection).
struct AlgebraElement {
  Mat m;
  std::string tag;

  AlgebraElement() = default;
  explicit AlgebraElement(Mat mat, std::string t = {})
      : m(std::move(mat)), tag(std::move(t)) {}

  int dim() const { return static_cast<int>(m.rows()); }
};

/// Tangent vector at a group element or chart point. Group directions are
/// ambient matrices, base-manifold directions are chart vectors.
struct TangentVector {
  Mat base;        // group base point (empty if chart-based)
  Mat mat_part;    // ambient matrix direction
  Vec chart_part;  // chart direction
};

/// Matrix exponential (scaling-and-squaring, Pade core).
Mat expm(const Mat& a);

/// Matrix logarithm, valid near the identity only. Throws numeric_error if
/// the argument is too far from I for the inverse scaling-and-squaring
/// iteration to be trusted.
Mat logm_near_identity(const Mat& g, double guard = 0.75);

/// Adjoint action g B g^{-1}. Throws invalid_group_error if g is singular.
Mat Ad(const Mat& g, const Mat& b);

/// Algebra adjoint: the commutator [a, b] = ab - ba.
Mat ad(const Mat& a, const Mat& b);

/// Right trivialization of a tangent vector at h: K h^{-1} in the algebra.
Mat right_trivialize(const Mat& h, const Mat& k);

/// Central-difference pushforward of f along the curve base * exp(t B).
/// Error is O(step^2) for C^3 maps.
Mat fd_differential(const std::function<Mat(const Mat&)>& f, const Mat& base,
                    const Mat& direction, double step = 1e-5);

/// Central-difference derivative of an arbitrary matrix curve at t = 0.
Mat fd_curve_derivative(const std::function<Mat(double)>& curve,
                        double step = 1e-5);

inline Mat inverse_checked(const Mat& g, const char* what = "group element") {
  Eigen::FullPivLU<Mat> lu(g);
  if (!lu.isInvertible()) {
    throw invalid_group_error(std::string("singular ") + what);
  }
  return lu.inverse();
}

}  // namespace higauge
