#include "higauge/connection.hpp"

#include <Eigen/QR>

#include <algorithm>

namespace higauge {

namespace {

Mat tau_at_identity(const CrossedModule& cm, const Mat& A) {
  if (cm.tau_diff_closed) return cm.tau_diff_closed(A);
  return tau_diff(cm, A);
}

}  // namespace

Mat omega0(const GroupoidBundle& bd, const ConnectionForm& w,
           const TotalTangent& v) {
  if (w.omega0_override) return w.omega0_override(v);
  const Mat ginv = inverse_checked(v.p.g);
  return Ad(ginv, w.A_field(v.p.x, v.vx)) + ginv * v.vg;
}

Lie2AlgebraArrow omega1(const GroupoidBundle& bd, const ConnectionForm& w,
                        const DecTangent& T) {
  if (w.omega1_override) return w.omega1_override(T);
  const Mat wv = omega0(bd, w, T.v);
  const TwoGroupArrow he{T.at.h, bd.cm.id_G()};
  Lie2AlgebraArrow out =
      adjoint_algebra(bd.cm, he, Lie2AlgebraArrow{
                                     Mat::Zero(bd.cm.dim_H, bd.cm.dim_H), wv});
  out.A -= T.K * inverse_checked(T.at.h);
  return out;
}

LambdaForm lambda_from_base(const CrossedModule& cm,
                            std::function<Mat(const Vec&, const Vec&)> l) {
  return LambdaForm{
      [cm, l = std::move(l)](const TotalTangent& v) {
        const Mat base_val = l(v.p.x, v.vx);
        return alpha_g_diff(cm, inverse_checked(v.p.g), base_val);
      }};
}

double MultiplicativityReport::max() const {
  double m = source > target ? source : target;
  return m > compose ? m : compose;
}

MultiplicativityReport check_multiplicativity(const GroupoidBundle& bd,
                                              const ConnectionForm& w,
                                              int trials, std::uint64_t seed) {
  MultiplicativityReport rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 10, t);
    const DecArrow a1 = sample_dec_arrow(bd, rng);
    DecTangent T1 = sample_dec_tangent(bd, a1, rng);

    const Lie2AlgebraArrow val1 = omega1(bd, w, T1);
    rep.source = std::max(
        rep.source, inf_norm(Mat(val1.B - omega0(bd, w, dec_tangent_source(bd, T1)))));
    const Mat tgt_val = omega0(bd, w, dec_tangent_target(bd, T1));
    rep.target = std::max(
        rep.target,
        inf_norm(Mat(tgt_val - (tau_at_identity(bd.cm, val1.A) + val1.B))));

    // Composable follow-up arrow and tangent.
    const DecArrow a2 = sample_dec_arrow_from(bd, dec_target(bd, a1), rng);
    DecTangent T2 = sample_dec_tangent(bd, a2, rng);
    const TotalTangent tgt = dec_tangent_target(bd, T1);
    T2.v = tgt;
    T2.X.vx = tgt.vx;
    const DecTangent T21 = dec_tangent_compose(bd, T2, T1);
    const Lie2AlgebraArrow val2 = omega1(bd, w, T2);
    const Lie2AlgebraArrow val21 = omega1(bd, w, T21);
    rep.compose = std::max(
        rep.compose, std::max(inf_norm(Mat(val21.A - (val2.A + val1.A))),
                              inf_norm(Mat(val21.B - val1.B))));
  }
  return rep;
}

double check_equivariance(const GroupoidBundle& bd, const ConnectionForm& w,
                          int trials, std::uint64_t seed) {
  double res = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 11, t);
    const TotalPoint p = bd.sample_point(rng);
    const TotalTangent v = bd.sample_tangent(p, rng);
    const Mat g = bd.cm.sample_G(rng);
    const TotalTangent vg{bd.act(p, g), v.vx, Mat(v.vg * g)};
    res = std::max(res, inf_norm(Mat(omega0(bd, w, vg) -
                                     Ad(inverse_checked(g), omega0(bd, w, v)))));

    const DecArrow a = sample_dec_arrow_from(bd, p, rng);
    DecTangent T = sample_dec_tangent(bd, a, rng);
    const TwoGroupArrow k = sample_arrow(bd.cm, rng);
    const DecTangent Tk = dec_act_tangent(bd, T, k);
    const Lie2AlgebraArrow lhs = omega1(bd, w, Tk);
    const Lie2AlgebraArrow rhs =
        adjoint_algebra(bd.cm, group_inverse(bd.cm, k), omega1(bd, w, T));
    res = std::max(res, std::max(inf_norm(Mat(lhs.A - rhs.A)),
                                 inf_norm(Mat(lhs.B - rhs.B))));
  }
  return res;
}

StrictReport check_strict(const GroupoidBundle& bd, const ConnectionForm& w,
                          int trials, std::uint64_t seed) {
  StrictReport rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 12, t);
    const TotalPoint p = bd.sample_point(rng);
    const Mat B = bd.cm.sample_alg_G(rng);
    rep.object = std::max(
        rep.object, inf_norm(Mat(omega0(bd, w, bd.vertical(p, B)) - B)));

    const DecArrow a = sample_dec_arrow_from(bd, p, rng);
    const Lie2AlgebraArrow K = sample_l2a_arrow(bd.cm, rng);
    const Lie2AlgebraArrow val =
        omega1(bd, w, vertical_generator_dec(bd, a, K));
    rep.arrow = std::max(rep.arrow, std::max(inf_norm(Mat(val.A - K.A)),
                                             inf_norm(Mat(val.B - K.B))));
  }
  return rep;
}

double check_base_compatibility(const GroupoidBundle& bd,
                                const ConnectionForm& w, int trials,
                                std::uint64_t seed) {
  double res = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 13, t);
    const TotalPoint p = bd.sample_point(rng);
    const BaseArrow gamma = bd.base.sample_arrow_from(BasePoint{p.x}, rng);
    BaseTangentArrow X = bd.base.sample_tangent(gamma, rng);
    TotalTangent v = bd.sample_tangent(p, rng);
    v.vx = X.vx;
    res = std::max(res, inf_norm(Mat(omega0(bd, w, v) -
                                     omega0(bd, w, bd.mu_tangent(X, v)))));
  }
  return res;
}

KappaResult kappa_deviation(const GroupoidBundle& bd, const ConnectionForm& w,
                            int trials, std::uint64_t seed, double solve_tol) {
  const CrossedModule& cm = bd.cm;
  const int nH = static_cast<int>(cm.basis_LH.size());
  const int ng2 = cm.dim_G * cm.dim_G;

  // Matrix of tau restricted to the L(H) basis, columns flattened.
  Mat Tmat = Mat::Zero(ng2, std::max(nH, 1));
  for (int j = 0; j < nH; ++j) {
    const Mat col = tau_at_identity(cm, cm.basis_LH[j]);
    Tmat.col(j) = Eigen::Map<const Vec>(col.data(), ng2);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(Tmat);

  KappaResult out;
  double solve_res = 0.0;
  auto kappa = [bd, qr, nH, ng2, solve_tol, w](
                   const TotalPoint& p, const Mat& B) -> std::pair<Mat, double> {
    const Mat dev = B - omega0(bd, w, bd.vertical(p, B));
    const Vec rhs = Eigen::Map<const Vec>(dev.data(), ng2);
    Mat k = Mat::Zero(bd.cm.dim_H, bd.cm.dim_H);
    if (nH > 0) {
      const Vec coef = qr.solve(rhs);
      for (int j = 0; j < nH; ++j) k += coef(j) * bd.cm.basis_LH[j];
    }
    const Mat tk = nH > 0 ? Mat(bd.cm.tau_diff_closed
                                    ? bd.cm.tau_diff_closed(k)
                                    : tau_diff(bd.cm, k))
                          : Mat::Zero(bd.cm.dim_G, bd.cm.dim_G);
    return {k, inf_norm(Mat(tk - dev))};
  };

  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 14, t);
    const TotalPoint p = bd.sample_point(rng);
    const Mat B = cm.sample_alg_G(rng);
    auto [kp, rp] = kappa(p, B);
    solve_res = std::max(solve_res, rp);

    // Equivariance of the extracted kappa.
    const Mat g = cm.sample_G(rng);
    const Mat gi = inverse_checked(g);
    auto [kpg, rpg] = kappa(bd.act(p, g), Ad(gi, B));
    solve_res = std::max(solve_res, rpg);
    out.equivariance_residual =
        std::max(out.equivariance_residual,
                 inf_norm(Mat(kpg - alpha_g_diff(cm, gi, kp))));

    // Arrow-level deviation equation.
    const DecArrow a = sample_dec_arrow_from(bd, p, rng);
    const TotalPoint q = dec_target(bd, a);
    const Lie2AlgebraArrow K = sample_l2a_arrow(cm, rng);
    const Mat src = l2a_source(cm, K);
    const Mat tgt = l2a_target(cm, K);
    const Lie2AlgebraArrow val =
        omega1(bd, w, vertical_generator_dec(bd, a, K));
    auto [k_src, r1] = kappa(p, src);
    auto [k_tgt, r2] = kappa(q, tgt);
    solve_res = std::max(solve_res, std::max(r1, r2));
    const Mat expectA = k_src - k_tgt;
    const Mat expectB = -tau_at_identity(cm, k_src);
    out.arrow_residual = std::max(
        out.arrow_residual,
        std::max(inf_norm(Mat((val.A - K.A) - expectA)),
                 inf_norm(Mat((val.B - K.B) - expectB))));
  }
  out.solve_residual = solve_res;
  out.semi_strict = solve_res <= solve_tol &&
                    out.arrow_residual <= 100 * solve_tol &&
                    out.equivariance_residual <= 100 * solve_tol;
  out.kappa.kappa = [kappa](const TotalPoint& p, const Mat& B) {
    return kappa(p, B).first;
  };
  return out;
}

ConnectionForm semistrict_from_strict(const GroupoidBundle& bd,
                                      const ConnectionForm& w,
                                      const LambdaForm& lambda) {
  ConnectionForm out;
  out.A_field = w.A_field;
  out.omega0_override = [bd, w, lambda](const TotalTangent& v) {
    return Mat(omega0(bd, w, v) + tau_at_identity(bd.cm, lambda.lam(v)));
  };
  out.omega1_override = [bd, w, lambda](const DecTangent& T) {
    const Mat ls = lambda.lam(dec_tangent_source(bd, T));
    const Mat lt = lambda.lam(dec_tangent_target(bd, T));
    Lie2AlgebraArrow val = omega1(bd, w, T);
    val.A += lt - ls;
    val.B += tau_at_identity(bd.cm, ls);
    return val;
  };
  return out;
}

ConnectionForm base_compatible_connection(const GroupoidBundle& bd) {
  const CrossedModule& cm = bd.cm;
  const int n = cm.dim_G;
  const Mat M = cm.basis_LG.empty() ? Mat::Zero(n, n) : cm.basis_LG.front();
  const Mat N = cm.basis_LG.size() > 1 ? cm.basis_LG[1] : Mat::Zero(n, n);
  ConnectionForm w;
  switch (bd.base.kind) {
    case BaseKind::discrete:
      // Any field is compatible over a discrete base.
      w.A_field = [M, N](const Vec& x, const Vec& v) {
        Mat out = v(0) * M;
        if (v.size() > 1) out += (x(0) * v(1) - x(1) * v(0)) * N;
        return out;
      };
      break;
    case BaseKind::pair:
      // The compatibility equation forces A_x(v) = A_y(w) across every
      // arrow (x, y); the zero field is the shipped witness.
      w.A_field = [n](const Vec&, const Vec&) { return Mat::Zero(n, n); };
      break;
    case BaseKind::action:
      // x.v is invariant across every arrow (x, k): the rotated-point
      // contribution k x . W k x vanishes for antisymmetric W, and the
      // chart contribution is k x . k v = x . v.
      w.A_field = [M](const Vec& x, const Vec& v) {
        return Mat(x.dot(v) * M);
      };
      break;
  }
  return w;
}

}  // namespace higauge
