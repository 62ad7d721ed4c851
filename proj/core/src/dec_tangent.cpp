#include "higauge/dec_tangent.hpp"

namespace higauge {

TotalTangent dec_tangent_source(const GroupoidBundle&, const DecTangent& T) {
  return T.v;
}

TotalTangent dec_tangent_target(const GroupoidBundle& bd, const DecTangent& T) {
  const CrossedModule& cm = bd.cm;
  const Mat th_inv = cm.tau(inverse_checked(T.at.h));
  const TotalTangent mt = bd.mu_tangent(T.X, T.v);
  const TotalPoint q = bd.act(mt.p, th_inv);  // the target point

  // Right translation of mu_*(X, v) by tau(h^{-1}).
  TotalTangent out;
  out.p = q;
  out.vx = mt.vx;
  out.vg = mt.vg * th_inv;

  // Vertical correction delta_q(tau_*(K) tau(h)^{-1}).
  const Mat B = tau_pushforward(cm, T.at.h, T.K) * inverse_checked(cm.tau(T.at.h));
  const TotalTangent corr = bd.vertical(q, B);
  out.vx -= corr.vx;
  out.vg -= corr.vg;
  return out;
}

DecTangent dec_tangent_compose(const GroupoidBundle& bd, const DecTangent& T2,
                               const DecTangent& T1) {
  DecTangent out;
  out.at = dec_compose(bd, T2.at, T1.at);
  out.X = bd.base.tangent_compose(T2.X, T1.X);
  out.v = T1.v;
  out.K = T2.at.h * T1.K + T2.K * T1.at.h;
  return out;
}

DecTangent vertical_generator_dec(const GroupoidBundle& bd, const DecArrow& a,
                                  const Lie2AlgebraArrow& K) {
  const CrossedModule& cm = bd.cm;
  DecTangent out;
  out.at = a;
  // Zero base tangent at gamma.
  out.X.arrow = a.gamma;
  out.X.vx = Vec::Zero(bd.base.d);
  if (bd.base.kind == BaseKind::pair) out.X.vy = Vec::Zero(bd.base.d);
  if (bd.base.kind == BaseKind::action)
    out.X.vk = Mat::Zero(bd.base.d, bd.base.d);
  out.v = bd.vertical(a.p, K.B);
  out.K = -alpha_bar_h_diff(cm, a.h, K.B) - K.A * a.h;
  return out;
}

DecTangent dec_act_tangent(const GroupoidBundle& bd, const DecTangent& T,
                           const TwoGroupArrow& k) {
  const CrossedModule& cm = bd.cm;
  const Mat ginv = inverse_checked(k.g);
  const Mat hpi = inverse_checked(k.h);
  DecTangent out;
  out.at = dec_act(bd, T.at, k);
  out.X = T.X;
  out.v.p = bd.act(T.v.p, k.g);
  out.v.vx = T.v.vx;
  out.v.vg = T.v.vg * k.g;
  out.K = alpha_pushforward(cm, ginv, Mat(hpi * T.at.h), Mat(hpi * T.K));
  return out;
}

DecTangent sample_dec_tangent(const GroupoidBundle& bd, const DecArrow& a,
                              Rng& rng) {
  DecTangent T;
  T.at = a;
  T.X = bd.base.sample_tangent(a.gamma, rng);
  T.v = bd.sample_tangent(a.p, rng);
  T.v.vx = T.X.vx;  // mu needs the pair (X, v) over a common chart velocity
  T.K = bd.cm.sample_alg_H(rng) * a.h;
  return T;
}

}  // namespace higauge
