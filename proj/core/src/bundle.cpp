#include "higauge/bundle.hpp"

namespace higauge {

TotalPoint GroupoidBundle::mu(const BaseArrow& gamma,
                              const TotalPoint& p) const {
  if (inf_norm(Vec(gamma.x - p.x)) > kComposabilityTol) {
    throw fiber_error("mu: point not in the source fiber of the arrow");
  }
  switch (base.kind) {
    case BaseKind::discrete:
      return p;
    case BaseKind::pair:
      return {gamma.y, p.g};
    case BaseKind::action:
      return {Vec(gamma.k * p.x), p.g};
  }
  throw std::logic_error("unreachable");
}

TotalTangent GroupoidBundle::mu_tangent(const BaseTangentArrow& X,
                                        const TotalTangent& v) const {
  TotalTangent out;
  out.p = mu(X.arrow, v.p);
  out.vg = v.vg;
  switch (base.kind) {
    case BaseKind::discrete:
      out.vx = v.vx;
      break;
    case BaseKind::pair:
      out.vx = X.vy;
      break;
    case BaseKind::action:
      out.vx = X.vk * v.p.x + X.arrow.k * v.vx;
      break;
  }
  return out;
}

TotalTangent GroupoidBundle::vertical(const TotalPoint& p, const Mat& B) const {
  return {p, Vec::Zero(base.d), Mat(p.g * B)};
}

TotalPoint GroupoidBundle::sample_point(Rng& rng) const {
  return {base.sample_point(rng).x, cm.sample_G(rng)};
}

TotalTangent GroupoidBundle::sample_tangent(const TotalPoint& p,
                                            Rng& rng) const {
  TotalTangent v;
  v.p = p;
  v.vx = Vec(base.d);
  for (int i = 0; i < base.d; ++i) v.vx(i) = rng.normal();
  v.vg = cm.sample_alg_G(rng) * p.g;  // right-translated algebra direction
  return v;
}

TotalPoint dec_source(const GroupoidBundle&, const DecArrow& a) { return a.p; }

TotalPoint dec_target(const GroupoidBundle& bd, const DecArrow& a) {
  return bd.act(bd.mu(a.gamma, a.p), bd.cm.tau(inverse_checked(a.h)));
}

DecArrow dec_unit(const GroupoidBundle& bd, const TotalPoint& p) {
  return {bd.base.unit(BasePoint{p.x}), p, bd.cm.id_H()};
}

DecArrow dec_compose(const GroupoidBundle& bd, const DecArrow& a2,
                     const DecArrow& a1) {
  const TotalPoint t1 = dec_target(bd, a1);
  const double res = std::max(inf_norm(Vec(a2.p.x - t1.x)),
                              inf_norm(Mat(a2.p.g - t1.g)));
  if (res > kComposabilityTol) {
    throw composability_error("dec_compose: source/target mismatch", res);
  }
  return {bd.base.compose(a2.gamma, a1.gamma), a1.p, Mat(a2.h * a1.h)};
}

DecArrow dec_inverse(const GroupoidBundle& bd, const DecArrow& a) {
  return {bd.base.inverse(a.gamma), dec_target(bd, a),
          inverse_checked(a.h)};
}

DecArrow dec_act(const GroupoidBundle& bd, const DecArrow& a,
                 const TwoGroupArrow& k) {
  const Mat ginv = inverse_checked(k.g);
  return {a.gamma, bd.act(a.p, k.g),
          bd.cm.alpha(ginv, Mat(inverse_checked(k.h) * a.h))};
}

DecArrow sample_dec_arrow(const GroupoidBundle& bd, Rng& rng) {
  return sample_dec_arrow_from(bd, bd.sample_point(rng), rng);
}

DecArrow sample_dec_arrow_from(const GroupoidBundle& bd, const TotalPoint& p,
                               Rng& rng) {
  DecArrow a;
  a.gamma = bd.base.sample_arrow_from(BasePoint{p.x}, rng);
  a.p = p;
  a.h = bd.cm.sample_H(rng);
  return a;
}

CategoricalConnection connection_from_base_map(
    const CrossedModule& cm, std::function<Mat(const Vec&)> b) {
  // Copies alpha so the connection outlives the crossed module argument.
  return CategoricalConnection{
      [alpha = cm.alpha, b = std::move(b)](const TotalPoint& p) {
        return alpha(inverse_checked(p.g), b(p.x));
      }};
}

CategoricalConnection canonical_connection(const CrossedModule& cm) {
  return CategoricalConnection{
      [id = cm.id_H()](const TotalPoint&) { return id; }};
}

DecArrow cat_conn_lift(const GroupoidBundle& bd,
                       const CategoricalConnection& C, const BaseArrow& gamma,
                       const TotalPoint& p) {
  const Mat h = C.beta(p) * inverse_checked(C.beta(bd.mu(gamma, p)));
  return {gamma, p, h};
}

DecArrow theta_iso(const GroupoidBundle& bd, const CategoricalConnection& C,
                   const PullbackArrow& a) {
  const DecArrow lift = cat_conn_lift(bd, C, a.gamma, a.p);
  return dec_act(bd, lift, TwoGroupArrow{inverse_checked(a.h), bd.cm.id_G()});
}

PullbackArrow theta_iso_inverse(const GroupoidBundle& bd,
                                const CategoricalConnection& C,
                                const DecArrow& a) {
  const Mat hC = C.beta(a.p) * inverse_checked(C.beta(bd.mu(a.gamma, a.p)));
  return {a.gamma, a.p, Mat(a.h * inverse_checked(hC))};
}

GroupoidBundle make_bundle(const std::string& base_kind,
                           const CrossedModule& cm, int d) {
  return GroupoidBundle{builtin_base_groupoid(base_kind, d), cm};
}

}  // namespace higauge
