#include "higauge/basegpd.hpp"
#include "higauge/twogroup.hpp"  // composability_error, kComposabilityTol

#include <stdexcept>

namespace higauge {

namespace {

void require_close(const Vec& a, const Vec& b, const char* what) {
  if (inf_norm(Vec(a - b)) > kComposabilityTol) {
    throw composability_error(std::string(what) + ": arrows not composable",
                              inf_norm(Vec(a - b)));
  }
}

}  // namespace

BasePoint BaseGroupoid::source(const BaseArrow& a) const {
  return BasePoint{a.x};
}

BasePoint BaseGroupoid::target(const BaseArrow& a) const {
  switch (kind) {
    case BaseKind::discrete:
      return BasePoint{a.x};
    case BaseKind::pair:
      return BasePoint{a.y};
    case BaseKind::action:
      return BasePoint{Vec(a.k * a.x)};
  }
  throw std::logic_error("unreachable");
}

BaseArrow BaseGroupoid::unit(const BasePoint& p) const {
  BaseArrow a;
  a.x = p.x;
  if (kind == BaseKind::pair) a.y = p.x;
  if (kind == BaseKind::action) a.k = Mat::Identity(d, d);
  return a;
}

BaseArrow BaseGroupoid::compose(const BaseArrow& a2, const BaseArrow& a1) const {
  require_close(a2.x, target(a1).x, "base compose");
  BaseArrow out;
  out.x = a1.x;
  if (kind == BaseKind::pair) out.y = a2.y;
  if (kind == BaseKind::action) out.k = a2.k * a1.k;
  return out;
}

BaseArrow BaseGroupoid::inverse(const BaseArrow& a) const {
  BaseArrow out;
  out.x = target(a).x;
  if (kind == BaseKind::pair) out.y = a.x;
  if (kind == BaseKind::action) out.k = inverse_checked(a.k);
  return out;
}

Vec BaseGroupoid::tangent_source(const BaseTangentArrow& X) const {
  return X.vx;
}

Vec BaseGroupoid::tangent_target(const BaseTangentArrow& X) const {
  switch (kind) {
    case BaseKind::discrete:
      return X.vx;
    case BaseKind::pair:
      return X.vy;
    case BaseKind::action:
      return Vec(X.vk * X.arrow.x + X.arrow.k * X.vx);
  }
  throw std::logic_error("unreachable");
}

BaseTangentArrow BaseGroupoid::tangent_unit(const BasePoint& p,
                                            const Vec& v) const {
  BaseTangentArrow X;
  X.arrow = unit(p);
  X.vx = v;
  if (kind == BaseKind::pair) X.vy = v;
  if (kind == BaseKind::action) X.vk = Mat::Zero(d, d);
  return X;
}

BaseTangentArrow BaseGroupoid::tangent_compose(const BaseTangentArrow& X2,
                                               const BaseTangentArrow& X1) const {
  require_close(tangent_source(X2), tangent_target(X1),
                "base tangent compose");
  BaseTangentArrow out;
  out.arrow = compose(X2.arrow, X1.arrow);
  out.vx = X1.vx;
  if (kind == BaseKind::pair) out.vy = X2.vy;
  if (kind == BaseKind::action)
    out.vk = X2.vk * X1.arrow.k + X2.arrow.k * X1.vk;
  return out;
}

BasePoint BaseGroupoid::sample_point(Rng& rng) const {
  Vec x(d);
  for (int i = 0; i < d; ++i) x(i) = rng.uniform(-1.0, 1.0);
  return BasePoint{x};
}

BaseArrow BaseGroupoid::sample_arrow(Rng& rng) const {
  return sample_arrow_from(sample_point(rng), rng);
}

BaseArrow BaseGroupoid::sample_arrow_from(const BasePoint& p, Rng& rng) const {
  BaseArrow a;
  a.x = p.x;
  if (kind == BaseKind::pair) a.y = sample_point(rng).x;
  if (kind == BaseKind::action) {
    Mat w = Mat::Zero(d, d);
    for (const Mat& b : basis_LK) w += rng.normal() * b;
    a.k = expm(sample_scale * w);
  }
  return a;
}

BaseTangentArrow BaseGroupoid::sample_tangent(const BaseArrow& a,
                                              Rng& rng) const {
  BaseTangentArrow X;
  X.arrow = a;
  X.vx = Vec(d);
  for (int i = 0; i < d; ++i) X.vx(i) = rng.normal();
  if (kind == BaseKind::discrete) return X;
  if (kind == BaseKind::pair) {
    X.vy = Vec(d);
    for (int i = 0; i < d; ++i) X.vy(i) = rng.normal();
    return X;
  }
  Mat w = Mat::Zero(d, d);
  for (const Mat& b : basis_LK) w += rng.normal() * b;
  X.vk = w * a.k;  // right-translated algebra direction
  return X;
}

BaseGroupoid builtin_base_groupoid(const std::string& kind, int d) {
  BaseGroupoid g;
  g.name = kind;
  g.d = d;
  if (kind == "discrete") {
    g.kind = BaseKind::discrete;
  } else if (kind == "pair") {
    g.kind = BaseKind::pair;
  } else if (kind == "action") {
    g.kind = BaseKind::action;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        Mat b = Mat::Zero(d, d);
        b(i, j) = 1.0;
        b(j, i) = -1.0;
        g.basis_LK.push_back(b);  // so(d)
      }
  } else {
    throw std::invalid_argument("unknown base groupoid kind: " + kind);
  }
  return g;
}

std::vector<std::string> builtin_base_groupoid_names() {
  return {"discrete", "pair", "action"};
}

}  // namespace higauge
