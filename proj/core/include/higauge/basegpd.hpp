#pragma once

#include "higauge/matlie.hpp"
#include "higauge/rng.hpp"

#include <string>
#include <vector>

namespace higauge {

/// Point of the object chart X0, an open subset of R^d.
struct BasePoint {
  Vec x;
};

enum class BaseKind { discrete, pair, action };

/// Arrow of the base groupoid. Payload depends on the kind:
///   discrete: only `x` (the unit at x)
///   pair:     (x, y), an arrow x -> y
///   action:   (x, k), an arrow x -> k x with k in the structure group K
struct BaseArrow {
  Vec x;
  Vec y;  // pair kind only
  Mat k;  // action kind only
};

/// Tangent payload matching a BaseArrow: chart velocities plus an ambient
/// matrix velocity for the K slot of action arrows.
struct BaseTangentArrow {
  BaseArrow arrow;
  Vec vx;
  Vec vy;  // pair kind
  Mat vk;  // action kind, tangent at arrow.k in the ambient matrix space
};

/// Base Lie groupoid [X1 => X0] with closed-form structure and tangent maps.
/// The action kind acts by the matrix group K < GL(d) on the chart.
struct BaseGroupoid {
  BaseKind kind = BaseKind::discrete;
  std::string name;
  int d = 2;  // chart dimension

  // Action kind only: basis of L(K) used by the sampler.
  std::vector<Mat> basis_LK;
  double sample_scale = 0.5;

  BasePoint source(const BaseArrow& a) const;
  BasePoint target(const BaseArrow& a) const;
  BaseArrow unit(const BasePoint& p) const;
  BaseArrow compose(const BaseArrow& a2, const BaseArrow& a1) const;
  BaseArrow inverse(const BaseArrow& a) const;

  // Tangent structure maps (closed-form Jacobian actions).
  Vec tangent_source(const BaseTangentArrow& X) const;
  Vec tangent_target(const BaseTangentArrow& X) const;
  BaseTangentArrow tangent_unit(const BasePoint& p, const Vec& v) const;
  BaseTangentArrow tangent_compose(const BaseTangentArrow& X2,
                                   const BaseTangentArrow& X1) const;

  BasePoint sample_point(Rng& rng) const;
  BaseArrow sample_arrow(Rng& rng) const;
  /// Arrow with the given source, random otherwise.
  BaseArrow sample_arrow_from(const BasePoint& p, Rng& rng) const;
  BaseTangentArrow sample_tangent(const BaseArrow& a, Rng& rng) const;
};

/// kind in {"discrete", "pair", "action"}. The action kind uses K = SO(d)
/// embedded as rotation matrices. Throws std::invalid_argument otherwise.
BaseGroupoid builtin_base_groupoid(const std::string& kind, int d = 2);

std::vector<std::string> builtin_base_groupoid_names();

}  // namespace higauge
