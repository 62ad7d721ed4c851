#pragma once

#include "higauge/basegpd.hpp"
#include "higauge/crossmod.hpp"
#include "higauge/twogroup.hpp"

namespace higauge {

/// Point of the trivialized total space E0 = X0 x G.
struct TotalPoint {
  Vec x;
  Mat g;
};

/// Tangent at a TotalPoint: chart velocity plus ambient matrix velocity at g.
struct TotalTangent {
  TotalPoint p;
  Vec vx;
  Mat vg;
};

/// Arrow (gamma, p, h) of the decorated groupoid [(s*E0) x H => E0],
/// with pi(p) = s(gamma).
struct DecArrow {
  BaseArrow gamma;
  TotalPoint p;
  Mat h;
};

/// Arrow ((gamma, p), h) of the pullback-with-label presentation that the
/// decoration isomorphism theta maps onto DecArrow.
struct PullbackArrow {
  BaseArrow gamma;
  TotalPoint p;
  Mat h;
};

struct fiber_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Principal G-bundle E0 = X0 x G over a base groupoid, with the canonical
/// action map mu per base kind and its closed-form tangent map. Carries the
/// crossed module so the decorated 2-bundle structure is available.
struct GroupoidBundle {
  BaseGroupoid base;
  CrossedModule cm;  // structure crossed module; G is the structure group

  Vec pi(const TotalPoint& p) const { return p.x; }
  TotalPoint act(const TotalPoint& p, const Mat& g) const {
    return {p.x, Mat(p.g * g)};
  }

  /// mu(gamma, p): discrete p -> p; pair ((x,y),(x,g)) -> (y,g);
  /// action ((x,k),(x,g)) -> (kx, g). Requires pi(p) = s(gamma).
  TotalPoint mu(const BaseArrow& gamma, const TotalPoint& p) const;

  /// Tangent map of mu along (X, v) with v based at p.
  TotalTangent mu_tangent(const BaseTangentArrow& X,
                          const TotalTangent& v) const;

  /// Vertical generator: d/dt p exp(tB) = (0, gB).
  TotalTangent vertical(const TotalPoint& p, const Mat& B) const;

  TotalPoint sample_point(Rng& rng) const;
  TotalTangent sample_tangent(const TotalPoint& p, Rng& rng) const;
};

// Decorated groupoid structure maps.
TotalPoint dec_source(const GroupoidBundle& bd, const DecArrow& a);
TotalPoint dec_target(const GroupoidBundle& bd, const DecArrow& a);
DecArrow dec_unit(const GroupoidBundle& bd, const TotalPoint& p);
DecArrow dec_compose(const GroupoidBundle& bd, const DecArrow& a2,
                     const DecArrow& a1);
DecArrow dec_inverse(const GroupoidBundle& bd, const DecArrow& a);

/// 2-group action: ((gamma,p,h), (h',g)) -> (gamma, pg, alpha_{g^{-1}}(h'^{-1} h)).
DecArrow dec_act(const GroupoidBundle& bd, const DecArrow& a,
                 const TwoGroupArrow& k);

DecArrow sample_dec_arrow(const GroupoidBundle& bd, Rng& rng);
/// Decorated arrow whose source is the given point.
DecArrow sample_dec_arrow_from(const GroupoidBundle& bd, const TotalPoint& p,
                               Rng& rng);

/// Categorical connection data: beta: E0 -> H with beta(pg) = alpha_{g^{-1}}(beta(p)).
/// The canonical connection has beta identically e.
struct CategoricalConnection {
  std::function<Mat(const TotalPoint&)> beta;
};

/// beta(x, g) = alpha_{g^{-1}}(b(x)); equivariant by construction.
CategoricalConnection connection_from_base_map(
    const CrossedModule& cm, std::function<Mat(const Vec&)> b);

CategoricalConnection canonical_connection(const CrossedModule& cm);

/// C(gamma, p) = (gamma, p, beta(p) beta(mu(gamma,p))^{-1}).
DecArrow cat_conn_lift(const GroupoidBundle& bd,
                       const CategoricalConnection& C, const BaseArrow& gamma,
                       const TotalPoint& p);

/// theta((gamma,p),h) = C(gamma,p) . (h^{-1}, e), and its inverse.
DecArrow theta_iso(const GroupoidBundle& bd, const CategoricalConnection& C,
                   const PullbackArrow& a);
PullbackArrow theta_iso_inverse(const GroupoidBundle& bd,
                                const CategoricalConnection& C,
                                const DecArrow& a);

GroupoidBundle make_bundle(const std::string& base_kind,
                           const CrossedModule& cm, int d = 2);

}  // namespace higauge
