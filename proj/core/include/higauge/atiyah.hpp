#pragma once

#include "higauge/connection.hpp"

namespace higauge {

/// Quotient class in the adjoint bundle, stored as the unique normal-form
/// representative with the structure-group slot moved to the identity via
/// the global trivialization. Object classes anchor at a base point and
/// carry a single algebra value; arrow classes anchor at a base arrow and
/// carry both slots.
struct AdClass {
  bool arrow_level = false;
  BasePoint x;
  Mat B;
  BaseArrow gamma;
  Lie2AlgebraArrow K;
};

/// Quotient class in the Atiyah bundle. The object normal form keeps the
/// chart velocity and the right-trivialized group velocity; the arrow
/// normal form is a full decorated tangent at the normalized arrow.
struct AtClass {
  bool arrow_level = false;
  BasePoint x;
  Vec vx;
  Mat vg;
  BaseArrow gamma;
  DecTangent T;
};

AdClass ad_class(const GroupoidBundle& bd, const TotalPoint& p, const Mat& B);
AdClass ad_class(const GroupoidBundle& bd, const DecArrow& a,
                 const Lie2AlgebraArrow& K);
AtClass at_class(const GroupoidBundle& bd, const TotalTangent& v);
AtClass at_class(const GroupoidBundle& bd, const DecTangent& T);

AdClass ad_source(const GroupoidBundle& bd, const AdClass& c);
AdClass ad_target(const GroupoidBundle& bd, const AdClass& c);
AtClass at_source(const GroupoidBundle& bd, const AtClass& c);
AtClass at_target(const GroupoidBundle& bd, const AtClass& c);

/// Class-level compositions; matching of the target class of c1 with the
/// source class of c2 replaces the representative-alignment step, since
/// matching normal forms are already composable on the nose.
AdClass ad_compose(const GroupoidBundle& bd, const AdClass& c2,
                   const AdClass& c1);
AtClass at_compose(const GroupoidBundle& bd, const AtClass& c2,
                   const AtClass& c1);

/// j: [(p, B)] -> [(p, delta_p(B))], object and arrow level.
AtClass j_map(const GroupoidBundle& bd, const AdClass& c);

/// pi_*: [(p, v)] -> (pi(p), pi_*(v)); drops the fiber directions.
BaseTangentArrow pi_star(const GroupoidBundle& bd, const AtClass& c);

struct FiberExactness {
  int rank_j = 0;
  int rank_pi = 0;
  int kernel_dim = 0;  // dim ker(pi_*) in the fiber
  double j_margin = 0.0;   // smallest/largest singular value of j
  double pi_margin = 0.0;  // smallest nonzero singular value of pi_*
  bool exact = false;      // rank_j == kernel_dim and im(j) == ker(pi_*)
};

/// Rank analysis of one fiber given the matrices of j and pi_* in fiber
/// coordinates. rank_tol is relative to the largest singular value.
FiberExactness analyze_fiber(const Mat& J, const Mat& P,
                             double rank_tol = 1e-8);

/// Matrices of j and pi_* in the normal-form fiber coordinates over a base
/// point (object level) or a base arrow (arrow level).
Mat object_j_matrix(const GroupoidBundle& bd, const BasePoint& x);
Mat object_pi_matrix(const GroupoidBundle& bd);
Mat arrow_j_matrix(const GroupoidBundle& bd, const BaseArrow& gamma);
Mat arrow_pi_matrix(const GroupoidBundle& bd);

struct ExactnessReport {
  bool exact = false;
  double min_j_margin = 0.0;
  double min_pi_margin = 0.0;
  int fibers = 0;
};

/// Exactness at `samples` object fibers and `samples` arrow fibers.
ExactnessReport check_exactness(const GroupoidBundle& bd, int samples,
                                std::uint64_t seed, double rank_tol = 1e-8);

/// Class-level retraction At -> Ad obtained by evaluating the form on the
/// normal-form representative.
AdClass retract(const GroupoidBundle& bd, const ConnectionForm& w,
                const AtClass& c);

/// Recovers the form from a class-level retraction by normalizing, applying
/// R, and translating the value back with the adjoint action.
ConnectionForm form_from_retraction(
    const GroupoidBundle& bd,
    std::function<AdClass(const AtClass&)> R);

}  // namespace higauge
