#pragma once

#include "higauge/dec_tangent.hpp"

namespace higauge {

/// Connection data on the trivialized bundle. The object-level form derives
/// from the local gauge field A:
///   omega0_{(x,g)}(v, V) = Ad_{g^{-1}}(A_x(v)) + g^{-1} V,
/// and the arrow-level form is the decorated formula
///   omega1_{(gamma,p,h)}(X, v, K) = ad_{(h,e)}(omega0_p(v)) - K h^{-1}.
/// The overrides replace the derived evaluators; the semi-strict
/// modification and the gauge action both produce forms this way.
struct ConnectionForm {
  std::function<Mat(const Vec&, const Vec&)> A_field;  // (x, v) -> L(G)
  std::function<Mat(const TotalTangent&)> omega0_override;
  std::function<Lie2AlgebraArrow(const DecTangent&)> omega1_override;
};

Mat omega0(const GroupoidBundle& bd, const ConnectionForm& w,
           const TotalTangent& v);
Lie2AlgebraArrow omega1(const GroupoidBundle& bd, const ConnectionForm& w,
                        const DecTangent& T);

/// Equivariant L(H)-valued 1-form on E0.
struct LambdaForm {
  std::function<Mat(const TotalTangent&)> lam;
};

/// lambda_{(x,g)}(v, V) = alpha_{g^{-1}}(l(x, v)); equivariant by construction.
LambdaForm lambda_from_base(const CrossedModule& cm,
                            std::function<Mat(const Vec&, const Vec&)> l);

/// Fiberwise linear deviation map kappa: E0 x L(G) -> L(H).
struct DeviationFunctor {
  std::function<Mat(const TotalPoint&, const Mat&)> kappa;
};

struct MultiplicativityReport {
  double source = 0.0;   // L(G) slot of omega1 vs omega0 of the source tangent
  double target = 0.0;   // omega0 of the target tangent vs tau(A) + B
  double compose = 0.0;  // omega1 of a composite vs composite of values
  double max() const;
};

MultiplicativityReport check_multiplicativity(const GroupoidBundle& bd,
                                              const ConnectionForm& w,
                                              int trials, std::uint64_t seed);

/// Max over object and arrow levels of the G-equivariance residual.
double check_equivariance(const GroupoidBundle& bd, const ConnectionForm& w,
                          int trials, std::uint64_t seed);

struct StrictReport {
  double object = 0.0;  // omega0(delta_p(B)) - B
  double arrow = 0.0;   // omega1(delta(K)) - K, both slots
  double max() const { return object > arrow ? object : arrow; }
};

StrictReport check_strict(const GroupoidBundle& bd, const ConnectionForm& w,
                          int trials, std::uint64_t seed);

/// omega_p(v) = omega_{mu(gamma,p)}(mu_*(X, v)) over sampled data.
double check_base_compatibility(const GroupoidBundle& bd,
                                const ConnectionForm& w, int trials,
                                std::uint64_t seed);

struct KappaResult {
  bool semi_strict = false;
  double solve_residual = 0.0;         // deviation outside tau(L(H))
  double arrow_residual = 0.0;         // arrow-level deviation equation
  double equivariance_residual = 0.0;  // kappa(pg, ad_{g^{-1}}B) vs alpha
  DeviationFunctor kappa;
};

/// Extracts kappa from omega0(delta_p(B)) - B = -tau(kappa(p, B)) by least
/// squares over the L(H) basis, then checks the arrow-level equation and
/// equivariance. semi_strict is false when any gate fails.
KappaResult kappa_deviation(const GroupoidBundle& bd, const ConnectionForm& w,
                            int trials, std::uint64_t seed,
                            double solve_tol = 1e-7);

/// omega~0 = omega0 + tau(lambda),
/// omega~1 = omega1 + tau(s*lambda) + t*lambda - s*lambda.
ConnectionForm semistrict_from_strict(const GroupoidBundle& bd,
                                      const ConnectionForm& w,
                                      const LambdaForm& lambda);

/// A gauge field satisfying the base-compatibility equation for the given
/// base kind: any field for discrete, zero for pair, a rotation-invariant
/// field for the action kind.
ConnectionForm base_compatible_connection(const GroupoidBundle& bd);

}  // namespace higauge
