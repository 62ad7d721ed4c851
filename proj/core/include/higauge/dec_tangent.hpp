#pragma once

#include "higauge/bundle.hpp"

namespace higauge {

/// Tangent vector of the decorated groupoid at the arrow `at`: a base
/// tangent X at gamma, a total-space tangent v at p, and an ambient matrix
/// tangent K at the decoration h.
struct DecTangent {
  DecArrow at;
  BaseTangentArrow X;
  TotalTangent v;
  Mat K;
};

/// s~_* (X, v, K) = v.
TotalTangent dec_tangent_source(const GroupoidBundle& bd, const DecTangent& T);

/// t~_* (X, v, K) = mu_*(X, v) tau(h^{-1})
///                  - delta_{mu(gamma,p) tau(h^{-1})}(tau_*(K) tau(h)^{-1}).
TotalTangent dec_tangent_target(const GroupoidBundle& bd, const DecTangent& T);

/// (X2, v2, K2) o (X1, v1, K1) = (X2 o X1, v1, h2 K1 + K2 h1).
DecTangent dec_tangent_compose(const GroupoidBundle& bd, const DecTangent& T2,
                               const DecTangent& T1);

/// Vertical generator delta_{(gamma,p,h)}(A, B): zero base slot, delta_p(B)
/// in the total slot, and -abar_h(B) - A h in the decoration slot.
DecTangent vertical_generator_dec(const GroupoidBundle& bd, const DecArrow& a,
                                  const Lie2AlgebraArrow& K);

/// Pushforward of the right action by a fixed 2-group arrow (h', g):
/// (X, v, K) -> (X, v g, alpha_{g^{-1}}(h'^{-1} K)).
DecTangent dec_act_tangent(const GroupoidBundle& bd, const DecTangent& T,
                           const TwoGroupArrow& k);

/// Random decorated tangent at the given arrow.
DecTangent sample_dec_tangent(const GroupoidBundle& bd, const DecArrow& a,
                              Rng& rng);

}  // namespace higauge
