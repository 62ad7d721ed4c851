#pragma once

#include "higauge/connection.hpp"

namespace higauge {

/// Equivariant gauge element, stored through its base slice c: X0 -> G.
/// The full object-level map is sigma(x, g) = g^{-1} c(x) g, which is
/// automatically equivariant; the arrow-level map is reconstructed from the
/// pullback functor. The base map must be compatible with the crossed
/// module: c(y) c(x)^{-1} has to lie in tau(H) across every base arrow.
struct GaugeElement {
  std::function<Mat(const Vec&)> c;
};

GaugeElement identity_gauge(const CrossedModule& cm);
GaugeElement gauge_from_base_map(std::function<Mat(const Vec&)> c);

/// Pointwise product; the induced bundle automorphisms compose in the same
/// order: F_{ab} = F_a o F_b.
GaugeElement gauge_compose(const GaugeElement& a, const GaugeElement& b);
GaugeElement gauge_inverse(const GaugeElement& a);

/// sigma at a total point: g^{-1} c(x) g.
Mat sigma_object(const GroupoidBundle& bd, const GaugeElement& s,
                 const TotalPoint& p);

/// sigma on a pullback arrow (gamma, p): the 2-group arrow whose source is
/// sigma(p) and whose decoration solves tau(.) = sigma(mu(gamma,p)) sigma(p)^{-1}.
TwoGroupArrow sigma_pullback(const GroupoidBundle& bd, const GaugeElement& s,
                             const BaseArrow& gamma, const TotalPoint& p);

/// sigma on a decorated arrow: (h, e) sigma0(gamma, p) (h^{-1}, e).
TwoGroupArrow sigma_dec(const GroupoidBundle& bd, const GaugeElement& s,
                        const DecArrow& a);

struct GaugeReport {
  double equivariance = 0.0;   // sigma(pg) vs Ad_{g^{-1}} sigma(p), both levels
  double functoriality = 0.0;  // source/target/composition of sigma
  double max() const {
    return equivariance > functoriality ? equivariance : functoriality;
  }
};

GaugeReport check_gauge_element(const GroupoidBundle& bd, const GaugeElement& s,
                                int trials, std::uint64_t seed);

// Bundle automorphism F(x) = x . sigma(x) and its tangent maps.
TotalPoint gauge_apply(const GroupoidBundle& bd, const GaugeElement& s,
                       const TotalPoint& p);
DecArrow gauge_apply(const GroupoidBundle& bd, const GaugeElement& s,
                     const DecArrow& a);
TotalTangent gauge_pushforward(const GroupoidBundle& bd, const GaugeElement& s,
                               const TotalTangent& v);
DecTangent gauge_pushforward(const GroupoidBundle& bd, const GaugeElement& s,
                             const DecTangent& T);

/// omega . sigma = omega o (F_*)^{-1}; the inverse pushforward is the
/// pushforward of the pointwise-inverse gauge element.
ConnectionForm act_on_connection(const GroupoidBundle& bd,
                                 const GaugeElement& s,
                                 const ConnectionForm& w);

/// (C . F)(gamma, p) = F(C(gamma, F^{-1}(p))), evaluated as a lift.
DecArrow act_on_categorical(const GroupoidBundle& bd, const GaugeElement& s,
                            const CategoricalConnection& C,
                            const BaseArrow& gamma, const TotalPoint& p);

/// Pair (sigma, lambda) of a gauge element and an equivariant L(H)-valued
/// 1-form; acts on semi-strict forms by omega o (F_*)^{-1} + lambda-bar.
struct ExtendedGaugeElement {
  GaugeElement sigma;
  LambdaForm lam;
};

/// Product (F F', lambda + lambda' o (F_*)^{-1}).
ExtendedGaugeElement extended_compose(const GroupoidBundle& bd,
                                      const ExtendedGaugeElement& a,
                                      const ExtendedGaugeElement& b);

ConnectionForm extended_act(const GroupoidBundle& bd,
                            const ExtendedGaugeElement& e,
                            const ConnectionForm& w);

/// On a discrete base, compares the general action path against the
/// displayed closed forms
///   omega0 |-> Ad_sigma(omega0) - (d sigma) sigma^{-1} + tau(lambda),
///   omega1 |-> Ad_(h,sigma)(omega1) - (d(h,sigma))(h,sigma)^{-1}
///             + (Ad_h(lambda) - lambda, tau(lambda)),
/// with the Maurer-Cartan terms evaluated by finite differences.
double verify_higher_gauge_example(const GroupoidBundle& bd,
                                   const ExtendedGaugeElement& e,
                                   const ConnectionForm& w, int trials,
                                   std::uint64_t seed);

/// 2-morphism between gauge elements: an equivariant map Phi: E0 -> H with
/// sigma'(p) = tau(Phi(p)) sigma(p) and the naturality square on arrows.
struct GaugeMorphism {
  std::function<Mat(const TotalPoint&)> Phi;
};

/// Phi(x, g) = alpha_{g^{-1}}(phi(x)); equivariant by construction.
GaugeMorphism morphism_from_base_map(const CrossedModule& cm,
                                     std::function<Mat(const Vec&)> phi);

/// The target gauge element of the morphism: c' = tau(phi) . c pointwise.
GaugeElement morphism_target(const CrossedModule& cm, const GaugeElement& s,
                             std::function<Mat(const Vec&)> phi);

struct MorphismReport {
  double object = 0.0;        // sigma'(p) vs tau(Phi(p)) sigma(p)
  double arrow = 0.0;         // sigma'(a) vs Phi_q sigma(a) Phi_p^{-1}
  double equivariance = 0.0;  // Phi(pg) vs alpha_{g^{-1}}(Phi(p))
  bool valid = false;
  double max() const {
    double m = object > arrow ? object : arrow;
    return m > equivariance ? m : equivariance;
  }
};

MorphismReport check_gauge_morphism(const GroupoidBundle& bd,
                                    const GaugeElement& s,
                                    const GaugeElement& s_prime,
                                    const GaugeMorphism& m, int trials,
                                    std::uint64_t seed);

/// Random admissible gauge element for the bundle's crossed module:
/// unconstrained for the conjugation module, unipotent-valued for the
/// normal inclusion, constant for the discrete module, trivial when the
/// object group is trivial.
GaugeElement sample_gauge(const GroupoidBundle& bd, Rng& rng);

/// Random equivariant L(H)-valued 1-form built from a polynomial base field.
LambdaForm sample_lambda(const GroupoidBundle& bd, Rng& rng);

}  // namespace higauge
