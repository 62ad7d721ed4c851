#include "higauge/gauge.hpp"

#include <doctest.h>

using namespace higauge;

namespace {

const std::vector<std::string> kKinds = {"discrete", "pair", "action"};

}  // namespace

TEST_CASE("sampled gauge elements are equivariant functors") {
  for (const auto& kind : kKinds)
    for (const std::string mod :
         {"conjugation", "normal_inclusion", "discrete"}) {
      const GroupoidBundle bd = make_bundle(kind, builtin_crossed_module(mod));
      Rng rng(40);
      const GaugeElement s = sample_gauge(bd, rng);
      INFO(kind << "/" << mod);
      CHECK(check_gauge_element(bd, s, 30, 42).max() < 1e-9);
    }
}

TEST_CASE("gauge elements form a group pointwise") {
  const GroupoidBundle bd =
      make_bundle("pair", builtin_crossed_module("conjugation"));
  Rng rng(41);
  const GaugeElement s1 = sample_gauge(bd, rng);
  const GaugeElement s2 = sample_gauge(bd, rng);
  const GaugeElement s3 = sample_gauge(bd, rng);
  const GaugeElement id = identity_gauge(bd.cm);
  for (int t = 0; t < 20; ++t) {
    Rng rt = Rng::for_trial(42, 36, t);
    const TotalPoint p = bd.sample_point(rt);
    const auto at = [&](const GaugeElement& s) {
      return sigma_object(bd, s, p);
    };
    CHECK(inf_norm(Mat(at(gauge_compose(s1, gauge_inverse(s1))) - at(id))) <
          1e-11);
    CHECK(inf_norm(Mat(at(gauge_compose(gauge_compose(s1, s2), s3)) -
                       at(gauge_compose(s1, gauge_compose(s2, s3))))) < 1e-11);
    CHECK(inf_norm(Mat(at(gauge_compose(id, s1)) - at(s1))) < 1e-11);
  }
}

TEST_CASE("gauge action matches the local field transformation law") {
  // On the identity section of a discrete base the transformed field obeys
  // A' = Ad_c(A) - (dc) c^{-1}, with dc evaluated by central differences.
  const double step = 1e-5;
  const GroupoidBundle bd =
      make_bundle("discrete", builtin_crossed_module("conjugation"));
  const ConnectionForm w = base_compatible_connection(bd);
  Rng rng(42);
  const GaugeElement s = sample_gauge(bd, rng);
  const ConnectionForm w1 = act_on_connection(bd, s, w);
  for (int t = 0; t < 20; ++t) {
    Rng rt = Rng::for_trial(42, 37, t);
    TotalPoint p = bd.sample_point(rt);
    p.g = bd.cm.id_G();
    TotalTangent v = bd.sample_tangent(p, rt);
    v.vg = Mat::Zero(bd.cm.dim_G, bd.cm.dim_G);  // pure chart direction
    const Mat c = s.c(p.x);
    const Mat dc =
        (s.c(Vec(p.x + step * v.vx)) - s.c(Vec(p.x - step * v.vx))) /
        (2.0 * step);
    const Mat expect = Ad(c, w.A_field(p.x, v.vx)) - dc * inverse_checked(c);
    CHECK(inf_norm(Mat(omega0(bd, w1, v) - expect)) < 1e-5);
  }
}

TEST_CASE("the action preserves strictness and is a right action") {
  for (const auto& kind : kKinds) {
    const GroupoidBundle bd =
        make_bundle(kind, builtin_crossed_module("normal_inclusion"));
    const ConnectionForm w = base_compatible_connection(bd);
    Rng rng(43);
    const GaugeElement s1 = sample_gauge(bd, rng);
    const GaugeElement s2 = sample_gauge(bd, rng);
    const ConnectionForm w1 = act_on_connection(bd, s1, w);
    CHECK(check_strict(bd, w1, 20, 42).max() < 1e-4);
    const ConnectionForm lhs = act_on_connection(bd, s2, w1);
    const ConnectionForm rhs = act_on_connection(bd, gauge_compose(s2, s1), w);
    for (int t = 0; t < 15; ++t) {
      Rng rt = Rng::for_trial(42, 38, t);
      const TotalPoint p = bd.sample_point(rt);
      const TotalTangent v = bd.sample_tangent(p, rt);
      CHECK(inf_norm(Mat(omega0(bd, lhs, v) - omega0(bd, rhs, v))) < 1e-5);
    }
  }
}

TEST_CASE("categorical connections transform coherently") {
  const GroupoidBundle bd =
      make_bundle("pair", builtin_crossed_module("conjugation"));
  Rng rng(44);
  const Mat b0 = bd.cm.sample_alg_H(rng);
  const CategoricalConnection C = connection_from_base_map(
      bd.cm, [b0](const Vec& x) { return expm(0.4 * (1.0 + x(0)) * b0); });
  const GaugeElement s = sample_gauge(bd, rng);
  const GaugeElement id = identity_gauge(bd.cm);
  for (int t = 0; t < 15; ++t) {
    Rng rt = Rng::for_trial(42, 39, t);
    const TotalPoint p = bd.sample_point(rt);
    const BaseArrow gamma = bd.base.sample_arrow_from(BasePoint{p.x}, rt);
    // Identity acts trivially.
    const DecArrow plain = cat_conn_lift(bd, C, gamma, p);
    const DecArrow under_id = act_on_categorical(bd, id, C, gamma, p);
    CHECK(inf_norm(Mat(plain.h - under_id.h)) < 1e-11);
    // The transformed assignment is still a lift through p over gamma.
    const DecArrow moved = act_on_categorical(bd, s, C, gamma, p);
    CHECK(inf_norm(Vec(moved.p.x - p.x)) < 1e-11);
    CHECK(inf_norm(Mat(moved.p.g - p.g)) < 1e-9);
    CHECK(inf_norm(Vec(dec_target(bd, moved).x - bd.base.target(gamma).x)) <
          1e-11);
  }
}

TEST_CASE("extended elements act through their product") {
  const GroupoidBundle bd =
      make_bundle("pair", builtin_crossed_module("normal_inclusion"));
  const ConnectionForm w = base_compatible_connection(bd);
  Rng rng(45);
  const ExtendedGaugeElement e1{sample_gauge(bd, rng), sample_lambda(bd, rng)};
  const ExtendedGaugeElement e2{sample_gauge(bd, rng), sample_lambda(bd, rng)};
  const ConnectionForm w1 = extended_act(bd, e1, w);
  CHECK(kappa_deviation(bd, w1, 15, 42).semi_strict);
  const ConnectionForm lhs = extended_act(bd, e2, w1);
  const ConnectionForm rhs = extended_act(bd, extended_compose(bd, e1, e2), w);
  for (int t = 0; t < 15; ++t) {
    Rng rt = Rng::for_trial(42, 40, t);
    const TotalPoint p = bd.sample_point(rt);
    const TotalTangent v = bd.sample_tangent(p, rt);
    CHECK(inf_norm(Mat(omega0(bd, lhs, v) - omega0(bd, rhs, v))) < 1e-6);
  }
}

TEST_CASE("general action reduces to the displayed closed forms") {
  for (const std::string mod : {"conjugation", "normal_inclusion"}) {
    const GroupoidBundle bd =
        make_bundle("discrete", builtin_crossed_module(mod));
    Rng rng(46);
    const ExtendedGaugeElement e{sample_gauge(bd, rng), sample_lambda(bd, rng)};
    CHECK(verify_higher_gauge_example(bd, e, base_compatible_connection(bd), 30,
                                      42) < 1e-4);
  }
}

TEST_CASE("2-morphisms of gauge elements") {
  const GroupoidBundle bd =
      make_bundle("pair", builtin_crossed_module("conjugation"));
  Rng rng(47);
  const GaugeElement s = sample_gauge(bd, rng);
  const Mat f0 = bd.cm.sample_alg_H(rng);
  const auto phi = [f0](const Vec& x) { return expm(0.3 * (1.0 + x(1)) * f0); };
  const GaugeMorphism m = morphism_from_base_map(bd.cm, phi);
  const GaugeElement s2 = morphism_target(bd.cm, s, phi);
  const MorphismReport rep = check_gauge_morphism(bd, s, s2, m, 20, 42);
  CHECK(rep.valid);
  CHECK(rep.max() < 1e-8);

  // A map that skips the fiber twist fails equivariance and is rejected.
  const GaugeMorphism bad{[phi](const TotalPoint& p) { return phi(p.x); }};
  const MorphismReport brep = check_gauge_morphism(bd, s, s2, bad, 20, 42);
  CHECK_FALSE(brep.valid);
  CHECK(brep.equivariance > 1e-2);
}
