#include "higauge/dec_tangent.hpp"

#include <doctest.h>

using namespace higauge;

namespace {

const std::vector<std::string> kKinds = {"discrete", "pair", "action"};

double base_arrow_gap(const BaseGroupoid& base, const BaseArrow& a,
                      const BaseArrow& b) {
  double r = inf_norm(Vec(a.x - b.x));
  if (base.kind == BaseKind::pair) r = std::max(r, inf_norm(Vec(a.y - b.y)));
  if (base.kind == BaseKind::action) r = std::max(r, inf_norm(Mat(a.k - b.k)));
  return r;
}

double dec_arrow_gap(const GroupoidBundle& bd, const DecArrow& a,
                     const DecArrow& b) {
  return std::max({base_arrow_gap(bd.base, a.gamma, b.gamma),
                   inf_norm(Vec(a.p.x - b.p.x)), inf_norm(Mat(a.p.g - b.p.g)),
                   inf_norm(Mat(a.h - b.h))});
}

}  // namespace

TEST_CASE("base groupoid axioms") {
  for (const auto& kind : kKinds) {
    const BaseGroupoid base = builtin_base_groupoid(kind);
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      const BaseArrow a = base.sample_arrow(rng);
      const BaseArrow u = base.unit(base.source(a));
      CHECK(base_arrow_gap(base, base.compose(a, u), a) < 1e-12);
      const BaseArrow ai = base.inverse(a);
      CHECK(base_arrow_gap(base, base.compose(ai, a),
                           base.unit(base.source(a))) < 1e-12);
      CHECK(inf_norm(Vec(base.target(a).x - base.source(ai).x)) < 1e-12);
    }
  }
}

TEST_CASE("tangent target matches a finite-difference oracle") {
  const double step = 1e-5;
  for (const auto& kind : kKinds) {
    const BaseGroupoid base = builtin_base_groupoid(kind);
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
      const BaseArrow a = base.sample_arrow(rng);
      const BaseTangentArrow X = base.sample_tangent(a, rng);
      const auto at = [&](double u) {
        BaseArrow c = a;
        c.x = a.x + u * X.vx;
        if (base.kind == BaseKind::pair) c.y = a.y + u * X.vy;
        if (base.kind == BaseKind::action) c.k = a.k + u * X.vk;
        return base.target(c).x;
      };
      const Vec fd = (at(step) - at(-step)) / (2.0 * step);
      CHECK(inf_norm(Vec(base.tangent_target(X) - fd)) < 1e-7);
    }
  }
}

TEST_CASE("bundle action map and its tangent") {
  const double step = 1e-5;
  for (const auto& kind : kKinds) {
    const GroupoidBundle bd =
        make_bundle(kind, builtin_crossed_module("conjugation"));
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
      const TotalPoint p = bd.sample_point(rng);
      const BaseArrow gamma = bd.base.sample_arrow_from(BasePoint{p.x}, rng);
      // mu covers the arrow: pi(mu(gamma, p)) = t(gamma).
      CHECK(inf_norm(Vec(bd.pi(bd.mu(gamma, p)) - bd.base.target(gamma).x)) <
            1e-12);
      // mu is G-equivariant.
      const Mat g = bd.cm.sample_G(rng);
      const TotalPoint lhs = bd.mu(gamma, bd.act(p, g));
      const TotalPoint rhs = bd.act(bd.mu(gamma, p), g);
      CHECK(inf_norm(Mat(lhs.g - rhs.g)) < 1e-12);

      // mu_tangent against central differences in ambient coordinates.
      const BaseTangentArrow X = bd.base.sample_tangent(gamma, rng);
      TotalTangent v = bd.sample_tangent(p, rng);
      v.vx = X.vx;  // tangents must agree over the shared source
      const auto curve = [&](double u) {
        BaseArrow c = gamma;
        c.x = gamma.x + u * X.vx;
        if (bd.base.kind == BaseKind::pair) c.y = gamma.y + u * X.vy;
        if (bd.base.kind == BaseKind::action) c.k = gamma.k + u * X.vk;
        return bd.mu(c, TotalPoint{Vec(p.x + u * v.vx), Mat(p.g + u * v.vg)});
      };
      const TotalPoint cp = curve(step);
      const TotalPoint cn = curve(-step);
      const TotalTangent mt = bd.mu_tangent(X, v);
      CHECK(inf_norm(Vec(mt.vx - (cp.x - cn.x) / (2.0 * step))) < 1e-7);
      CHECK(inf_norm(Mat(mt.vg - (cp.g - cn.g) / (2.0 * step))) < 1e-7);
    }
  }
}

TEST_CASE("decorated groupoid axioms and free action") {
  for (const auto& kind : kKinds)
    for (const auto& mod : builtin_crossed_module_names()) {
      const GroupoidBundle bd = make_bundle(kind, builtin_crossed_module(mod));
      Rng rng(14);
      for (int t = 0; t < 10; ++t) {
        const DecArrow a = sample_dec_arrow(bd, rng);
        const TotalPoint src = dec_source(bd, a);
        const TotalPoint tgt = dec_target(bd, a);
        CHECK(dec_arrow_gap(bd, dec_compose(bd, a, dec_unit(bd, src)), a) <
              1e-10);
        const DecArrow ai = dec_inverse(bd, a);
        CHECK(dec_arrow_gap(bd, dec_compose(bd, ai, a), dec_unit(bd, src)) <
              1e-10);
        CHECK(dec_arrow_gap(bd, dec_compose(bd, a, ai), dec_unit(bd, tgt)) <
              1e-10);

        const DecArrow b = sample_dec_arrow_from(bd, tgt, rng);
        const DecArrow c = sample_dec_arrow_from(bd, dec_target(bd, b), rng);
        CHECK(dec_arrow_gap(bd, dec_compose(bd, dec_compose(bd, c, b), a),
                            dec_compose(bd, c, dec_compose(bd, b, a))) <
              1e-10);

        // The action is along the fibers and free: a nontrivial group
        // element moves every arrow.
        const TwoGroupArrow k = sample_arrow(bd.cm, rng);
        const DecArrow ak = dec_act(bd, a, k);
        CHECK(base_arrow_gap(bd.base, ak.gamma, a.gamma) < 1e-12);
        if (inf_norm(Mat(k.g - bd.cm.id_G())) > 1e-3)
          CHECK(inf_norm(Mat(ak.p.g - a.p.g)) > 1e-6);
      }
    }
}

TEST_CASE("theta is an isomorphism over any categorical connection") {
  for (const auto& kind : kKinds) {
    const GroupoidBundle bd =
        make_bundle(kind, builtin_crossed_module("normal_inclusion"));
    Rng rng(15);
    const Mat b0 = bd.cm.sample_alg_H(rng);
    const Mat b1 = bd.cm.sample_alg_H(rng);
    const CategoricalConnection C = connection_from_base_map(
        bd.cm, [b0, b1](const Vec& x) { return expm(0.5 * (b0 + x(0) * b1)); });
    for (int t = 0; t < 20; ++t) {
      PullbackArrow pa;
      const DecArrow seed = sample_dec_arrow(bd, rng);
      pa.gamma = seed.gamma;
      pa.p = seed.p;
      pa.h = bd.cm.sample_H(rng);
      const PullbackArrow back = theta_iso_inverse(bd, C, theta_iso(bd, C, pa));
      CHECK(inf_norm(Mat(back.h - pa.h)) < 1e-10);
      CHECK(inf_norm(Mat(back.p.g - pa.p.g)) < 1e-10);
      const DecArrow fwd = theta_iso(bd, C, theta_iso_inverse(bd, C, seed));
      CHECK(dec_arrow_gap(bd, fwd, seed) < 1e-10);
    }
  }
}

TEST_CASE("categorical connection lifts are functorial") {
  for (const auto& kind : kKinds) {
    const GroupoidBundle bd =
        make_bundle(kind, builtin_crossed_module("conjugation"));
    const CategoricalConnection C = canonical_connection(bd.cm);
    Rng rng(16);
    for (int t = 0; t < 10; ++t) {
      const TotalPoint p = bd.sample_point(rng);
      const BaseArrow g1 = bd.base.sample_arrow_from(BasePoint{p.x}, rng);
      const BaseArrow g2 =
          bd.base.sample_arrow_from(bd.base.target(g1), rng);
      const DecArrow l1 = cat_conn_lift(bd, C, g1, p);
      const DecArrow l2 = cat_conn_lift(bd, C, g2, dec_target(bd, l1));
      const DecArrow composite =
          cat_conn_lift(bd, C, bd.base.compose(g2, g1), p);
      CHECK(dec_arrow_gap(bd, dec_compose(bd, l2, l1), composite) < 1e-10);
    }
  }
}

TEST_CASE("decorated tangent structure maps match finite differences") {
  const double step = 1e-5;
  for (const auto& kind : kKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion"}) {
      const GroupoidBundle bd = make_bundle(kind, builtin_crossed_module(mod));
      Rng rng(17);
      for (int t = 0; t < 10; ++t) {
        const DecArrow a = sample_dec_arrow(bd, rng);
        const DecTangent T = sample_dec_tangent(bd, a, rng);
        const auto arrow_at = [&](double u) {
          DecArrow c = a;
          c.gamma.x = a.gamma.x + u * T.X.vx;
          if (bd.base.kind == BaseKind::pair)
            c.gamma.y = a.gamma.y + u * T.X.vy;
          if (bd.base.kind == BaseKind::action)
            c.gamma.k = a.gamma.k + u * T.X.vk;
          c.p.x = a.p.x + u * T.v.vx;
          c.p.g = a.p.g + u * T.v.vg;
          c.h = a.h + u * T.K;
          return c;
        };
        const TotalPoint tp = dec_target(bd, arrow_at(step));
        const TotalPoint tn = dec_target(bd, arrow_at(-step));
        const TotalTangent tt = dec_tangent_target(bd, T);
        CHECK(inf_norm(Vec(tt.vx - (tp.x - tn.x) / (2.0 * step))) < 1e-6);
        CHECK(inf_norm(Mat(tt.vg - (tp.g - tn.g) / (2.0 * step))) < 1e-6);
      }
    }
}

TEST_CASE("decorated vertical generator matches finite differences") {
  const double step = 1e-5;
  for (const auto& kind : kKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion"}) {
      const GroupoidBundle bd = make_bundle(kind, builtin_crossed_module(mod));
      Rng rng(18);
      for (int t = 0; t < 10; ++t) {
        const DecArrow a = sample_dec_arrow(bd, rng);
        const Lie2AlgebraArrow K = sample_l2a_arrow(bd.cm, rng);
        const auto acted = [&](double u) {
          return dec_act(bd, a,
                         TwoGroupArrow{expm(u * K.A), expm(u * K.B)});
        };
        const DecArrow cp = acted(step);
        const DecArrow cn = acted(-step);
        const DecTangent d = vertical_generator_dec(bd, a, K);
        CHECK(inf_norm(Mat(d.v.vg - (cp.p.g - cn.p.g) / (2.0 * step))) < 1e-6);
        CHECK(inf_norm(Mat(d.K - (cp.h - cn.h) / (2.0 * step))) < 1e-6);
        CHECK(inf_norm(d.v.vx) < 1e-12);
      }
    }
}
