#include "higauge/suites.hpp"

#include "higauge/atiyah.hpp"
#include "higauge/extension.hpp"
#include "higauge/gauge.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace higauge {

namespace {

const std::vector<std::string> kBaseKinds = {"discrete", "pair", "action"};

CrossedModule module_for(const std::string& name, const SuiteConfig& cfg) {
  CrossedModule cm = builtin_crossed_module(name);
  cm.fd_step = cfg.fd_step;
  return cm;
}

GroupoidBundle bundle_for(const std::string& kind, const std::string& module,
                          const SuiteConfig& cfg) {
  return make_bundle(kind, module_for(module, cfg));
}

double base_arrow_diff(const BaseGroupoid& base, const BaseArrow& a,
                       const BaseArrow& b) {
  double r = inf_norm(Vec(a.x - b.x));
  if (base.kind == BaseKind::pair) r = std::max(r, inf_norm(Vec(a.y - b.y)));
  if (base.kind == BaseKind::action) r = std::max(r, inf_norm(Mat(a.k - b.k)));
  return r;
}

double dec_arrow_diff(const GroupoidBundle& bd, const DecArrow& a,
                      const DecArrow& b) {
  return std::max({base_arrow_diff(bd.base, a.gamma, b.gamma),
                   inf_norm(Vec(a.p.x - b.p.x)), inf_norm(Mat(a.p.g - b.p.g)),
                   inf_norm(Mat(a.h - b.h))});
}

double l2a_diff(const Lie2AlgebraArrow& a, const Lie2AlgebraArrow& b) {
  return std::max(inf_norm(Mat(a.A - b.A)), inf_norm(Mat(a.B - b.B)));
}

// ---- individual suites ------------------------------------------------

double s_peiffer(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& name : builtin_crossed_module_names())
    r = std::max(r,
                 check_peiffer(module_for(name, cfg), cfg.trials, cfg.seed).max());
  return r;
}

double s_interchange(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& name : builtin_crossed_module_names())
    r = std::max(
        r, check_interchange(module_for(name, cfg), cfg.trials, cfg.seed).max());
  return r;
}

double s_adjoint(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& name : builtin_crossed_module_names()) {
    const CrossedModule cm = module_for(name, cfg);
    for (int t = 0; t < cfg.trials; ++t) {
      Rng rng = Rng::for_trial(cfg.seed, 3, t);
      const TwoGroupArrow a = sample_arrow(cm, rng);
      const TwoGroupArrow b = sample_arrow(cm, rng);
      // Factored adjoint vs direct conjugation a b a^{-1}.
      const TwoGroupArrow direct =
          tensor(cm, tensor(cm, a, b), group_inverse(cm, a));
      const TwoGroupArrow adj = adjoint_group(cm, a, b);
      r = std::max({r, inf_norm(Mat(adj.h - direct.h)),
                    inf_norm(Mat(adj.g - direct.g))});

      // Algebra adjoint vs the differentiated group adjoint.
      const Lie2AlgebraArrow K = sample_l2a_arrow(cm, rng);
      const auto curve = [&](double u) {
        return adjoint_group(
            cm, a, TwoGroupArrow{expm(u * K.A), expm(u * K.B)});
      };
      const TwoGroupArrow cp = curve(cfg.fd_step);
      const TwoGroupArrow cn = curve(-cfg.fd_step);
      Lie2AlgebraArrow fd;
      fd.A = (cp.h - cn.h) / (2.0 * cfg.fd_step);
      fd.B = (cp.g - cn.g) / (2.0 * cfg.fd_step);
      r = std::max(r, l2a_diff(adjoint_algebra(cm, a, K), fd));
    }
  }
  return r;
}

double s_technical(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const std::string name : {"conjugation", "normal_inclusion"}) {
    const TechnicalReport rep =
        verify_technical_identities(module_for(name, cfg), cfg.trials, cfg.seed);
    r = std::max({r, rep.part1, rep.part2});
  }
  return r;
}

double s_technical_finite(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& name : builtin_crossed_module_names())
    r = std::max(r, verify_technical_identities(module_for(name, cfg),
                                                cfg.trials, cfg.seed)
                        .group_precursor);
  return r;
}

double s_dec_bundle(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const auto& mod : builtin_crossed_module_names()) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      for (int t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, 30, t);
        const DecArrow a = sample_dec_arrow(bd, rng);
        const TotalPoint src = dec_source(bd, a);
        const TotalPoint tgt = dec_target(bd, a);

        // Unit and inverse laws.
        r = std::max(r, dec_arrow_diff(bd, dec_compose(bd, a, dec_unit(bd, src)), a));
        r = std::max(r, dec_arrow_diff(bd, dec_compose(bd, dec_unit(bd, tgt), a), a));
        const DecArrow ai = dec_inverse(bd, a);
        r = std::max(r, dec_arrow_diff(bd, dec_compose(bd, ai, a), dec_unit(bd, src)));
        r = std::max(r, dec_arrow_diff(bd, dec_compose(bd, a, ai), dec_unit(bd, tgt)));

        // Associativity along a sampled chain.
        const DecArrow b = sample_dec_arrow_from(bd, tgt, rng);
        const DecArrow c = sample_dec_arrow_from(bd, dec_target(bd, b), rng);
        r = std::max(r, dec_arrow_diff(bd, dec_compose(bd, dec_compose(bd, c, b), a),
                                       dec_compose(bd, c, dec_compose(bd, b, a))));

        // Projection invariance of the 2-group action.
        const TwoGroupArrow k = sample_arrow(bd.cm, rng);
        const DecArrow ak = dec_act(bd, a, k);
        r = std::max(r, base_arrow_diff(bd.base, ak.gamma, a.gamma));

        // Theta isomorphism round trip for a random categorical connection.
        const Mat B0 = bd.cm.sample_alg_H(rng);
        const Mat B1 = bd.cm.sample_alg_H(rng);
        const CategoricalConnection C = connection_from_base_map(
            bd.cm, [B0, B1, scale = bd.cm.sample_scale](const Vec& x) {
              return expm(scale * (B0 + x(0) * B1));
            });
        PullbackArrow pa;
        pa.gamma = a.gamma;
        pa.p = a.p;
        pa.h = bd.cm.sample_H(rng);
        const PullbackArrow back =
            theta_iso_inverse(bd, C, theta_iso(bd, C, pa));
        r = std::max({r, base_arrow_diff(bd.base, back.gamma, pa.gamma),
                      inf_norm(Vec(back.p.x - pa.p.x)),
                      inf_norm(Mat(back.p.g - pa.p.g)),
                      inf_norm(Mat(back.h - pa.h))});
        const DecArrow fwd = theta_iso(bd, C, theta_iso_inverse(bd, C, a));
        r = std::max(r, dec_arrow_diff(bd, fwd, a));
      }
    }
  return r;
}

double s_atiyah(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion", "discrete"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      const ConnectionForm w = base_compatible_connection(bd);
      const ExactnessReport ex =
          check_exactness(bd, std::min(cfg.trials, 10), cfg.seed);
      if (!ex.exact) r = std::max(r, 1.0);

      for (int t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, 31, t);
        const TotalPoint p = bd.sample_point(rng);
        const Mat B = bd.cm.sample_alg_G(rng);
        const Mat g = bd.cm.sample_G(rng);

        // Normal-form invariance, object level, Ad and At.
        const AdClass c1 = ad_class(bd, p, B);
        const AdClass c2 =
            ad_class(bd, bd.act(p, g), Ad(inverse_checked(g), B));
        r = std::max(r, inf_norm(Mat(c1.B - c2.B)));
        const TotalTangent v = bd.sample_tangent(p, rng);
        const AtClass t1 = at_class(bd, v);
        const AtClass t2 = at_class(
            bd, TotalTangent{bd.act(p, g), v.vx, Mat(v.vg * g)});
        r = std::max({r, inf_norm(Vec(t1.vx - t2.vx)),
                      inf_norm(Mat(t1.vg - t2.vg))});

        // Normal-form invariance, arrow level.
        const DecArrow a = sample_dec_arrow_from(bd, p, rng);
        const Lie2AlgebraArrow K = sample_l2a_arrow(bd.cm, rng);
        const TwoGroupArrow k = sample_arrow(bd.cm, rng);
        const AdClass ca = ad_class(bd, a, K);
        const AdClass cb =
            ad_class(bd, dec_act(bd, a, k),
                     adjoint_algebra(bd.cm, group_inverse(bd.cm, k), K));
        r = std::max(r, l2a_diff(ca.K, cb.K));

        // Composition agrees with the Lie 2-algebra composition.
        AdClass cn;
        cn.arrow_level = true;
        cn.gamma = bd.base.sample_arrow_from(bd.base.target(ca.gamma), rng);
        cn.K = Lie2AlgebraArrow{bd.cm.sample_alg_H(rng),
                                l2a_target(bd.cm, ca.K)};
        const AdClass cc = ad_compose(bd, cn, ca);
        r = std::max(r, l2a_diff(cc.K, l2a_compose(bd.cm, cn.K, ca.K)));

        // pi_* o j vanishes.
        const BaseTangentArrow pj = pi_star(bd, j_map(bd, c1));
        r = std::max(r, inf_norm(pj.vx));
        const BaseTangentArrow pja = pi_star(bd, j_map(bd, ca));
        r = std::max(r, inf_norm(pja.vx));
        if (bd.base.kind == BaseKind::pair) r = std::max(r, inf_norm(pja.vy));
        if (bd.base.kind == BaseKind::action) r = std::max(r, inf_norm(pja.vk));

        // Strict retraction: R o j is the identity on classes.
        const AdClass rj = retract(bd, w, j_map(bd, c1));
        r = std::max(r, inf_norm(Mat(rj.B - c1.B)));
        const AdClass rja = retract(bd, w, j_map(bd, ca));
        r = std::max(r, l2a_diff(rja.K, ca.K));

        // Form -> retraction -> form round trip.
        const ConnectionForm w2 = form_from_retraction(
            bd, [&bd, &w](const AtClass& c) { return retract(bd, w, c); });
        r = std::max(r, inf_norm(Mat(omega0(bd, w2, v) - omega0(bd, w, v))));
        const DecTangent T = sample_dec_tangent(bd, a, rng);
        r = std::max(r, l2a_diff(omega1(bd, w2, T), omega1(bd, w, T)));
      }
    }
  return r;
}

double s_connection(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion", "discrete"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      const ConnectionForm w = base_compatible_connection(bd);
      r = std::max(r, check_multiplicativity(bd, w, cfg.trials, cfg.seed).max());
      r = std::max(r, check_equivariance(bd, w, cfg.trials, cfg.seed));
      r = std::max(r, check_strict(bd, w, cfg.trials, cfg.seed).max());
    }
  return r;
}

double s_base_compat(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion", "discrete"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      r = std::max(r, check_base_compatibility(
                          bd, base_compatible_connection(bd), cfg.trials,
                          cfg.seed));
    }
  return r;
}

double s_semistrict(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      Rng rng = Rng::for_trial(cfg.seed, 32, 0);
      const LambdaForm lam = sample_lambda(bd, rng);
      const ConnectionForm wss =
          semistrict_from_strict(bd, base_compatible_connection(bd), lam);
      const KappaResult kr = kappa_deviation(bd, wss, cfg.trials, cfg.seed);
      r = std::max({r, kr.solve_residual, kr.arrow_residual,
                    kr.equivariance_residual});
      if (!kr.semi_strict) r = std::max(r, 1.0);

      // Extracted kappa is -lambda o delta.
      for (int t = 0; t < cfg.trials; ++t) {
        Rng rt = Rng::for_trial(cfg.seed, 33, t);
        const TotalPoint p = bd.sample_point(rt);
        const Mat B = bd.cm.sample_alg_G(rt);
        r = std::max(r, inf_norm(Mat(kr.kappa.kappa(p, B) +
                                     lam.lam(bd.vertical(p, B)))));
      }
    }
  return r;
}

double s_gauge_element(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion", "discrete"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      Rng rng = Rng::for_trial(cfg.seed, 34, 0);
      const GaugeElement s = sample_gauge(bd, rng);
      r = std::max(r, check_gauge_element(bd, s, cfg.trials, cfg.seed).max());
    }
  return r;
}

double s_gauge_closure(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion", "discrete"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      Rng rng = Rng::for_trial(cfg.seed, 35, 0);
      const GaugeElement s1 = sample_gauge(bd, rng);
      const GaugeElement s2 = sample_gauge(bd, rng);
      const GaugeElement s3 = sample_gauge(bd, rng);
      const GaugeElement id = identity_gauge(bd.cm);
      for (int t = 0; t < cfg.trials; ++t) {
        Rng rt = Rng::for_trial(cfg.seed, 36, t);
        const TotalPoint p = bd.sample_point(rt);
        const auto at = [&](const GaugeElement& s) {
          return sigma_object(bd, s, p);
        };
        r = std::max(r, inf_norm(Mat(at(gauge_compose(s1, gauge_inverse(s1))) -
                                     at(id))));
        r = std::max(
            r, inf_norm(Mat(at(gauge_compose(gauge_compose(s1, s2), s3)) -
                            at(gauge_compose(s1, gauge_compose(s2, s3))))));
        r = std::max(r, inf_norm(Mat(at(gauge_compose(id, s1)) - at(s1))));
        r = std::max(r, inf_norm(Mat(at(gauge_compose(s1, id)) - at(s1))));
      }
    }
  return r;
}

double s_gauge_action(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& kind : kBaseKinds)
    for (const std::string mod : {"conjugation", "normal_inclusion"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      const ConnectionForm w = base_compatible_connection(bd);
      Rng rng = Rng::for_trial(cfg.seed, 37, 0);
      const GaugeElement s1 = sample_gauge(bd, rng);
      const GaugeElement s2 = sample_gauge(bd, rng);

      // The action preserves strictness.
      const ConnectionForm w1 = act_on_connection(bd, s1, w);
      r = std::max(r, check_strict(bd, w1, cfg.trials, cfg.seed).max());

      // Acting by s1 then s2 equals acting by the composite.
      const ConnectionForm lhs = act_on_connection(bd, s2, w1);
      const ConnectionForm rhs =
          act_on_connection(bd, gauge_compose(s2, s1), w);
      for (int t = 0; t < cfg.trials; ++t) {
        Rng rt = Rng::for_trial(cfg.seed, 38, t);
        const TotalPoint p = bd.sample_point(rt);
        const TotalTangent v = bd.sample_tangent(p, rt);
        r = std::max(r, inf_norm(Mat(omega0(bd, lhs, v) - omega0(bd, rhs, v))));
        const DecArrow a = sample_dec_arrow_from(bd, p, rt);
        const DecTangent T = sample_dec_tangent(bd, a, rt);
        r = std::max(r, l2a_diff(omega1(bd, lhs, T), omega1(bd, rhs, T)));
      }
    }
  return r;
}

double s_extended(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const std::string kind : {"discrete", "pair"})
    for (const std::string mod : {"conjugation", "normal_inclusion"}) {
      const GroupoidBundle bd = bundle_for(kind, mod, cfg);
      const ConnectionForm w = base_compatible_connection(bd);
      Rng rng = Rng::for_trial(cfg.seed, 39, 0);
      const ExtendedGaugeElement e1{sample_gauge(bd, rng),
                                    sample_lambda(bd, rng)};
      const ExtendedGaugeElement e2{sample_gauge(bd, rng),
                                    sample_lambda(bd, rng)};

      // Semi-strictness is preserved.
      const ConnectionForm w1 = extended_act(bd, e1, w);
      const KappaResult kr =
          kappa_deviation(bd, w1, std::min(cfg.trials, 25), cfg.seed);
      if (!kr.semi_strict) r = std::max(r, 1.0);

      // Product law.
      const ConnectionForm lhs = extended_act(bd, e2, w1);
      const ConnectionForm rhs =
          extended_act(bd, extended_compose(bd, e1, e2), w);
      for (int t = 0; t < std::min(cfg.trials, 25); ++t) {
        Rng rt = Rng::for_trial(cfg.seed, 40, t);
        const TotalPoint p = bd.sample_point(rt);
        const TotalTangent v = bd.sample_tangent(p, rt);
        r = std::max(r, inf_norm(Mat(omega0(bd, lhs, v) - omega0(bd, rhs, v))));
        const DecArrow a = sample_dec_arrow_from(bd, p, rt);
        const DecTangent T = sample_dec_tangent(bd, a, rt);
        r = std::max(r, l2a_diff(omega1(bd, lhs, T), omega1(bd, rhs, T)));
      }
    }
  return r;
}

double s_higher_gauge(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const std::string mod : {"conjugation", "normal_inclusion"}) {
    const GroupoidBundle bd = bundle_for("discrete", mod, cfg);
    Rng rng = Rng::for_trial(cfg.seed, 41, 0);
    const ExtendedGaugeElement e{sample_gauge(bd, rng), sample_lambda(bd, rng)};
    r = std::max(r, verify_higher_gauge_example(
                        bd, e, base_compatible_connection(bd), cfg.trials,
                        cfg.seed));
  }
  return r;
}

double s_extension(const SuiteConfig& cfg) {
  double r = 0.0;
  for (const auto& name : builtin_extension_names())
    r = std::max(r, check_extension(builtin_extension(name)).max());
  return r;
}

struct SuiteDef {
  std::string name;
  double tolerance;
  double (*run)(const SuiteConfig&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"peiffer", 1e-9, s_peiffer},
      {"interchange", 1e-11, s_interchange},
      {"adjoint", 1e-6, s_adjoint},
      {"technical", 1e-5, s_technical},
      {"technical_finite", 1e-11, s_technical_finite},
      {"dec_bundle", 1e-10, s_dec_bundle},
      {"atiyah", 1e-6, s_atiyah},
      {"connection", 1e-6, s_connection},
      {"base_compat", 1e-9, s_base_compat},
      {"semistrict", 1e-7, s_semistrict},
      {"gauge_element", 1e-9, s_gauge_element},
      {"gauge_closure", 1e-11, s_gauge_closure},
      {"gauge_action", 1e-4, s_gauge_action},
      {"extended", 1e-6, s_extended},
      {"higher_gauge", 1e-4, s_higher_gauge},
      {"extension", 1e-12, s_extension},
  };
  return defs;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.name);
  return out;
}

double suite_default_tolerance(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return d.tolerance;
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport run_suites(const SuiteConfig& config) {
  std::vector<const SuiteDef*> selected;
  if (config.suites.empty()) {
    for (const auto& d : registry()) selected.push_back(&d);
  } else {
    for (const auto& name : config.suites) {
      const SuiteDef* found = nullptr;
      for (const auto& d : registry())
        if (d.name == name) found = &d;
      if (!found) throw std::invalid_argument("unknown suite: " + name);
      selected.push_back(found);
    }
  }
  for (const auto& [name, tol] : config.tol_overrides) {
    suite_default_tolerance(name);  // validates the name
    if (tol < 0.0)
      throw std::invalid_argument("negative tolerance for suite: " + name);
  }

  SuiteReport report;
  report.pass = true;
  for (const SuiteDef* d : selected) {
    SuiteResult res;
    res.name = d->name;
    res.trials = config.trials;
    res.tolerance = d->tolerance;
    const auto it = config.tol_overrides.find(d->name);
    if (it != config.tol_overrides.end()) res.tolerance = it->second;
    const auto start = std::chrono::steady_clock::now();
    res.max_residual = d->run(config);
    const auto stop = std::chrono::steady_clock::now();
    res.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    res.pass = res.max_residual <= res.tolerance;
    report.pass = report.pass && res.pass;
    report.suites.push_back(std::move(res));
  }
  return report;
}

}  // namespace higauge
