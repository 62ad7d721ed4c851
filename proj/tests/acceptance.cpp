// Acceptance gates for the verification kernel. Each criterion prints one
// PASS/FAIL line; the process exits nonzero if any gate fails. All
// tolerances are pinned here; the finite-difference-limited gates carry
// wider margins than the exact algebraic ones (nested central differences
// bottom out near 1e-6 at the default step).

#include "higauge/atiyah.hpp"
#include "higauge/gauge.hpp"
#include "higauge/suites.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace higauge;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kTrials = 100;

int failures = 0;

void criterion(int number, const std::string& name, bool pass, double residual,
               double tolerance) {
  std::printf("criterion %2d  %-34s %s  (residual %.3e, gate %.1e)\n", number,
              name.c_str(), pass ? "PASS" : "FAIL", residual, tolerance);
  if (!pass) ++failures;
}

double suite_residual(const SuiteReport& rep, const std::string& name) {
  for (const auto& s : rep.suites)
    if (s.name == name) return s.max_residual;
  return 1.0;  // missing suite counts as a failure
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.trials = kTrials;
  const SuiteReport rep = run_suites(cfg);

  // 1. Crossed-module identities on every builtin, and a corrupted module
  //    is flagged far above the gate.
  {
    const double r = suite_residual(rep, "peiffer");
    CrossedModule bad = builtin_crossed_module("conjugation");
    bad.alpha = [](const Mat&, const Mat& h) { return h; };  // drops the twist
    const double fault = check_peiffer(bad, kTrials, kSeed).max();
    criterion(1, "crossed-module identities", r <= 1e-9 && fault > 1e-2, r,
              1e-9);
  }

  // 2. 2-group interchange/inverse identities, and the adjoint formulas
  //    against direct conjugation and finite differences.
  {
    const double ri = suite_residual(rep, "interchange");
    const double ra = suite_residual(rep, "adjoint");
    criterion(2, "2-group structure and adjoints", ri <= 1e-11 && ra <= 1e-6,
              std::max(ri, ra), 1e-6);
  }

  // 3. Translation identities: differential parts at the fd gate, the
  //    finite precursors essentially exact.
  {
    const double rt = suite_residual(rep, "technical");
    const double rf = suite_residual(rep, "technical_finite");
    criterion(3, "translation identities", rt <= 1e-5 && rf <= 1e-11,
              std::max(rt, rf), 1e-5);
  }

  // 4. Decorated-bundle axioms, free action, projection invariance and the
  //    decoration isomorphism round trip over all three base kinds.
  {
    const double r = suite_residual(rep, "dec_bundle");
    criterion(4, "decorated bundle structure", r <= 1e-10, r, 1e-10);
  }

  // 5. Quotient sequence: normal-form invariance, composition, exactness
  //    ranks, annihilation, and the retraction round trip; a rank-deficient
  //    inclusion must be flagged.
  {
    const double r = suite_residual(rep, "atiyah");
    bool exact_all = true;
    bool fault_flagged = true;
    double round_trip = 0.0;
    for (const std::string kind : {"discrete", "pair", "action"})
      for (const std::string mod :
           {"conjugation", "normal_inclusion", "discrete"}) {
        const GroupoidBundle bd =
            make_bundle(kind, builtin_crossed_module(mod));
        exact_all = exact_all && check_exactness(bd, 8, kSeed).exact;

        const ConnectionForm w = base_compatible_connection(bd);
        const ConnectionForm w2 = form_from_retraction(
            bd, [&bd, &w](const AtClass& c) { return retract(bd, w, c); });
        for (int t = 0; t < kTrials; ++t) {
          Rng rng = Rng::for_trial(kSeed, 50, t);
          const TotalPoint p = bd.sample_point(rng);
          const TotalTangent v = bd.sample_tangent(p, rng);
          round_trip = std::max(
              round_trip, inf_norm(Mat(omega0(bd, w2, v) - omega0(bd, w, v))));
          const DecArrow a = sample_dec_arrow_from(bd, p, rng);
          const DecTangent T = sample_dec_tangent(bd, a, rng);
          const Lie2AlgebraArrow k1 = omega1(bd, w2, T);
          const Lie2AlgebraArrow k2 = omega1(bd, w, T);
          round_trip = std::max({round_trip, inf_norm(Mat(k1.A - k2.A)),
                                 inf_norm(Mat(k1.B - k2.B))});
        }
      }
    {
      const GroupoidBundle bd =
          make_bundle("pair", builtin_crossed_module("conjugation"));
      Rng rng = Rng::for_trial(kSeed, 51, 0);
      Mat J = object_j_matrix(bd, bd.base.sample_point(rng));
      J.col(0).setZero();
      fault_flagged = !analyze_fiber(J, object_pi_matrix(bd)).exact;
    }
    criterion(5, "quotient sequence exactness",
              r <= 1e-6 && exact_all && fault_flagged && round_trip <= 1e-8,
              std::max(r, round_trip), 1e-6);
  }

  // 6. Connection gates: functoriality/equivariance/verticality, tangent
  //    structure maps and the vertical generator against fd oracles, base
  //    compatibility, and a constructed witness on the one-arrow base.
  {
    const double rc = suite_residual(rep, "connection");
    const double rb = suite_residual(rep, "base_compat");
    double fd_gap = 0.0;
    const double step = cfg.fd_step;
    for (const std::string kind : {"discrete", "pair", "action"}) {
      const GroupoidBundle bd =
          make_bundle(kind, builtin_crossed_module("conjugation"));
      for (int t = 0; t < 25; ++t) {
        Rng rng = Rng::for_trial(kSeed, 52, t);
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
        fd_gap = std::max(
            {fd_gap, inf_norm(Vec(tt.vx - (tp.x - tn.x) / (2.0 * step))),
             inf_norm(Mat(tt.vg - (tp.g - tn.g) / (2.0 * step)))});

        const Lie2AlgebraArrow K = sample_l2a_arrow(bd.cm, rng);
        const DecArrow cp =
            dec_act(bd, a, TwoGroupArrow{expm(step * K.A), expm(step * K.B)});
        const DecArrow cn = dec_act(
            bd, a, TwoGroupArrow{expm(-step * K.A), expm(-step * K.B)});
        const DecTangent d = vertical_generator_dec(bd, a, K);
        fd_gap = std::max(
            {fd_gap, inf_norm(Mat(d.v.vg - (cp.p.g - cn.p.g) / (2.0 * step))),
             inf_norm(Mat(d.K - (cp.h - cn.h) / (2.0 * step)))});
      }
    }
    const GroupoidBundle witness =
        make_bundle("discrete", builtin_crossed_module("conjugation"));
    const ConnectionForm ww = base_compatible_connection(witness);
    const bool witnessed =
        check_strict(witness, ww, kTrials, kSeed).max() <= 1e-9 &&
        check_base_compatibility(witness, ww, kTrials, kSeed) <= 1e-9;
    criterion(6, "connection form gates",
              rc <= 1e-6 && rb <= 1e-9 && fd_gap <= 1e-6 && witnessed,
              std::max({rc, rb, fd_gap}), 1e-6);
  }

  // 7. Semi-strict deviation: extracted kappa equals -lambda o delta, is
  //    equivariant, and strictness genuinely fails when lambda o delta != 0.
  {
    const double r = suite_residual(rep, "semistrict");
    const GroupoidBundle bd =
        make_bundle("pair", builtin_crossed_module("conjugation"));
    const ConnectionForm w = base_compatible_connection(bd);
    // A multiple of the form itself is equivariant and nonzero on the
    // vertical directions, so lambda o delta does not vanish.
    LambdaForm lam;
    lam.lam = [&bd, w](const TotalTangent& v) {
      return Mat(0.3 * omega0(bd, w, v));
    };
    const ConnectionForm wss = semistrict_from_strict(bd, w, lam);
    const KappaResult kr = kappa_deviation(bd, wss, kTrials, kSeed);
    const bool breaks_strict = check_strict(bd, wss, kTrials, kSeed).max() > 1e-6;
    criterion(7, "semi-strict deviation functor",
              r <= 1e-7 && kr.semi_strict &&
                  kr.equivariance_residual <= 1e-8 && breaks_strict,
              std::max(r, kr.equivariance_residual), 1e-7);
  }

  // 8. Gauge 2-group: closure/inverse laws, the connection action, the
  //    extended action and product law, and the closed-form example. The
  //    action gates run through nested finite differences.
  {
    const double rg = suite_residual(rep, "gauge_element");
    const double rc = suite_residual(rep, "gauge_closure");
    const double ra = suite_residual(rep, "gauge_action");
    const double re = suite_residual(rep, "extended");
    const double rh = suite_residual(rep, "higher_gauge");
    criterion(8, "gauge 2-group action",
              rg <= 1e-9 && rc <= 1e-11 && ra <= 1e-4 && re <= 1e-6 &&
                  rh <= 1e-4,
              std::max({rg, rc, ra, re, rh}), 1e-4);
  }

  // 9. Groupoid extensions and the twisted-bundle correspondence, exact on
  //    the finite builtins.
  {
    const double r = suite_residual(rep, "extension");
    criterion(9, "extension correspondence", r <= 1e-12, r, 1e-12);
  }

  // 10. Determinism: a second full run reproduces every residual bit for
  //     bit (wall times excluded).
  {
    const SuiteReport rep2 = run_suites(cfg);
    bool same = rep.suites.size() == rep2.suites.size() &&
                rep.pass == rep2.pass;
    double gap = 0.0;
    for (std::size_t i = 0; same && i < rep.suites.size(); ++i) {
      same = rep.suites[i].name == rep2.suites[i].name &&
             rep.suites[i].max_residual == rep2.suites[i].max_residual &&
             rep.suites[i].pass == rep2.suites[i].pass;
      gap = std::max(gap, std::abs(rep.suites[i].max_residual -
                                   rep2.suites[i].max_residual));
    }
    criterion(10, "deterministic reports", same, gap, 0.0);
  }

  if (failures == 0) {
    std::printf("acceptance: PASS (10/10)\n");
    return 0;
  }
  std::printf("acceptance: FAIL (%d criteria)\n", failures);
  return 1;
}
