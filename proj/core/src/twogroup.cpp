#include "higauge/twogroup.hpp"

#include <algorithm>

namespace higauge {

namespace {

void require_composable(double residual, const char* what) {
  if (residual > kComposabilityTol) {
    throw composability_error(std::string(what) + ": source/target mismatch",
                              residual);
  }
}

}  // namespace

Mat arrow_source(const CrossedModule&, const TwoGroupArrow& a) { return a.g; }

Mat arrow_target(const CrossedModule& cm, const TwoGroupArrow& a) {
  return cm.tau(a.h) * a.g;
}

TwoGroupArrow arrow_unit(const CrossedModule& cm, const Mat& g) {
  return {cm.id_H(), g};
}

TwoGroupArrow arrow_compose(const CrossedModule& cm, const TwoGroupArrow& a2,
                            const TwoGroupArrow& a1) {
  require_composable(inf_norm(arrow_source(cm, a2) - arrow_target(cm, a1)),
                     "arrow_compose");
  return {a2.h * a1.h, a1.g};
}

TwoGroupArrow arrow_inverse(const CrossedModule& cm, const TwoGroupArrow& a) {
  return {inverse_checked(a.h), cm.tau(a.h) * a.g};
}

TwoGroupArrow tensor(const CrossedModule& cm, const TwoGroupArrow& a2,
                     const TwoGroupArrow& a1) {
  return {a2.h * cm.alpha(a2.g, a1.h), a2.g * a1.g};
}

TwoGroupArrow group_inverse(const CrossedModule& cm, const TwoGroupArrow& a) {
  const Mat ginv = inverse_checked(a.g);
  return {cm.alpha(ginv, inverse_checked(a.h)), ginv};
}

TwoGroupArrow sample_arrow(const CrossedModule& cm, Rng& rng) {
  return {cm.sample_H(rng), cm.sample_G(rng)};
}

Lie2AlgebraArrow sample_l2a_arrow(const CrossedModule& cm, Rng& rng) {
  return {cm.sample_alg_H(rng), cm.sample_alg_G(rng)};
}

InterchangeReport check_interchange(const CrossedModule& cm, int trials,
                                    std::uint64_t seed) {
  InterchangeReport rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 1, t);
    // Composable pairs by construction: pick the outer arrows freely and
    // start the inner ones at whatever the outer targets... rather, pick
    // k1', k2' freely and set the sources of k2, k1 to the matching targets.
    const Mat h1p = cm.sample_H(rng), h2p = cm.sample_H(rng);
    const Mat g1p = cm.sample_G(rng), g2p = cm.sample_G(rng);
    const TwoGroupArrow k1p{h1p, g1p}, k2p{h2p, g2p};
    const TwoGroupArrow k1{cm.sample_H(rng), arrow_target(cm, k1p)};
    const TwoGroupArrow k2{cm.sample_H(rng), arrow_target(cm, k2p)};

    const TwoGroupArrow lhs = arrow_compose(cm, tensor(cm, k2, k1),
                                            tensor(cm, k2p, k1p));
    const TwoGroupArrow rhs = tensor(cm, arrow_compose(cm, k2, k2p),
                                     arrow_compose(cm, k1, k1p));
    rep.interchange = std::max(
        rep.interchange,
        std::max(inf_norm(lhs.h - rhs.h), inf_norm(lhs.g - rhs.g)));

    // The group inverse functor respects composition.
    const TwoGroupArrow li = group_inverse(cm, arrow_compose(cm, k2, k2p));
    const TwoGroupArrow ri = arrow_compose(cm, group_inverse(cm, k2),
                                           group_inverse(cm, k2p));
    rep.inverse_functor = std::max(
        rep.inverse_functor,
        std::max(inf_norm(li.h - ri.h), inf_norm(li.g - ri.g)));
  }
  return rep;
}

TwoGroupArrow adjoint_group(const CrossedModule& cm, const TwoGroupArrow& a,
                            const TwoGroupArrow& b) {
  const Mat hinv = inverse_checked(a.h);
  const TwoGroupArrow part_h{Ad(a.h, cm.alpha(a.g, b.h)), cm.id_G()};
  const Mat adg = a.g * b.g * inverse_checked(a.g);
  const TwoGroupArrow part_g{a.h * cm.alpha(adg, hinv), adg};
  return tensor(cm, part_h, part_g);
}

Lie2AlgebraArrow adjoint_algebra(const CrossedModule& cm,
                                 const TwoGroupArrow& a,
                                 const Lie2AlgebraArrow& K) {
  const Mat hinv = inverse_checked(a.h);
  const Mat slotA_fromA = Ad(a.h, alpha_g_diff(cm, a.g, K.A));
  const Mat adgB = Ad(a.g, K.B);
  const Mat slotA_fromB = a.h * alpha_bar_h_diff(cm, hinv, adgB);
  return {slotA_fromA + slotA_fromB, adgB};
}

Mat l2a_source(const CrossedModule&, const Lie2AlgebraArrow& K) { return K.B; }

Mat l2a_target(const CrossedModule& cm, const Lie2AlgebraArrow& K) {
  if (cm.tau_diff_closed) return cm.tau_diff_closed(K.A) + K.B;
  return tau_diff(cm, K.A) + K.B;
}

Lie2AlgebraArrow l2a_unit(const CrossedModule& cm, const Mat& B) {
  return {Mat::Zero(cm.dim_H, cm.dim_H), B};
}

Lie2AlgebraArrow l2a_compose(const CrossedModule& cm,
                             const Lie2AlgebraArrow& K2,
                             const Lie2AlgebraArrow& K1) {
  require_composable(inf_norm(l2a_source(cm, K2) - l2a_target(cm, K1)),
                     "l2a_compose");
  return {K2.A + K1.A, K1.B};
}

Lie2AlgebraArrow l2a_inverse(const CrossedModule& cm,
                             const Lie2AlgebraArrow& K) {
  return {-K.A, l2a_target(cm, K)};
}

Lie2AlgebraArrow l2a_bracket(const CrossedModule& cm,
                             const Lie2AlgebraArrow& K1,
                             const Lie2AlgebraArrow& K2) {
  const Mat slotA =
      ad(K1.A, K2.A) + alpha_mixed_diff(cm, K1.B, K2.A) -
      alpha_mixed_diff(cm, K2.B, K1.A);
  return {slotA, ad(K1.B, K2.B)};
}

TechnicalReport verify_technical_identities(const CrossedModule& cm,
                                            int trials, std::uint64_t seed) {
  TechnicalReport rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, 2, t);
    const Mat h1 = cm.sample_H(rng);
    const Mat h2 = cm.sample_H(rng);
    const Mat g = cm.sample_G(rng);
    const Mat B = cm.sample_alg_G(rng);
    const Mat A = cm.sample_alg_H(rng);
    const Mat h1i = inverse_checked(h1);
    const Mat h2i = inverse_checked(h2);
    const Mat gi = inverse_checked(g);

    // Part 1: each summand is a tangent at e_H after left translation.
    {
      const Mat term1 = h2 * alpha_bar_h_diff(cm, h2i, Ad(cm.tau(h1), B));
      const Mat term2 = h1 * alpha_bar_h_diff(cm, h1i, B);
      const Mat rhs = (h2 * h1) * alpha_bar_h_diff(cm, h1i * h2i, B);
      rep.part1 = std::max(rep.part1, inf_norm(term1 + term2 - rhs));
    }

    // Its finite precursor, pure group arithmetic.
    {
      const Mat lhs = (h2 * cm.alpha(cm.tau(h1) * g * inverse_checked(cm.tau(h1)), h2i)) *
                      (h1 * cm.alpha(g, h1i));
      const Mat rhs = (h2 * h1) * cm.alpha(g, h1i * h2i);
      rep.group_precursor = std::max(rep.group_precursor, inf_norm(lhs - rhs));
    }

    // Part 2, same translation scheme on the alpha_{g^{-1}} orbit.
    {
      const Mat h = cm.sample_H(rng);
      const Mat hi = inverse_checked(h);
      const Mat tA = cm.tau_diff_closed ? cm.tau_diff_closed(A) : tau_diff(cm, A);
      const Mat agh = cm.alpha(gi, h);
      const Mat term1 =
          cm.alpha(gi, hi) * alpha_bar_h_diff(cm, agh, Ad(gi, tA));
      const Mat term2 = alpha_g_diff(cm, gi, A);
      const Mat rhs = alpha_g_diff(cm, gi, Ad(hi, A));
      rep.part2 = std::max(rep.part2, inf_norm(term1 + term2 - rhs));

      // Finite precursor of part 2.
      const Mat hp = cm.sample_H(rng);
      const Mat lhsf =
          (cm.alpha(gi, hi) * cm.alpha(gi * cm.tau(hp) * g, agh)) *
          cm.alpha(gi, hp);
      const Mat rhsf = cm.alpha(gi, hi * hp * h);
      rep.group_precursor =
          std::max(rep.group_precursor, inf_norm(lhsf - rhsf));
    }
  }
  return rep;
}

}  // namespace higauge
