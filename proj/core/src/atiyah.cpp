#include "higauge/atiyah.hpp"

#include <Eigen/SVD>

#include <algorithm>

namespace higauge {

namespace {

// Normalizing 2-group arrow: a . (h, g^{-1}) = (gamma, (x, e), e).
TwoGroupArrow normalizer(const DecArrow& a) {
  return TwoGroupArrow{a.h, inverse_checked(a.p.g)};
}

// Coefficients in a pairwise-orthogonal matrix basis.
Vec basis_coords(const std::vector<Mat>& basis, const Mat& M) {
  Vec out = Vec::Zero(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    out(static_cast<Eigen::Index>(i)) =
        (basis[i].array() * M.array()).sum() / basis[i].squaredNorm();
  return out;
}

Mat from_coords(const std::vector<Mat>& basis, const Vec& c, int dim) {
  Mat out = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out += c(static_cast<Eigen::Index>(i)) * basis[i];
  return out;
}

int base_tangent_dim(const BaseGroupoid& base) {
  switch (base.kind) {
    case BaseKind::discrete:
      return base.d;
    case BaseKind::pair:
      return 2 * base.d;
    case BaseKind::action:
      return base.d + static_cast<int>(base.basis_LK.size());
  }
  return 0;
}

Vec base_tangent_coords(const BaseGroupoid& base, const BaseTangentArrow& X) {
  const int d = base.d;
  Vec out = Vec::Zero(base_tangent_dim(base));
  out.head(d) = X.vx;
  if (base.kind == BaseKind::pair) out.tail(d) = X.vy;
  if (base.kind == BaseKind::action)
    out.tail(static_cast<Eigen::Index>(base.basis_LK.size())) = basis_coords(
        base.basis_LK, Mat(X.vk * inverse_checked(X.arrow.k)));
  return out;
}

void require_match(double residual, const char* what) {
  if (residual > kComposabilityTol) throw composability_error(what, residual);
}

}  // namespace

AdClass ad_class(const GroupoidBundle& bd, const TotalPoint& p, const Mat& B) {
  AdClass c;
  c.x = BasePoint{p.x};
  c.B = Ad(p.g, B);
  return c;
}

AdClass ad_class(const GroupoidBundle& bd, const DecArrow& a,
                 const Lie2AlgebraArrow& K) {
  AdClass c;
  c.arrow_level = true;
  c.gamma = a.gamma;
  c.K = adjoint_algebra(bd.cm, group_inverse(bd.cm, normalizer(a)), K);
  return c;
}

AtClass at_class(const GroupoidBundle& bd, const TotalTangent& v) {
  AtClass c;
  c.x = BasePoint{v.p.x};
  c.vx = v.vx;
  c.vg = v.vg * inverse_checked(v.p.g);
  return c;
}

AtClass at_class(const GroupoidBundle& bd, const DecTangent& T) {
  AtClass c;
  c.arrow_level = true;
  c.gamma = T.at.gamma;
  c.T = dec_act_tangent(bd, T, normalizer(T.at));
  return c;
}

AdClass ad_source(const GroupoidBundle& bd, const AdClass& c) {
  if (!c.arrow_level) return c;
  AdClass out;
  out.x = bd.base.source(c.gamma);
  out.B = c.K.B;
  return out;
}

AdClass ad_target(const GroupoidBundle& bd, const AdClass& c) {
  if (!c.arrow_level) return c;
  AdClass out;
  out.x = bd.base.target(c.gamma);
  out.B = l2a_target(bd.cm, c.K);
  return out;
}

AtClass at_source(const GroupoidBundle& bd, const AtClass& c) {
  if (!c.arrow_level) return c;
  return at_class(bd, dec_tangent_source(bd, c.T));
}

AtClass at_target(const GroupoidBundle& bd, const AtClass& c) {
  if (!c.arrow_level) return c;
  return at_class(bd, dec_tangent_target(bd, c.T));
}

AdClass ad_compose(const GroupoidBundle& bd, const AdClass& c2,
                   const AdClass& c1) {
  const AdClass tgt = ad_target(bd, c1);
  const AdClass src = ad_source(bd, c2);
  require_match(inf_norm(Vec(src.x.x - tgt.x.x)), "ad class base mismatch");
  require_match(inf_norm(Mat(src.B - tgt.B)), "ad class algebra mismatch");
  AdClass out;
  out.arrow_level = true;
  out.gamma = bd.base.compose(c2.gamma, c1.gamma);
  out.K = l2a_compose(bd.cm, c2.K, c1.K);
  return out;
}

AtClass at_compose(const GroupoidBundle& bd, const AtClass& c2,
                   const AtClass& c1) {
  const AtClass tgt = at_target(bd, c1);
  const AtClass src = at_source(bd, c2);
  require_match(inf_norm(Vec(src.x.x - tgt.x.x)), "at class base mismatch");
  require_match(inf_norm(Vec(src.vx - tgt.vx)), "at class chart mismatch");
  require_match(inf_norm(Mat(src.vg - tgt.vg)), "at class velocity mismatch");
  DecTangent T2 = c2.T;
  T2.v = dec_tangent_target(bd, c1.T);
  return at_class(bd, dec_tangent_compose(bd, T2, c1.T));
}

AtClass j_map(const GroupoidBundle& bd, const AdClass& c) {
  if (!c.arrow_level) {
    const TotalPoint p{c.x.x, bd.cm.id_G()};
    return at_class(bd, bd.vertical(p, c.B));
  }
  DecArrow a;
  a.gamma = c.gamma;
  a.p = TotalPoint{bd.base.source(c.gamma).x, bd.cm.id_G()};
  a.h = bd.cm.id_H();
  return at_class(bd, vertical_generator_dec(bd, a, c.K));
}

BaseTangentArrow pi_star(const GroupoidBundle& bd, const AtClass& c) {
  if (c.arrow_level) return c.T.X;
  BaseTangentArrow X;
  X.arrow = bd.base.unit(c.x);
  X.vx = c.vx;
  if (bd.base.kind == BaseKind::pair) X.vy = c.vx;
  if (bd.base.kind == BaseKind::action)
    X.vk = Mat::Zero(bd.base.d, bd.base.d);
  return X;
}

FiberExactness analyze_fiber(const Mat& J, const Mat& P, double rank_tol) {
  FiberExactness out;
  const auto rank_of = [rank_tol](const Eigen::JacobiSVD<Mat>& svd) {
    if (svd.singularValues().size() == 0) return 0;
    const double top = svd.singularValues()(0);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > rank_tol * top) ++r;
    return r;
  };

  Eigen::JacobiSVD<Mat> svdP(P, Eigen::ComputeFullV);
  out.rank_pi = rank_of(svdP);
  out.kernel_dim = static_cast<int>(P.cols()) - out.rank_pi;
  if (out.rank_pi > 0) out.pi_margin = svdP.singularValues()(out.rank_pi - 1);

  if (J.cols() == 0) {
    // Zero-dimensional fiber: j is vacuously injective and exactness means
    // pi_* has trivial kernel.
    out.j_margin = 1.0;
    out.exact = out.kernel_dim == 0;
    return out;
  }

  Eigen::JacobiSVD<Mat> svdJ(J);
  out.rank_j = rank_of(svdJ);
  if (svdJ.singularValues()(0) > 0.0)
    out.j_margin =
        svdJ.singularValues()(J.cols() - 1) / svdJ.singularValues()(0);

  // im(j) == ker(pi_*): stack an orthonormal kernel basis with J and demand
  // the joint rank equals the kernel dimension.
  const Mat ker = svdP.matrixV().rightCols(out.kernel_dim);
  Mat stacked(J.rows(), J.cols() + ker.cols());
  stacked << J, ker;
  Eigen::JacobiSVD<Mat> svdS(stacked);
  out.exact = out.rank_j == static_cast<int>(J.cols()) &&
              out.rank_j == out.kernel_dim && rank_of(svdS) == out.kernel_dim;
  return out;
}

Mat object_j_matrix(const GroupoidBundle& bd, const BasePoint& x) {
  const CrossedModule& cm = bd.cm;
  const int d = bd.base.d;
  const int nG = static_cast<int>(cm.basis_LG.size());
  const TotalPoint p{x.x, cm.id_G()};
  Mat J = Mat::Zero(d + nG, nG);
  for (int j = 0; j < nG; ++j) {
    const TotalTangent v = bd.vertical(p, cm.basis_LG[j]);
    J.block(0, j, d, 1) = v.vx;
    J.block(d, j, nG, 1) = basis_coords(cm.basis_LG, v.vg);
  }
  return J;
}

Mat object_pi_matrix(const GroupoidBundle& bd) {
  const int d = bd.base.d;
  const int nG = static_cast<int>(bd.cm.basis_LG.size());
  Mat P = Mat::Zero(d, d + nG);
  P.leftCols(d).setIdentity();
  return P;
}

Mat arrow_j_matrix(const GroupoidBundle& bd, const BaseArrow& gamma) {
  const CrossedModule& cm = bd.cm;
  const int db = base_tangent_dim(bd.base);
  const int nG = static_cast<int>(cm.basis_LG.size());
  const int nH = static_cast<int>(cm.basis_LH.size());
  DecArrow a;
  a.gamma = gamma;
  a.p = TotalPoint{bd.base.source(gamma).x, cm.id_G()};
  a.h = cm.id_H();

  Mat J = Mat::Zero(db + nG + nH, nH + nG);
  const auto fill = [&](int col, const Lie2AlgebraArrow& K) {
    const DecTangent T = vertical_generator_dec(bd, a, K);
    J.block(0, col, db, 1) = base_tangent_coords(bd.base, T.X);
    J.block(db, col, nG, 1) = basis_coords(cm.basis_LG, T.v.vg);
    J.block(db + nG, col, nH, 1) = basis_coords(cm.basis_LH, T.K);
  };
  for (int i = 0; i < nH; ++i)
    fill(i, Lie2AlgebraArrow{cm.basis_LH[i], Mat::Zero(cm.dim_G, cm.dim_G)});
  for (int j = 0; j < nG; ++j)
    fill(nH + j,
         Lie2AlgebraArrow{Mat::Zero(cm.dim_H, cm.dim_H), cm.basis_LG[j]});
  return J;
}

Mat arrow_pi_matrix(const GroupoidBundle& bd) {
  const int db = base_tangent_dim(bd.base);
  const int nG = static_cast<int>(bd.cm.basis_LG.size());
  const int nH = static_cast<int>(bd.cm.basis_LH.size());
  Mat P = Mat::Zero(db, db + nG + nH);
  P.leftCols(db).setIdentity();
  return P;
}

ExactnessReport check_exactness(const GroupoidBundle& bd, int samples,
                                std::uint64_t seed, double rank_tol) {
  ExactnessReport rep;
  rep.exact = true;
  rep.min_j_margin = 1.0;
  rep.min_pi_margin = 1.0;
  for (int t = 0; t < samples; ++t) {
    Rng rng = Rng::for_trial(seed, 15, t);
    const BasePoint x = bd.base.sample_point(rng);
    const FiberExactness fo =
        analyze_fiber(object_j_matrix(bd, x), object_pi_matrix(bd), rank_tol);
    const BaseArrow gamma = bd.base.sample_arrow_from(x, rng);
    const FiberExactness fa =
        analyze_fiber(arrow_j_matrix(bd, gamma), arrow_pi_matrix(bd), rank_tol);
    rep.exact = rep.exact && fo.exact && fa.exact;
    rep.min_j_margin = std::min({rep.min_j_margin, fo.j_margin, fa.j_margin});
    rep.min_pi_margin =
        std::min({rep.min_pi_margin, fo.pi_margin, fa.pi_margin});
    rep.fibers += 2;
  }
  return rep;
}

AdClass retract(const GroupoidBundle& bd, const ConnectionForm& w,
                const AtClass& c) {
  if (!c.arrow_level) {
    AdClass out;
    out.x = c.x;
    out.B = omega0(bd, w, TotalTangent{TotalPoint{c.x.x, bd.cm.id_G()},
                                       c.vx, c.vg});
    return out;
  }
  AdClass out;
  out.arrow_level = true;
  out.gamma = c.gamma;
  out.K = omega1(bd, w, c.T);
  return out;
}

ConnectionForm form_from_retraction(
    const GroupoidBundle& bd, std::function<AdClass(const AtClass&)> R) {
  ConnectionForm w;
  w.omega0_override = [bd, R](const TotalTangent& v) {
    const AdClass c = R(at_class(bd, v));
    return Ad(inverse_checked(v.p.g), c.B);
  };
  w.omega1_override = [bd, R](const DecTangent& T) {
    const AdClass c = R(at_class(bd, T));
    return adjoint_algebra(bd.cm, normalizer(T.at), c.K);
  };
  return w;
}

}  // namespace higauge
