#include "higauge/crossmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace higauge {

namespace {

Mat random_combination(const std::vector<Mat>& basis, int dim, Rng& rng) {
  Mat out = Mat::Zero(dim, dim);
  for (const Mat& b : basis) out += rng.normal() * b;
  return out;
}

}  // namespace

Mat CrossedModule::sample_alg_G(Rng& rng) const {
  return random_combination(basis_LG, dim_G, rng);
}

Mat CrossedModule::sample_alg_H(Rng& rng) const {
  return random_combination(basis_LH, dim_H, rng);
}

Mat CrossedModule::sample_G(Rng& rng) const {
  return expm(sample_scale * sample_alg_G(rng));
}

Mat CrossedModule::sample_H(Rng& rng) const {
  return expm(sample_scale * sample_alg_H(rng));
}

PeifferReport check_peiffer(const CrossedModule& cm, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_peiffer: trials >= 1");
  PeifferReport rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, /*suite=*/0, t);
    const Mat g = cm.sample_G(rng);
    const Mat h = cm.sample_H(rng);
    const Mat h2 = cm.sample_H(rng);
    const Mat lhs1 = cm.tau(cm.alpha(g, h));
    const Mat rhs1 = g * cm.tau(h) * inverse_checked(g);
    rep.first = std::max(rep.first, inf_norm(lhs1 - rhs1));
    const Mat lhs2 = cm.alpha(cm.tau(h), h2);
    const Mat rhs2 = h * h2 * inverse_checked(h);
    rep.second = std::max(rep.second, inf_norm(lhs2 - rhs2));
  }
  return rep;
}

Mat tau_diff(const CrossedModule& cm, const Mat& A) {
  return fd_differential(cm.tau, cm.id_H(), A, cm.fd_step);
}

Mat alpha_g_diff(const CrossedModule& cm, const Mat& g, const Mat& A) {
  return fd_differential([&](const Mat& h) { return cm.alpha(g, h); },
                         cm.id_H(), A, cm.fd_step);
}

Mat alpha_bar_h_diff(const CrossedModule& cm, const Mat& h, const Mat& B) {
  return fd_differential([&](const Mat& g) { return cm.alpha(g, h); },
                         cm.id_G(), B, cm.fd_step);
}

Mat alpha_pushforward(const CrossedModule& cm, const Mat& g, const Mat& h,
                      const Mat& K) {
  if (cm.alpha_pushforward_closed) return cm.alpha_pushforward_closed(g, h, K);
  // Curve c(t) = h exp(t h^{-1} K) passes through h with velocity K.
  const Mat hinvK = inverse_checked(h) * K;
  return fd_curve_derivative(
      [&](double t) { return cm.alpha(g, h * expm(t * hinvK)); }, cm.fd_step);
}

Mat tau_pushforward(const CrossedModule& cm, const Mat& h, const Mat& K) {
  if (cm.tau_pushforward_closed) return cm.tau_pushforward_closed(h, K);
  const Mat hinvK = inverse_checked(h) * K;
  return fd_curve_derivative(
      [&](double t) { return cm.tau(h * expm(t * hinvK)); }, cm.fd_step);
}

Mat alpha_mixed_diff(const CrossedModule& cm, const Mat& B, const Mat& A) {
  // d/ds [ alpha(exp(sB))_{*,e}(A) ] at s=0, two nested central differences.
  const double outer = cm.fd_step * 2.0;
  const Mat plus = alpha_g_diff(cm, expm(outer * B), A);
  const Mat minus = alpha_g_diff(cm, expm(-outer * B), A);
  return (plus - minus) / (2.0 * outer);
}

namespace {

std::vector<Mat> gl_basis(int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = 1.0;
      basis.push_back(e);
    }
  return basis;
}

std::vector<Mat> upper_triangular_basis(int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = 1.0;
      basis.push_back(e);
    }
  return basis;
}

std::vector<Mat> strictly_upper_basis(int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = 1.0;
      basis.push_back(e);
    }
  return basis;
}

}  // namespace

CrossedModule builtin_crossed_module(const std::string& name, int dim,
                                     double scale) {
  CrossedModule cm;
  cm.name = name;
  cm.sample_scale = scale;

  if (name == "discrete") {
    // (G, {e}): H is the trivial group, tau and alpha trivial.
    cm.dim_G = dim;
    cm.dim_H = 1;
    cm.basis_LG = gl_basis(dim);
    cm.basis_LH = {};  // L(H) = 0
    cm.tau = [dim](const Mat&) { return Mat::Identity(dim, dim); };
    cm.alpha = [](const Mat&, const Mat& h) { return h; };
    cm.tau_diff_closed = [dim](const Mat&) { return Mat::Zero(dim, dim); };
    cm.alpha_g_diff_closed = [](const Mat&, const Mat& A) { return A; };
    cm.alpha_pushforward_closed = [](const Mat&, const Mat&, const Mat& K) {
      return K;
    };
    cm.tau_pushforward_closed = [dim](const Mat&, const Mat&) {
      return Mat::Zero(dim, dim);
    };
  } else if (name == "single_object") {
    // ({e}, H): G trivial, alpha(g, h) = h. With G trivial the second
    // Peiffer identity forces H abelian, so H is the diagonal torus.
    cm.dim_G = 1;
    cm.dim_H = dim;
    cm.basis_LG = {};
    cm.basis_LH = [dim] {
      std::vector<Mat> basis;
      for (int i = 0; i < dim; ++i) {
        Mat e = Mat::Zero(dim, dim);
        e(i, i) = 1.0;
        basis.push_back(e);
      }
      return basis;
    }();
    cm.tau = [](const Mat&) { return Mat::Identity(1, 1); };
    cm.alpha = [](const Mat&, const Mat& h) { return h; };
    cm.tau_diff_closed = [](const Mat&) { return Mat::Zero(1, 1); };
    cm.alpha_g_diff_closed = [](const Mat&, const Mat& A) { return A; };
    cm.alpha_pushforward_closed = [](const Mat&, const Mat&, const Mat& K) {
      return K;
    };
    cm.tau_pushforward_closed = [](const Mat&, const Mat&) {
      return Mat::Zero(1, 1);
    };
  } else if (name == "conjugation") {
    // (G, G, id, conj): tau the identity, alpha the conjugation action.
    cm.dim_G = dim;
    cm.dim_H = dim;
    cm.basis_LG = gl_basis(dim);
    cm.basis_LH = gl_basis(dim);
    cm.tau = [](const Mat& h) { return h; };
    cm.alpha = [](const Mat& g, const Mat& h) {
      return Mat(g * h * inverse_checked(g));
    };
    cm.tau_diff_closed = [](const Mat& A) { return A; };
    cm.alpha_g_diff_closed = [](const Mat& g, const Mat& A) {
      return Ad(g, A);
    };
    cm.alpha_pushforward_closed = [](const Mat& g, const Mat&, const Mat& K) {
      return Mat(g * K * inverse_checked(g));
    };
    cm.tau_pushforward_closed = [](const Mat&, const Mat& K) { return K; };
  } else if (name == "normal_inclusion") {
    // G = invertible upper-triangular, H = unipotent upper-triangular
    // (normal in G), tau the inclusion, alpha conjugation by G.
    cm.dim_G = dim;
    cm.dim_H = dim;
    cm.basis_LG = upper_triangular_basis(dim);
    cm.basis_LH = strictly_upper_basis(dim);
    cm.tau = [](const Mat& h) { return h; };
    cm.alpha = [](const Mat& g, const Mat& h) {
      return Mat(g * h * inverse_checked(g));
    };
    cm.tau_diff_closed = [](const Mat& A) { return A; };
    cm.alpha_g_diff_closed = [](const Mat& g, const Mat& A) {
      return Ad(g, A);
    };
    cm.alpha_pushforward_closed = [](const Mat& g, const Mat&, const Mat& K) {
      return Mat(g * K * inverse_checked(g));
    };
    cm.tau_pushforward_closed = [](const Mat&, const Mat& K) { return K; };
  } else {
    throw std::invalid_argument("unknown crossed module builtin: " + name);
  }
  return cm;
}

std::vector<std::string> builtin_crossed_module_names() {
  return {"discrete", "single_object", "conjugation", "normal_inclusion"};
}

}  // namespace higauge
