#pragma once

#include "higauge/matlie.hpp"
#include "higauge/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace higauge {

/// A Lie crossed module (G, H, tau, alpha) with everything the numerics
/// need: callable structure maps, algebra bases for the (sub)algebras the
/// built-in groups live in, and seeded samplers. tau and alpha are opaque
/// callables; closed-form differentials are optional cross-checks, finite
/// differences are the default route.
struct CrossedModule {
  std::string name;
  int dim_G = 0;  // ambient matrix size of G
  int dim_H = 0;  // ambient matrix size of H

  std::function<Mat(const Mat&)> tau;              // H -> G
  std::function<Mat(const Mat&, const Mat&)> alpha;  // G x H -> H

  std::vector<Mat> basis_LG;  // basis of L(G) inside the ambient space
  std::vector<Mat> basis_LH;  // basis of L(H)

  // Optional closed forms, used as oracles against the fd route.
  std::function<Mat(const Mat&)> tau_diff_closed;                 // L(H)->L(G)
  std::function<Mat(const Mat&, const Mat&)> alpha_g_diff_closed; // (g,A)->L(H)
  // Pushforward of alpha(g)(.) at an arbitrary point h along tangent K.
  std::function<Mat(const Mat&, const Mat&, const Mat&)> alpha_pushforward_closed;
  // Pushforward of tau at an arbitrary point h along tangent K.
  std::function<Mat(const Mat&, const Mat&)> tau_pushforward_closed;

  double sample_scale = 0.5;
  double fd_step = 1e-5;

  Mat id_G() const { return Mat::Identity(dim_G, dim_G); }
  Mat id_H() const { return Mat::Identity(dim_H, dim_H); }

  Mat sample_alg_G(Rng& rng) const;
  Mat sample_alg_H(Rng& rng) const;
  Mat sample_G(Rng& rng) const;  // exp(scale * random algebra element)
  Mat sample_H(Rng& rng) const;
};

/// Both Peiffer residuals, maxed over seeded samples.
struct PeifferReport {
  double first = 0.0;   // tau(alpha(g,h)) vs g tau(h) g^{-1}
  double second = 0.0;  // alpha(tau(h), h') vs h h' h^{-1}
  double max() const { return first > second ? first : second; }
};

PeifferReport check_peiffer(const CrossedModule& cm, int trials, std::uint64_t seed);

/// Pushforward of tau at e_H along A (fd route).
Mat tau_diff(const CrossedModule& cm, const Mat& A);

/// Pushforward of alpha(g)(.) at e_H along A in L(H).
Mat alpha_g_diff(const CrossedModule& cm, const Mat& g, const Mat& A);

/// Pushforward of g -> alpha(g, h) at e_G along B in L(G); a tangent at h.
Mat alpha_bar_h_diff(const CrossedModule& cm, const Mat& h, const Mat& B);

/// Pushforward of alpha(g)(.) at the point h along the tangent K in T_hH.
/// Uses the closed form when the module ships one.
Mat alpha_pushforward(const CrossedModule& cm, const Mat& g, const Mat& h,
                      const Mat& K);

/// Pushforward of tau at the point h along the tangent K in T_hH.
Mat tau_pushforward(const CrossedModule& cm, const Mat& h, const Mat& K);

/// Mixed second differential alpha_{*,(e,e)}: L(G) x L(H) -> L(H), realized
/// with nested central differences (independent steps).
Mat alpha_mixed_diff(const CrossedModule& cm, const Mat& B, const Mat& A);

/// Built-in registry: discrete(G), single_object(H), conjugation(G),
/// normal_inclusion(G upper-triangular, H unipotent). dim is the matrix
/// dimension of the nontrivial group(s). Throws std::invalid_argument for
/// unknown names.
CrossedModule builtin_crossed_module(const std::string& name, int dim = 2,
                                     double scale = 0.5);

std::vector<std::string> builtin_crossed_module_names();

}  // namespace higauge
