#pragma once

#include "higauge/matlie.hpp"

#include <string>
#include <vector>

namespace higauge {

/// Finite matrix group given by its element list. Products and inverses are
/// resolved back to indices by nearest-element lookup.
struct FiniteGroup {
  std::vector<Mat> elems;  // elems[0] is the identity

  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const Mat& m, double tol = 1e-9) const;
  int mul(int a, int b) const;
  int inv(int a) const;
};

/// Arrow x -> y of the big groupoid Gamma2, decorated by a group index.
struct ExtArrow {
  int x = 0;
  int y = 0;
  int g = 0;
};

/// Groupoid G-extension M x G -> Gamma2 -> Gamma1 over a finite object set,
/// with Gamma1 the pair groupoid on M and Gamma2 the pair groupoid decorated
/// by G, composed through a central 2-cocycle:
///   (y,z,g2) o (x,y,g1) = (x,z, g2 g1 c(x,y,z)).
struct ExtensionData {
  int num_objects = 0;
  FiniteGroup group;
  std::function<int(int, int, int)> cocycle;  // (x,y,z) -> group index

  ExtArrow unit(int x) const { return {x, x, 0}; }
  ExtArrow compose(const ExtArrow& a2, const ExtArrow& a1) const;
  ExtArrow inverse(const ExtArrow& a) const;

  /// Embedding i(x, g) = (x, x, g) and projection phi (drops the decoration).
  ExtArrow embed(int x, int g) const { return {x, x, g}; }
  std::pair<int, int> project(const ExtArrow& a) const { return {a.x, a.y}; }

  /// Right G-action a . g = a o i(s(a), g).
  ExtArrow act(const ExtArrow& a, int g) const;

  /// Given phi(a) = phi(b), the unique g with a.g = b. Returns -1 if the
  /// arrows sit over different Gamma1 arrows.
  int transitivity_solve(const ExtArrow& a, const ExtArrow& b) const;

  /// Twist eta(gamma, g) = i(y, g) o gamma o i(x, g^{-1}).
  ExtArrow eta(const ExtArrow& a, int g) const;
};

struct ExtensionReport {
  double groupoid_axioms = 0.0;
  double eta_conditions = 0.0;
  double twisted_action_law = 0.0;  // (g2 g') o (g1 g) vs (g2 o eta(g1,g')) g'g
  double transitivity = 0.0;        // solver round trip
  double round_trip = 0.0;          // extension -> twisted bundle -> extension
  double max() const;
};

/// Exhaustive verification over all arrows (small M and G assumed).
ExtensionReport check_extension(const ExtensionData& ext);

/// name in {"s3", "cyclic_cocycle"}: the symmetric group on three letters
/// with trivial cocycle (nonabelian twist), or the cyclic rotation group C4
/// with a nontrivial coboundary cocycle.
ExtensionData builtin_extension(const std::string& name, int num_objects = 4);

std::vector<std::string> builtin_extension_names();

}  // namespace higauge
