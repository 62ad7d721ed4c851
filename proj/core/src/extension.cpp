#include "higauge/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace higauge {

int FiniteGroup::index_of(const Mat& m, double tol) const {
  for (int i = 0; i < size(); ++i) {
    if (inf_norm(Mat(elems[i] - m)) <= tol) return i;
  }
  throw invalid_group_error("finite group: element not in the list");
}

int FiniteGroup::mul(int a, int b) const {
  return index_of(Mat(elems[a] * elems[b]));
}

int FiniteGroup::inv(int a) const {
  return index_of(inverse_checked(elems[a]));
}

ExtArrow ExtensionData::compose(const ExtArrow& a2, const ExtArrow& a1) const {
  if (a2.x != a1.y) {
    throw invalid_group_error("extension compose: arrows not composable");
  }
  const int c = cocycle(a1.x, a1.y, a2.y);
  return {a1.x, a2.y, group.mul(group.mul(a2.g, a1.g), c)};
}

ExtArrow ExtensionData::inverse(const ExtArrow& a) const {
  const int c = cocycle(a.x, a.y, a.x);
  return {a.y, a.x, group.inv(group.mul(a.g, c))};
}

ExtArrow ExtensionData::act(const ExtArrow& a, int g) const {
  return compose(a, embed(a.x, g));
}

int ExtensionData::transitivity_solve(const ExtArrow& a,
                                      const ExtArrow& b) const {
  if (a.x != b.x || a.y != b.y) return -1;
  const int c = cocycle(a.x, a.x, a.y);
  return group.mul(group.mul(group.inv(a.g), b.g), group.inv(c));
}

ExtArrow ExtensionData::eta(const ExtArrow& a, int g) const {
  return compose(embed(a.y, g), compose(a, embed(a.x, group.inv(g))));
}

namespace {

double arrow_diff(const ExtensionData& ext, const ExtArrow& a,
                  const ExtArrow& b) {
  if (a.x != b.x || a.y != b.y) return 1.0;
  return inf_norm(Mat(ext.group.elems[a.g] - ext.group.elems[b.g]));
}

}  // namespace

double ExtensionReport::max() const {
  double m = groupoid_axioms;
  m = std::max(m, eta_conditions);
  m = std::max(m, twisted_action_law);
  m = std::max(m, transitivity);
  m = std::max(m, round_trip);
  return m;
}

ExtensionReport check_extension(const ExtensionData& ext) {
  ExtensionReport rep;
  const int n = ext.num_objects;
  const int ng = ext.group.size();

  std::vector<ExtArrow> arrows;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int g = 0; g < ng; ++g) arrows.push_back({x, y, g});

  for (const ExtArrow& a : arrows) {
    // Unit and inverse laws.
    rep.groupoid_axioms = std::max(
        rep.groupoid_axioms,
        arrow_diff(ext, ext.compose(ext.unit(a.y), a), a));
    rep.groupoid_axioms = std::max(
        rep.groupoid_axioms,
        arrow_diff(ext, ext.compose(a, ext.unit(a.x)), a));
    rep.groupoid_axioms = std::max(
        rep.groupoid_axioms,
        arrow_diff(ext, ext.compose(ext.inverse(a), a), ext.unit(a.x)));
    rep.groupoid_axioms = std::max(
        rep.groupoid_axioms,
        arrow_diff(ext, ext.compose(a, ext.inverse(a)), ext.unit(a.y)));

    // eta conditions: hom preservation, units, identity of the 2-group.
    for (int g = 0; g < ng; ++g) {
      const ExtArrow e1 = ext.eta(a, g);
      if (e1.x != a.x || e1.y != a.y) rep.eta_conditions = 1.0;
    }
    rep.eta_conditions =
        std::max(rep.eta_conditions, arrow_diff(ext, ext.eta(a, 0), a));
  }
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < ng; ++g) {
      rep.eta_conditions = std::max(
          rep.eta_conditions,
          arrow_diff(ext, ext.eta(ext.unit(x), g), ext.unit(x)));
    }

  // Associativity, eta functoriality, and the twisted action law need
  // composable pairs/triples.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int g1 = 0; g1 < ng; ++g1)
          for (int g2 = 0; g2 < ng; ++g2) {
            const ExtArrow a1{x, y, g1};
            const ExtArrow a2{y, z, g2};
            rep.eta_conditions = std::max(
                rep.eta_conditions,
                arrow_diff(ext, ext.eta(ext.compose(a2, a1), g1),
                           ext.compose(ext.eta(a2, g1), ext.eta(a1, g1))));
            // Twisted action law: (a2 g2) o (a1 g1) = (a2 o eta(a1, g2)) g2 g1.
            const ExtArrow lhs = ext.compose(ext.act(a2, g2), ext.act(a1, g1));
            const ExtArrow rhs = ext.act(ext.compose(a2, ext.eta(a1, g2)),
                                         ext.group.mul(g2, g1));
            rep.twisted_action_law =
                std::max(rep.twisted_action_law, arrow_diff(ext, lhs, rhs));
            // eta composes as a right action in the 2-group slot.
            rep.eta_conditions = std::max(
                rep.eta_conditions,
                arrow_diff(ext, ext.eta(a1, ext.group.mul(g2, g1)),
                           ext.eta(ext.eta(a1, g1), g2)));
          }

  // Associativity over composable triples (w -> x -> y -> z).
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int g1 = 0; g1 < ng; ++g1)
            for (int g2 = 0; g2 < ng; ++g2)
              for (int g3 = 0; g3 < ng; ++g3) {
                const ExtArrow a1{w, x, g1}, a2{x, y, g2}, a3{y, z, g3};
                const ExtArrow l = ext.compose(ext.compose(a3, a2), a1);
                const ExtArrow r = ext.compose(a3, ext.compose(a2, a1));
                rep.groupoid_axioms =
                    std::max(rep.groupoid_axioms, arrow_diff(ext, l, r));
              }

  // Transitivity on fibers and freeness of the action.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int g1 = 0; g1 < ng; ++g1)
        for (int g2 = 0; g2 < ng; ++g2) {
          const ExtArrow a{x, y, g1};
          const ExtArrow b{x, y, g2};
          const int g = ext.transitivity_solve(a, b);
          rep.transitivity =
              std::max(rep.transitivity, arrow_diff(ext, ext.act(a, g), b));
          if (g1 == g2 && g != 0) rep.transitivity = 1.0;  // freeness
        }

  // Round trip: the twisted bundle data reconstructs the embedding and the
  // projection. i'(x, g) = 1_x . g must be the original i; phi of i' must be
  // the unit of Gamma1.
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < ng; ++g) {
      const ExtArrow rebuilt = ext.act(ext.unit(x), g);
      rep.round_trip =
          std::max(rep.round_trip, arrow_diff(ext, rebuilt, ext.embed(x, g)));
      const auto base = ext.project(rebuilt);
      if (base.first != x || base.second != x) rep.round_trip = 1.0;
    }
  return rep;
}

namespace {

FiniteGroup s3_group() {
  FiniteGroup g;
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    Mat m = Mat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) m(p[i], i) = 1.0;
    g.elems.push_back(m);
  }
  return g;
}

FiniteGroup c4_group() {
  FiniteGroup g;
  Mat r(2, 2);
  r << 0, -1, 1, 0;
  Mat m = Mat::Identity(2, 2);
  for (int i = 0; i < 4; ++i) {
    g.elems.push_back(m);
    m = Mat(r * m);
  }
  return g;
}

}  // namespace

ExtensionData builtin_extension(const std::string& name, int num_objects) {
  ExtensionData ext;
  ext.num_objects = num_objects;
  if (name == "s3") {
    ext.group = s3_group();
    ext.cocycle = [](int, int, int) { return 0; };
  } else if (name == "cyclic_cocycle") {
    ext.group = c4_group();
    // Coboundary of f(x,y) = r^{(x-y)^2}: exponent 2 (x-y)(y-z) mod 4.
    ext.cocycle = [](int x, int y, int z) {
      const int e = 2 * (x - y) * (y - z);
      return ((e % 4) + 4) % 4;
    };
  } else {
    throw std::invalid_argument("unknown extension builtin: " + name);
  }
  return ext;
}

std::vector<std::string> builtin_extension_names() {
  return {"s3", "cyclic_cocycle"};
}

}  // namespace higauge
