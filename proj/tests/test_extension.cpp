#include "higauge/extension.hpp"

#include <doctest.h>

using namespace higauge;

TEST_CASE("builtin extensions verify exactly") {
  for (const auto& name : builtin_extension_names()) {
    const ExtensionReport rep = check_extension(builtin_extension(name));
    INFO(name);
    CHECK(rep.groupoid_axioms <= 1e-12);
    CHECK(rep.eta_conditions <= 1e-12);
    CHECK(rep.twisted_action_law <= 1e-12);
    CHECK(rep.transitivity <= 1e-12);
    CHECK(rep.round_trip <= 1e-12);
  }
}

TEST_CASE("twist is functorial in the group slot") {
  const ExtensionData ext = builtin_extension("s3");
  for (int x = 0; x < ext.num_objects; ++x)
    for (int y = 0; y < ext.num_objects; ++y)
      for (int g = 0; g < ext.group.size(); ++g)
        for (int g1 = 0; g1 < ext.group.size(); ++g1)
          for (int g2 = 0; g2 < ext.group.size(); ++g2) {
            const ExtArrow a{x, y, g};
            const ExtArrow lhs = ext.eta(a, ext.group.mul(g2, g1));
            const ExtArrow rhs = ext.eta(ext.eta(a, g1), g2);
            CHECK(lhs.g == rhs.g);
            CHECK(lhs.x == rhs.x);
            CHECK(lhs.y == rhs.y);
          }
}

TEST_CASE("transitivity solver inverts the action") {
  const ExtensionData ext = builtin_extension("cyclic_cocycle");
  for (int x = 0; x < ext.num_objects; ++x)
    for (int y = 0; y < ext.num_objects; ++y)
      for (int g = 0; g < ext.group.size(); ++g)
        for (int g2 = 0; g2 < ext.group.size(); ++g2) {
          const ExtArrow a{x, y, g};
          const ExtArrow b = ext.act(a, g2);
          CHECK(ext.transitivity_solve(a, b) == g2);
        }
}

TEST_CASE("embedding and projection are a section pair") {
  const ExtensionData ext = builtin_extension("s3");
  for (int x = 0; x < ext.num_objects; ++x)
    for (int g = 0; g < ext.group.size(); ++g) {
      const ExtArrow a = ext.embed(x, g);
      const auto [px, py] = ext.project(a);
      CHECK(px == x);
      CHECK(py == x);
    }
  // Arrows over distinct base arrows are not related by the action.
  CHECK(ext.transitivity_solve(ExtArrow{0, 1, 0}, ExtArrow{0, 2, 0}) == -1);
}
