// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "cremona/class_lattice.hpp"
#include "cremona/diagram.hpp"
#include "cremona/fixtures.hpp"
#include "cremona/orbit.hpp"

using namespace cremona;

namespace {

bool terminated(const OrbitResult& res) {
  for (const auto& arm : res.profile.arms)
    if (arm.kind != ArmInfo::Kind::Exact && arm.kind != ArmInfo::Kind::Collided)
      return false;
  return true;
}

std::vector<OrbitResult> terminated_fixture_orbits() {
  std::vector<OrbitResult> out;
  for (const auto& fx : builtin_fixtures()) {
    if (fx.name == "swap-xy") continue;  // degenerate base-point swap
    if (fx.field.is_rational() && fx.name != "identity") continue;
    auto res = trace_orbits(fx.alpha, 12);
    if (terminated(res)) out.push_back(std::move(res));
  }
  return out;
}

}  // namespace

TEST_CASE("lattice actions are involutive isometries") {
  for (const auto& res : terminated_fixture_orbits()) {
    ClassLattice lat = build_class_lattice(res);
    int n = lat.rank();
    CHECK((lat.sigma_action() * lat.sigma_action()).is_identity());
    CHECK((lat.alpha_action() * lat.alpha_action()).is_identity());
    // Gram preservation, checked on the standard basis
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<mpq_class> a(n, 0), b(n, 0);
        for (int k = 0; k < n; ++k) {
          a[k] = mpq_class(lat.sigma_action().at(k, i));
          b[k] = mpq_class(lat.sigma_action().at(k, j));
        }
        mpq_class expect = i == j ? mpq_class(i == 0 ? 1 : -1) : mpq_class(0);
        CHECK(lat.inner_product(a, b) == expect);
      }
  }
}

TEST_CASE("g action is sigma after alpha") {
  auto fx = fixture_by_name("t236-f11");
  auto res = trace_orbits(fx->alpha, 12);
  ClassLattice lat = build_class_lattice(res);
  CHECK(lat.g_action() == lat.sigma_action() * lat.alpha_action());
}

TEST_CASE("v0 is isotropic of the expected form") {
  auto fx = fixture_by_name("t114-f11");
  auto res = trace_orbits(fx->alpha, 12);
  ClassLattice lat = build_class_lattice(res);
  auto v0 = lat.v0();
  CHECK(lat.inner_product(v0, v0) == -2);
  CHECK(v0[0] == 1);
}

TEST_CASE("direct graphs are bipartite with small valencies") {
  for (const auto& res : terminated_fixture_orbits()) {
    ClassLattice lat = build_class_lattice(res);
    SignedGraph g = build_graph_direct(lat);
    REQUIRE(g.v0_index >= 0);
    CHECK(g.valency(g.v0_index) <= 3);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      if (v != g.v0_index) CHECK(g.valency(v) <= 2);
    for (const auto& e : g.edges) {
      CHECK(g.vertices[e.a].sigma_side != g.vertices[e.b].sigma_side);
      CHECK((e.weight == 1 || e.weight == -1));
    }
  }
}

TEST_CASE("every cycle in a direct graph is even") {
  for (const auto& res : terminated_fixture_orbits()) {
    ClassLattice lat = build_class_lattice(res);
    SignedGraph g = build_graph_direct(lat);
    for (int len : g.cycle_lengths()) CHECK(len % 2 == 0);
  }
}

TEST_CASE("cycle fixture produces the recorded six-cycle") {
  auto fx = fixture_by_name("cycle-f5");
  auto res = trace_orbits(fx->alpha, 12);
  ClassLattice lat = build_class_lattice(res);
  SignedGraph g = build_graph_direct(lat);
  auto lens = g.cycle_lengths();
  REQUIRE(lens.size() == 1);
  CHECK(lens[0] == 6);
}

TEST_CASE("build_class_lattice rejects unterminated traces") {
  auto fx = fixture_by_name("f1009-general40");
  auto res = trace_orbits(fx->alpha, 10);
  CHECK_THROWS((void)build_class_lattice(res));
}
