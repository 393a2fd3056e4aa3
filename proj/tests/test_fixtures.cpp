// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "cremona/fixtures.hpp"

using namespace cremona;

TEST_CASE("builtin fixtures are involutions or the identity") {
  auto& all = builtin_fixtures();
  CHECK(all.size() >= 8);
  for (const auto& fx : all) {
    CAPTURE(fx.name);
    CHECK((fx.alpha.is_projective_involution() || fx.alpha.is_projective_identity()));
  }
}

TEST_CASE("fixture lookup by name") {
  CHECK(fixture_by_name("t236-f11").has_value());
  CHECK_FALSE(fixture_by_name("no-such-fixture").has_value());
}

TEST_CASE("json fixtures round-trip through the parser") {
  auto fx = parse_fixture_json(
      R"({"field":"fp:7","alpha":["0","1","0","1","0","0","0","0","1"]})");
  CHECK(fx.field.p == 7);
  CHECK(fx.alpha.is_projective_involution());
  CHECK_THROWS((void)parse_fixture_json(R"({"field":"fp:7","alpha":["1","2"]})"));
  CHECK_THROWS((void)parse_fixture_json(R"({"alpha":[]})"));
}

TEST_CASE("inline alpha parsing accepts field scalar syntax") {
  auto a = parse_alpha_inline(parse_field("q"), "1,-2/3,0;0,1,0;0,0,-1");
  CHECK(a.field().is_rational());
  CHECK_THROWS((void)parse_alpha_inline(parse_field("q"), "1,2;3,4"));
  CHECK_THROWS((void)parse_field("fp:6"));  // not prime
}
