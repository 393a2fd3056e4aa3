// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

// Frozen outputs of tools/fixture_search; regenerate with that tool and
// paste the emitted entries here.

#include "cremona/fixtures.hpp"

namespace cremona {

namespace {

ProjectiveLinearMap map9(const Field& f, const std::array<long, 9>& m) {
  std::array<std::array<Scalar, 3>, 3> a{{
      {Scalar::from_int(f, m[0]), Scalar::from_int(f, m[1]), Scalar::from_int(f, m[2])},
      {Scalar::from_int(f, m[3]), Scalar::from_int(f, m[4]), Scalar::from_int(f, m[5])},
      {Scalar::from_int(f, m[6]), Scalar::from_int(f, m[7]), Scalar::from_int(f, m[8])},
  }};
  return ProjectiveLinearMap(a);
}

}  // namespace

void append_generated_fixtures(std::vector<Fixture>& out) {
  // exact:1,1,4 over F_11 (exhaustive)
  out.push_back({"t114-f11", Field::prime(11),
                 map9(Field::prime(11), {1, 0, 3, 0, 1, 3, 0, 0, 10}),
                 "P:Exact(1) Q:Exact(1) R:Exact(4)"});
  // exact:2,3,6 over F_11 (exhaustive)
  out.push_back({"t236-f11", Field::prime(11),
                 map9(Field::prime(11), {1, 7, 8, 6, 2, 8, 6, 7, 3}),
                 "P:Exact(6) Q:Exact(3) R:Exact(2)"});
  // exact:3,9,9 over F_11 (exhaustive)
  out.push_back({"t399-f11", Field::prime(11),
                 map9(Field::prime(11), {1, 2, 9, 7, 7, 9, 6, 8, 8}),
                 "P:Exact(9) Q:Exact(3) R:Exact(9)"});
  // target:2,5,9 over F_101 (seed 20260826)
  out.push_back({"t259-f101", Field::prime(101),
                 map9(Field::prime(101), {1, 15, 35, 1, 9, 10, 100, 39, 38}),
                 "P:Exact(2) Q:Exact(9) R:Exact(5)"});
  // cycle over F_5 (exhaustive); two orbits collide, P3 = Q2
  out.push_back({"cycle-f5", Field::prime(5),
                 map9(Field::prime(5), {1, 2, 4, 2, 1, 4, 4, 4, 2}),
                 "P:Collided(3) Q:Collided(3) R:Exact(3) P3=Q2 Q3=P2"});
  // general --p 1009 --bound 40 (seed 20260826)
  out.push_back({"f1009-general40", Field::prime(1009),
                 map9(Field::prime(1009),
                      {1, 86, 149, 192, 399, 742, 367, 40, 275}),
                 "P:AtLeast(40) Q:AtLeast(40) R:AtLeast(40)"});
}

}  // namespace cremona
