// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "cremona/field.hpp"
#include "cremona/fixtures.hpp"
#include "cremona/orbit.hpp"
#include "cremona/projective.hpp"

using namespace cremona;

TEST_CASE("rational scalars reduce and round-trip") {
  Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "6/4");
  CHECK(a.str() == "3/2");
  Scalar b = Scalar::parse(q, "-1/3");
  CHECK((a * b).str() == "-1/2");
  CHECK((a / a).is_one());
  CHECK((a - a).is_zero());
  CHECK(Scalar::parse(q, a.str()) == a);
}

TEST_CASE("prime field arithmetic wraps") {
  Field f7 = Field::prime(7);
  Scalar a = Scalar::from_int(f7, 12);
  CHECK(a.residue() == 5);
  CHECK((a + Scalar::from_int(f7, 2)).residue() == 0);
  Scalar inv = Scalar::from_int(f7, 3).inverse();
  CHECK((inv * Scalar::from_int(f7, 3)).is_one());
  CHECK(Scalar::parse(f7, "-1").residue() == 6);
}

TEST_CASE("mixed-field arithmetic throws") {
  Scalar a = Scalar::one(Field::rationals());
  Scalar b = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS((void)(a + b), field_mismatch);
}

TEST_CASE("projective points canonicalize on the first nonzero coordinate") {
  Field q = Field::rationals();
  ProjectivePoint a(Scalar::from_int(q, 2), Scalar::from_int(q, 4),
                    Scalar::from_int(q, 6));
  ProjectivePoint b(Scalar::from_int(q, 1), Scalar::from_int(q, 2),
                    Scalar::from_int(q, 3));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  ProjectivePoint c(Scalar::zero(q), Scalar::from_int(q, -5),
                    Scalar::from_int(q, 10));
  ProjectivePoint d(Scalar::zero(q), Scalar::one(q), Scalar::from_int(q, -2));
  CHECK(c == d);
}

TEST_CASE("sigma is an involution away from the triangle") {
  Field f11 = Field::prime(11);
  ProjectivePoint x(Scalar::from_int(f11, 1), Scalar::from_int(f11, 3),
                    Scalar::from_int(f11, 7));
  CHECK(sigma_apply(sigma_apply(x)) == x);
  CHECK_THROWS_AS((void)sigma_apply(base_point_P(f11)), sigma_undefined);
}

TEST_CASE("sigma fixes exactly the four sign points") {
  Field q = Field::rationals();
  int fixed = 0;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      ProjectivePoint x(Scalar::one(q), Scalar::from_int(q, s1),
                        Scalar::from_int(q, s2));
      if (sigma_apply(x) == x) ++fixed;
    }
  CHECK(fixed == 4);
  ProjectivePoint y(Scalar::one(q), Scalar::from_int(q, 2), Scalar::one(q));
  CHECK(sigma_apply(y) != y);
}

TEST_CASE("involution predicate accepts reflections and rejects the rest") {
  Field q = Field::rationals();
  ProjectiveLinearMap id = ProjectiveLinearMap::identity(q);
  CHECK(id.is_projective_identity());
  CHECK_FALSE(id.is_projective_involution());

  // u = (1,1,1), w = (1,1,3): the q-general3 reflection
  ProjectiveLinearMap refl = parse_alpha_inline(
      q, "1,-2/3,-2;-2/3,1,-2;-2/3,-2/3,-1/3");
  CHECK(refl.is_projective_involution());
  CHECK(refl.compose(refl).is_projective_identity());

  ProjectiveLinearMap rot = parse_alpha_inline(q, "0,1,0;0,0,1;1,0,0");
  CHECK_FALSE(rot.is_projective_involution());
}
