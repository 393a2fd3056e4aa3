// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "cremona/parabolic.hpp"

using namespace cremona;

namespace {

RatMat diag(int k, const mpq_class& v) {
  RatMat m(k);
  for (int i = 0; i < k; ++i) m.at(i, i) = v;
  return m;
}

// a random spec with qprime = -2I, ftilde a signed permutation (exactly
// Q'-orthogonal), integer zeta, and x solved onto the hyperboloid
ParabolicSpec random_spec(int k, std::mt19937& rng) {
  ParabolicSpec s;
  s.qprime = diag(k, -2);
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  s.ftilde = RatMat(k);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int i = 0; i < k; ++i) s.ftilde.at(perm[i], i) = sign(rng) ? 1 : -1;
  s.zeta.resize(k);
  for (auto& v : s.zeta) v = small(rng);
  // x = [a, y, z] with (x.x) = 2az + y^T Q' y = 1
  std::vector<mpq_class> y(k);
  for (auto& v : y) v = mpq_class(small(rng), 2);
  std::uniform_int_distribution<int> zpick(1, 5);
  mpq_class z(zpick(rng));
  mpq_class yqy = 0;
  for (int i = 0; i < k; ++i) yqy += s.qprime.at(i, i) * y[i] * y[i];
  mpq_class a = (1 - yqy) / (2 * z);
  s.x.push_back(a);
  s.x.insert(s.x.end(), y.begin(), y.end());
  s.x.push_back(z);
  return s;
}

}  // namespace

TEST_CASE("the identity translation fixes a horocycle direction") {
  ParabolicSpec s;
  s.qprime = diag(1, -2);
  s.ftilde = diag(1, 1);
  s.zeta = {0};
  s.x = {mpq_class(1, 2), 0, 1};
  auto r = parabolic_form_check(s);
  CHECK(r.isometry_ok);
  CHECK(r.on_hyperboloid);
  CHECK(r.identity_ok);
  CHECK(r.product_direct == 1);  // x is fixed
  REQUIRE(r.min_displacement_sq.has_value());
  CHECK(*r.min_displacement_sq == 0);
  CHECK_FALSE(r.displacement_ge_one);
}

TEST_CASE("a unit translation satisfies the horoball bound") {
  ParabolicSpec s;
  s.qprime = diag(1, -2);
  s.ftilde = diag(1, 1);
  s.zeta = {1};
  s.x = {mpq_class(3, 2), 1, 1};
  auto r = parabolic_form_check(s);
  CHECK(r.isometry_ok);
  CHECK(r.on_hyperboloid);
  CHECK(r.identity_ok);
  CHECK(r.product_direct == 2);
  REQUIRE(r.min_displacement_sq.has_value());
  CHECK(*r.min_displacement_sq == 2);
  CHECK(r.displacement_ge_one);
  CHECK(r.bound_ok);  // 2 >= 1 + 1/2
}

TEST_CASE("non-orthogonal ftilde is rejected") {
  ParabolicSpec s;
  s.qprime = diag(1, -2);
  s.ftilde = diag(1, 2);
  s.zeta = {0};
  s.x = {mpq_class(1, 2), 0, 1};
  auto r = parabolic_form_check(s);
  CHECK_FALSE(r.isometry_ok);
}

TEST_CASE("closed form of the displacement holds on random specs") {
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + trial % 2;  // ambient rank 3 or 4
    auto s = random_spec(k, rng);
    auto r = parabolic_form_check(s);
    REQUIRE(r.isometry_ok);
    REQUIRE(r.on_hyperboloid);
    // (f(x).x) = 1 - |z zeta - y + ftilde y|^2 / 2 must hold exactly
    CHECK(r.identity_ok);
    CHECK(r.product_direct == r.product_identity);
    // and the horoball bound whenever displacement >= 1 is certified
    if (r.displacement_ge_one)
      CHECK(r.product_direct >= 1 + r.z * r.z / 2);
  }
}

TEST_CASE("min_displacement_squared finds nonzero minima") {
  // rotation by the order-4 signed permutation with shift (1,0): the
  // displacement |(ftilde-1)q + zeta|^2 in the norm -Q' = 2I has a
  // positive lattice minimum
  RatMat f(2);
  f.at(0, 1) = -1;
  f.at(1, 0) = 1;
  auto m = min_displacement_squared(diag(2, -2), f, {1, 0});
  REQUIRE(m.has_value());
  CHECK(*m > 0);
  // translations by zeta alone have displacement |zeta|^2
  auto t = min_displacement_squared(diag(2, -2), diag(2, 1), {2, 1});
  REQUIRE(t.has_value());
  CHECK(*t == 10);  // 2*(4+1)
}
