// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "cremona/polynomial.hpp"

using namespace cremona;

namespace {

// brute-force sign-change scan, used as an independent root-count oracle
int scan_roots(const IntPoly& p, double a, double b, int steps) {
  int count = 0;
  double prev = p.eval(mpq_class(a)).get_d();
  for (int i = 1; i <= steps; ++i) {
    double x = a + (b - a) * i / steps;
    double v = p.eval(mpq_class(x)).get_d();
    if (prev == 0 || (prev < 0) != (v < 0)) ++count;
    if (v != 0) prev = v;
  }
  return count;
}

}  // namespace

TEST_CASE("arithmetic and exact division") {
  IntPoly a = IntPoly::from_ints({-1, 0, 1});  // x^2 - 1
  IntPoly b = IntPoly::from_ints({1, 1});      // x + 1
  CHECK(a.divide_exact(b) == IntPoly::from_ints({-1, 1}));
  CHECK(a.divisible_by(b));
  CHECK_FALSE(a.divisible_by(IntPoly::from_ints({2, 1})));
  CHECK_THROWS((void)a.divide_exact(IntPoly::from_ints({2, 1})));
  CHECK((b * b) == IntPoly::from_ints({1, 2, 1}));
  CHECK(a.eval(mpq_class(3)) == 8);
}

TEST_CASE("gcd and squarefree part") {
  IntPoly a = IntPoly::from_ints({1, 2, 1});   // (x+1)^2
  IntPoly b = IntPoly::from_ints({-1, 0, 1});  // (x+1)(x-1)
  CHECK(poly_gcd(a, b) == IntPoly::from_ints({1, 1}));
  CHECK(squarefree_part(a) == IntPoly::from_ints({1, 1}));
  IntPoly c = a * a * b;
  IntPoly sf = squarefree_part(c);
  CHECK(sf.degree() == 2);
  CHECK(sf.divisible_by(IntPoly::from_ints({1, 1})));
  CHECK(sf.divisible_by(IntPoly::from_ints({-1, 1})));
}

TEST_CASE("Sturm counts match a dense scan") {
  // (x-1)(x-2)(x+3) x
  IntPoly p = IntPoly::from_ints({0, 1}) * IntPoly::from_ints({-1, 1}) *
              IntPoly::from_ints({-2, 1}) * IntPoly::from_ints({3, 1});
  CHECK(count_real_roots(p) == 4);
  CHECK(count_roots(p, mpq_class(1, 2), mpq_class(5)) == 2);
  CHECK(count_roots(p, mpq_class(-4), mpq_class(0)) == 2);  // (a, b]
  CHECK(scan_roots(p, -3.5, 2.5, 10000) == 4);
  // no real roots
  CHECK(count_real_roots(IntPoly::from_ints({1, 0, 1})) == 0);
}

TEST_CASE("largest_real_root isolates the top root") {
  IntPoly p = IntPoly::from_ints({-2, 0, 1});  // x^2 - 2
  auto r = largest_real_root(p, mpq_class(0), mpq_class(2), mpq_class(1, 1000000));
  REQUIRE(r.has_value());
  CHECK(r->interval.width() <= mpq_class(1, 1000000));
  CHECK(r->interval.contains(mpq_class(1414213562, 1000000000)) );
  CHECK_FALSE(largest_real_root(IntPoly::from_ints({1, 0, 1}), mpq_class(-10),
                                mpq_class(10), mpq_class(1, 100)));
}

TEST_CASE("sqrt enclosures") {
  RatInterval s = sqrt_enclosure(mpq_class(2), mpq_class(1, 1000000000));
  CHECK(s.width() <= mpq_class(1, 1000000000));
  CHECK(std::abs(s.mid_d() - std::sqrt(2.0)) < 1e-8);
  RatInterval z = sqrt_enclosure(mpq_class(9, 4), mpq_class(1, 1000));
  CHECK(z.contains(mpq_class(3, 2)));
}

TEST_CASE("above_all_roots via Taylor shift") {
  IntPoly p = IntPoly::from_ints({-2, 0, 1});  // roots +-sqrt(2)
  CHECK(above_all_roots(p, mpq_class(3, 2)));
  CHECK_FALSE(above_all_roots(p, mpq_class(1)));
  RatInterval top = max_root_all_real(p, mpq_class(0), mpq_class(2),
                                      mpq_class(1, 1000000));
  CHECK(std::abs(top.mid_d() - std::sqrt(2.0)) < 1e-5);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly::from_ints({-1, 1}));
  CHECK(cyclotomic(2) == IntPoly::from_ints({1, 1}));
  CHECK(cyclotomic(6) == IntPoly::from_ints({1, -1, 1}));
  CHECK(cyclotomic(12) == IntPoly::from_ints({1, 0, -1, 0, 1}));
  // product over divisors of 12 reassembles x^12 - 1
  IntPoly prod = IntPoly::from_ints({1});
  for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) prod = prod * cyclotomic(d);
  IntPoly x12(std::vector<mpz_class>(13, 0));
  CHECK(prod == IntPoly::monomial(12) - IntPoly::from_ints({1}));
}

TEST_CASE("trace polynomial halves palindromic degrees") {
  // x^4 + x^3 + x^2 + x + 1 -> y^2 + y - 1 with y = x + 1/x
  IntPoly p = IntPoly::from_ints({1, 1, 1, 1, 1});
  IntPoly t = trace_polynomial(p);
  CHECK(t == IntPoly::from_ints({-1, 1, 1}));
  // Lehmer's polynomial: the trace polynomial has all 5 roots real,
  // 4 of them inside (-2, 2)
  IntPoly lehmer = IntPoly::from_ints({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  IntPoly lt = trace_polynomial(lehmer);
  CHECK(lt.degree() == 5);
  CHECK(count_real_roots(lt) == 5);
  CHECK(count_roots(lt, mpq_class(-2), mpq_class(2)) == 4);
}

TEST_CASE("palindrome and reversal") {
  IntPoly lehmer = IntPoly::from_ints({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  CHECK(lehmer.is_palindromic());
  CHECK_FALSE(IntPoly::from_ints({-1, -1, 1}).is_palindromic());
  CHECK(IntPoly::from_ints({2, 3}).reversed() == IntPoly::from_ints({3, 2}));
}
