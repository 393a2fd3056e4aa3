// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <gmpxx.h>

#include "cremona/polynomial.hpp"

namespace cremona {

// Dense square matrix over Z.
class IntMat {
 public:
  IntMat() = default;
  explicit IntMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  int dim() const { return n_; }
  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const mpz_class& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  static IntMat identity(int n);
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat transpose() const;
  bool is_identity() const;
  bool operator==(const IntMat& o) const = default;

  IntMat pow(unsigned long k) const;

 private:
  int n_ = 0;
  std::vector<mpz_class> a_;
};

// Dense square matrix over Q.
class RatMat {
 public:
  RatMat() = default;
  explicit RatMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  explicit RatMat(const IntMat& m);

  int dim() const { return n_; }
  mpq_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const mpq_class& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  RatMat operator*(const RatMat& o) const;
  RatMat transpose() const;
  bool operator==(const RatMat& o) const = default;

  // clear denominators: returns (integer matrix, common denominator)
  std::pair<IntMat, mpz_class> scaled_integer() const;

  // basis of the kernel, by Gaussian elimination
  std::vector<std::vector<mpq_class>> kernel() const;

  // exact inverse; throws std::domain_error when singular
  RatMat inverse() const;

  mpq_class det() const;

 private:
  int n_ = 0;
  std::vector<mpq_class> a_;
};

// det(xI - m) by the Faddeev-LeVerrier recurrence; every intermediate
// value is an exact integer.
IntPoly char_poly(const IntMat& m);

}  // namespace cremona
