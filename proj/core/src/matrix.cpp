// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/matrix.hpp"

#include <stdexcept>

namespace cremona {

IntMat IntMat::identity(int n) {
  IntMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  IntMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const mpz_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  IntMat r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMat::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMat IntMat::pow(unsigned long k) const {
  IntMat r = identity(n_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

RatMat::RatMat(const IntMat& m) : n_(m.dim()), a_(static_cast<std::size_t>(n_) * n_) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) at(i, j) = m.at(i, j);
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  RatMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const mpq_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::pair<IntMat, mpz_class> RatMat::scaled_integer() const {
  mpz_class den = 1;
  for (const auto& v : a_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  IntMat m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = mpq_class(at(i, j) * den).get_num();
  return {m, den};
}

std::vector<std::vector<mpq_class>> RatMat::kernel() const {
  // row-reduce a copy, then read off free columns
  std::vector<std::vector<mpq_class>> rows(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n_ && r < n_; ++c) {
    int p = -1;
    for (int i = r; i < n_; ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    mpq_class inv = 1 / rows[r][c];
    for (int j = 0; j < n_; ++j) rows[r][j] *= inv;
    for (int i = 0; i < n_; ++i)
      if (i != r && rows[i][c] != 0) {
        mpq_class f = rows[i][c];
        for (int j = 0; j < n_; ++j) rows[i][j] -= f * rows[r][j];
      }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<mpq_class>> basis;
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < n_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<mpq_class> v(n_, 0);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat RatMat::inverse() const {
  // Gauss-Jordan on [this | I]
  std::vector<std::vector<mpq_class>> rows(n_, std::vector<mpq_class>(2 * n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
    rows[i][n_ + i] = 1;
  }
  for (int c = 0; c < n_; ++c) {
    int p = -1;
    for (int i = c; i < n_; ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::domain_error("singular matrix");
    std::swap(rows[p], rows[c]);
    mpq_class inv = 1 / rows[c][c];
    for (int j = 0; j < 2 * n_; ++j) rows[c][j] *= inv;
    for (int i = 0; i < n_; ++i)
      if (i != c && rows[i][c] != 0) {
        mpq_class f = rows[i][c];
        for (int j = 0; j < 2 * n_; ++j) rows[i][j] -= f * rows[c][j];
      }
  }
  RatMat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = rows[i][n_ + j];
  return out;
}

mpq_class RatMat::det() const {
  std::vector<std::vector<mpq_class>> rows(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
  mpq_class d = 1;
  for (int c = 0; c < n_; ++c) {
    int p = -1;
    for (int i = c; i < n_; ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(rows[p], rows[c]);
      d = -d;
    }
    d *= rows[c][c];
    mpq_class inv = 1 / rows[c][c];
    for (int i = c + 1; i < n_; ++i)
      if (rows[i][c] != 0) {
        mpq_class f = rows[i][c] * inv;
        for (int j = c; j < n_; ++j) rows[i][j] -= f * rows[c][j];
      }
  }
  return d;
}

IntPoly char_poly(const IntMat& m) {
  int n = m.dim();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMat mk = m;  // M_1 = M
  for (int k = 1; k <= n; ++k) {
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    // c_{n-k} = -tr(M_k)/k, an exact integer division
    mpz_class ck = -tr / k;
    if (ck * k != -tr) throw std::logic_error("Faddeev-LeVerrier division not exact");
    c[n - k] = ck;
    if (k < n) {
      for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
      mk = m * mk;
    }
  }
  return IntPoly(std::move(c));
}

}  // namespace cremona
