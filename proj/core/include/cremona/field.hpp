// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cremona {

// Tag for the ground field: the rationals, or a prime field F_p with
// p < 2^63.  Extension fields are not supported.
struct Field {
  std::uint64_t p = 0;  // 0 means Q

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p);

  std::string name() const;
};

class field_mismatch : public std::runtime_error {
 public:
  field_mismatch() : std::runtime_error("arithmetic between different fields") {}
};

// An exact field element.  Rational values are kept in lowest terms with
// positive denominator (mpq_class canonicalization); prime-field values
// satisfy 0 <= value < p.
class Scalar {
 public:
  Scalar() : field_{0}, rat_(0) {}
  Scalar(const Field& f, const mpq_class& v);
  static Scalar from_int(const Field& f, long v) { return Scalar(f, mpq_class(v)); }
  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Value as stored: the canonical rational, or the residue in [0, p).
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "a/b" over Q, bare integer over F_p (reduced mod p).
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& s);

  std::size_t hash() const;

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw field_mismatch();
  }

  Field field_;
  mpq_class rat_;       // used when field_.p == 0
  std::uint64_t res_ = 0;  // used when field_.p != 0
};

}  // namespace cremona
