#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace glc {

using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { PrimeField, Rationals };

// A coefficient: reduced residue for GF(p), exact rational otherwise.
// All arithmetic goes through Field, which knows which member is live.
class Scalar {
public:
  Scalar() = default;
  std::int64_t residue = 0;
  Rational rat;
};

// Runtime field descriptor. GF(p) for prime p < 2^31, or QQ.
class Field {
public:
  static Field prime(std::int64_t p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  std::int64_t modulus() const { return p_; }

  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t n) const;
  Scalar from_rational(const Rational& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string(const Scalar& a) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  FieldKind kind_ = FieldKind::PrimeField;
  std::int64_t p_ = 101;
};

}  // namespace glc
