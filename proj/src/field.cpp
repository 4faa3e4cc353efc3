#include "glc/field.hpp"

namespace glc {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

// extended Euclid: inverse of a mod p, a != 0 mod p
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("not invertible mod p");
  return mod_reduce(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t(1) << 31) || !is_prime(p))
    throw Error("field characteristic must be a prime < 2^31, got " + std::to_string(p));
  Field f;
  f.kind_ = FieldKind::PrimeField;
  f.p_ = p;
  return f;
}

Field Field::rationals() {
  Field f;
  f.kind_ = FieldKind::Rationals;
  f.p_ = 0;
  return f;
}

Scalar Field::from_int(std::int64_t n) const {
  Scalar s;
  if (kind_ == FieldKind::PrimeField)
    s.residue = mod_reduce(n, p_);
  else
    s.rat = n;
  return s;
}

Scalar Field::from_rational(const Rational& q) const {
  Scalar s;
  if (kind_ == FieldKind::Rationals) {
    s.rat = q;
    return s;
  }
  std::int64_t num = mod_reduce(static_cast<std::int64_t>(numerator(q) % p_), p_);
  std::int64_t den = mod_reduce(static_cast<std::int64_t>(denominator(q) % p_), p_);
  if (den == 0) throw Error("denominator vanishes mod p");
  s.residue = mod_reduce(num * mod_inv(den, p_), p_);
  return s;
}

bool Field::is_zero(const Scalar& a) const {
  return kind_ == FieldKind::PrimeField ? a.residue == 0 : a.rat.is_zero();
}

bool Field::is_one(const Scalar& a) const {
  return kind_ == FieldKind::PrimeField ? a.residue == 1 : a.rat == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  return kind_ == FieldKind::PrimeField ? a.residue == b.residue : a.rat == b.rat;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == FieldKind::PrimeField)
    s.residue = mod_reduce(a.residue + b.residue, p_);
  else
    s.rat = a.rat + b.rat;
  return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == FieldKind::PrimeField)
    s.residue = mod_reduce(a.residue - b.residue, p_);
  else
    s.rat = a.rat - b.rat;
  return s;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar s;
  if (kind_ == FieldKind::PrimeField)
    s.residue = mod_reduce(-a.residue, p_);
  else
    s.rat = -a.rat;
  return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == FieldKind::PrimeField)
    s.residue = mod_reduce(a.residue * b.residue, p_);
  else
    s.rat = a.rat * b.rat;
  return s;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero");
  Scalar s;
  if (kind_ == FieldKind::PrimeField)
    s.residue = mod_inv(a.residue, p_);
  else
    s.rat = 1 / a.rat;
  return s;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == FieldKind::PrimeField) return std::to_string(a.residue);
  return a.rat.str();
}

}  // namespace glc
