#pragma once

#include "glc/groebner.hpp"

namespace glc {

// Homogeneous ideal in the polynomial ring, kept with its reduced basis.
class Ideal {
public:
  Ideal() = default;
  Ideal(CtxPtr ctx, std::vector<Polynomial> gens);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Polynomial>& basis() const { return gb_; }

  bool is_zero() const { return gb_.empty(); }
  bool is_one() const;
  bool contains(const Polynomial& f) const { return normal_form(f, gb_).is_zero(); }
  bool contains(const Ideal& o) const;
  bool operator==(const Ideal& o) const { return gb_ == o.gb_; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

private:
  CtxPtr ctx_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Polynomial& f);   // (a : f)
Ideal ideal_quotient(const Ideal& a, const Ideal& b);        // (a : b)
Ideal ideal_saturation(const Ideal& a, const Ideal& b);      // (a : b^inf)
Ideal ideal_power(const Ideal& a, int n);

// f in sqrt(a), via (a : f^inf) = (1)
bool in_radical(const Polynomial& f, const Ideal& a);

// the irrelevant maximal ideal (x_1..x_n)
Ideal irrelevant_ideal(CtxPtr ctx);

}  // namespace glc
