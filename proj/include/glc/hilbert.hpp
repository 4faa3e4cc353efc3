#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glc/monomial.hpp"

namespace glc {

// Laurent polynomial with integer coefficients (Hilbert numerators)
struct LaurentZ {
  std::map<int, long long> c;  // degree -> coefficient, zeros absent

  bool is_zero() const { return c.empty(); }
  void add(int d, long long v);
  LaurentZ operator+(const LaurentZ& o) const;
  LaurentZ operator-(const LaurentZ& o) const;
  LaurentZ shifted(int d) const;  // * t^d
  long long at(int d) const;
  long long eval_at_one() const;
  bool operator==(const LaurentZ& o) const { return c == o.c; }
  std::string str() const;  // human form, "1 - 2*t^2 + t^4"
};

// numerator / (1-t)^denom
struct HilbertSeries {
  LaurentZ num;
  int denom = 0;

  // cancel (1-t) factors against the numerator
  HilbertSeries reduced() const;
  // dim_k of the degree-j piece
  long long coeff(int j) const;
  // pole order at t = 1; -1 for the zero series
  int pole_order() const;
  bool operator==(const HilbertSeries& o) const;
  bool operator!=(const HilbertSeries& o) const { return !(*this == o); }
  std::string str() const;
};

// numerator of the Hilbert series of S/J over (1-t)^nvars, J monomial
LaurentZ monomial_quotient_numerator(std::size_t nvars, std::vector<Monomial> gens);

// Krull dimension of S/J via maximal independent variable sets; -1 if J = (1)
int monomial_quotient_dim(std::size_t nvars, const std::vector<Monomial>& gens);

// #monomials of degree d in k variables
long long monomial_count(int d, int k);

}  // namespace glc
