#pragma once

#include <optional>

#include "glc/polynomial.hpp"

namespace glc {

// Graded free module F = (+)_j R(-degs[j]); generator e_j sits in degree degs[j].
struct FreeModule {
  CtxPtr ctx;
  std::vector<int> degs;

  std::size_t rank() const { return degs.size(); }
};

// leading module term of a vector
struct ModLead {
  Monomial m;
  std::size_t comp = 0;
  Scalar c;
};

// TOP order: compare ring monomials first, lower component breaks ties (e_0 largest)
int modterm_cmp(const Monomial& am, std::size_t ac, const Monomial& bm, std::size_t bc,
                MonomialOrder ord);

// Element of a free module, stored componentwise.
class VecPoly {
public:
  VecPoly() = default;
  VecPoly(CtxPtr ctx, std::size_t ncomps);

  static VecPoly unit(CtxPtr ctx, std::size_t ncomps, std::size_t j);

  const CtxPtr& ctx() const { return ctx_; }
  std::size_t ncomps() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t j) const { return comps_[j]; }
  Polynomial& operator[](std::size_t j) { return comps_[j]; }

  bool is_zero() const;

  VecPoly operator+(const VecPoly& o) const;
  VecPoly operator-(const VecPoly& o) const;
  VecPoly operator-() const;
  VecPoly scaled(const Scalar& c) const;
  VecPoly term_mul(const Monomial& m, const Scalar& c) const;
  VecPoly poly_mul(const Polynomial& f) const;

  bool operator==(const VecPoly& o) const;
  bool operator!=(const VecPoly& o) const { return !(*this == o); }

  std::optional<ModLead> lead() const;

  // degree bookkeeping needs the generator degrees of the ambient free module
  int degree(const FreeModule& F) const;
  bool is_homogeneous(const FreeModule& F) const;

  std::string str() const;

private:
  CtxPtr ctx_;
  std::vector<Polynomial> comps_;
};

int vecpoly_cmp(const VecPoly& a, const VecPoly& b);

}  // namespace glc
