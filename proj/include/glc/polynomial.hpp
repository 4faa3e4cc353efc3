#pragma once

#include <memory>
#include <string>
#include <vector>

#include "glc/field.hpp"
#include "glc/monomial.hpp"

namespace glc {

// Shared context: coefficient field, variable names, monomial order.
// Polynomials hold a pointer to it; contexts are compared by pointer.
struct PolyContext {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::GrevLex;

  std::size_t nvars() const { return vars.size(); }
};

using CtxPtr = std::shared_ptr<const PolyContext>;

CtxPtr make_context(Field field, std::vector<std::string> vars,
                    MonomialOrder order = MonomialOrder::GrevLex);

struct Term {
  Monomial m;
  Scalar c;
};

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(CtxPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(CtxPtr ctx, std::int64_t n);
  static Polynomial constant(CtxPtr ctx, Scalar c);
  static Polynomial variable(CtxPtr ctx, std::size_t i, int power = 1);
  static Polynomial monomial(CtxPtr ctx, Monomial m, Scalar c);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Scalar& leading_coeff() const { return leading_term().c; }

  // max total degree of a term, -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial term_mul(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;

  // sorts descending, merges duplicates, drops zeros
  static Polynomial from_terms(CtxPtr ctx, std::vector<Term> ts);

private:
  CtxPtr ctx_;
  std::vector<Term> terms_;  // strictly descending in ctx_->order
};

std::string monomial_str(const PolyContext& ctx, const Monomial& m);

// deterministic total order on polynomials (by leading terms, then onward);
// used to canonically sort reduced Groebner bases
int poly_cmp(const Polynomial& a, const Polynomial& b);

}  // namespace glc
