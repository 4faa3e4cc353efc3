#include "glc/vecpoly.hpp"

#include <limits>
#include <sstream>

namespace glc {

int modterm_cmp(const Monomial& am, std::size_t ac, const Monomial& bm, std::size_t bc,
                MonomialOrder ord) {
  int c = mono_cmp(am, bm, ord);
  if (c != 0) return c;
  if (ac != bc) return ac < bc ? 1 : -1;
  return 0;
}

VecPoly::VecPoly(CtxPtr ctx, std::size_t ncomps) : ctx_(ctx) {
  comps_.assign(ncomps, Polynomial(ctx));
}

VecPoly VecPoly::unit(CtxPtr ctx, std::size_t ncomps, std::size_t j) {
  VecPoly v(ctx, ncomps);
  v.comps_[j] = Polynomial::constant(ctx, 1);
  return v;
}

bool VecPoly::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
  VecPoly r(*this);
  for (std::size_t j = 0; j < comps_.size(); ++j) r.comps_[j] = comps_[j] + o.comps_[j];
  return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
  VecPoly r(*this);
  for (std::size_t j = 0; j < comps_.size(); ++j) r.comps_[j] = comps_[j] - o.comps_[j];
  return r;
}

VecPoly VecPoly::operator-() const {
  VecPoly r(*this);
  for (auto& p : r.comps_) p = -p;
  return r;
}

VecPoly VecPoly::scaled(const Scalar& c) const {
  VecPoly r(*this);
  for (auto& p : r.comps_) p = p.scaled(c);
  return r;
}

VecPoly VecPoly::term_mul(const Monomial& m, const Scalar& c) const {
  VecPoly r(*this);
  for (auto& p : r.comps_) p = p.term_mul(m, c);
  return r;
}

VecPoly VecPoly::poly_mul(const Polynomial& f) const {
  VecPoly r(*this);
  for (auto& p : r.comps_) p = p * f;
  return r;
}

bool VecPoly::operator==(const VecPoly& o) const {
  if (comps_.size() != o.comps_.size()) return false;
  for (std::size_t j = 0; j < comps_.size(); ++j)
    if (comps_[j] != o.comps_[j]) return false;
  return true;
}

std::optional<ModLead> VecPoly::lead() const {
  std::optional<ModLead> best;
  MonomialOrder ord = ctx_->order;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (comps_[j].is_zero()) continue;
    const Term& t = comps_[j].leading_term();
    if (!best || modterm_cmp(t.m, j, best->m, best->comp, ord) > 0)
      best = ModLead{t.m, j, t.c};
  }
  return best;
}

int VecPoly::degree(const FreeModule& F) const {
  // zero vector -> INT_MIN (generator degrees may be negative, so -1 won't do)
  int d = std::numeric_limits<int>::min();
  for (std::size_t j = 0; j < comps_.size(); ++j)
    if (!comps_[j].is_zero()) d = std::max(d, comps_[j].degree() + F.degs[j]);
  return d;
}

bool VecPoly::is_homogeneous(const FreeModule& F) const {
  int d = degree(F);
  if (d == std::numeric_limits<int>::min()) return true;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    const auto& p = comps_[j];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() + F.degs[j] != d) return false;
  }
  return true;
}

std::string VecPoly::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (j) os << ", ";
    os << comps_[j].str();
  }
  os << ")";
  return os.str();
}

int vecpoly_cmp(const VecPoly& a, const VecPoly& b) {
  auto la = a.lead(), lb = b.lead();
  if (!la && !lb) return 0;
  if (!la) return 1;
  if (!lb) return -1;
  MonomialOrder ord = a.ctx() ? a.ctx()->order : MonomialOrder::GrevLex;
  int c = modterm_cmp(la->m, la->comp, lb->m, lb->comp, ord);
  if (c != 0) return -c;  // bigger lead sorts first
  for (std::size_t j = 0; j < a.ncomps(); ++j) {
    int pc = poly_cmp(a[j], b[j]);
    if (pc != 0) return pc;
  }
  return 0;
}

}  // namespace glc
