#include "glc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace glc {

CtxPtr make_context(Field field, std::vector<std::string> vars, MonomialOrder order) {
  auto ctx = std::make_shared<PolyContext>();
  ctx->field = field;
  ctx->vars = std::move(vars);
  ctx->order = order;
  return ctx;
}

Polynomial Polynomial::constant(CtxPtr ctx, std::int64_t n) {
  return constant(ctx, ctx->field.from_int(n));
}

Polynomial Polynomial::constant(CtxPtr ctx, Scalar c) {
  Polynomial p(ctx);
  if (!ctx->field.is_zero(c)) p.terms_.push_back({Monomial::zeros(ctx->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(CtxPtr ctx, std::size_t i, int power) {
  if (i >= ctx->nvars()) throw Error("variable index out of range");
  Monomial m = Monomial::zeros(ctx->nvars());
  m.e[i] = power;
  Scalar one = ctx->field.one();
  return monomial(std::move(ctx), std::move(m), std::move(one));
}

Polynomial Polynomial::monomial(CtxPtr ctx, Monomial m, Scalar c) {
  Polynomial p(ctx);
  if (!ctx->field.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().m.is_one());
}

Polynomial Polynomial::from_terms(CtxPtr ctx, std::vector<Term> ts) {
  const Field& F = ctx->field;
  MonomialOrder ord = ctx->order;
  std::sort(ts.begin(), ts.end(),
            [ord](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, ord) > 0; });
  Polynomial p(ctx);
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, t.c);
      if (F.is_zero(p.terms_.back().c)) p.terms_.pop_back();
    } else if (!F.is_zero(t.c)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const Field& F = ctx_->field;
  MonomialOrder ord = ctx_->order;
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].m, o.terms_[j].m, ord);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = F.add(terms_[i].c, o.terms_[j].c);
      if (!F.is_zero(s)) r.terms_.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  const Field& F = ctx_->field;
  for (auto& t : r.terms_) t.c = F.neg(t.c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& F = ctx_->field;
  if (F.is_zero(c)) return Polynomial(ctx_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.c = F.mul(t.c, c);
  return r;
}

Polynomial Polynomial::term_mul(const Monomial& m, const Scalar& c) const {
  const Field& F = ctx_->field;
  if (F.is_zero(c)) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(ctx_);
  const Field& F = ctx_->field;
  // map-based accumulation keeps this n*m log instead of n*m^2
  MonomialOrder ord = ctx_->order;
  auto cmp = [ord](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, ord) > 0; };
  std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.m * b.m;
      Scalar c = F.mul(a.c, b.c);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = F.add(it->second, c);
    }
  Polynomial r(ctx_);
  for (auto& [m, c] : acc)
    if (!F.is_zero(c)) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ctx_->field.inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = ctx_->field;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || !F.eq(terms_[i].c, o.terms_[i].c)) return false;
  return true;
}

std::string monomial_str(const PolyContext& ctx, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << ctx.vars[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Field& F = ctx_->field;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = F.to_string(t.c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    if (t.m.is_one()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << monomial_str(*ctx_, t.m);
    }
    first = false;
  }
  return os.str();
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  MonomialOrder ord = a.ctx() ? a.ctx()->order : MonomialOrder::GrevLex;
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = mono_cmp(ta[i].m, tb[i].m, ord);
    if (c != 0) return -c;  // bigger leading monomial sorts first
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? 1 : -1;
  return 0;
}

}  // namespace glc
