#include "glc/ideal.hpp"

namespace glc {

Ideal::Ideal(CtxPtr ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)) {
  for (auto& f : gens)
    if (!f.is_zero()) gens_.push_back(f);
  gb_ = gb_polys(buchberger_ideal(ctx_, gens_));
}

bool Ideal::is_one() const { return gb_.size() == 1 && gb_[0].is_constant() && !gb_[0].is_zero(); }

bool Ideal::contains(const Ideal& o) const {
  for (const auto& f : o.gens())
    if (!contains(f)) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ctx(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g;
  for (const auto& f : a.gens())
    for (const auto& h : b.gens()) g.push_back(f * h);
  return Ideal(a.ctx(), std::move(g));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  // kernel trick in S^2: syzygies of (1,1), (f_i,0), (0,g_j); first coordinates
  CtxPtr ctx = a.ctx();
  FreeModule F{ctx, {0, 0}};
  std::vector<VecPoly> cols;
  VecPoly diag(ctx, 2);
  diag[0] = Polynomial::constant(ctx, 1);
  diag[1] = Polynomial::constant(ctx, 1);
  cols.push_back(diag);
  for (const auto& f : a.gens()) {
    VecPoly v(ctx, 2);
    v[0] = f;
    cols.push_back(v);
  }
  for (const auto& g : b.gens()) {
    VecPoly v(ctx, 2);
    v[1] = g;
    cols.push_back(v);
  }
  std::vector<Polynomial> out;
  for (const auto& z : syzygy_generators(F, cols))
    if (!z[0].is_zero()) out.push_back(z[0]);
  return Ideal(ctx, std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& f) {
  // {g : g f in a} = first coordinates of syzygies of [f | gens a]
  CtxPtr ctx = a.ctx();
  if (f.is_zero()) return Ideal(ctx, {Polynomial::constant(ctx, 1)});
  FreeModule F{ctx, {0}};
  std::vector<VecPoly> cols;
  VecPoly vf(ctx, 1);
  vf[0] = f;
  cols.push_back(vf);
  for (const auto& g : a.basis()) {
    VecPoly v(ctx, 1);
    v[0] = g;
    cols.push_back(v);
  }
  std::vector<Polynomial> out;
  for (const auto& z : syzygy_generators(F, cols))
    if (!z[0].is_zero()) out.push_back(z[0]);
  return Ideal(ctx, std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  if (b.gens().empty()) return Ideal(a.ctx(), {Polynomial::constant(a.ctx(), 1)});
  Ideal acc = ideal_quotient(a, b.gens()[0]);
  for (std::size_t i = 1; i < b.gens().size(); ++i)
    acc = ideal_intersection(acc, ideal_quotient(a, b.gens()[i]));
  return acc;
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  for (;;) {
    Ideal next = ideal_quotient(cur, b);
    if (next == cur) return cur;
    cur = next;
  }
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n <= 0) return Ideal(a.ctx(), {Polynomial::constant(a.ctx(), 1)});
  Ideal acc = a;
  for (int i = 1; i < n; ++i) {
    // multiply from the reduced basis; raw generator lists grow geometrically
    std::vector<Polynomial> g;
    for (const auto& f : acc.basis())
      for (const auto& h : a.gens()) g.push_back(f * h);
    acc = Ideal(a.ctx(), std::move(g));
  }
  return acc;
}

bool in_radical(const Polynomial& f, const Ideal& a) {
  if (f.is_zero()) return true;
  return ideal_saturation(a, Ideal(a.ctx(), {f})).is_one();
}

Ideal irrelevant_ideal(CtxPtr ctx) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < ctx->nvars(); ++i) g.push_back(Polynomial::variable(ctx, i));
  return Ideal(ctx, std::move(g));
}

}  // namespace glc
