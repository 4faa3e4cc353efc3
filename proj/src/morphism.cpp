#include "glc/morphism.hpp"

namespace glc {

Morphism make_morphism(ModPtr src, ModPtr dst, std::vector<VecPoly> cols, bool validate) {
  if (src->R != dst->R) throw Error("morphism across different rings");
  if (cols.size() != src->ngens()) throw Error("morphism column count mismatch");
  Morphism f{std::move(src), std::move(dst), std::move(cols)};
  if (validate) {
    for (std::size_t j = 0; j < f.cols.size(); ++j) {
      const VecPoly& c = f.cols[j];
      if (c.ncomps() != f.dst->ngens()) throw Error("morphism column length mismatch");
      if (c.is_zero()) continue;
      if (!c.is_homogeneous(f.dst->F0) || c.degree(f.dst->F0) != f.src->F0.degs[j])
        throw Error("morphism column has wrong degree");
    }
    for (const auto& r : f.src->rels)
      if (!f.dst->member(apply(f, r))) throw Error("morphism not well defined on relations");
  }
  return f;
}

Morphism identity_morphism(ModPtr M) {
  std::vector<VecPoly> cols;
  for (std::size_t j = 0; j < M->ngens(); ++j)
    cols.push_back(VecPoly::unit(M->ctx(), M->ngens(), j));
  return Morphism{M, M, std::move(cols)};
}

Morphism zero_morphism(ModPtr src, ModPtr dst) {
  std::vector<VecPoly> cols(src->ngens(), VecPoly(src->ctx(), dst->ngens()));
  return Morphism{std::move(src), std::move(dst), std::move(cols)};
}

VecPoly apply(const Morphism& f, const VecPoly& v) {
  VecPoly out(f.dst->ctx(), f.dst->ngens());
  for (std::size_t u = 0; u < f.cols.size(); ++u)
    if (!v[u].is_zero()) out = out + f.cols[u].poly_mul(v[u]);
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.dst != g.src) throw Error("composition mismatch");
  std::vector<VecPoly> cols;
  for (std::size_t j = 0; j < f.cols.size(); ++j) cols.push_back(apply(g, f.cols[j]));
  return Morphism{f.src, g.dst, std::move(cols)};
}

bool is_zero_morphism(const Morphism& f) {
  for (const auto& c : f.cols)
    if (!f.dst->member(c)) return false;
  return true;
}

namespace {

// first `take` coordinates of each syzygy of [cols | span], dropping zeros
std::vector<VecPoly> syz_project(const FreeModule& F, const std::vector<VecPoly>& cols,
                                 const std::vector<VecPoly>& span, std::size_t take) {
  std::vector<VecPoly> all = cols;
  all.insert(all.end(), span.begin(), span.end());
  std::vector<VecPoly> out;
  for (const auto& z : syzygy_generators(F, all)) {
    VecPoly v(F.ctx, take);
    for (std::size_t i = 0; i < take; ++i) v[i] = z[i];
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

SubQuot kernel(const Morphism& f) {
  ModPtr M = f.src, N = f.dst;
  // lift: all v in F0^M with f(v) inside N's relation span
  std::vector<VecPoly> span = N->rels;
  auto aug = ring_columns(*N->R, N->F0);
  span.insert(span.end(), aug.begin(), aug.end());
  std::vector<VecPoly> ker_gens = syz_project(N->F0, f.cols, span, f.cols.size());

  // irredundant generators of the kernel inside M
  std::vector<VecPoly> fixedM = M->rels;
  auto augM = ring_columns(*M->R, M->F0);
  fixedM.insert(fixedM.end(), augM.begin(), augM.end());
  ker_gens = minimalize_generators(M->F0, std::move(ker_gens), fixedM);

  std::vector<int> kdegs;
  for (const auto& v : ker_gens) kdegs.push_back(v.degree(M->F0));
  std::vector<VecPoly> krels =
      syz_project(M->F0, ker_gens, fixedM, ker_gens.size());
  ModPtr K = Module::make(M->R, kdegs, std::move(krels));
  Morphism incl{K, M, ker_gens};
  return SubQuot{K, std::move(incl)};
}

SubQuot submodule(ModPtr N, std::vector<VecPoly> cols) {
  std::vector<VecPoly> span = N->rels;
  auto aug = ring_columns(*N->R, N->F0);
  span.insert(span.end(), aug.begin(), aug.end());
  cols = minimalize_generators(N->F0, std::move(cols), span);
  std::vector<int> degs;
  for (const auto& v : cols) degs.push_back(v.degree(N->F0));
  std::vector<VecPoly> rels = syz_project(N->F0, cols, span, cols.size());
  ModPtr U = Module::make(N->R, degs, std::move(rels));
  Morphism incl{U, N, cols};
  return SubQuot{U, std::move(incl)};
}

SubQuot image(const Morphism& f) { return submodule(f.dst, f.cols); }

ModPtr cokernel(const Morphism& f) {
  std::vector<VecPoly> rels = f.dst->rels;
  rels.insert(rels.end(), f.cols.begin(), f.cols.end());
  return Module::make(f.dst->R, f.dst->F0.degs, std::move(rels));
}

std::optional<std::vector<Polynomial>> express_in(const Module& B,
                                                  const std::vector<VecPoly>& gens,
                                                  const VecPoly& v) {
  CtxPtr ctx = B.ctx();
  std::vector<VecPoly> all = gens;
  all.insert(all.end(), B.rels.begin(), B.rels.end());
  auto aug = ring_columns(*B.R, B.F0);
  all.insert(all.end(), aug.begin(), aug.end());
  GBasis gb = buchberger(B.F0, all, true);
  std::vector<Polynomial> cof;
  VecPoly rem = normal_form(v, gb.g, &cof);
  if (!rem.is_zero()) return std::nullopt;
  std::vector<Polynomial> out(gens.size(), Polynomial(ctx));
  for (std::size_t k = 0; k < gb.g.size(); ++k)
    if (!cof[k].is_zero())
      for (std::size_t l = 0; l < gens.size(); ++l)
        out[l] = out[l] + cof[k] * gb.change[k][l];
  return out;
}

HomologyData homology_data(const Morphism& f, const Morphism& g) {
  if (f.dst != g.src) throw Error("homology_at: maps not composable");
  if (!is_zero_morphism(compose(g, f))) throw Error("homology_at: composite not zero");
  SubQuot K = kernel(g);
  // lift each f-column through the inclusion
  std::vector<VecPoly> lifted;
  for (const auto& c : f.cols) {
    auto coeffs = express_in(*f.dst, K.incl.cols, c);
    if (!coeffs) throw Error("homology_at: column failed to lift into the kernel");
    VecPoly u(f.src->ctx(), K.module->ngens());
    for (std::size_t i = 0; i < coeffs->size(); ++i) u[i] = (*coeffs)[i];
    lifted.push_back(std::move(u));
  }
  std::vector<VecPoly> rels = K.module->rels;
  rels.insert(rels.end(), lifted.begin(), lifted.end());
  ModPtr H = Module::make(f.src->R, K.module->F0.degs, std::move(rels));
  return HomologyData{std::move(H), K.incl.cols};
}

ModPtr homology_at(const Morphism& f, const Morphism& g) { return homology_data(f, g).H; }

std::vector<VecPoly> submodule_colon(const FreeModule& F, const std::vector<VecPoly>& U,
                                     const Polynomial& f) {
  std::vector<VecPoly> cols;
  for (std::size_t j = 0; j < F.rank(); ++j) {
    VecPoly v(F.ctx, F.rank());
    v[j] = f;
    cols.push_back(std::move(v));
  }
  std::vector<VecPoly> all = cols;
  all.insert(all.end(), U.begin(), U.end());
  std::vector<VecPoly> out;
  for (const auto& z : syzygy_generators(F, all)) {
    VecPoly v(F.ctx, F.rank());
    for (std::size_t i = 0; i < F.rank(); ++i) v[i] = z[i];
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

std::vector<VecPoly> submodule_intersect(const FreeModule& F, const std::vector<VecPoly>& A,
                                         const std::vector<VecPoly>& B) {
  std::vector<VecPoly> all = A;
  all.insert(all.end(), B.begin(), B.end());
  std::vector<VecPoly> out;
  for (const auto& z : syzygy_generators(F, all)) {
    VecPoly v(F.ctx, F.rank());
    for (std::size_t k = 0; k < A.size(); ++k)
      if (!z[k].is_zero()) v = v + A[k].poly_mul(z[k]);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

SubQuot torsion_submodule(ModPtr N) {
  CtxPtr ctx = N->ctx();
  if (ctx->nvars() == 0) {
    // m = (0): everything is m-power torsion
    std::vector<VecPoly> all;
    for (std::size_t j = 0; j < N->ngens(); ++j)
      all.push_back(VecPoly::unit(ctx, N->ngens(), j));
    return submodule(N, all);
  }
  // saturate the relation span by the irrelevant ideal
  std::vector<VecPoly> cur = N->gb;
  for (;;) {
    std::vector<VecPoly> next;
    bool first = true;
    for (std::size_t i = 0; i < ctx->nvars(); ++i) {
      auto ci = submodule_colon(N->F0, cur, Polynomial::variable(ctx, i));
      next = first ? ci : submodule_intersect(N->F0, next, ci);
      first = false;
    }
    GBasis a = buchberger(N->F0, cur), b = buchberger(N->F0, next);
    if (a.g == b.g) break;
    cur = std::move(next);
  }
  return submodule(N, cur);
}

ModPtr mod_torsion(ModPtr N) {
  SubQuot t = torsion_submodule(N);
  return cokernel(t.incl);
}

ModPtr hom_module(ModPtr M, ModPtr N) {
  CtxPtr ctx = M->ctx();
  std::size_t rm = M->ngens(), rn = N->ngens();
  std::size_t s = M->rels.size();

  // Hom(F0^M, N) = (+)_u N(F0^M.degs[u]), generator (u,j) at u*rn + j
  auto hom_free = [&](const std::vector<int>& fdegs) -> ModPtr {
    std::vector<int> degs(fdegs.size() * rn);
    for (std::size_t u = 0; u < fdegs.size(); ++u)
      for (std::size_t j = 0; j < rn; ++j) degs[u * rn + j] = N->F0.degs[j] - fdegs[u];
    std::vector<VecPoly> rels;
    for (std::size_t u = 0; u < fdegs.size(); ++u)
      for (const auto& q : N->rels) {
        VecPoly v(ctx, fdegs.size() * rn);
        for (std::size_t j = 0; j < rn; ++j) v[u * rn + j] = q[j];
        rels.push_back(std::move(v));
      }
    return Module::make(M->R, std::move(degs), std::move(rels));
  };

  ModPtr H0 = hom_free(M->F0.degs);
  if (s == 0) return H0;

  std::vector<int> f1degs;
  for (const auto& r : M->rels) f1degs.push_back(r.degree(M->F0));
  ModPtr H1 = hom_free(f1degs);

  // phi |-> phi ∘ A: generator (u,j) of H0 maps to sum_w A[u][w] * (w,j)
  std::vector<VecPoly> cols(rm * rn, VecPoly(ctx, s * rn));
  for (std::size_t u = 0; u < rm; ++u)
    for (std::size_t j = 0; j < rn; ++j) {
      VecPoly& c = cols[u * rn + j];
      for (std::size_t w = 0; w < s; ++w) c[w * rn + j] = M->rels[w][u];
    }
  Morphism phi = make_morphism(H0, H1, std::move(cols));
  return kernel(phi).module;
}

}  // namespace glc
