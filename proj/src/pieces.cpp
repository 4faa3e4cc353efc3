#include "glc/pieces.hpp"

namespace glc {

PieceBasis piece_basis(const Module& M, int j) {
  CtxPtr ctx = M.ctx();
  PieceBasis B;
  B.j = j;
  // leads of the defining basis, bucketed by component
  std::vector<std::vector<Monomial>> leads(M.ngens());
  for (const auto& g : M.gb) {
    auto l = g.lead();
    if (l) leads[l->comp].push_back(l->m);
  }
  for (std::size_t c = 0; c < M.ngens(); ++c) {
    int d = j - M.F0.degs[c];
    if (d < 0) continue;
    for (const auto& m : monomials_of_degree(ctx->nvars(), d)) {
      bool standard = true;
      for (const auto& l : leads[c])
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) {
        B.index[{m.e, c}] = B.elems.size();
        B.elems.push_back({m, c});
      }
    }
  }
  return B;
}

std::vector<Scalar> piece_coords(const Module& M, const PieceBasis& B, const VecPoly& v) {
  const Field& F = M.ctx()->field;
  std::vector<Scalar> out(B.elems.size(), F.zero());
  VecPoly r = M.reduce(v);
  for (std::size_t c = 0; c < r.ncomps(); ++c)
    for (const auto& t : r[c].terms()) {
      auto it = B.index.find({t.m.e, c});
      if (it == B.index.end()) throw Error("piece_coords: term outside the degree-j basis");
      out[it->second] = F.add(out[it->second], t.c);
    }
  return out;
}

VecPoly piece_element(const Module& M, const PieceBasis& B, const std::vector<Scalar>& coords) {
  CtxPtr ctx = M.ctx();
  VecPoly v(ctx, M.ngens());
  for (std::size_t k = 0; k < B.elems.size(); ++k) {
    if (ctx->field.is_zero(coords[k])) continue;
    const auto& [m, c] = B.elems[k];
    v[c] = v[c] + Polynomial::monomial(ctx, m, coords[k]);
  }
  return v;
}

Mat morphism_piece_matrix(const Morphism& f, const PieceBasis& src, const PieceBasis& dst) {
  CtxPtr ctx = f.src->ctx();
  Mat A(ctx->field, dst.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    const auto& [m, c] = src.elems[k];
    VecPoly v(ctx, f.src->ngens());
    v[c] = Polynomial::monomial(ctx, m, ctx->field.one());
    std::vector<Scalar> col = piece_coords(*f.dst, dst, apply(f, v));
    for (std::size_t i = 0; i < dst.dim(); ++i) A.at(i, k) = col[i];
  }
  return A;
}

Mat morphism_piece_matrix(const Morphism& f, int j) {
  PieceBasis src = piece_basis(*f.src, j);
  PieceBasis dst = piece_basis(*f.dst, j);
  return morphism_piece_matrix(f, src, dst);
}

Mat mult_piece_matrix(const Module& M, const Polynomial& f, const PieceBasis& src,
                      const PieceBasis& dst) {
  CtxPtr ctx = M.ctx();
  Mat A(ctx->field, dst.dim(), src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    const auto& [m, c] = src.elems[k];
    VecPoly v(ctx, M.ngens());
    v[c] = f.term_mul(m, ctx->field.one());
    std::vector<Scalar> col = piece_coords(M, dst, v);
    for (std::size_t i = 0; i < dst.dim(); ++i) A.at(i, k) = col[i];
  }
  return A;
}

}  // namespace glc
