#include "glc/resolution.hpp"

#include <bit>
#include <sstream>

namespace glc {

namespace {

bool dd_zero(const Complex& C) {
  for (std::size_t i = 2; i < C.F.size(); ++i) {
    for (const auto& col : C.d[i]) {
      VecPoly comp(C.R->ctx, C.F[i - 2].rank());
      for (std::size_t u = 0; u < col.ncomps(); ++u)
        if (!col[u].is_zero()) comp = comp + C.d[i - 1][u].poly_mul(col[u]);
      for (std::size_t a = 0; a < comp.ncomps(); ++a)
        if (!normal_form(comp[a], C.R->rel_gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

void validate_complex(const Complex& C) {
  if (C.F.size() != C.d.size()) throw Error("complex: maps/modules length mismatch");
  for (std::size_t i = 1; i < C.F.size(); ++i) {
    if (C.d[i].size() != C.F[i].rank()) throw Error("complex: differential column count mismatch");
    for (std::size_t w = 0; w < C.d[i].size(); ++w) {
      const VecPoly& col = C.d[i][w];
      if (col.ncomps() != C.F[i - 1].rank())
        throw Error("complex: differential column length mismatch");
      if (col.is_zero()) continue;
      if (!col.is_homogeneous(C.F[i - 1]) || col.degree(C.F[i - 1]) != C.F[i].degs[w])
        throw Error("complex: differential entry has wrong degree");
    }
  }
  if (!dd_zero(C)) throw Error("complex: d∘d != 0");
}

Resolution free_resolution(ModPtr M, int len, bool minimize) {
  if (len < 0) throw Error("resolution length must be nonnegative");
  if (minimize) M = minimal_presentation(M);
  Resolution res;
  res.M = M;
  res.C.R = M->R;
  res.C.F.push_back(M->F0);
  res.C.d.push_back({});
  std::vector<VecPoly> cur = M->rels;
  FreeModule Fprev = M->F0;
  for (int i = 1; i <= len; ++i) {
    auto ringcols = ring_columns(*M->R, Fprev);
    cur = minimalize_generators(Fprev, std::move(cur), ringcols);
    if (cur.empty()) {
      res.complete = true;
      return res;
    }
    std::vector<int> degs;
    for (const auto& v : cur) degs.push_back(v.degree(Fprev));
    FreeModule Fi{M->ctx(), degs};
    res.C.F.push_back(Fi);
    res.C.d.push_back(cur);
    // R-syzygies of cur: S-syzygies of [cur | ring columns], first block
    std::vector<VecPoly> all = cur;
    all.insert(all.end(), ringcols.begin(), ringcols.end());
    std::vector<VecPoly> next;
    for (const auto& z : syzygy_generators(Fprev, all)) {
      VecPoly v(M->ctx(), cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) v[k] = z[k];
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    cur = std::move(next);
    Fprev = Fi;
  }
  res.last_kernel = minimalize_generators(Fprev, std::move(cur), ring_columns(*M->R, Fprev));
  res.complete = res.last_kernel.empty();
  return res;
}

BettiTable betti_table(const Resolution& r) {
  BettiTable b;
  for (std::size_t i = 0; i < r.C.F.size(); ++i)
    for (int j : r.C.F[i].degs) ++b.entries[{static_cast<int>(i), j}];
  return b;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  for (const auto& [key, cnt] : entries)
    os << "b(" << key.first << "," << key.second << ") = " << cnt << "\n";
  return os.str();
}

bool resolution_dd_zero(const Resolution& r) { return dd_zero(r.C); }

bool resolution_minimal(const Resolution& r) {
  for (std::size_t i = 1; i < r.C.F.size(); ++i)
    for (const auto& col : r.C.d[i])
      for (std::size_t u = 0; u < col.ncomps(); ++u)
        if (!col[u].is_zero() && col[u].is_constant()) return false;
  return true;
}

namespace {

HilbertSeries hs_free(RingPtr R, const FreeModule& F) {
  return hilbert_series_quotient_S(F, ring_columns(*R, F));
}

HilbertSeries hs_add(const HilbertSeries& a, const HilbertSeries& b, bool subtract) {
  if (a.denom != b.denom) throw Error("hilbert series arithmetic: denominators differ");
  HilbertSeries out;
  out.denom = a.denom;
  out.num = subtract ? a.num - b.num : a.num + b.num;
  return out;
}

}  // namespace

bool resolution_hilbert_certificate(const Resolution& r) {
  RingPtr R = r.C.R;
  HilbertSeries acc;
  acc.denom = static_cast<int>(R->nvars());
  for (std::size_t i = 0; i < r.C.F.size(); ++i)
    acc = hs_add(acc, hs_free(R, r.C.F[i]), i % 2 == 1);
  if (!r.complete) {
    // capped: correct by the Hilbert series of the remaining kernel
    const FreeModule& FL = r.C.F.back();
    std::vector<VecPoly> cols = r.last_kernel;
    auto ringcols = ring_columns(*R, FL);
    cols.insert(cols.end(), ringcols.begin(), ringcols.end());
    HilbertSeries hk = hs_add(hs_free(R, FL), hilbert_series_quotient_S(FL, cols), true);
    acc = hs_add(acc, hk, r.C.F.size() % 2 == 1);
  }
  return acc == hilbert_series(*r.M);
}

bool resolution_exactness_audit(const Resolution& r) {
  RingPtr R = r.C.R;
  int L = r.length();
  int lo = r.M->ngens() == 0 ? 0 : min_gen_degree(*r.M);
  int hi = lo + std::max(R->dim, 0) + L;
  std::vector<ModPtr> Fi;
  for (const auto& F : r.C.F) Fi.push_back(free_module(R, F.degs));
  std::vector<Morphism> d(1);
  for (int i = 1; i <= L; ++i) d.push_back(make_morphism(Fi[i], Fi[i - 1], r.C.d[i], false));
  for (int j = lo; j <= hi; ++j) {
    std::vector<PieceBasis> B;
    for (int i = 0; i <= L; ++i) B.push_back(piece_basis(*Fi[i], j));
    std::vector<std::size_t> rk(L + 2, 0);
    for (int i = 1; i <= L; ++i)
      rk[i] = mat_rank(morphism_piece_matrix(d[i], B[i], B[i - 1]));
    if (static_cast<std::size_t>(piece_dim(*r.M, j)) + rk[1] != B[0].dim()) return false;
    for (int i = 1; i < L; ++i)
      if (B[i].dim() != rk[i] + rk[i + 1]) return false;
    if (L >= 1 && r.complete && rk[L] != B[L].dim()) return false;
  }
  return true;
}

Complex koszul_complex(RingPtr R, const std::vector<Polynomial>& elems) {
  CtxPtr ctx = R->ctx;
  std::vector<Polynomial> es;
  for (const auto& f : elems) {
    Polynomial g = normal_form(f, R->rel_gb);
    if (g.is_zero()) throw Error("koszul complex: zero element");
    if (!g.is_homogeneous()) throw Error("koszul complex: element is not homogeneous");
    es.push_back(std::move(g));
  }
  unsigned r = static_cast<unsigned>(es.size());
  std::vector<std::vector<unsigned>> subsets(r + 1);
  for (unsigned mask = 0; mask < (1u << r); ++mask)
    subsets[std::popcount(mask)].push_back(mask);
  std::vector<std::size_t> pos(1u << r);
  for (auto& list : subsets)
    for (std::size_t k = 0; k < list.size(); ++k) pos[list[k]] = k;

  Complex C;
  C.R = R;
  C.d.push_back({});
  for (unsigned q = 0; q <= r; ++q) {
    std::vector<int> degs;
    for (unsigned mask : subsets[q]) {
      int s = 0;
      for (unsigned l = 0; l < r; ++l)
        if (mask & (1u << l)) s += es[l].degree();
      degs.push_back(s);
    }
    C.F.push_back(FreeModule{ctx, degs});
    if (q == 0) continue;
    std::vector<VecPoly> cols;
    for (unsigned mask : subsets[q]) {
      VecPoly col(ctx, subsets[q - 1].size());
      int p = 0;
      for (unsigned l = 0; l < r; ++l) {
        if (!(mask & (1u << l))) continue;
        ++p;  // 1-based position of l within mask
        Scalar sgn = ctx->field.from_int(p % 2 == 1 ? 1 : -1);
        std::size_t tgt = pos[mask & ~(1u << l)];
        col[tgt] = col[tgt] + es[l].scaled(sgn);
      }
      cols.push_back(std::move(col));
    }
    C.d.push_back(std::move(cols));
  }
  validate_complex(C);
  return C;
}

int koszul_depth(ModPtr M) {
  if (is_zero_module(*M)) throw Error("depth of the zero module");
  RingPtr R = M->R;
  CtxPtr ctx = M->ctx();
  unsigned n = static_cast<unsigned>(ctx->nvars());
  if (n == 0) return 0;
  std::size_t rm = M->ngens();

  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    subsets[std::popcount(mask)].push_back(mask);
  std::vector<std::size_t> pos(1u << n);
  for (auto& list : subsets)
    for (std::size_t k = 0; k < list.size(); ++k) pos[list[k]] = k;

  // K_q(x_1..x_n) ⊗ M, generator (σ, j) at index pos(σ)*rm + j
  std::vector<ModPtr> K(n + 1);
  for (unsigned q = 0; q <= n; ++q) {
    std::vector<int> degs(subsets[q].size() * rm);
    std::vector<VecPoly> rels;
    for (std::size_t s = 0; s < subsets[q].size(); ++s)
      for (std::size_t j = 0; j < rm; ++j) degs[s * rm + j] = M->F0.degs[j] + static_cast<int>(q);
    for (std::size_t s = 0; s < subsets[q].size(); ++s)
      for (const auto& rel : M->rels) {
        VecPoly v(ctx, degs.size());
        for (std::size_t j = 0; j < rm; ++j) v[s * rm + j] = rel[j];
        rels.push_back(std::move(v));
      }
    K[q] = Module::make(R, std::move(degs), std::move(rels));
  }
  ModPtr zero = free_module(R, {});

  auto dmap = [&](unsigned q) -> Morphism {
    // d_q : K_q -> K_{q-1}
    std::vector<VecPoly> cols;
    for (unsigned mask : subsets[q])
      for (std::size_t j = 0; j < rm; ++j) {
        VecPoly col(ctx, K[q - 1]->ngens());
        int p = 0;
        for (unsigned l = 0; l < n; ++l) {
          if (!(mask & (1u << l))) continue;
          ++p;
          Scalar sgn = ctx->field.from_int(p % 2 == 1 ? 1 : -1);
          std::size_t tgt = pos[mask & ~(1u << l)] * rm + j;
          col[tgt] = col[tgt] + Polynomial::variable(ctx, l).scaled(sgn);
        }
        cols.push_back(std::move(col));
      }
    return make_morphism(K[q], K[q - 1], std::move(cols), false);
  };

  for (int q = static_cast<int>(n); q >= 0; --q) {
    Morphism f = q == static_cast<int>(n) ? zero_morphism(zero, K[n]) : dmap(q + 1);
    Morphism g = q == 0 ? zero_morphism(K[0], zero) : dmap(q);
    if (!is_zero_module(*homology_at(f, g))) return static_cast<int>(n) - q;
  }
  throw Error("koszul depth: all homology vanished for a nonzero module");
}

std::optional<int> projective_dimension(ModPtr M) {
  if (is_zero_module(*M)) throw Error("projective dimension of the zero module");
  RingPtr R = M->R;
  int cutoff = koszul_depth(ring_module(R)) + 1;
  Resolution res = minimal_free_resolution(std::move(M), cutoff);
  if (res.complete) return res.length();
  return std::nullopt;
}

}  // namespace glc
