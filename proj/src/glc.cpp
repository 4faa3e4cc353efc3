#include "glc/glc.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>
#include <utility>

namespace glc {

namespace {

ModPtr zero_module(RingPtr R) { return Module::make(std::move(R), {}, {}); }

void require_same_ring(const ModPtr& a, const ModPtr& b, const char* who) {
  if (!a || !b || a->R != b->R)
    throw Error(std::string(who) + ": modules must live over the same ring");
}

VecPoly padded(const VecPoly& v, CtxPtr ctx, std::size_t n) {
  VecPoly w(std::move(ctx), n);
  for (std::size_t c = 0; c < v.ncomps() && c < n; ++c) w[c] = v[c];
  return w;
}

// ---------------------------------------------------------------------------
// Semifree resolution of a bounded chain complex of S-modules, built by
// iterated mapping cones: each term's free resolution (kept on the term's own
// generators, so the augmentation is the identity block) is glued onto the
// complex built so far along a chain map v with d∘v = -v∘d.  v_0 lifts the
// incoming differential to an honest cycle; higher v_p solve d x = -v d.
// ---------------------------------------------------------------------------
struct SemifreeComplex {
  CtxPtr ctx;
  std::vector<FreeModule> F;
  std::vector<std::vector<VecPoly>> d;  // d[p]: columns over F[p-1]
};

SemifreeComplex semifree_of_chain(const RingPtr& S, const std::vector<ModPtr>& E,
                                  const std::vector<std::vector<VecPoly>>& ecols) {
  const int l = static_cast<int>(E.size()) - 1;
  const int cap = static_cast<int>(S->nvars()) + 1;
  SemifreeComplex P;
  P.ctx = S->ctx;
  std::vector<std::size_t> slot(l + 1, 0);

  auto ensure_spot = [&](std::size_t p) {
    while (P.F.size() <= p) {
      P.F.push_back(FreeModule{S->ctx, {}});
      P.d.push_back({});
    }
  };
  ensure_spot(0);

  for (int q = 0; q <= l; ++q) {
    Resolution G = free_resolution(E[q], cap, /*minimize=*/false);
    if (!G.complete) throw Error("hyperext: ambient resolution did not terminate");
    const int Lg = G.length();

    // connecting chain map v_p : G_p -> P_{q+p-1}, built against the old P
    std::vector<std::vector<VecPoly>> v(Lg + 1);
    if (q >= 1) {
      const std::size_t rprev = E[q - 1]->ngens();
      const std::size_t amb = (q >= 2) ? P.F[q - 2].rank() : 0;
      // product module free(P_{q-2}) ⊕ E_{q-1}: solving (d z, α z) = (0, w)
      std::vector<int> ydegs = (q >= 2) ? P.F[q - 2].degs : std::vector<int>{};
      for (int dg : E[q - 1]->F0.degs) ydegs.push_back(dg);
      std::vector<VecPoly> yrels;
      for (const auto& r : E[q - 1]->rels) {
        VecPoly rr(S->ctx, ydegs.size());
        for (std::size_t c = 0; c < r.ncomps(); ++c) rr[amb + c] = r[c];
        yrels.push_back(std::move(rr));
      }
      ModPtr Y = Module::make(S, ydegs, yrels);
      const std::size_t rk = P.F[q - 1].rank();
      std::vector<VecPoly> gens;
      for (std::size_t jj = 0; jj < rk; ++jj) {
        VecPoly gcol(S->ctx, ydegs.size());
        if (q >= 2) {
          const VecPoly& dc = P.d[q - 1][jj];
          for (std::size_t c = 0; c < dc.ncomps(); ++c) gcol[c] = dc[c];
        }
        if (jj >= slot[q - 1] && jj < slot[q - 1] + rprev)
          gcol[amb + (jj - slot[q - 1])] = Polynomial::constant(S->ctx, 1);
        gens.push_back(std::move(gcol));
      }
      for (std::size_t w = 0; w < E[q]->ngens(); ++w) {
        VecPoly tgt(S->ctx, ydegs.size());
        const VecPoly& ec = ecols[q][w];
        for (std::size_t c = 0; c < ec.ncomps(); ++c) tgt[amb + c] = ec[c];
        auto sol = express_in(*Y, gens, tgt);
        if (!sol) throw Error("hyperext: cycle lift failed");
        VecPoly vv(S->ctx, rk);
        for (std::size_t jj = 0; jj < rk; ++jj) vv[jj] = (*sol)[jj];
        v[0].push_back(std::move(vv));
      }
      for (int p = 1; p <= Lg; ++p) {
        const std::size_t spot = q + p - 1;
        ensure_spot(spot);
        const std::size_t rk_p = P.F[spot].rank();
        ModPtr Bfree = Module::make(S, P.F[spot - 1].degs, {});
        for (std::size_t w = 0; w < G.C.F[p].rank(); ++w) {
          const VecPoly& gw = G.C.d[p][w];
          VecPoly y(S->ctx, P.F[spot - 1].rank());
          for (std::size_t u = 0; u < gw.ncomps(); ++u) {
            if (gw[u].is_zero()) continue;
            const VecPoly& vu = v[p - 1][u];
            for (std::size_t c = 0; c < vu.ncomps(); ++c) y[c] = y[c] - gw[u] * vu[c];
          }
          if (y.is_zero()) {
            v[p].push_back(VecPoly(S->ctx, rk_p));
            continue;
          }
          auto sol = express_in(*Bfree, P.d[spot], y);
          if (!sol) throw Error("hyperext: boundary lift failed");
          VecPoly vv(S->ctx, rk_p);
          for (std::size_t jj = 0; jj < rk_p && jj < sol->size(); ++jj) vv[jj] = (*sol)[jj];
          v[p].push_back(std::move(vv));
        }
      }
    }

    // attach the cone: P'_p = P_p ⊕ G_{p-q}
    std::vector<std::size_t> off(Lg + 1);
    for (int p = 0; p <= Lg; ++p) {
      ensure_spot(q + p);
      off[p] = P.F[q + p].rank();
    }
    slot[q] = off[0];
    for (int p = 0; p <= Lg; ++p)
      for (int dg : G.C.F[p].degs) P.F[q + p].degs.push_back(dg);
    // keep every column at spot m sized to the new rank of F[m-1]
    for (int p = 0; p <= Lg; ++p) {
      const std::size_t sp = q + p;
      if (sp + 1 < P.d.size())
        for (auto& col : P.d[sp + 1]) col = padded(col, S->ctx, P.F[sp].rank());
    }
    for (int p = 0; p <= Lg; ++p) {
      if (q + p == 0) continue;
      for (std::size_t w = 0; w < G.C.F[p].rank(); ++w) {
        VecPoly col(S->ctx, P.F[q + p - 1].rank());
        if (q >= 1) {
          const VecPoly& vw = v[p][w];
          for (std::size_t c = 0; c < vw.ncomps(); ++c) col[c] = vw[c];
        }
        if (p >= 1) {
          const VecPoly& gw = G.C.d[p][w];
          for (std::size_t c = 0; c < gw.ncomps(); ++c) col[off[p - 1] + c] = gw[c];
        }
        P.d[q + p].push_back(std::move(col));
      }
    }
  }
  return P;
}

// H^m(Hom_S(P, ω_S)) with ω_S = S(-n); free cochain spots, honest cohomology
ModPtr hyperext_spot(const RingPtr& S, const SemifreeComplex& P, int m) {
  const int n = static_cast<int>(S->nvars());
  const int top = static_cast<int>(P.F.size()) - 1;
  if (m < 0 || m > top) return zero_module(S);
  auto homdegs = [&](int p) {
    std::vector<int> dgs;
    for (int a : P.F[p].degs) dgs.push_back(n - a);
    return dgs;
  };
  auto delta_cols = [&](int p) {
    std::vector<VecPoly> cols;
    const std::size_t src = P.F[p].rank();
    const std::size_t dst = (p + 1 <= top) ? P.F[p + 1].rank() : 0;
    for (std::size_t u = 0; u < src; ++u) {
      VecPoly col(S->ctx, dst);
      for (std::size_t w = 0; w < dst; ++w) col[w] = P.d[p + 1][w][u];
      cols.push_back(std::move(col));
    }
    return cols;
  };
  ModPtr Hm = Module::make(S, homdegs(m), {});
  ModPtr Hprev = (m >= 1) ? Module::make(S, homdegs(m - 1), {}) : zero_module(S);
  ModPtr Hnext = (m + 1 <= top) ? Module::make(S, homdegs(m + 1), {}) : zero_module(S);
  Morphism f = (m >= 1) ? make_morphism(Hprev, Hm, delta_cols(m - 1), /*validate=*/false)
                        : zero_morphism(Hprev, Hm);
  Morphism g = (m + 1 <= top) ? make_morphism(Hm, Hnext, delta_cols(m), /*validate=*/false)
                              : zero_morphism(Hm, Hnext);
  return homology_at(f, g);
}

}  // namespace

ModPtr generalized_deficiency(int i, ModPtr N, ModPtr M) {
  require_same_ring(N, M, "generalized deficiency");
  RingPtr R = N->R;
  if (!is_gorenstein(R)) throw Error("generalized deficiency: ring is not Gorenstein");
  if (i < 0) throw Error("generalized deficiency: negative index");
  if (is_zero_module(*N) || is_zero_module(*M)) return zero_module(R);
  if (!projective_dimension(M))
    throw Error("generalized deficiency: M must have finite projective dimension");
  const int t = R->dim;
  if (i > t) return zero_module(R);
  return ext_module(t - i, N, M);
}

GenDeficiencyTable gen_deficiency_table(ModPtr N, ModPtr M) {
  require_same_ring(N, M, "generalized deficiency");
  RingPtr R = N->R;
  if (!is_gorenstein(R)) throw Error("generalized deficiency: ring is not Gorenstein");
  if (is_zero_module(*N) || is_zero_module(*M))
    throw Error("generalized deficiency: zero module");
  if (!projective_dimension(M))
    throw Error("generalized deficiency: M must have finite projective dimension");
  const int t = R->dim;
  auto g = grade_module(N, M);
  if (!g) throw Error("grade infinite, no canonical module");
  GenDeficiencyTable tab;
  tab.g = *g;
  tab.s = t - *g;
  Resolution res = free_resolution(N, t + 1);
  for (int i = 0; i <= t; ++i) tab.entries.push_back(ext_data_from(res, t - i, M).ext);
  return tab;
}

std::pair<int, ModPtr> generalized_canonical(ModPtr N, ModPtr M) {
  require_same_ring(N, M, "generalized canonical");
  RingPtr R = N->R;
  if (!is_gorenstein(R)) throw Error("generalized canonical: ring is not Gorenstein");
  if (is_zero_module(*N) || is_zero_module(*M))
    throw Error("generalized canonical: zero module");
  if (!projective_dimension(M))
    throw Error("generalized canonical: M must have finite projective dimension");
  auto g = grade_module(N, M);
  if (!g) throw Error("grade infinite, no canonical module");
  return {R->dim - *g, ext_module(*g, N, M)};
}

ModPtr hyperext_dualizing(int j, ModPtr N, ModPtr M) {
  require_same_ring(N, M, "hyperext");
  RingPtr R = M->R;
  if (is_zero_module(*M) || is_zero_module(*N)) return zero_module(R);
  auto pdM = projective_dimension(M);
  if (!pdM) throw Error("hyperext: M must have finite projective dimension");
  RingPtr S = ambient_ring(R);
  const int n = static_cast<int>(R->nvars());
  const int t = R->dim;
  Resolution F = free_resolution(M, *pdM);
  if (!F.complete) throw Error("hyperext: resolution incomplete at pd");
  const int lt = F.length();
  HomComplex HC = hom_complex(F.C, N);
  std::vector<ModPtr> E(lt + 1);
  std::vector<std::vector<VecPoly>> ecols(lt + 1);
  for (int q = 0; q <= lt; ++q) E[q] = as_ambient_module(HC.H[lt - q]);
  for (int q = 1; q <= lt; ++q) ecols[q] = HC.delta[lt - q].cols;
  SemifreeComplex P = semifree_of_chain(S, E, ecols);
  ModPtr HmS = hyperext_spot(S, P, n - t + j + lt);
  return as_ring_module(R, HmS);
}

DualSideModule glc_dual_side(int i, ModPtr M, ModPtr N) {
  require_same_ring(M, N, "dual side");
  RingPtr R = M->R;
  const int t = R->dim;
  DualSideModule out;
  out.i = i;
  if (is_zero_module(*M) || is_zero_module(*N)) {
    out.module = zero_module(R);
    return out;
  }
  auto pdM = projective_dimension(M);
  if (!pdM) throw Error("dual side: M must have finite projective dimension");
  bool cm_route = ring_is_cohen_macaulay(R);
  ModPtr KR;
  if (cm_route) {
    KR = canonical_module_ring(R);
    for (int q = 1; q <= *pdM && cm_route; ++q)
      if (!is_zero_module(*tor_module(q, M, KR))) cm_route = false;
  }
  out.route = cm_route ? DualRoute::CMCanonical : DualRoute::HyperextDualizing;
  if (i < 0 || i > t) {
    out.module = zero_module(R);
    return out;
  }
  out.module = cm_route ? ext_module(t - i, N, tensor(M, KR))
                        : hyperext_dualizing(t - i, N, M);
  return out;
}

TruncatedLimit glc_truncated_limit(int i, const Ideal& a, ModPtr M, ModPtr N, int n_max,
                                   std::optional<std::pair<int, int>> window) {
  require_same_ring(M, N, "limit");
  RingPtr R = M->R;
  if (i < 0) throw Error("limit: negative cohomological degree");
  if (n_max < 2) throw Error("limit: n_max must be at least 2");
  if (a.ctx() && a.ctx() != R->ctx) throw Error("limit: ideal over a different ring");

  TruncatedLimit out;
  out.i = i;
  out.n_max = n_max;
  out.window = window ? *window : default_window(M, N);

  struct Stage {
    Resolution res;
    ModPtr ext;
    std::vector<VecPoly> reps;
    ModPtr hom_i;
    ModPtr hom_mod_cob;  // Hom(F_i, N) with coboundaries folded into the relations
  };
  std::vector<Stage> st;
  ModPtr zero = zero_module(R);
  const std::size_t rk0 = M->F0.rank();
  for (int n = 1; n <= n_max; ++n) {
    Ideal pw = ideal_power(a, n);
    std::vector<VecPoly> rels = M->rels;
    for (const auto& gp : pw.basis())
      for (std::size_t j = 0; j < rk0; ++j) {
        VecPoly col(R->ctx, rk0);
        col[j] = gp;
        rels.push_back(std::move(col));
      }
    ModPtr Mn = Module::make(R, M->F0.degs, rels);
    Stage s;
    s.res = free_resolution(Mn, i + 1, /*minimize=*/false);
    const int L = s.res.length();
    if (i > L) {
      s.ext = zero;
      s.hom_i = zero;
      s.hom_mod_cob = zero;
    } else {
      HomComplex HC = hom_complex(s.res.C, N);
      Morphism f = (i >= 1) ? HC.delta[i - 1] : zero_morphism(zero, HC.H[0]);
      Morphism g = (i < L) ? HC.delta[i] : zero_morphism(HC.H[i], zero);
      auto hd = homology_data(f, g);
      s.ext = hd.H;
      s.reps = hd.reps;
      s.hom_i = HC.H[i];
      std::vector<VecPoly> brels = HC.H[i]->rels;
      if (i >= 1)
        for (const auto& c : HC.delta[i - 1].cols) brels.push_back(c);
      s.hom_mod_cob = Module::make(R, HC.H[i]->F0.degs, brels);
    }
    out.stages.push_back(s.ext);
    st.push_back(std::move(s));
  }

  const std::size_t rn = N->ngens();
  for (int k = 0; k + 1 < n_max; ++k) {
    const Stage& A = st[k];
    const Stage& B = st[k + 1];
    if (is_zero_module(*A.ext) || is_zero_module(*B.ext)) {
      out.transitions.push_back(zero_morphism(A.ext, B.ext));
      continue;
    }
    // chain map φ over the shared F0 (both resolutions keep M's generators)
    std::vector<std::vector<VecPoly>> phi(i + 1);
    for (std::size_t u = 0; u < rk0; ++u) phi[0].push_back(VecPoly::unit(R->ctx, rk0, u));
    for (int p = 1; p <= i; ++p) {
      ModPtr Bfree = free_module(R, A.res.C.F[p - 1].degs);
      for (const auto& bcol : B.res.C.d[p]) {
        VecPoly y(R->ctx, A.res.C.F[p - 1].rank());
        for (std::size_t u = 0; u < bcol.ncomps(); ++u) {
          if (bcol[u].is_zero()) continue;
          const VecPoly& pu = phi[p - 1][u];
          for (std::size_t c = 0; c < pu.ncomps(); ++c) y[c] = y[c] + bcol[u] * pu[c];
        }
        auto sol = express_in(*Bfree, A.res.C.d[p], y);
        if (!sol) throw Error("limit: chain map lift failed");
        VecPoly col(R->ctx, A.res.C.F[p].rank());
        for (std::size_t u = 0; u < col.ncomps() && u < sol->size(); ++u) col[u] = (*sol)[u];
        phi[p].push_back(std::move(col));
      }
    }
    // induced map on Ext^i: precompose representatives with φ_i
    const std::size_t rB = B.res.C.F[i].rank();
    std::vector<VecPoly> cols;
    for (const auto& z : A.reps) {
      VecPoly zphi(R->ctx, rB * rn);
      for (std::size_t w = 0; w < rB; ++w) {
        const VecPoly& pw = phi[i][w];
        for (std::size_t u = 0; u < pw.ncomps(); ++u) {
          if (pw[u].is_zero()) continue;
          for (std::size_t jn = 0; jn < rn; ++jn)
            zphi[w * rn + jn] = zphi[w * rn + jn] + pw[u] * z[u * rn + jn];
        }
      }
      auto sol = express_in(*B.hom_mod_cob, B.reps, zphi);
      if (!sol) throw Error("limit: transition lift failed");
      VecPoly col(R->ctx, B.reps.size());
      for (std::size_t u = 0; u < B.reps.size(); ++u) col[u] = (*sol)[u];
      cols.push_back(std::move(col));
    }
    out.transitions.push_back(make_morphism(A.ext, B.ext, std::move(cols)));
  }

  bool all_ok = true;
  for (int j = out.window.first; j <= out.window.second; ++j) {
    std::optional<long long> val;
    if (out.transitions.size() >= 2) {
      const Morphism& TA = out.transitions[out.transitions.size() - 2];
      const Morphism& TB = out.transitions[out.transitions.size() - 1];
      Mat A = morphism_piece_matrix(TA, j);
      Mat B = morphism_piece_matrix(TB, j);
      const std::size_t ra = mat_rank(A), rb = mat_rank(B), rc = mat_rank(B.mul(A));
      if (ra == rb && rb == rc) val = static_cast<long long>(rc);
    }
    if (!val) all_ok = false;
    out.limit_hilbert[j] = val;
  }
  out.stabilized = all_ok;
  return out;
}

CechResult graded_cech_cohomology(int i, const std::vector<Polynomial>& elems, ModPtr M,
                                  ModPtr N, std::optional<std::pair<int, int>> window,
                                  int step_bound) {
  require_same_ring(M, N, "cech");
  RingPtr R = M->R;
  if (i < 0) throw Error("cech: negative cohomological degree");
  if (step_bound < 1) throw Error("cech: step bound must be positive");

  CechResult out;
  out.i = i;
  out.step_bound = step_bound;
  out.window = window ? *window : default_window(M, N);

  std::vector<Polynomial> fs;
  for (const auto& f : elems) {
    Polynomial nf = normal_form(f, R->rel_gb);
    if (nf.is_zero()) throw Error("cech: element is zero in the ring");
    if (!nf.is_homogeneous()) throw Error("cech: element is not homogeneous");
    fs.push_back(std::move(nf));
  }

  if (is_zero_module(*M) || is_zero_module(*N)) {
    for (int j = out.window.first; j <= out.window.second; ++j) out.values[j] = 0;
    out.conclusive = true;
    return out;
  }

  const Field Kf = R->ctx->field;
  Resolution F = free_resolution(M, i + 1);
  HomComplex HC = hom_complex(F.C, N);
  const int L = F.length();
  const int r = static_cast<int>(fs.size());
  std::vector<int> df;
  for (const auto& f : fs) df.push_back(f.degree());

  std::vector<std::vector<unsigned>> subs(r + 1);
  for (unsigned msk = 0; msk < (1u << r); ++msk)
    subs[static_cast<int>(std::popcount(msk))].push_back(msk);
  auto dsum = [&](unsigned msk) {
    int s = 0;
    for (int l2 = 0; l2 < r; ++l2)
      if (msk >> l2 & 1u) s += df[l2];
    return s;
  };

  const int s_hi = step_bound;
  const int s_lo = std::max(1, step_bound - 2);
  std::map<int, std::vector<Polynomial>> pw_cache;  // f_l^s
  auto fpow = [&](int l2, int s) -> Polynomial {
    auto& v = pw_cache[l2];
    if (v.empty()) v.push_back(Polynomial::constant(R->ctx, 1));
    while (static_cast<int>(v.size()) <= s) v.push_back(normal_form(v.back() * fs[l2], R->rel_gb));
    return v[s];
  };
  auto fprod = [&](unsigned msk) {
    Polynomial p = Polynomial::constant(R->ctx, 1);
    for (int l2 = 0; l2 < r; ++l2)
      if (msk >> l2 & 1u) p = normal_form(p * fs[l2], R->rel_gb);
    return p;
  };

  std::map<std::pair<int, int>, PieceBasis> bases;
  auto basis_at = [&](int p, int jj) -> const PieceBasis& {
    auto key = std::make_pair(p, jj);
    auto it = bases.find(key);
    if (it == bases.end()) it = bases.emplace(key, piece_basis(*HC.H[p], jj)).first;
    return it->second;
  };

  struct Layout {
    std::vector<std::tuple<int, unsigned, std::size_t>> blocks;  // p, mask, offset
    std::map<std::pair<int, unsigned>, std::size_t> off;
    std::size_t dim = 0;
  };
  auto layout = [&](int s, int j, int m) {
    Layout lay;
    if (m < 0) return lay;
    for (int qq = std::max(0, m - L); qq <= std::min(m, r); ++qq) {
      const int p = m - qq;
      for (unsigned msk : subs[qq]) {
        const PieceBasis& b = basis_at(p, j + s * dsum(msk));
        lay.off[{p, msk}] = lay.dim;
        lay.blocks.emplace_back(p, msk, lay.dim);
        lay.dim += b.dim();
      }
    }
    return lay;
  };
  auto add_block = [&](Mat& D, const Mat& blk, std::size_t ro, std::size_t co, bool negate) {
    for (std::size_t rr = 0; rr < blk.nrows; ++rr)
      for (std::size_t cc = 0; cc < blk.ncols; ++cc) {
        if (Kf.is_zero(blk.at(rr, cc))) continue;
        Scalar x = negate ? Kf.neg(blk.at(rr, cc)) : blk.at(rr, cc);
        D.at(ro + rr, co + cc) = Kf.add(D.at(ro + rr, co + cc), x);
      }
  };
  // total differential out of spot m: Čech part plus (-1)^{|σ|} Hom part
  auto total_matrix = [&](int s, int j, const Layout& src, const Layout& dst) {
    Mat D(Kf, dst.dim, src.dim);
    for (const auto& [p, msk, off] : src.blocks) {
      const PieceBasis& sb = basis_at(p, j + s * dsum(msk));
      if (sb.dim() == 0) continue;
      const int qq = std::popcount(msk);
      if (p + 1 <= L) {
        auto it = dst.off.find({p + 1, msk});
        if (it != dst.off.end()) {
          const PieceBasis& db = basis_at(p + 1, j + s * dsum(msk));
          if (db.dim())
            add_block(D, morphism_piece_matrix(HC.delta[p], sb, db), it->second, off,
                      qq % 2 == 1);
        }
      }
      for (int l2 = 0; l2 < r; ++l2) {
        if (msk >> l2 & 1u) continue;
        const unsigned nm = msk | (1u << l2);
        auto it = dst.off.find({p, nm});
        if (it == dst.off.end()) continue;
        const PieceBasis& db = basis_at(p, j + s * dsum(nm));
        if (!db.dim()) continue;
        const int smaller = std::popcount(msk & ((1u << l2) - 1u));
        add_block(D, mult_piece_matrix(*HC.H[p], fpow(l2, s), sb, db), it->second, off,
                  smaller % 2 == 1);
      }
    }
    return D;
  };
  auto trans_matrix = [&](int s, int j, const Layout& src, const Layout& dst) {
    Mat T(Kf, dst.dim, src.dim);
    for (const auto& [p, msk, off] : src.blocks) {
      const PieceBasis& sb = basis_at(p, j + s * dsum(msk));
      if (sb.dim() == 0) continue;
      const PieceBasis& db = basis_at(p, j + (s + 1) * dsum(msk));
      if (!db.dim()) continue;
      add_block(T, mult_piece_matrix(*HC.H[p], fprod(msk), sb, db), dst.off.at({p, msk}), off,
                false);
    }
    return T;
  };

  bool all_ok = true;
  for (int j = out.window.first; j <= out.window.second; ++j) {
    std::vector<QuotientSpace> Q;
    std::vector<Layout> lay0;
    for (int s = s_lo; s <= s_hi; ++s) {
      Layout lm1 = layout(s, j, i - 1);
      Layout l0 = layout(s, j, i);
      Layout l1 = layout(s, j, i + 1);
      Mat Dprev = (i >= 1) ? total_matrix(s, j, lm1, l0) : Mat(Kf, l0.dim, 0);
      Mat Dcur = total_matrix(s, j, l0, l1);
      Q.push_back(quotient_space(Dcur, Dprev));
      lay0.push_back(std::move(l0));
    }
    std::optional<long long> val;
    if (s_hi - s_lo >= 2) {
      std::vector<Mat> B;
      for (int s = s_lo; s < s_hi; ++s) {
        const std::size_t k = s - s_lo;
        Mat T = trans_matrix(s, j, lay0[k], lay0[k + 1]);
        Mat Bk(Kf, Q[k + 1].dim(), Q[k].dim());
        for (std::size_t cc = 0; cc < Q[k].dim(); ++cc) {
          std::vector<Scalar> rep(Q[k].ambient);
          for (std::size_t rr = 0; rr < Q[k].ambient; ++rr) rep[rr] = Q[k].reps.at(rr, cc);
          std::vector<Scalar> img = T.apply(rep);
          std::vector<Scalar> crd = Q[k + 1].coords(img);
          for (std::size_t rr = 0; rr < Bk.nrows; ++rr) Bk.at(rr, cc) = crd[rr];
        }
        B.push_back(std::move(Bk));
      }
      const std::size_t last = B.size() - 1;
      const std::size_t ra = mat_rank(B[last - 1]), rb = mat_rank(B[last]),
                        rc = mat_rank(B[last].mul(B[last - 1]));
      if (ra == rb && rb == rc) val = static_cast<long long>(rc);
    }
    if (!val) all_ok = false;
    out.values[j] = val;
  }
  out.conclusive = all_ok;
  return out;
}

int top_nonvanishing(ModPtr M, ModPtr N) {
  require_same_ring(M, N, "top");
  RingPtr R = M->R;
  if (!is_gorenstein(R)) throw Error("top: ring is not Gorenstein");
  if (is_zero_module(*M) || is_zero_module(*N)) throw Error("top: zero module");
  if (!projective_dimension(M) && !projective_dimension(N))
    throw Error("top: need finite projective dimension on one side");
  auto g = grade_module(N, M);
  if (!g) throw Error("top: modules have disjoint support");
  return R->dim - *g;
}

int cohomological_dimension_at_m(ModPtr N) {
  if (!N) throw Error("cd: missing module");
  auto d = krull_dim(*N);
  if (!d) throw Error("cd: zero module");
  return *d;
}

std::pair<int, int> default_window(ModPtr M, ModPtr N) {
  const int n = static_cast<int>(M->R->nvars());
  const int md = std::max(max_pres_degree(*M), max_pres_degree(*N));
  return {-(n + md) - 4, md + 4};
}

}  // namespace glc
