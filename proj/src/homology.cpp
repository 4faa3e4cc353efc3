#include "glc/homology.hpp"

#include <random>

namespace glc {

ModPtr block_sum(ModPtr N, const std::vector<int>& shifts) {
  CtxPtr ctx = N->ctx();
  std::size_t rn = N->ngens();
  std::vector<int> degs(shifts.size() * rn);
  for (std::size_t u = 0; u < shifts.size(); ++u)
    for (std::size_t j = 0; j < rn; ++j) degs[u * rn + j] = N->F0.degs[j] - shifts[u];
  std::vector<VecPoly> rels;
  for (std::size_t u = 0; u < shifts.size(); ++u)
    for (const auto& r : N->rels) {
      VecPoly v(ctx, degs.size());
      for (std::size_t j = 0; j < rn; ++j) v[u * rn + j] = r[j];
      rels.push_back(std::move(v));
    }
  return Module::make(N->R, std::move(degs), std::move(rels));
}

HomComplex hom_complex(const Complex& C, ModPtr N) {
  CtxPtr ctx = N->ctx();
  std::size_t rn = N->ngens();
  HomComplex out;
  for (const auto& F : C.F) out.H.push_back(block_sum(N, F.degs));
  for (std::size_t p = 0; p + 1 < C.F.size(); ++p) {
    // gen (u,j) of H[p] maps to Σ_w d_{p+1}[w][u] · gen (w,j)
    std::vector<VecPoly> cols;
    for (std::size_t u = 0; u < C.F[p].rank(); ++u)
      for (std::size_t j = 0; j < rn; ++j) {
        VecPoly col(ctx, out.H[p + 1]->ngens());
        for (std::size_t w = 0; w < C.F[p + 1].rank(); ++w) {
          const Polynomial& a = C.d[p + 1][w][u];
          if (!a.is_zero()) col[w * rn + j] = col[w * rn + j] + a;
        }
        cols.push_back(std::move(col));
      }
    out.delta.push_back(make_morphism(out.H[p], out.H[p + 1], std::move(cols), false));
  }
  return out;
}

TensorComplex tensor_complex(const Complex& C, ModPtr N) {
  CtxPtr ctx = N->ctx();
  std::size_t rn = N->ngens();
  TensorComplex out;
  for (const auto& F : C.F) {
    std::vector<int> shifts;
    for (int a : F.degs) shifts.push_back(-a);
    out.T.push_back(block_sum(N, shifts));
  }
  out.d.resize(1);
  for (std::size_t p = 1; p < C.F.size(); ++p) {
    // gen (u,j) of T[p] maps to Σ_w d_p[u][w] · gen (w,j)
    std::vector<VecPoly> cols;
    for (std::size_t u = 0; u < C.F[p].rank(); ++u)
      for (std::size_t j = 0; j < rn; ++j) {
        VecPoly col(ctx, out.T[p - 1]->ngens());
        for (std::size_t w = 0; w < C.F[p - 1].rank(); ++w) {
          const Polynomial& b = C.d[p][u][w];
          if (!b.is_zero()) col[w * rn + j] = col[w * rn + j] + b;
        }
        cols.push_back(std::move(col));
      }
    out.d.push_back(make_morphism(out.T[p], out.T[p - 1], std::move(cols), false));
  }
  return out;
}

ExtData ext_data(int i, ModPtr M, ModPtr N) {
  if (i < 0) throw Error("ext: negative index");
  if (M->R != N->R) throw Error("ext: modules over different rings");
  return ext_data_from(minimal_free_resolution(M, i + 1), i, N);
}

ExtData ext_data_from(const Resolution& res, int i, ModPtr N) {
  if (i < 0) throw Error("ext: negative index");
  int L = res.length();
  if (!res.complete && L < i + 1)
    throw Error("ext: resolution too short for the requested index");
  RingPtr R = res.C.R;
  ModPtr zero = free_module(R, {});
  if (i > L) return ExtData{zero, {}, zero, res};
  HomComplex HC = hom_complex(res.C, N);
  Morphism f = i >= 1 ? HC.delta[i - 1] : zero_morphism(zero, HC.H[0]);
  Morphism g = i < L ? HC.delta[i] : zero_morphism(HC.H[i], zero);
  HomologyData hd = homology_data(f, g);
  return ExtData{hd.H, hd.reps, HC.H[i], res};
}

ModPtr ext_module(int i, ModPtr M, ModPtr N) { return ext_data(i, std::move(M), std::move(N)).ext; }

ModPtr tor_module(int i, ModPtr M, ModPtr N) {
  if (i < 0) throw Error("tor: negative index");
  if (M->R != N->R) throw Error("tor: modules over different rings");
  Resolution res = minimal_free_resolution(M, i + 1);
  int L = res.length();
  RingPtr R = res.C.R;
  ModPtr zero = free_module(R, {});
  if (i > L) return zero;
  TensorComplex TC = tensor_complex(res.C, N);
  Morphism f = i + 1 <= L ? TC.d[i + 1] : zero_morphism(zero, TC.T[i]);
  Morphism g = i >= 1 ? TC.d[i] : zero_morphism(TC.T[0], zero);
  return homology_at(f, g);
}

std::optional<int> grade_ideal(const Ideal& c, ModPtr M) {
  if (is_zero_module(*M)) throw Error("grade: zero module");
  if (ideal_sum(c, annihilator(*M)).is_one()) return std::nullopt;  // cM = M
  RingPtr R = M->R;
  ModPtr Rc = quotient_module(R, c.gens());
  Resolution res = minimal_free_resolution(Rc, R->dim + 1);
  for (int i = 0; i <= R->dim; ++i)
    if (!is_zero_module(*ext_data_from(res, i, M).ext)) return i;
  throw Error("grade: no nonvanishing Ext up to dim R");
}

std::optional<int> grade_module(ModPtr N, ModPtr M) {
  return grade_ideal(annihilator(*N), std::move(M));
}

namespace {

bool is_regular_on(const Polynomial& f, ModPtr M) {
  int d = f.degree();
  ModPtr src = twist(M, -d);
  std::vector<VecPoly> cols;
  for (std::size_t j = 0; j < M->ngens(); ++j) {
    VecPoly v(M->ctx(), M->ngens());
    v[j] = f;
    cols.push_back(std::move(v));
  }
  Morphism mult = make_morphism(src, M, std::move(cols), false);
  return is_zero_module(*kernel(mult).module);
}

ModPtr quotient_by_element(ModPtr M, const Polynomial& f) {
  std::vector<VecPoly> rels = M->rels;
  for (std::size_t j = 0; j < M->ngens(); ++j) {
    VecPoly v(M->ctx(), M->ngens());
    v[j] = f;
    rels.push_back(std::move(v));
  }
  return Module::make(M->R, M->F0.degs, std::move(rels));
}

}  // namespace

int grade_regseq_oracle(const Ideal& c, ModPtr M, std::uint64_t seed) {
  if (is_zero_module(*M)) throw Error("regular sequence oracle: zero module");
  if (ideal_sum(c, annihilator(*M)).is_one())
    throw Error("regular sequence oracle: infinite grade");
  if (c.gens().empty() || c.is_zero()) return 0;
  CtxPtr ctx = M->ctx();
  const Field& F = ctx->field;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  int d0 = -1;
  for (const auto& g : c.gens())
    if (!g.is_zero() && (d0 < 0 || g.degree() < d0)) d0 = g.degree();
  if (d0 < 0) return 0;

  ModPtr cur = M;
  int len = 0;
  while (true) {
    bool extended = false;
    for (int D = d0; D <= d0 + 2 && !extended; ++D) {
      // spanning set of the degree-D piece of c
      std::vector<Polynomial> span;
      for (const auto& g : c.gens()) {
        if (g.is_zero() || g.degree() > D) continue;
        for (const auto& m : monomials_of_degree(ctx->nvars(), D - g.degree()))
          span.push_back(g.term_mul(m, F.one()));
      }
      if (span.empty()) continue;
      for (int attempt = 0; attempt < 5 && !extended; ++attempt) {
        Polynomial f = Polynomial::zero(ctx);
        for (const auto& s : span)
          f = f + s.scaled(F.from_int(static_cast<long long>(rng() % 101)));
        if (f.is_zero()) continue;
        if (is_regular_on(f, cur)) {
          cur = quotient_by_element(cur, f);
          ++len;
          extended = true;
        }
      }
    }
    if (!extended) return len;
  }
}

int depth_module(ModPtr M) {
  auto g = grade_ideal(irrelevant_ideal(M->ctx()), M);
  if (!g) throw Error("depth: infinite grade of the irrelevant ideal");
  return *g;
}

std::optional<int> injective_dimension(ModPtr N) {
  if (is_zero_module(*N)) throw Error("injective dimension: zero module");
  RingPtr R = N->R;
  int d = R->dim;
  Resolution res = minimal_free_resolution(residue_field(R), d + 2);
  if (!is_zero_module(*ext_data_from(res, d + 1, N).ext)) return std::nullopt;
  int top = -1;
  for (int i = 0; i <= d; ++i)
    if (!is_zero_module(*ext_data_from(res, i, N).ext)) top = i;
  if (top < 0) throw Error("injective dimension: no nonvanishing Bass number");
  return top;
}

ModPtr as_ambient_module(ModPtr M) {
  RingPtr R = M->R;
  if (R->is_polynomial()) return M;
  std::vector<VecPoly> rels = M->rels;
  auto rc = ring_columns(*R, M->F0);
  rels.insert(rels.end(), rc.begin(), rc.end());
  return Module::make(ambient_ring(R), M->F0.degs, std::move(rels));
}

ModPtr as_ring_module(RingPtr R, ModPtr MS) {
  // valid when the ring relations annihilate MS
  return Module::make(R, MS->F0.degs, MS->rels);
}

namespace {

// Ext_S^{n-i}(M_S, ω_S) as an R-module, from a complete ambient resolution
ModPtr deficiency_at(RingPtr R, const Resolution& resS, ModPtr omega, int n, int i) {
  if (n - i < 0) return free_module(R, {});
  return as_ring_module(R, ext_data_from(resS, n - i, omega).ext);
}

Resolution ambient_resolution(ModPtr M) {
  ModPtr MS = as_ambient_module(M);
  int n = static_cast<int>(MS->ctx()->nvars());
  Resolution resS = minimal_free_resolution(MS, n);
  if (!resS.complete) throw Error("ambient resolution did not terminate by step n");
  return resS;
}

}  // namespace

std::vector<ModPtr> deficiency_table(ModPtr M) {
  auto dm = krull_dim(*M);
  if (!dm) throw Error("deficiency table: zero module");
  RingPtr R = M->R;
  RingPtr S = ambient_ring(R);
  int n = static_cast<int>(S->nvars());
  Resolution resS = ambient_resolution(M);
  ModPtr omega = free_module(S, {n});
  std::vector<ModPtr> table;
  for (int i = 0; i <= *dm; ++i) table.push_back(deficiency_at(R, resS, omega, n, i));
  for (int i = *dm + 1; i <= n; ++i)
    if (!is_zero_module(*deficiency_at(R, resS, omega, n, i)))
      throw Error("deficiency table: nonvanishing above dim M");
  if (is_zero_module(*table[*dm])) throw Error("deficiency table: vanishing canonical module");
  return table;
}

ModPtr canonical_module(ModPtr M) {
  auto dm = krull_dim(*M);
  if (!dm) throw Error("canonical module: zero module");
  RingPtr R = M->R;
  RingPtr S = ambient_ring(R);
  int n = static_cast<int>(S->nvars());
  ModPtr K = deficiency_at(R, ambient_resolution(M), free_module(S, {n}), n, *dm);
  if (is_zero_module(*K)) throw Error("canonical module: vanished");
  return K;
}

ModPtr canonical_module_ring(RingPtr R) { return canonical_module(ring_module(std::move(R))); }

bool is_cohen_macaulay(ModPtr M) {
  auto dm = krull_dim(*M);
  if (!dm) throw Error("CM test: zero module");
  return koszul_depth(M) == *dm;
}

bool ring_is_cohen_macaulay(RingPtr R) { return is_cohen_macaulay(ring_module(std::move(R))); }

int ring_type(RingPtr R) {
  Resolution resS = ambient_resolution(ring_module(R));
  return static_cast<int>(resS.C.F.back().rank());
}

bool is_gorenstein(RingPtr R) { return ring_is_cohen_macaulay(R) && ring_type(R) == 1; }

InvariantReport invariant_report(ModPtr M) {
  auto dm = krull_dim(*M);
  if (!dm) throw Error("invariant report: zero module");
  InvariantReport rep;
  rep.dim = *dm;
  rep.depth = depth_module(M);
  rep.pd = projective_dimension(M);
  rep.id = injective_dimension(M);
  rep.cm_defect = rep.dim - rep.depth;
  rep.is_cm = rep.cm_defect == 0;
  rep.gorenstein = is_gorenstein(M->R);
  return rep;
}

}  // namespace glc
