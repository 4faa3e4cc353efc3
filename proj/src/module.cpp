#include "glc/module.hpp"

#include <algorithm>
#include <sstream>

namespace glc {

std::vector<VecPoly> ring_columns(const Ring& R, const FreeModule& F) {
  std::vector<VecPoly> out;
  for (const auto& q : R.rel_gb)
    for (std::size_t j = 0; j < F.rank(); ++j) {
      VecPoly v(R.ctx, F.rank());
      v[j] = q;
      out.push_back(std::move(v));
    }
  return out;
}

ModPtr Module::make(RingPtr R, std::vector<int> degs, std::vector<VecPoly> rels) {
  auto M = std::make_shared<Module>();
  M->R = R;
  M->F0 = FreeModule{R->ctx, std::move(degs)};
  for (auto& col : rels) {
    if (col.ncomps() != M->F0.rank()) throw Error("relation column length mismatch");
    VecPoly r(R->ctx, col.ncomps());
    for (std::size_t i = 0; i < col.ncomps(); ++i) r[i] = normal_form(col[i], R->rel_gb);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous(M->F0))
      throw Error("relation column is not homogeneous: " + r.str());
    M->rels.push_back(std::move(r));
  }
  std::vector<VecPoly> cols = M->rels;
  auto aug = ring_columns(*R, M->F0);
  cols.insert(cols.end(), aug.begin(), aug.end());
  M->gb = buchberger(M->F0, cols).g;
  return M;
}

ModPtr free_module(RingPtr R, std::vector<int> twists) {
  return Module::make(std::move(R), std::move(twists), {});
}

ModPtr ring_module(RingPtr R) { return free_module(std::move(R), {0}); }

ModPtr residue_field(RingPtr R) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < R->ctx->nvars(); ++i)
    vars.push_back(Polynomial::variable(R->ctx, i));
  return quotient_module(std::move(R), vars);
}

ModPtr quotient_module(RingPtr R, const std::vector<Polynomial>& ideal_gens) {
  std::vector<VecPoly> rels;
  for (const auto& f : ideal_gens) {
    VecPoly v(R->ctx, 1);
    v[0] = f;
    rels.push_back(std::move(v));
  }
  return Module::make(std::move(R), {0}, std::move(rels));
}

ModPtr twist(ModPtr M, int d) {
  std::vector<int> degs = M->F0.degs;
  for (int& g : degs) g -= d;
  return Module::make(M->R, std::move(degs), M->rels);
}

ModPtr direct_sum(ModPtr a, ModPtr b) {
  if (a->R != b->R) throw Error("direct sum over different rings");
  CtxPtr ctx = a->ctx();
  std::vector<int> degs = a->F0.degs;
  degs.insert(degs.end(), b->F0.degs.begin(), b->F0.degs.end());
  std::size_t ra = a->ngens(), rb = b->ngens();
  std::vector<VecPoly> rels;
  for (const auto& r : a->rels) {
    VecPoly v(ctx, ra + rb);
    for (std::size_t i = 0; i < ra; ++i) v[i] = r[i];
    rels.push_back(std::move(v));
  }
  for (const auto& r : b->rels) {
    VecPoly v(ctx, ra + rb);
    for (std::size_t i = 0; i < rb; ++i) v[ra + i] = r[i];
    rels.push_back(std::move(v));
  }
  return Module::make(a->R, std::move(degs), std::move(rels));
}

ModPtr tensor(ModPtr a, ModPtr b) {
  if (a->R != b->R) throw Error("tensor over different rings");
  CtxPtr ctx = a->ctx();
  std::size_t ra = a->ngens(), rb = b->ngens();
  // generator (u,j) at index u*rb + j
  std::vector<int> degs(ra * rb);
  for (std::size_t u = 0; u < ra; ++u)
    for (std::size_t j = 0; j < rb; ++j) degs[u * rb + j] = a->F0.degs[u] + b->F0.degs[j];
  std::vector<VecPoly> rels;
  for (const auto& r : a->rels)
    for (std::size_t j = 0; j < rb; ++j) {
      VecPoly v(ctx, ra * rb);
      for (std::size_t u = 0; u < ra; ++u) v[u * rb + j] = r[u];
      rels.push_back(std::move(v));
    }
  for (const auto& q : b->rels)
    for (std::size_t u = 0; u < ra; ++u) {
      VecPoly v(ctx, ra * rb);
      for (std::size_t j = 0; j < rb; ++j) v[u * rb + j] = q[j];
      rels.push_back(std::move(v));
    }
  return Module::make(a->R, std::move(degs), std::move(rels));
}

bool is_zero_module(const Module& M) {
  for (std::size_t j = 0; j < M.ngens(); ++j)
    if (!M.member(VecPoly::unit(M.ctx(), M.ngens(), j))) return false;
  return true;
}

Ideal annihilator(const Module& M) {
  CtxPtr ctx = M.ctx();
  if (M.ngens() == 0) return Ideal(ctx, {Polynomial::constant(ctx, 1)});
  std::optional<Ideal> acc;
  for (std::size_t c = 0; c < M.ngens(); ++c) {
    // (submodule : e_c) via first coordinates of syzygies of [e_c | gb]
    std::vector<VecPoly> cols;
    cols.push_back(VecPoly::unit(ctx, M.ngens(), c));
    cols.insert(cols.end(), M.gb.begin(), M.gb.end());
    std::vector<Polynomial> gens;
    for (const auto& z : syzygy_generators(M.F0, cols))
      if (!z[0].is_zero()) gens.push_back(z[0]);
    Ideal q(ctx, std::move(gens));
    acc = acc ? ideal_intersection(*acc, q) : q;
    if (acc->is_zero()) break;
  }
  return *acc;
}

namespace {

// leading monomials of the presentation basis, split by component
std::vector<std::vector<Monomial>> initial_module(const Module& M) {
  std::vector<std::vector<Monomial>> J(M.ngens());
  for (const auto& g : M.gb) {
    auto l = g.lead();
    J[l->comp].push_back(l->m);
  }
  return J;
}

}  // namespace

std::optional<int> krull_dim(const Module& M) {
  auto J = initial_module(M);
  int best = -1;
  for (std::size_t c = 0; c < J.size(); ++c)
    best = std::max(best, monomial_quotient_dim(M.ctx()->nvars(), J[c]));
  if (best < 0) return std::nullopt;  // every generator killed: zero module
  return best;
}

HilbertSeries hilbert_series(const Module& M) {
  auto J = initial_module(M);
  HilbertSeries hs;
  hs.denom = static_cast<int>(M.ctx()->nvars());
  for (std::size_t c = 0; c < J.size(); ++c) {
    LaurentZ n = monomial_quotient_numerator(M.ctx()->nvars(), J[c]);
    hs.num = hs.num + n.shifted(M.F0.degs[c]);
  }
  return hs;
}

int piece_dim(const Module& M, int j) {
  auto J = initial_module(M);
  int count = 0;
  for (std::size_t c = 0; c < J.size(); ++c) {
    int d = j - M.F0.degs[c];
    if (d < 0) continue;
    for (const auto& m : monomials_of_degree(M.ctx()->nvars(), d)) {
      bool standard = true;
      for (const auto& l : J[c])
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) ++count;
    }
  }
  return count;
}

int min_gen_degree(const Module& M) {
  int d = 0;
  bool seen = false;
  for (int g : M.F0.degs) {
    if (!seen || g < d) d = g;
    seen = true;
  }
  return d;
}

int max_pres_degree(const Module& M) {
  int d = 0;
  bool seen = false;
  for (int g : M.F0.degs) {
    if (!seen || g > d) d = g;
    seen = true;
  }
  for (const auto& r : M.rels) d = std::max(d, r.degree(M.F0));
  return d;
}

std::vector<VecPoly> minimalize_generators(const FreeModule& F, std::vector<VecPoly> cols,
                                           const std::vector<VecPoly>& fixed) {
  // canonical processing order: higher degree first (they reduce via lower ones)
  std::erase_if(cols, [](const VecPoly& v) { return v.is_zero(); });
  std::sort(cols.begin(), cols.end(), [&](const VecPoly& a, const VecPoly& b) {
    int da = a.degree(F), db = b.degree(F);
    if (da != db) return da > db;
    return vecpoly_cmp(a, b) < 0;
  });
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::vector<VecPoly> others;
      for (std::size_t k = 0; k < cols.size(); ++k)
        if (k != i) others.push_back(cols[k]);
      others.insert(others.end(), fixed.begin(), fixed.end());
      auto gb = buchberger(F, others);
      if (gb.contains(cols[i])) {
        cols.erase(cols.begin() + i);
        removed = true;
        break;
      }
    }
  }
  return cols;
}

ModPtr minimal_presentation(ModPtr M) {
  CtxPtr ctx = M->ctx();
  const Field& K = ctx->field;
  std::vector<int> degs = M->F0.degs;
  std::vector<VecPoly> cols = M->rels;

  for (;;) {
    // hunt for a unit entry
    std::size_t uw = 0, uu = 0;
    bool found = false;
    for (std::size_t w = 0; w < cols.size() && !found; ++w)
      for (std::size_t u = 0; u < degs.size() && !found; ++u)
        if (!cols[w][u].is_zero() && cols[w][u].is_constant()) {
          uw = w;
          uu = u;
          found = true;
        }
    if (!found) break;

    Scalar cinv = K.inv(cols[uw][uu].leading_coeff());
    std::vector<VecPoly> next;
    for (std::size_t v = 0; v < cols.size(); ++v) {
      if (v == uw) continue;
      // eliminate the uu-entry using column uw, then delete row uu
      VecPoly adj = cols[v] - cols[uw].poly_mul(cols[v][uu].scaled(cinv));
      VecPoly shrunk(ctx, degs.size() - 1);
      std::size_t t = 0;
      for (std::size_t a = 0; a < degs.size(); ++a)
        if (a != uu) shrunk[t++] = adj[a];
      next.push_back(std::move(shrunk));
    }
    std::vector<int> ndegs;
    for (std::size_t a = 0; a < degs.size(); ++a)
      if (a != uu) ndegs.push_back(degs[a]);
    degs = std::move(ndegs);
    cols = std::move(next);
  }

  FreeModule F{ctx, degs};
  cols = minimalize_generators(F, std::move(cols), ring_columns(*M->R, F));
  return Module::make(M->R, std::move(degs), std::move(cols));
}

HilbertSeries hilbert_series_quotient_S(const FreeModule& F, const std::vector<VecPoly>& cols) {
  auto gb = buchberger(F, cols);
  std::vector<std::vector<Monomial>> J(F.rank());
  for (const auto& g : gb.g) {
    auto l = g.lead();
    J[l->comp].push_back(l->m);
  }
  HilbertSeries hs;
  hs.denom = static_cast<int>(F.ctx->nvars());
  for (std::size_t c = 0; c < F.rank(); ++c)
    hs.num = hs.num + monomial_quotient_numerator(F.ctx->nvars(), J[c]).shifted(F.degs[c]);
  return hs;
}

bool proxy_isomorphic(const Module& a, const Module& b) {
  return hilbert_series(a) == hilbert_series(b) && annihilator(a) == annihilator(b);
}

std::string module_str(const Module& M) {
  std::ostringstream os;
  os << "coker ";
  os << "[";
  for (std::size_t i = 0; i < M.ngens(); ++i) {
    if (i) os << ",";
    os << M.F0.degs[i];
  }
  os << "] <- [";
  for (std::size_t j = 0; j < M.rels.size(); ++j) {
    if (j) os << "; ";
    os << M.rels[j].str();
  }
  os << "]";
  return os.str();
}

}  // namespace glc
