#include "glc/groebner.hpp"

#include <algorithm>
#include <queue>

namespace glc {

namespace {

VecPoly wrap1(const Polynomial& f) {
  VecPoly v(f.ctx(), 1);
  v[0] = f;
  return v;
}

struct Pair {
  std::size_t i, j;
  std::size_t comp;
  Monomial lcm;
  int deg;  // deg(lcm) + generator degree of the component
};

struct PairLater {
  MonomialOrder ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    int c = mono_cmp(a.lcm, b.lcm, ord);
    if (c != 0) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

}  // namespace

VecPoly normal_form(const VecPoly& v, const std::vector<VecPoly>& G,
                    std::vector<Polynomial>* cofactors) {
  CtxPtr ctx = v.ctx();
  const Field& K = ctx->field;
  if (cofactors) cofactors->assign(G.size(), Polynomial(ctx));
  std::vector<std::optional<ModLead>> gl(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) gl[k] = G[k].lead();

  VecPoly w = v;
  VecPoly rem(ctx, v.ncomps());
  while (auto l = w.lead()) {
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (!gl[k] || gl[k]->comp != l->comp || !gl[k]->m.divides(l->m)) continue;
      Monomial t = gl[k]->m.quotient_into(l->m);
      Scalar c = K.div(l->c, gl[k]->c);
      w = w - G[k].term_mul(t, c);
      if (cofactors)
        (*cofactors)[k] = (*cofactors)[k] + Polynomial::monomial(ctx, std::move(t), std::move(c));
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lt = Polynomial::monomial(ctx, l->m, l->c);
      rem[l->comp] = rem[l->comp] + lt;
      w[l->comp] = w[l->comp] - lt;
    }
  }
  return rem;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       std::vector<Polynomial>* cofactors) {
  std::vector<VecPoly> Gv;
  Gv.reserve(G.size());
  for (const auto& g : G) Gv.push_back(wrap1(g));
  return normal_form(wrap1(f), Gv, cofactors)[0];
}

GBasis buchberger(const FreeModule& F, const std::vector<VecPoly>& gens, bool track) {
  CtxPtr ctx = F.ctx;
  const Field& K = ctx->field;
  MonomialOrder ord = ctx->order;
  const std::size_t nin = gens.size();
  const bool rank1 = F.rank() == 1;

  std::vector<VecPoly> G;
  std::vector<ModLead> leads;
  std::vector<std::vector<Polynomial>> rows;

  std::priority_queue<Pair, std::vector<Pair>, PairLater> todo(PairLater{ord});

  auto push_pairs = [&](std::size_t jnew) {
    for (std::size_t i = 0; i < jnew; ++i) {
      if (leads[i].comp != leads[jnew].comp) continue;
      Pair p;
      p.i = i;
      p.j = jnew;
      p.comp = leads[i].comp;
      p.lcm = Monomial::lcm(leads[i].m, leads[jnew].m);
      p.deg = p.lcm.degree() + F.degs[p.comp];
      todo.push(std::move(p));
    }
  };

  auto add_elem = [&](VecPoly v, std::vector<Polynomial> row) {
    leads.push_back(*v.lead());
    G.push_back(std::move(v));
    if (track) rows.push_back(std::move(row));
    push_pairs(G.size() - 1);
  };

  for (std::size_t j = 0; j < nin; ++j) {
    if (gens[j].is_zero()) continue;
    std::vector<Polynomial> row;
    if (track) {
      row.assign(nin, Polynomial(ctx));
      row[j] = Polynomial::constant(ctx, 1);
    }
    add_elem(gens[j], std::move(row));
  }

  while (!todo.empty()) {
    Pair p = todo.top();
    todo.pop();

    if (rank1 && leads[p.i].m.coprime(leads[p.j].m)) continue;

    // chain criterion, strict-divisor form (no bookkeeping needed)
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j || leads[k].comp != p.comp) continue;
      if (!leads[k].m.divides(p.lcm)) continue;
      if (Monomial::lcm(leads[p.i].m, leads[k].m) == p.lcm) continue;
      if (Monomial::lcm(leads[k].m, leads[p.j].m) == p.lcm) continue;
      skip = true;
    }
    if (skip) continue;

    Monomial ui = leads[p.i].m.quotient_into(p.lcm);
    Monomial uj = leads[p.j].m.quotient_into(p.lcm);
    Scalar ci = K.inv(leads[p.i].c);
    Scalar cj = K.inv(leads[p.j].c);
    VecPoly S = G[p.i].term_mul(ui, ci) - G[p.j].term_mul(uj, cj);

    std::vector<Polynomial> cof;
    VecPoly h = normal_form(S, G, track ? &cof : nullptr);
    if (h.is_zero()) continue;

    std::vector<Polynomial> row;
    if (track) {
      row.assign(nin, Polynomial(ctx));
      Polynomial mi = Polynomial::monomial(ctx, ui, ci);
      Polynomial mj = Polynomial::monomial(ctx, uj, cj);
      for (std::size_t t = 0; t < nin; ++t) {
        row[t] = rows[p.i][t] * mi - rows[p.j][t] * mj;
        for (std::size_t k = 0; k < G.size(); ++k)
          if (!cof[k].is_zero()) row[t] = row[t] - cof[k] * rows[k][t];
      }
    }
    add_elem(std::move(h), std::move(row));
  }

  // minimalize: drop elements whose lead is divisible by another kept lead
  std::vector<std::size_t> order_idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    int c = modterm_cmp(leads[a].m, leads[a].comp, leads[b].m, leads[b].comp, ord);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order_idx) {
    bool dominated = false;
    for (std::size_t kidx : kept) {
      if (leads[kidx].comp == leads[idx].comp && leads[kidx].m.divides(leads[idx].m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(idx);
  }

  std::vector<VecPoly> H;
  std::vector<std::vector<Polynomial>> Hrows;
  for (std::size_t idx : kept) {
    H.push_back(G[idx]);
    if (track) Hrows.push_back(rows[idx]);
  }

  // tail-reduce each against the others (leads are stable, one sweep suffices;
  // loop to a fixpoint anyway, it is cheap)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < H.size(); ++i) {
      std::vector<VecPoly> others;
      std::vector<std::size_t> omap;
      for (std::size_t k = 0; k < H.size(); ++k)
        if (k != i) {
          others.push_back(H[k]);
          omap.push_back(k);
        }
      std::vector<Polynomial> cof;
      VecPoly h = normal_form(H[i], others, track ? &cof : nullptr);
      if (h != H[i]) {
        if (track)
          for (std::size_t t = 0; t < nin; ++t)
            for (std::size_t k = 0; k < others.size(); ++k)
              if (!cof[k].is_zero()) Hrows[i][t] = Hrows[i][t] - cof[k] * Hrows[omap[k]][t];
        H[i] = std::move(h);
        changed = true;
      }
    }
  }

  for (std::size_t i = 0; i < H.size(); ++i) {
    Scalar lc = H[i].lead()->c;
    if (!K.is_one(lc)) {
      Scalar s = K.inv(lc);
      H[i] = H[i].scaled(s);
      if (track)
        for (auto& f : Hrows[i]) f = f.scaled(s);
    }
  }

  std::vector<std::size_t> perm(H.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return vecpoly_cmp(H[a], H[b]) < 0; });

  GBasis out;
  out.F = F;
  out.tracked = track;
  for (std::size_t i : perm) {
    out.g.push_back(std::move(H[i]));
    if (track) out.change.push_back(std::move(Hrows[i]));
  }
  return out;
}

std::vector<VecPoly> schreyer_syzygies(const FreeModule& F, const std::vector<VecPoly>& G) {
  CtxPtr ctx = F.ctx;
  const Field& K = ctx->field;
  const bool rank1 = F.rank() == 1;
  const std::size_t s = G.size();

  std::vector<ModLead> leads(s);
  for (std::size_t k = 0; k < s; ++k) {
    auto l = G[k].lead();
    if (!l) throw Error("zero element in Groebner basis");
    leads[k] = *l;
  }

  std::vector<VecPoly> out;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      if (leads[i].comp != leads[j].comp) continue;

      if (rank1 && leads[i].m.coprime(leads[j].m)) {
        // coprime leads: the S-pair syzygy is the Koszul relation
        VecPoly z(ctx, s);
        z[i] = G[j][0];
        z[j] = -G[i][0];
        out.push_back(std::move(z));
        continue;
      }

      Monomial l = Monomial::lcm(leads[i].m, leads[j].m);
      Monomial ui = leads[i].m.quotient_into(l);
      Monomial uj = leads[j].m.quotient_into(l);
      Scalar ci = K.inv(leads[i].c);
      Scalar cj = K.inv(leads[j].c);
      VecPoly S = G[i].term_mul(ui, ci) - G[j].term_mul(uj, cj);
      std::vector<Polynomial> cof;
      VecPoly r = normal_form(S, G, &cof);
      if (!r.is_zero()) throw Error("input to schreyer_syzygies is not a Groebner basis");
      VecPoly z(ctx, s);
      for (std::size_t k = 0; k < s; ++k) z[k] = -cof[k];
      z[i] = z[i] + Polynomial::monomial(ctx, ui, ci);
      z[j] = z[j] - Polynomial::monomial(ctx, uj, cj);
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::vector<VecPoly> syzygy_generators(const FreeModule& F, const std::vector<VecPoly>& cols) {
  CtxPtr ctx = F.ctx;
  const std::size_t s = cols.size();

  GBasis gb = buchberger(F, cols, true);  // g_k = sum_j U[k][j] cols[j]
  const std::size_t r = gb.g.size();

  // express each column in the basis: cols[j] = sum_k C[j][k] g_k
  std::vector<std::vector<Polynomial>> C(s);
  for (std::size_t j = 0; j < s; ++j) {
    VecPoly rem = normal_form(cols[j], gb.g, &C[j]);
    if (!rem.is_zero()) throw Error("column failed to reduce against its own basis");
  }

  std::vector<VecPoly> out;
  auto push_nonzero = [&](VecPoly v) {
    if (!v.is_zero()) out.push_back(std::move(v));
  };

  // e_j - C_j U kills the map
  for (std::size_t j = 0; j < s; ++j) {
    VecPoly v = VecPoly::unit(ctx, s, j);
    for (std::size_t k = 0; k < r; ++k)
      if (!C[j][k].is_zero())
        for (std::size_t l = 0; l < s; ++l) v[l] = v[l] - C[j][k] * gb.change[k][l];
    push_nonzero(std::move(v));
  }

  // Schreyer syzygies of the basis, pushed back through the change matrix
  for (const auto& z : schreyer_syzygies(F, gb.g)) {
    VecPoly v(ctx, s);
    for (std::size_t k = 0; k < r; ++k)
      if (!z[k].is_zero())
        for (std::size_t l = 0; l < s; ++l) v[l] = v[l] + z[k] * gb.change[k][l];
    push_nonzero(std::move(v));
  }
  return out;
}

GBasis buchberger_ideal(CtxPtr ctx, const std::vector<Polynomial>& gens, bool track) {
  FreeModule F{ctx, {0}};
  std::vector<VecPoly> v;
  v.reserve(gens.size());
  for (const auto& f : gens) v.push_back(wrap1(f));
  return buchberger(F, v, track);
}

std::vector<Polynomial> gb_polys(const GBasis& gb) {
  std::vector<Polynomial> out;
  out.reserve(gb.g.size());
  for (const auto& v : gb.g) out.push_back(v[0]);
  return out;
}

}  // namespace glc
