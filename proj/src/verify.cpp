#include "glc/verify.hpp"

#include <algorithm>

#include "glc/ideal.hpp"
#include "glc/morphism.hpp"
#include "glc/resolution.hpp"
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace glc {

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::HypothesisNotMet: return "hypothesis-not-met";
    case CheckStatus::Failed: return "FAILED";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Checker = void (*)(const Instance&, TheoremReport&);
using Clock = std::chrono::steady_clock;

ModPtr zero_mod(const RingPtr& R) { return Module::make(R, {}, {}); }

bool nonzero(const ModPtr& M) { return !is_zero_module(*M); }

void wit(TheoremReport& r, const std::string& k, const std::string& v) {
  r.witnesses.emplace_back(k, v);
}

void hyp(TheoremReport& r, const std::string& why) {
  r.status = CheckStatus::HypothesisNotMet;
  wit(r, "unmet", why);
}

void fail(TheoremReport& r, const std::string& what) {
  r.status = CheckStatus::Failed;
  wit(r, "divergence", what);
}

std::string fin(const std::optional<int>& v) { return v ? std::to_string(*v) : "infinite"; }

std::vector<Polynomial> ring_vars(const RingPtr& R) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < R->nvars(); ++i) v.push_back(Polynomial::variable(R->ctx, i));
  return v;
}

// a FAILED proxy report carries both Hilbert series
bool proxy_or_fail(TheoremReport& r, const std::string& tag, const Module& a, const Module& b) {
  if (proxy_isomorphic(a, b)) return true;
  fail(r, tag + ": [" + hilbert_series(a).reduced().str() + "] vs [" +
              hilbert_series(b).reduced().str() + "]");
  return false;
}

// degree support of a finite-length module; nullopt when infinite length
std::optional<std::pair<int, int>> finite_support(const Module& M) {
  HilbertSeries hs = hilbert_series(M).reduced();
  if (hs.num.is_zero()) return std::pair<int, int>{0, -1};
  if (hs.denom != 0) return std::nullopt;
  return std::pair<int, int>{hs.num.c.begin()->first, hs.num.c.rbegin()->first};
}

int ring_depth(const RingPtr& R) { return depth_module(ring_module(R)); }

std::string certified_str(const std::map<int, std::optional<long long>>& vals) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, v] : vals) {
    if (!v || *v == 0) continue;
    if (!first) os << " ";
    first = false;
    os << j << ":" << *v;
  }
  std::string s = os.str();
  return s.empty() ? "0" : s;
}

ModPtr stage_quotient(const ModPtr& M, const Ideal& a, int n) {
  Ideal pw = ideal_power(a, n);
  std::vector<VecPoly> rels = M->rels;
  for (const auto& g : pw.basis())
    for (std::size_t j = 0; j < M->ngens(); ++j) {
      VecPoly col(M->ctx(), M->ngens());
      col[j] = g;
      rels.push_back(std::move(col));
    }
  return Module::make(M->R, M->F0.degs, rels);
}

// ---------------------------------------------------------------------------
// checkers

// stages Ext^i(M/a^n M, N) vanish below s = grade(a + Ann M, N) and stay
// nonzero at s; the truncated colimit at s is reported as a witness
void check_P12(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  auto s = grade_ideal(ideal_sum(I.a, annihilator(*I.M)), I.N);
  if (!s) return hyp(r, "grade(a + Ann M, N) infinite");
  wit(r, "s = grade(a + Ann M, N)", std::to_string(*s));
  const int nmax = 6;
  for (int n = 1; n <= nmax; ++n) {
    ModPtr Mn = stage_quotient(I.M, I.a, n);
    Resolution res = free_resolution(Mn, *s + 1);
    for (int i = 0; i < *s; ++i)
      if (nonzero(ext_data_from(res, i, I.N).ext))
        return fail(r, "stage Ext^" + std::to_string(i) + "(M/a^" + std::to_string(n) +
                           "M, N) nonzero below s");
    if (!nonzero(ext_data_from(res, *s, I.N).ext))
      return fail(r, "stage Ext^s(M/a^" + std::to_string(n) + "M, N) vanishes");
  }
  wit(r, "stages nonzero at s", "n = 1.." + std::to_string(nmax));
  TruncatedLimit L = glc_truncated_limit(*s, I.a, I.M, I.N, nmax);
  wit(r, "stabilized", L.stabilized ? "yes" : "no");
  wit(r, "limit window values at s", certified_str(L.limit_hilbert));
  r.status = CheckStatus::Verified;
}

// the long exact Ext sequence of 0 -> xN -> N -> N/xN -> 0 telescopes:
// per internal degree the alternating dimension sum over the whole sequence
// vanishes (finite-length regime, finite pd)
void check_C15(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto dMN = krull_dim(*tensor(I.M, I.N));
  if (!dMN || *dMN > 0) return hyp(r, "M (x) N not of finite length");
  const RingPtr& R = I.R;
  Polynomial x = Polynomial::zero(R->ctx);
  for (const auto& v : ring_vars(R)) x = x + v;
  std::vector<VecPoly> xcols;
  for (std::size_t j = 0; j < I.N->ngens(); ++j) {
    VecPoly col(R->ctx, I.N->ngens());
    col[j] = x;
    xcols.push_back(col);
  }
  ModPtr sub = submodule(I.N, xcols).module;  // xN
  std::vector<VecPoly> qrels = I.N->rels;
  qrels.insert(qrels.end(), xcols.begin(), xcols.end());
  ModPtr quo = Module::make(R, I.N->F0.degs, qrels);  // N/xN
  Resolution res = free_resolution(I.M, *pdM + 1);
  std::vector<ModPtr> A, B, C;
  int lo = 0, hi = -1;
  for (int i = 0; i <= *pdM; ++i) {
    A.push_back(ext_data_from(res, i, sub).ext);
    B.push_back(ext_data_from(res, i, I.N).ext);
    C.push_back(ext_data_from(res, i, quo).ext);
    for (const ModPtr& E : {A.back(), B.back(), C.back()}) {
      auto sp = finite_support(*E);
      if (!sp) return fail(r, "Ext term of infinite length in the finite-length regime");
      if (sp->first <= sp->second) {
        lo = std::min(lo, sp->first);
        hi = std::max(hi, sp->second);
      }
    }
  }
  for (int j = lo; j <= hi; ++j) {
    long long sum = 0;
    for (int i = 0; i <= *pdM; ++i) {
      long long term = piece_dim(*A[i], j) - piece_dim(*B[i], j) + piece_dim(*C[i], j);
      sum += (i % 2 == 0) ? term : -term;
    }
    if (sum != 0)
      return fail(r, "alternating sum " + std::to_string(sum) + " at degree " + std::to_string(j));
  }
  wit(r, "degree window", "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  wit(r, "columns", "Ext^0..Ext^" + std::to_string(*pdM) + " of (xN, N, N/xN)");
  r.status = CheckStatus::Verified;
}

// H^i_a(M, N) = Ext^i(M, N) when Supp M ∩ Supp N ⊆ V(a): the certified
// window Hilbert values of the truncated colimit match ext's
void check_C16(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  Ideal common = ideal_sum(annihilator(*I.M), annihilator(*I.N));
  for (const auto& g : I.a.gens())
    if (!in_radical(g, common)) return hyp(r, "Supp M ∩ Supp N not inside V(a)");
  auto pdM = projective_dimension(I.M);
  int imax = I.R->dim + (pdM ? std::min(*pdM, 3) : 2);
  bool inconclusive = false;
  int compared = 0;
  for (int i = 0; i <= imax; ++i) {
    TruncatedLimit L = glc_truncated_limit(i, I.a, I.M, I.N, 6);
    ModPtr E = ext_module(i, I.M, I.N);
    for (const auto& [j, v] : L.limit_hilbert) {
      if (!v) {
        inconclusive = true;
        continue;
      }
      long long want = piece_dim(*E, j);
      if (*v != want)
        return fail(r, "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": limit " +
                           std::to_string(*v) + " vs Ext " + std::to_string(want));
      ++compared;
    }
  }
  wit(r, "band", "i = 0.." + std::to_string(imax));
  wit(r, "degrees compared", std::to_string(compared));
  r.proxy = true;
  r.status = inconclusive ? CheckStatus::Inconclusive : CheckStatus::Verified;
  if (inconclusive) wit(r, "note", "some window degrees not stabilized");
}

// with a = m: H^{p+d}(M,N) ≅ H^d_m(Ext^p(M,N)) via the dual sides, and
// vanishing above p + d
void check_C23(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  wit(r, "a", "m (checker specializes)");
  Resolution res = free_resolution(I.M, *pdM + 1);
  int p = -1;
  std::vector<ModPtr> exts;
  for (int i = 0; i <= *pdM; ++i) {
    exts.push_back(ext_data_from(res, i, I.N).ext);
    if (nonzero(exts.back())) p = i;
  }
  if (p < 0) return hyp(r, "Ext(M, N) identically zero");
  int d = krull_dim(*tensor(I.M, I.N)).value();
  wit(r, "p", std::to_string(p));
  wit(r, "d = dim M (x) N", std::to_string(d));
  ModPtr lhs = glc_dual_side(p + d, I.M, I.N).module;
  ModPtr E = exts[p];
  int dimE = krull_dim(*E).value();
  ModPtr rhs = (d <= dimE) ? deficiency_table(E)[d] : zero_mod(I.R);
  r.proxy = true;
  if (!proxy_or_fail(r, "H^{p+d}(M,N) vs H^d_m(Ext^p)", *lhs, *rhs)) return;
  for (int i = p + d + 1; i <= I.R->dim; ++i)
    if (nonzero(glc_dual_side(i, I.M, I.N).module))
      return fail(r, "H^" + std::to_string(i) + "(M,N) nonzero above p + d");
  r.status = CheckStatus::Verified;
}

// with a = m, n = cd(m,N): dual of H^{p+n}(M,N) matches Tor_p(M, K(N)) and
// Hom(Ext^p(M,R), K(N)) — the two right-hand forms of the degeneration
void check_C24(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  wit(r, "a", "m (checker specializes)");
  int p = *pdM, n = cohomological_dimension_at_m(I.N);
  wit(r, "p = pd M", std::to_string(p));
  wit(r, "n = cd(m, N)", std::to_string(n));
  ModPtr KN = canonical_module(I.N);
  ModPtr lhs = glc_dual_side(p + n, I.M, I.N).module;
  ModPtr tor_form = tor_module(p, I.M, KN);
  ModPtr hom_form = hom_module(ext_module(p, I.M, ring_module(I.R)), KN);
  r.proxy = true;
  if (!proxy_or_fail(r, "H^{p+n}(M,N) vs Tor_p(M, K(N))", *lhs, *tor_form)) return;
  if (!proxy_or_fail(r, "H^{p+n}(M,N) vs Hom(Ext^p(M,R), K(N))", *lhs, *hom_form)) return;
  for (int i = p + n + 1; i <= I.R->dim; ++i)
    if (nonzero(glc_dual_side(i, I.M, I.N).module))
      return fail(r, "H^" + std::to_string(i) + "(M,N) nonzero above p + n");
  r.status = CheckStatus::Verified;
}

// eventual vanishing of H^i_m(M, N) is equivalent to pd M < infinity:
// finite pd gives vanishing above pd M + dim N; infinite pd gives the
// nonvanishing band H^i_m(M, k) = Ext^i(M, k) != 0
void check_R25(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  auto pdM = projective_dimension(I.M);
  wit(r, "pd M", fin(pdM));
  if (pdM) {
    int top = *pdM + cohomological_dimension_at_m(I.N);
    for (int i = top + 1; i <= I.R->dim; ++i)
      if (nonzero(glc_dual_side(i, I.M, I.N).module))
        return fail(r, "H^" + std::to_string(i) + "(M,N) nonzero above pd M + cd(m,N)");
    wit(r, "vanishing", "H^i(M,N) = 0 for i > " + std::to_string(top));
  } else {
    ModPtr k = residue_field(I.R);
    int band = I.R->dim + 2;
    for (int i = 0; i <= band; ++i)
      if (!nonzero(ext_module(i, I.M, k)))
        return fail(r, "Ext^" + std::to_string(i) + "(M, k) = 0 despite pd M infinite");
    wit(r, "band", "Ext^i(M,k) != 0 for i = 0.." + std::to_string(band));
  }
  r.status = CheckStatus::Verified;
}

// N Cohen-Macaulay of dimension q: dual of H^i_m(M,N) is Tor_{i-q}(M, K(N))
void check_C26(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_cohen_macaulay(I.N)) return hyp(r, "N not Cohen-Macaulay");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  int q = krull_dim(*I.N).value();
  wit(r, "q = dim N", std::to_string(q));
  wit(r, "note", "completion dropped (graded analog)");
  ModPtr KN = canonical_module(I.N);
  r.proxy = true;
  for (int i = 0; i <= I.R->dim; ++i) {
    ModPtr lhs = glc_dual_side(i, I.M, I.N).module;
    ModPtr rhs = (i >= q) ? tor_module(i - q, I.M, KN) : zero_mod(I.R);
    if (!proxy_or_fail(r, "i = " + std::to_string(i), *lhs, *rhs)) return;
  }
  r.status = CheckStatus::Verified;
}

// dual of H^i_m(M, K(N)) is Tor_{i-t}(M, N) for Cohen-Macaulay N of dim t
void check_C31(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_cohen_macaulay(I.N)) return hyp(r, "N not Cohen-Macaulay");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  int tN = krull_dim(*I.N).value();
  wit(r, "t = dim N", std::to_string(tN));
  wit(r, "note", "completion dropped (graded analog)");
  ModPtr KN = canonical_module(I.N);
  r.proxy = true;
  for (int i = 0; i <= I.R->dim; ++i) {
    ModPtr lhs = glc_dual_side(i, I.M, KN).module;
    ModPtr rhs = (i >= tN) ? tor_module(i - tN, I.M, I.N) : zero_mod(I.R);
    if (!proxy_or_fail(r, "i = " + std::to_string(i), *lhs, *rhs)) return;
  }
  r.status = CheckStatus::Verified;
}

// over a CM ring: dual of H^t_m(M, R) is M (x) K(R); all other i vanish
void check_C32(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M)) return hyp(r, "M is zero");
  if (!ring_is_cohen_macaulay(I.R)) return hyp(r, "R not Cohen-Macaulay");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  wit(r, "N", "R (checker specializes)");
  int t = I.R->dim;
  ModPtr Rm = ring_module(I.R);
  r.proxy = true;
  if (!proxy_or_fail(r, "H^t(M,R) vs M (x) K(R)", *glc_dual_side(t, I.M, Rm).module,
                     *tensor(I.M, canonical_module_ring(I.R))))
    return;
  for (int i = 0; i < t; ++i)
    if (nonzero(glc_dual_side(i, I.M, Rm).module))
      return fail(r, "H^" + std::to_string(i) + "(M,R) nonzero off t");
  r.status = CheckStatus::Verified;
}

// hyper-Ext at t - p - d detects the Cohen-Macaulay defect: nonzero iff
// cm_defect(M) = cm_defect(R) (checked over CM rings, where the dualizing
// complex is the canonical module)
void check_T35(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M)) return hyp(r, "M is zero");
  if (!ring_is_cohen_macaulay(I.R)) return hyp(r, "R not Cohen-Macaulay");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  int t = I.R->dim, p = *pdM, d = krull_dim(*I.M).value();
  int defM = d - depth_module(I.M), defR = t - ring_depth(I.R);
  wit(r, "cm_defect(M)", std::to_string(defM));
  wit(r, "cm_defect(R)", std::to_string(defR));
  ModPtr X = hyperext_dualizing(t - p - d, ring_module(I.R), I.M);
  bool nonvanish = nonzero(X);
  wit(r, "hyperext at t-p-d", nonvanish ? "nonzero" : "0");
  if (nonvanish != (defM == defR))
    return fail(r, std::string("nonvanishing ") + (nonvanish ? "holds" : "fails") +
                       " but defect equality " + (defM == defR ? "holds" : "fails"));
  r.status = CheckStatus::Verified;
}

// CM criterion: H^{p+d}_m(M, K(R)) != 0 iff M is Cohen-Macaulay
void check_C36(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M)) return hyp(r, "M is zero");
  if (!ring_is_cohen_macaulay(I.R)) return hyp(r, "R not Cohen-Macaulay");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  int p = *pdM, d = krull_dim(*I.M).value();
  ModPtr D = glc_dual_side(p + d, I.M, canonical_module_ring(I.R)).module;
  bool nonvanish = nonzero(D);
  bool cm = is_cohen_macaulay(I.M);
  wit(r, "p + d", std::to_string(p + d));
  wit(r, "H^{p+d}(M, K(R))", nonvanish ? "nonzero" : "0");
  wit(r, "M Cohen-Macaulay", cm ? "yes" : "no");
  if (nonvanish != cm) return fail(r, "nonvanishing and Cohen-Macaulayness disagree");
  r.status = CheckStatus::Verified;
}

// duality consistency: Čech window values of H^i_m(M,N) match the
// degree-flipped Hilbert function of the dual-side module
void check_T37(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto W = default_window(I.M, I.N);
  std::vector<Polynomial> xs = ring_vars(I.R);
  bool inconclusive = false;
  int compared = 0;
  for (int i = 0; i <= I.R->dim; ++i) {
    ModPtr D = glc_dual_side(i, I.M, I.N).module;
    CechResult c = graded_cech_cohomology(i, xs, I.M, I.N, W, 10);
    for (const auto& [j, v] : c.values) {
      if (!v) {
        inconclusive = true;
        continue;
      }
      long long dual = piece_dim(*D, -j);
      if (*v != dual)
        return fail(r, "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": cech " +
                           std::to_string(*v) + " vs dual side " + std::to_string(dual));
      ++compared;
    }
  }
  wit(r, "window", "[" + std::to_string(W.first) + ", " + std::to_string(W.second) + "]");
  wit(r, "degrees compared", std::to_string(compared));
  r.proxy = true;
  r.status = inconclusive ? CheckStatus::Inconclusive : CheckStatus::Verified;
  if (inconclusive) wit(r, "note", "some window degrees not stabilized");
}

// the CM-canonical route and the hyper-Ext route compute the same modules
void check_C38(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!ring_is_cohen_macaulay(I.R)) return hyp(r, "R not Cohen-Macaulay");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  int t = I.R->dim;
  ModPtr MK = tensor(I.M, canonical_module_ring(I.R));
  r.proxy = true;
  for (int i = 0; i <= t; ++i) {
    ModPtr cmr = ext_module(t - i, I.N, MK);
    ModPtr hyp_route = hyperext_dualizing(t - i, I.N, I.M);
    if (!proxy_or_fail(r, "i = " + std::to_string(i), *cmr, *hyp_route)) return;
  }
  r.status = CheckStatus::Verified;
}

// id N < infinity over a CM ring: the Čech oracle for H^i_m(M,N) matches the
// flipped Hilbert function of Ext^{t-i}(Hom(K(R), N), M)
void check_P39(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!ring_is_cohen_macaulay(I.R)) return hyp(r, "R not Cohen-Macaulay");
  auto idN = injective_dimension(I.N);
  if (!idN) return hyp(r, "id N infinite");
  wit(r, "id N", std::to_string(*idN));
  ModPtr H = hom_module(canonical_module_ring(I.R), I.N);
  auto W = default_window(I.M, I.N);
  std::vector<Polynomial> xs = ring_vars(I.R);
  bool inconclusive = false;
  int compared = 0;
  for (int i = 0; i <= I.R->dim; ++i) {
    ModPtr D = ext_module(I.R->dim - i, H, I.M);
    CechResult c = graded_cech_cohomology(i, xs, I.M, I.N, W, 10);
    for (const auto& [j, v] : c.values) {
      if (!v) {
        inconclusive = true;
        continue;
      }
      long long dual = piece_dim(*D, -j);
      if (*v != dual)
        return fail(r, "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": cech " +
                           std::to_string(*v) + " vs Ext^{t-i}(Hom(K(R),N),M) " +
                           std::to_string(dual));
      ++compared;
    }
  }
  wit(r, "degrees compared", std::to_string(compared));
  r.proxy = true;
  r.status = inconclusive ? CheckStatus::Inconclusive : CheckStatus::Verified;
  if (inconclusive) wit(r, "note", "some window degrees not stabilized");
}

// sup{i : H^i_m(M,N) != 0} = dim R - grade(Ann N, M), located by the
// largest nonzero dual-side module
void check_C310(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_gorenstein(I.R)) return hyp(r, "R not Gorenstein");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  int want = top_nonvanishing(I.M, I.N);
  int got = -1;
  for (int i = I.R->dim; i >= 0; --i)
    if (nonzero(glc_dual_side(i, I.M, I.N).module)) {
      got = i;
      break;
    }
  wit(r, "dim R - grade(Ann N, M)", std::to_string(want));
  wit(r, "largest nonzero dual side", std::to_string(got));
  if (want != got) return fail(r, "top indices disagree");
  r.status = CheckStatus::Verified;
}

// K^s(N, R) recovers the ordinary canonical module (up to the a-invariant
// twist of the graded setting), and s = dim N
void check_D43(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.N)) return hyp(r, "N is zero");
  if (!is_gorenstein(I.R)) return hyp(r, "R not Gorenstein");
  wit(r, "M", "R (checker specializes)");
  auto [s, K] = generalized_canonical(I.N, ring_module(I.R));
  int dN = krull_dim(*I.N).value();
  wit(r, "s", std::to_string(s));
  if (s != dN) return fail(r, "s != dim N = " + std::to_string(dN));
  int tw = min_gen_degree(*canonical_module_ring(I.R));
  wit(r, "graded twist", std::to_string(tw));
  r.proxy = true;
  if (!proxy_or_fail(r, "K^s(N,R) vs K(N) twisted", *K, *twist(canonical_module(I.N), tw)))
    return;
  r.status = CheckStatus::Verified;
}

// dim K^s(N, M) = dim M (x) N
void check_P45b(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_gorenstein(I.R)) return hyp(r, "R not Gorenstein");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto [s, K] = generalized_canonical(I.N, I.M);
  int dk = krull_dim(*K).value();
  int dmn = krull_dim(*tensor(I.M, I.N)).value();
  wit(r, "dim K^s(N,M)", std::to_string(dk));
  wit(r, "dim M (x) N", std::to_string(dmn));
  if (dk != dmn) return fail(r, "dimensions disagree");
  r.status = CheckStatus::Verified;
}

// depth K^s(N, M) > 0 iff s > pd M
void check_P45c(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_gorenstein(I.R)) return hyp(r, "R not Gorenstein");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto [s, K] = generalized_canonical(I.N, I.M);
  int dep = depth_module(K);
  wit(r, "s", std::to_string(s));
  wit(r, "pd M", std::to_string(*pdM));
  wit(r, "depth K^s(N,M)", std::to_string(dep));
  if ((dep > 0) != (s > *pdM)) return fail(r, "depth positivity and s > pd M disagree");
  r.status = CheckStatus::Verified;
}

// K^s(N, M) is unchanged by killing the finite-length part of N
void check_P46(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_gorenstein(I.R)) return hyp(r, "R not Gorenstein");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto [s, K] = generalized_canonical(I.N, I.M);
  if (s <= *pdM) return hyp(r, "s <= pd M");
  ModPtr N2 = mod_torsion(I.N);
  auto g2 = grade_module(N2, I.M);
  wit(r, "s", std::to_string(s));
  wit(r, "grade(N', M)", fin(g2));
  if (!g2 || *g2 != I.R->dim - s) return fail(r, "grade changed after killing H^0_m(N)");
  r.proxy = true;
  if (!proxy_or_fail(r, "K^s(N,M) vs K^s(N/H^0,M)", *K, *generalized_deficiency(s, N2, I.M)))
    return;
  r.status = CheckStatus::Verified;
}

// depth K^s(N, M) > 1 when s > pd M + 1 (depth part of the S2 statement)
void check_P47m(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  if (!is_gorenstein(I.R)) return hyp(r, "R not Gorenstein");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto [s, K] = generalized_canonical(I.N, I.M);
  if (s <= *pdM + 1) return hyp(r, "s <= pd M + 1");
  int dep = depth_module(K);
  wit(r, "s", std::to_string(s));
  wit(r, "depth K^s(N,M)", std::to_string(dep));
  if (dep <= 1) return fail(r, "depth not above 1");
  r.status = CheckStatus::Verified;
}

// shared core of the section-5 criteria: the j-window where
// Ext^j(N, X (x)^L D) must vanish is t-r+i..t; returns the least
// admissible i, or nullopt when Ext^t already refuses
std::optional<int> least_admissible_i(const RingPtr& R, const ModPtr& N, const ModPtr& X,
                                      int t, int rr, std::string& pattern) {
  int top_nz = t - rr;  // below the window
  std::ostringstream os;
  for (int j = t - rr + 1; j <= t; ++j) {
    bool nz = nonzero(hyperext_dualizing(j, N, X));
    os << (nz ? "x" : ".");
    if (nz) top_nz = j;
  }
  pattern = os.str();
  if (top_nz == t) return std::nullopt;
  return top_nz - (t - rr) + 1;
}

// Ext^j(N, M (x)^L D) = 0 for j = t-r+i..t forces pd N < i
void check_T51(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.M) || !nonzero(I.N)) return hyp(r, "M or N is zero");
  int t = I.R->dim, rr = ring_depth(I.R);
  if (rr < 1) return hyp(r, "depth R = 0");
  auto pdM = projective_dimension(I.M);
  if (!pdM) return hyp(r, "pd M infinite");
  auto pdN = projective_dimension(I.N);
  if (!pdN) return hyp(r, "pd N infinite");
  std::string pattern;
  auto imin = least_admissible_i(I.R, I.N, I.M, t, rr, pattern);
  wit(r, "Ext^j(N, M x D) for j = t-r+1..t", pattern);
  if (!imin) return hyp(r, "no admissible i: Ext nonzero at j = t");
  wit(r, "least admissible i", std::to_string(*imin));
  wit(r, "pd N", std::to_string(*pdN));
  if (*pdN >= *imin) return fail(r, "pd N not below i");
  r.status = CheckStatus::Verified;
}

// the M = R and M = N specializations
void check_C52(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.N)) return hyp(r, "N is zero");
  int t = I.R->dim, rr = ring_depth(I.R);
  if (rr < 1) return hyp(r, "depth R = 0");
  auto pdN = projective_dimension(I.N);
  if (!pdN) return hyp(r, "pd N infinite");
  bool any = false;
  for (const auto& [label, X] :
       {std::pair<const char*, ModPtr>{"(a) M = R", ring_module(I.R)},
        std::pair<const char*, ModPtr>{"(b) M = N", I.N}}) {
    std::string pattern;
    auto imin = least_admissible_i(I.R, I.N, X, t, rr, pattern);
    wit(r, label, pattern + (imin ? " -> i = " + std::to_string(*imin) : " -> no admissible i"));
    if (!imin) continue;
    any = true;
    if (*pdN >= *imin) return fail(r, std::string(label) + ": pd N = " + std::to_string(*pdN) +
                                          " not below " + std::to_string(*imin));
  }
  if (!any) return hyp(r, "no admissible i in either specialization");
  wit(r, "pd N", std::to_string(*pdN));
  r.status = CheckStatus::Verified;
}

// i = 1 freeness criteria; pd N finite is essential (the section-5 example)
void check_C54C55(const Instance& I, TheoremReport& r) {
  if (!nonzero(I.N)) return hyp(r, "N is zero");
  int t = I.R->dim, rr = ring_depth(I.R);
  if (rr < 1) return hyp(r, "depth R = 0");
  auto pdN = projective_dimension(I.N);
  if (!pdN) return hyp(r, "pd N infinite");
  auto pdM = projective_dimension(I.M);
  std::vector<std::pair<std::string, ModPtr>> variants;
  if (nonzero(I.M) && pdM) variants.emplace_back("5.4 (M)", I.M);
  variants.emplace_back("5.5(a) (R)", ring_module(I.R));
  variants.emplace_back("5.5(b) (N)", I.N);
  bool any = false;
  for (const auto& [label, X] : variants) {
    std::string pattern;
    auto imin = least_admissible_i(I.R, I.N, X, t, rr, pattern);
    bool vanishes = imin && *imin == 1;
    wit(r, label, pattern + (vanishes ? " -> free expected" : " -> hypothesis open"));
    if (!vanishes) continue;
    any = true;
    if (*pdN != 0) return fail(r, label + ": window vanishes but pd N = " + std::to_string(*pdN));
  }
  if (!any) return hyp(r, "Ext window nonzero in every variant");
  wit(r, "pd N", "0 (free)");
  r.status = CheckStatus::Verified;
}

// the fixed example: R = k[x,y]/(xy), N = R/xR has Ext^1(N,R) = 0,
// Ext^1(N,N) = 0, infinite pd, and the freeness criteria must gate out
void check_EX5(const Instance& I, TheoremReport& r) {
  if (I.provenance != "EX5") return hyp(r, "not the fixed example instance");
  ModPtr e1R = ext_module(1, I.N, ring_module(I.R));
  ModPtr e1N = ext_module(1, I.N, I.N);
  auto pdN = projective_dimension(I.N);
  wit(r, "Ext^1(N, R)", nonzero(e1R) ? "nonzero" : "0");
  wit(r, "Ext^1(N, N)", nonzero(e1N) ? "nonzero" : "0");
  wit(r, "pd N", fin(pdN));
  if (nonzero(e1R)) return fail(r, "Ext^1(N, R) nonzero");
  if (nonzero(e1N)) return fail(r, "Ext^1(N, N) nonzero");
  if (pdN) return fail(r, "pd N finite: " + std::to_string(*pdN));
  TheoremReport sub = check("C5.4/C5.5", I);
  wit(r, "C5.4/C5.5 status", status_str(sub.status));
  if (sub.status != CheckStatus::HypothesisNotMet)
    return fail(r, "freeness criteria did not gate on infinite pd");
  r.status = CheckStatus::Verified;
}

const std::map<std::string, Checker>& checker_table() {
  static const std::map<std::string, Checker> tab = {
      {"P1.2", check_P12},   {"C1.5", check_C15},  {"C1.6", check_C16},
      {"C2.3", check_C23},   {"C2.4", check_C24},  {"R2.5", check_R25},
      {"C2.6", check_C26},   {"C3.1", check_C31},  {"C3.2", check_C32},
      {"T3.5", check_T35},   {"C3.6", check_C36},  {"T3.7", check_T37},
      {"C3.8", check_C38},   {"P3.9", check_P39},  {"C3.10", check_C310},
      {"D4.3", check_D43},   {"P4.5b", check_P45b}, {"P4.5c", check_P45c},
      {"P4.6", check_P46},   {"P4.7m", check_P47m}, {"T5.1", check_T51},
      {"C5.2", check_C52},   {"C5.4/C5.5", check_C54C55}, {"EX5", check_EX5},
  };
  return tab;
}

// ---------------------------------------------------------------------------
// instance generation

std::uint64_t mix_seed(std::uint64_t seed, const std::string& family) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : family) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t draw(std::mt19937_64& g, std::size_t n) { return static_cast<std::size_t>(g() % n); }

Polynomial random_form(std::mt19937_64& g, const CtxPtr& ctx, int deg, int max_terms) {
  auto mons = monomials_of_degree(ctx->nvars(), deg);
  for (;;) {
    int nt = 1 + static_cast<int>(draw(g, max_terms));
    std::vector<Term> ts;
    for (int k = 0; k < nt; ++k) {
      const Monomial& m = mons[draw(g, mons.size())];
      ts.push_back({m, ctx->field.from_int(1 + static_cast<std::int64_t>(draw(g, 100)))});
    }
    Polynomial f = Polynomial::from_terms(ctx, ts);
    if (!f.is_zero()) return f;
  }
}

Polynomial random_monomial(std::mt19937_64& g, const CtxPtr& ctx, int deg) {
  auto mons = monomials_of_degree(ctx->nvars(), deg);
  return Polynomial::monomial(ctx, mons[draw(g, mons.size())], ctx->field.one());
}

Ideal random_a(std::mt19937_64& g, const RingPtr& R) {
  if (draw(g, 3) != 2) return irrelevant_ideal(R->ctx);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < R->nvars(); ++i)
    if (draw(g, 2) == 0) gens.push_back(Polynomial::variable(R->ctx, i));
  if (gens.empty()) gens.push_back(Polynomial::variable(R->ctx, 0));
  return Ideal(R->ctx, gens);
}

ModPtr random_cyclic(std::mt19937_64& g, const RingPtr& R, int maxdeg, bool monomial_only) {
  switch (draw(g, 5)) {
    case 0:
      return ring_module(R);
    case 1:
      return residue_field(R);
    default: {
      std::size_t k = 1 + draw(g, 2);
      std::vector<Polynomial> fs;
      for (std::size_t j = 0; j < k; ++j) {
        int d = 1 + static_cast<int>(draw(g, maxdeg));
        fs.push_back(monomial_only ? random_monomial(g, R->ctx, d)
                                   : random_form(g, R->ctx, d, 3));
      }
      return quotient_module(R, fs);
    }
  }
}

ModPtr random_matrix_module(std::mt19937_64& g, const RingPtr& R, int maxdeg) {
  std::size_t rows = 1 + draw(g, 2), cols = 1 + draw(g, 3);
  std::vector<int> degs;
  for (std::size_t u = 0; u < rows; ++u) degs.push_back(static_cast<int>(draw(g, 2)));
  std::vector<VecPoly> rels;
  for (std::size_t c = 0; c < cols; ++c) {
    int cd = 2 + static_cast<int>(draw(g, std::max(1, std::min(maxdeg, 3))));
    VecPoly col(R->ctx, rows);
    bool some = false;
    for (std::size_t u = 0; u < rows; ++u) {
      if (draw(g, 4) == 3) continue;  // keep the matrix a little sparse
      col[u] = random_form(g, R->ctx, cd - degs[u], 3);
      some = true;
    }
    if (!some) col[draw(g, rows)] = random_form(g, R->ctx, cd - degs[0], 3);
    rels.push_back(std::move(col));
  }
  return Module::make(R, degs, rels);
}

// Koszul acyclicity certifies a regular sequence; by depth sensitivity the
// first homology is rigid, so H_1 = 0 already forces H_q = 0 for q >= 1.
// A codimension pre-filter rejects the (frequent) non-regular draws before
// the syzygy computation, which can be expensive on degenerate input.
bool regular_sequence_koszul(const RingPtr& S, const std::vector<Polynomial>& fs) {
  for (const auto& f : fs)
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) return false;
  Ideal J(S->ctx, fs);
  if (J.is_one()) return false;
  std::vector<Monomial> leads;
  for (const auto& f : J.basis()) leads.push_back(f.leading_monomial());
  if (monomial_quotient_dim(S->nvars(), leads) !=
      static_cast<int>(S->nvars()) - static_cast<int>(fs.size()))
    return false;
  Complex K = koszul_complex(S, fs);
  if (K.top() < 1) return true;
  ModPtr F1 = free_module(S, K.F[1].degs);
  ModPtr F0 = free_module(S, K.F[0].degs);
  Morphism down = make_morphism(F1, F0, K.d[1], false);
  Morphism up = (K.top() >= 2)
                    ? make_morphism(free_module(S, K.F[2].degs), F1, K.d[2], false)
                    : zero_morphism(zero_mod(S), F1);
  return is_zero_module(*homology_at(up, down));
}

const std::vector<std::string>& var_names(int nv) {
  static const std::vector<std::string> all = {"x", "y", "z", "w"};
  static const std::vector<std::string> cut[5] = {
      {}, {"x"}, {"x", "y"}, {"x", "y", "z"}, all};
  return cut[nv];
}

Instance make_family_instance(const std::string& family, std::mt19937_64& g, int nv, int md,
                              std::string prov) {
  CtxPtr ctx = make_context(Field::prime(101), var_names(nv));
  RingPtr R;
  bool monomial_only = false;
  if (family == "monomial") {
    monomial_only = true;
    std::vector<Polynomial> rels;
    if (draw(g, 2) == 1) {
      std::size_t k = 1 + draw(g, 2);
      for (std::size_t j = 0; j < k; ++j)
        rels.push_back(random_monomial(g, ctx, std::max(2, 1 + static_cast<int>(draw(g, md)))));
    }
    R = make_ring(ctx, rels);
  } else if (family == "binomial-hypersurface") {
    int d = (md >= 2) ? 2 + static_cast<int>(draw(g, md - 1)) : 1;
    auto mons = monomials_of_degree(nv, d);
    if (mons.size() < 2) {
      R = make_ring(ctx, {random_monomial(g, ctx, std::max(2, d))});
    } else {
      std::size_t i1 = draw(g, mons.size()), i2 = draw(g, mons.size());
      while (i2 == i1) i2 = draw(g, mons.size());
      Polynomial f = Polynomial::monomial(ctx, mons[i1], ctx->field.one()) -
                     Polynomial::monomial(ctx, mons[i2], ctx->field.one());
      R = make_ring(ctx, {f});
    }
  } else if (family == "ci") {
    std::size_t c = 1 + draw(g, nv);
    RingPtr S = make_ring(ctx, {});
    std::vector<Polynomial> fs;
    bool found = false;
    for (int attempt = 0; attempt < 40 && !found; ++attempt) {
      fs.clear();
      for (std::size_t j = 0; j < c; ++j)
        fs.push_back(random_form(g, ctx, 1 + static_cast<int>(draw(g, md)), 3));
      found = regular_sequence_koszul(S, fs);
    }
    if (!found) {
      fs.clear();
      for (std::size_t j = 0; j < c; ++j)
        fs.push_back(Polynomial::variable(ctx, j, 1 + static_cast<int>(draw(g, md))));
    }
    R = make_ring(ctx, fs);
  } else {  // random-matrix
    std::vector<Polynomial> rels;
    if (draw(g, 2) == 1 && md >= 2)
      rels.push_back(random_monomial(g, ctx, 2 + static_cast<int>(draw(g, md - 1))));
    R = make_ring(ctx, rels);
  }
  ModPtr M, N;
  if (family == "random-matrix") {
    M = random_matrix_module(g, R, md);
    N = (draw(g, 2) == 0) ? random_matrix_module(g, R, md) : random_cyclic(g, R, md, false);
  } else {
    M = random_cyclic(g, R, md, monomial_only);
    N = random_cyclic(g, R, md, monomial_only);
  }
  return Instance{R, M, N, random_a(g, R), std::move(prov)};
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "P1.2", "C1.5",  "C1.6",  "C2.3", "C2.4",  "R2.5", "C2.6", "C3.1",
      "C3.2", "T3.5",  "C3.6",  "T3.7", "C3.8",  "P3.9", "C3.10", "D4.3",
      "P4.5b", "P4.5c", "P4.6",  "P4.7m", "T5.1", "C5.2", "C5.4/C5.5", "EX5"};
  return ids;
}

TheoremReport check(const std::string& theorem_id, const Instance& inst) {
  const auto& tab = checker_table();
  auto it = tab.find(theorem_id);
  if (it == tab.end()) throw Error("unknown theorem id: " + theorem_id);
  TheoremReport r;
  r.theorem_id = theorem_id;
  r.instance = inst.provenance;
  auto t0 = Clock::now();
  try {
    it->second(inst, r);
  } catch (const std::exception& e) {
    r.status = CheckStatus::Failed;
    wit(r, "exception", e.what());
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

std::vector<Instance> builtin_instances() {
  std::vector<Instance> out;
  {
    CtxPtr c = make_context(Field::prime(101), {"x", "y"});
    Polynomial x = Polynomial::variable(c, 0), y = Polynomial::variable(c, 1);
    RingPtr R = make_ring(c, {x * y});
    out.push_back(Instance{R, ring_module(R), quotient_module(R, {x}), irrelevant_ideal(c), "EX5"});
  }
  {
    CtxPtr c = make_context(Field::prime(101), {"x"});
    Polynomial x = Polynomial::variable(c, 0);
    RingPtr R = make_ring(c, {x * x});
    out.push_back(
        Instance{R, residue_field(R), residue_field(R), irrelevant_ideal(c), "R1.7-singular"});
  }
  {
    CtxPtr c = make_context(Field::prime(101), {"x"});
    RingPtr R = make_ring(c, {});
    out.push_back(
        Instance{R, residue_field(R), residue_field(R), irrelevant_ideal(c), "R1.7-regular"});
  }
  {
    CtxPtr c = make_context(Field::prime(101), {"x", "y", "z"});
    Polynomial x = Polynomial::variable(c, 0), y = Polynomial::variable(c, 1),
               z = Polynomial::variable(c, 2);
    RingPtr R = make_ring(c, {x * z, y * z});
    out.push_back(Instance{R, ring_module(R), ring_module(R), irrelevant_ideal(c), "nonCM-T"});
  }
  return out;
}

std::vector<Instance> gen_instances(const std::string& family, const GenParams& params,
                                    std::uint64_t seed) {
  if (family != "monomial" && family != "binomial-hypersurface" && family != "ci" &&
      family != "random-matrix")
    throw Error("unknown instance family: " + family);
  int nv = std::clamp(params.nvars, 1, 4);
  int md = std::clamp(params.max_degree, 1, 4);
  std::vector<Instance> out = builtin_instances();
  std::mt19937_64 g(mix_seed(seed, family));
  for (int k = 0; k < params.count; ++k) {
    std::string prov = family + "#" + std::to_string(k) + "@" + std::to_string(seed);
    out.push_back(make_family_instance(family, g, nv, md, std::move(prov)));
  }
  return out;
}

SuiteResult run_suite(const std::vector<std::string>& ids,
                      const std::vector<Instance>& instances) {
  for (const auto& id : ids)
    if (!checker_table().count(id)) throw Error("unknown theorem id: " + id);
  for (const auto& inst : instances) ambient_ring(inst.R);  // warm the lazy cache before fan-out
  std::vector<std::vector<TheoremReport>> per(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= instances.size()) return;
      for (const auto& id : ids) per[k].push_back(check(id, instances[k]));
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = std::min<std::size_t>(instances.size(), hw ? hw : 1);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SuiteResult out;
  for (auto& batch : per)
    for (auto& rep : batch) {
      out.any_failed = out.any_failed || rep.status == CheckStatus::Failed;
      out.reports.push_back(std::move(rep));
    }
  return out;
}

}  // namespace glc
