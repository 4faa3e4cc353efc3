#pragma once

#include "glc/vecpoly.hpp"

namespace glc {

// Full normal form of v modulo G (tail-reduced).  If cofactors != nullptr it
// receives polynomials q_i with  v = sum_i q_i G[i] + nf.
VecPoly normal_form(const VecPoly& v, const std::vector<VecPoly>& G,
                    std::vector<Polynomial>* cofactors = nullptr);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       std::vector<Polynomial>* cofactors = nullptr);

// Reduced Groebner basis of a submodule of F, canonically sorted, monic.
// With track=true, change[i] holds cofactors expressing g[i] in the inputs.
struct GBasis {
  FreeModule F;
  std::vector<VecPoly> g;
  std::vector<std::vector<Polynomial>> change;
  bool tracked = false;

  bool contains(const VecPoly& v) const { return normal_form(v, g).is_zero(); }
};

GBasis buchberger(const FreeModule& F, const std::vector<VecPoly>& gens, bool track = false);

// Generating set of Syz(G) for a Groebner basis G of a submodule of F
// (from standard representations of S-pair reductions).  Lives in the free
// module with generator degrees deg G[i].
std::vector<VecPoly> schreyer_syzygies(const FreeModule& F, const std::vector<VecPoly>& G);

// Generators of the kernel of the map S^s -> F sending e_j to cols[j]
// (columns over the polynomial ring; quotient rings are handled upstream by
// augmenting with relation columns).  Each output vector v satisfies
// sum_j v_j cols[j] = 0 exactly.  Zero vectors are dropped.
std::vector<VecPoly> syzygy_generators(const FreeModule& F, const std::vector<VecPoly>& cols);

// rank-1 conveniences
GBasis buchberger_ideal(CtxPtr ctx, const std::vector<Polynomial>& gens, bool track = false);
std::vector<Polynomial> gb_polys(const GBasis& gb);

}  // namespace glc
