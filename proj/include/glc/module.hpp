#pragma once

#include <optional>

#include "glc/ring.hpp"

namespace glc {

// Finitely presented graded R-module: cokernel of rels -> F0, where the
// relation columns live over S and the ring relations are implicit.
// gb is the basis of <rels, I*e_j> in F0 over S; it drives membership,
// graded pieces, Hilbert series.
class Module;
using ModPtr = std::shared_ptr<const Module>;

class Module {
public:
  RingPtr R;
  FreeModule F0;
  std::vector<VecPoly> rels;
  std::vector<VecPoly> gb;

  static ModPtr make(RingPtr R, std::vector<int> degs, std::vector<VecPoly> rels);

  std::size_t ngens() const { return F0.rank(); }
  const CtxPtr& ctx() const { return R->ctx; }

  // normal form in F0 modulo <rels, I*e_j>
  VecPoly reduce(const VecPoly& v) const { return normal_form(v, gb); }
  bool member(const VecPoly& v) const { return reduce(v).is_zero(); }
};

// ring-relation columns q*e_j of a free module over R
std::vector<VecPoly> ring_columns(const Ring& R, const FreeModule& F);

ModPtr free_module(RingPtr R, std::vector<int> twists);
ModPtr ring_module(RingPtr R);
ModPtr residue_field(RingPtr R);
ModPtr quotient_module(RingPtr R, const std::vector<Polynomial>& ideal_gens);  // R/J

ModPtr twist(ModPtr M, int d);  // M(d), M(d)_j = M_{d+j}
ModPtr direct_sum(ModPtr a, ModPtr b);
ModPtr tensor(ModPtr a, ModPtr b);

bool is_zero_module(const Module& M);
Ideal annihilator(const Module& M);                 // ideal of S, contains I
std::optional<int> krull_dim(const Module& M);      // nullopt <=> zero module
HilbertSeries hilbert_series(const Module& M);
int piece_dim(const Module& M, int j);
int min_gen_degree(const Module& M);
int max_pres_degree(const Module& M);

// greedy irredundant homogeneous generating set of <cols> + <fixed> modulo <fixed>
std::vector<VecPoly> minimalize_generators(const FreeModule& F, std::vector<VecPoly> cols,
                                           const std::vector<VecPoly>& fixed);

// isomorphic module with no unit entries in the presentation and
// irredundant generators/relations
ModPtr minimal_presentation(ModPtr M);

// Hilbert series of F/<cols> over the polynomial ring (no ring relations added)
HilbertSeries hilbert_series_quotient_S(const FreeModule& F, const std::vector<VecPoly>& cols);

// Hilbert-series + annihilator isomorphism proxy
bool proxy_isomorphic(const Module& a, const Module& b);

std::string module_str(const Module& M);

}  // namespace glc
