#pragma once

#include "glc/resolution.hpp"

namespace glc {

// ⊕_u twist(N, shifts[u]) built in one pass; generator (u, j) sits at u*ngens(N)+j
ModPtr block_sum(ModPtr N, const std::vector<int>& shifts);

// Hom(F_•, N) for a complex of free modules: H[p] = ⊕_u twist(N, F_p.degs[u]),
// delta[p] : H[p] -> H[p+1] is precomposition with d_{p+1}
struct HomComplex {
  std::vector<ModPtr> H;
  std::vector<Morphism> delta;
};
HomComplex hom_complex(const Complex& C, ModPtr N);

// F_• ⊗ N: T[p] = ⊕_u twist(N, -F_p.degs[u]), d[p] : T[p] -> T[p-1] for p ≥ 1
struct TensorComplex {
  std::vector<ModPtr> T;
  std::vector<Morphism> d;
};
TensorComplex tensor_complex(const Complex& C, ModPtr N);

struct ExtData {
  ModPtr ext;                 // Ext^i(M, N)
  std::vector<VecPoly> reps;  // cocycle representatives inside hom_i
  ModPtr hom_i;               // Hom(F_i, N)
  Resolution res;             // the resolution of M that was used
};

// Ext^i(M, N) from a minimal resolution of M truncated at i+1
ExtData ext_data(int i, ModPtr M, ModPtr N);
// same, reusing a resolution (requires res complete or length ≥ i+1)
ExtData ext_data_from(const Resolution& res, int i, ModPtr N);
ModPtr ext_module(int i, ModPtr M, ModPtr N);

ModPtr tor_module(int i, ModPtr M, ModPtr N);

// grade(c, M) = inf{i : Ext^i(R/c, M) ≠ 0}; nullopt = infinite (cM = M)
std::optional<int> grade_ideal(const Ideal& c, ModPtr M);
// grade(N, M) := grade(Ann N, M)
std::optional<int> grade_module(ModPtr N, ModPtr M);
// independent oracle: greedy maximal M-regular sequence of generic combinations
// inside c (throws on infinite grade)
int grade_regseq_oracle(const Ideal& c, ModPtr M, std::uint64_t seed = 0);

// depth = grade(m, M) via the Ext characterization (koszul_depth is the oracle)
int depth_module(ModPtr M);

// injective dimension over R; nullopt = infinite.  Finite id forces id = depth R
// and Bass numbers have no gaps, so vanishing of Ext^{dim R+1}(k, N) decides.
std::optional<int> injective_dimension(ModPtr N);

// M as a module over the polynomial ambient S (ring relations folded in)
ModPtr as_ambient_module(ModPtr M);
// reinterpret an S-module annihilated by the ring relations as an R-module
ModPtr as_ring_module(RingPtr R, ModPtr MS);

// K^i(M) = Ext_S^{n−i}(M, ω_S) with ω_S = S(−n), as R-modules, i = 0..dim M
std::vector<ModPtr> deficiency_table(ModPtr M);
ModPtr canonical_module(ModPtr M);        // K^{dim M}(M)
ModPtr canonical_module_ring(RingPtr R);  // K(R)

bool is_cohen_macaulay(ModPtr M);  // dim = depth
bool ring_is_cohen_macaulay(RingPtr R);
// CM type: rank of the last module in the minimal S-free resolution of R
int ring_type(RingPtr R);
bool is_gorenstein(RingPtr R);  // CM of type 1

struct InvariantReport {
  int dim = 0;
  int depth = 0;
  std::optional<int> pd;  // nullopt = infinite
  std::optional<int> id;  // nullopt = infinite
  int cm_defect = 0;
  bool is_cm = false;
  bool gorenstein = false;  // of the ring
};
InvariantReport invariant_report(ModPtr M);

}  // namespace glc
