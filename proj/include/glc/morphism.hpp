#pragma once

#include "glc/module.hpp"

namespace glc {

// Graded degree-0 map src -> dst, given by the images of src's generators
// as columns over dst's generating free module.
struct Morphism {
  ModPtr src, dst;
  std::vector<VecPoly> cols;
};

// validate=true checks homogeneity of columns and well-definedness on relations
Morphism make_morphism(ModPtr src, ModPtr dst, std::vector<VecPoly> cols, bool validate = true);
Morphism identity_morphism(ModPtr M);
Morphism zero_morphism(ModPtr src, ModPtr dst);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
bool is_zero_morphism(const Morphism& f);

// apply the map on generators to an element of src's free cover
VecPoly apply(const Morphism& f, const VecPoly& v);

struct SubQuot {
  ModPtr module;
  Morphism incl;  // into the ambient module
};

SubQuot kernel(const Morphism& f);
SubQuot image(const Morphism& f);
ModPtr cokernel(const Morphism& f);

// H = ker(g)/im(f) for composable f: A->B, g: B->C with g∘f = 0
ModPtr homology_at(const Morphism& f, const Morphism& g);

// homology with representatives: H's generators are the kernel generators,
// reps[k] is the k-th one as an element of B's free cover
struct HomologyData {
  ModPtr H;
  std::vector<VecPoly> reps;
};
HomologyData homology_data(const Morphism& f, const Morphism& g);

// coefficients of v over gens, modulo B's relations; nullopt if not a member
std::optional<std::vector<Polynomial>> express_in(const Module& B,
                                                  const std::vector<VecPoly>& gens,
                                                  const VecPoly& v);

// submodule of N generated by cols, with inclusion
SubQuot submodule(ModPtr N, std::vector<VecPoly> cols);

// {v in F : f*v in <U>} and <A> ∩ <B>, as column generators over S
std::vector<VecPoly> submodule_colon(const FreeModule& F, const std::vector<VecPoly>& U,
                                     const Polynomial& f);
std::vector<VecPoly> submodule_intersect(const FreeModule& F, const std::vector<VecPoly>& A,
                                         const std::vector<VecPoly>& B);

// elements of N killed by a power of the irrelevant ideal, and N over them
SubQuot torsion_submodule(ModPtr N);   // H^0_m(N)
ModPtr mod_torsion(ModPtr N);          // N / H^0_m(N)

// Hom_R(M, N) via the kernel of Hom(F0,N) -> Hom(F1,N)
ModPtr hom_module(ModPtr M, ModPtr N);

}  // namespace glc
