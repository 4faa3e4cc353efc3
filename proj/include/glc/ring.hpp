#pragma once

#include <memory>

#include "glc/groebner.hpp"
#include "glc/hilbert.hpp"
#include "glc/ideal.hpp"

namespace glc {

// R = S/I for a polynomial ring S and a homogeneous ideal I (possibly zero).
struct Ring {
  CtxPtr ctx;
  std::vector<Polynomial> rels;    // generators of I
  std::vector<Polynomial> rel_gb;  // reduced basis of I
  int dim = 0;                     // Krull dimension of R

  bool is_polynomial() const { return rel_gb.empty(); }
  std::size_t nvars() const { return ctx->nvars(); }

  // write-once cache for the polynomial ambient (shared so morphisms between
  // ambient-restricted modules see the same ring object)
  mutable std::shared_ptr<const Ring> ambient_cache;
};

using RingPtr = std::shared_ptr<const Ring>;

// validates homogeneity and properness (I != (1))
RingPtr make_ring(CtxPtr ctx, std::vector<Polynomial> rels);

// S for R = S/I (R itself when I = 0); cached per ring
RingPtr ambient_ring(const RingPtr& R);

}  // namespace glc
