#pragma once

#include "glc/pieces.hpp"

namespace glc {

// Chain complex of graded free R-modules: F[0..len], differentials
// d[i] : F[i] -> F[i-1] given as columns over F[i-1]; d[0] stays empty.
struct Complex {
  RingPtr R;
  std::vector<FreeModule> F;
  std::vector<std::vector<VecPoly>> d;

  int top() const { return static_cast<int>(F.size()) - 1; }
};

// throws unless every differential is homogeneous of the right degrees and
// d∘d reduces to 0 mod the ring relations
void validate_complex(const Complex& C);

struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (homological i, internal j)
  std::string str() const;
};

struct Resolution {
  ModPtr M;   // the resolved module; F[0] covers its generators
  Complex C;
  bool complete = false;  // the kernel of the last map vanishes
  std::vector<VecPoly> last_kernel;  // generators of that kernel when capped

  // index of the last nonzero free module
  int length() const { return C.top(); }
};

// Free resolution of M to homological degree len.  With minimize=true the
// presentation is pruned first and every kernel is generated minimally, so
// the result is the minimal graded free resolution (entries in m).
// With minimize=false F[0] and the relation span are kept as given.
Resolution free_resolution(ModPtr M, int len, bool minimize = true);
inline Resolution minimal_free_resolution(ModPtr M, int len) {
  return free_resolution(std::move(M), len, true);
}

BettiTable betti_table(const Resolution& r);

bool resolution_dd_zero(const Resolution& r);
bool resolution_minimal(const Resolution& r);

// alternating sum of the free modules' Hilbert series equals hilbert_series(M),
// with a last-kernel correction term when the resolution is capped
bool resolution_hilbert_certificate(const Resolution& r);

// independent degreewise rank audit of exactness over the window
// [min generator degree, min generator degree + dim R + length]
bool resolution_exactness_audit(const Resolution& r);

Complex koszul_complex(RingPtr R, const std::vector<Polynomial>& elems);

// depth of M over the ambient variables via Koszul homology:
// depth = nvars - max{q : H_q(x_1..x_n; M) != 0}
int koszul_depth(ModPtr M);

// length of the minimal free resolution; nullopt = infinite
// (decided by the depth-R cutoff: a minimal resolution alive at depth(R)+1
// cannot terminate, by Auslander-Buchsbaum)
std::optional<int> projective_dimension(ModPtr M);

}  // namespace glc
