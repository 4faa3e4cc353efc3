#pragma once

#include <map>

#include "glc/homology.hpp"
#include "glc/pieces.hpp"

namespace glc {

// K^i(N, M) = Ext_R^{t-i}(N, M), t = dim R; requires R Gorenstein, pd M finite
ModPtr generalized_deficiency(int i, ModPtr N, ModPtr M);

// K^i(N,M) for i = 0..t, together with g = grade(N, M) and s = t - g.
// K^i = 0 for i > s and K^s ≠ 0.
struct GenDeficiencyTable {
  std::vector<ModPtr> entries;
  int g = 0;
  int s = 0;
};
GenDeficiencyTable gen_deficiency_table(ModPtr N, ModPtr M);

// (s, K^s(N,M)); throws when the supports are disjoint (grade infinite)
std::pair<int, ModPtr> generalized_canonical(ModPtr N, ModPtr M);

// Ext^j_R(N, M ⊗^L D•) as hyper-Ext over the ambient S: from a finite free
// resolution F_• of M, the complex C = Hom_R(F_•, N) is resolved over S by
// iterated mapping cones and mapped into ω_S = S(-n); index n - t + j.
// Out-of-band j gives the zero module.
ModPtr hyperext_dualizing(int j, ModPtr N, ModPtr M);

enum class DualRoute { CMCanonical, HyperextDualizing };

// finitely generated module whose graded Matlis dual (j ↦ -j) is H^i_m(M, N)
struct DualSideModule {
  ModPtr module;
  int i = 0;
  DualRoute route = DualRoute::HyperextDualizing;
};
DualSideModule glc_dual_side(int i, ModPtr M, ModPtr N);

// stages Ext^i(M/aⁿM, N) with the induced transition maps; per-degree limit
// dimensions on the window when the last two transitions certify stabilization
struct TruncatedLimit {
  int i = 0;
  int n_max = 0;
  std::pair<int, int> window{0, 0};
  std::vector<ModPtr> stages;         // n = 1..n_max
  std::vector<Morphism> transitions;  // stages[n] -> stages[n+1]
  bool stabilized = false;
  std::map<int, std::optional<long long>> limit_hilbert;  // nullopt = uncertified
};
TruncatedLimit glc_truncated_limit(int i, const Ideal& a, ModPtr M, ModPtr N, int n_max,
                                   std::optional<std::pair<int, int>> window = std::nullopt);

// dim_k H^i of the total complex Č(elems) ⊗ Hom(F_•, N) per window degree,
// via Koszul-power stages; a degree reports a value only when the last two
// stage transitions certify the colimit (equal ranks, composite included)
struct CechResult {
  int i = 0;
  std::pair<int, int> window{0, 0};
  int step_bound = 10;
  std::map<int, std::optional<long long>> values;  // nullopt = inconclusive
  bool conclusive = false;
};
CechResult graded_cech_cohomology(int i, const std::vector<Polynomial>& elems, ModPtr M,
                                  ModPtr N, std::optional<std::pair<int, int>> window = std::nullopt,
                                  int step_bound = 10);

// sup{i : H^i_m(M,N) ≠ 0} = dim R - grade(Ann N, M); R Gorenstein and
// pd M or pd N finite
int top_nonvanishing(ModPtr M, ModPtr N);

// cd(m, N) = dim N
int cohomological_dimension_at_m(ModPtr N);

// [-(n + maxdeg) - 4, maxdeg + 4] over the presentation degrees of M and N
std::pair<int, int> default_window(ModPtr M, ModPtr N);

}  // namespace glc
