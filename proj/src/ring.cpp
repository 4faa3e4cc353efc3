#include "glc/ring.hpp"

namespace glc {

RingPtr make_ring(CtxPtr ctx, std::vector<Polynomial> rels) {
  auto R = std::make_shared<Ring>();
  R->ctx = ctx;
  for (auto& f : rels) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw Error("quotient ideal generator is not homogeneous: " + f.str());
    R->rels.push_back(f);
  }
  R->rel_gb = gb_polys(buchberger_ideal(ctx, R->rels));
  for (const auto& g : R->rel_gb)
    if (g.is_constant()) throw Error("quotient ideal is the unit ideal");
  std::vector<Monomial> leads;
  for (const auto& g : R->rel_gb) leads.push_back(g.leading_monomial());
  R->dim = monomial_quotient_dim(ctx->nvars(), leads);
  return R;
}

RingPtr ambient_ring(const RingPtr& R) {
  if (R->is_polynomial()) return R;
  if (!R->ambient_cache) R->ambient_cache = make_ring(R->ctx, {});
  return R->ambient_cache;
}

}  // namespace glc
