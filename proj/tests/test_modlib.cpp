#include "doctest.h"

#include "glc/morphism.hpp"

using namespace glc;

namespace {

CtxPtr Cxy() { return make_context(Field::prime(101), {"x", "y"}); }

Polynomial var(CtxPtr c, std::size_t i) { return Polynomial::variable(c, i); }

}  // namespace

TEST_CASE("ideal arithmetic") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);

  Ideal I(C, {x * x, x * y});
  Ideal J(C, {y});
  CHECK(ideal_quotient(I, x) == Ideal(C, {x, y}));
  CHECK(ideal_intersection(I, J) == Ideal(C, {x * y}));
  CHECK(ideal_saturation(I, Ideal(C, {x})).is_one());
  // saturating (x^2, xy) by m kills the embedded component at the origin
  CHECK(ideal_saturation(I, irrelevant_ideal(C)) == Ideal(C, {x}));
  CHECK(in_radical(x, I));
  CHECK(!in_radical(y, I));
  CHECK(ideal_power(J, 3) == Ideal(C, {y * y * y}));
  CHECK(ideal_sum(I, J).contains(Ideal(C, {x * x, y})));
  CHECK(Ideal(C, {x - x}).is_zero());
}

TEST_CASE("hilbert series basics") {
  // S/(x^2) over k[x]: 1 + t
  LaurentZ n = monomial_quotient_numerator(1, {Monomial({2})});
  HilbertSeries hs{n, 1};
  CHECK(hs.coeff(0) == 1);
  CHECK(hs.coeff(1) == 1);
  CHECK(hs.coeff(2) == 0);
  CHECK(hs.pole_order() == 0);

  // S = k[x,y]: 1/(1-t)^2
  HilbertSeries poly2{monomial_quotient_numerator(2, {}), 2};
  CHECK(poly2.coeff(5) == 6);
  CHECK(poly2.pole_order() == 2);

  // S/(xy) over k[x,y]: (1-t^2)/(1-t)^2 = (1+t)/(1-t)
  HilbertSeries hyp{monomial_quotient_numerator(2, {Monomial({1, 1})}), 2};
  CHECK(hyp.coeff(0) == 1);
  for (int j = 1; j < 6; ++j) CHECK(hyp.coeff(j) == 2);
  CHECK(hyp.pole_order() == 1);
  CHECK(monomial_quotient_dim(2, {Monomial({1, 1})}) == 1);
  CHECK(monomial_quotient_dim(2, {}) == 2);
  CHECK(monomial_quotient_dim(2, {Monomial({1, 0}), Monomial({0, 1})}) == 0);
  CHECK(monomial_quotient_dim(2, {Monomial({0, 0})}) == -1);
}

TEST_CASE("modules over a quotient ring") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {x * y});
  CHECK(R->dim == 1);

  ModPtr Rm = ring_module(R);
  CHECK(!is_zero_module(*Rm));
  CHECK(krull_dim(*Rm) == 1);
  auto hs = hilbert_series(*Rm);
  CHECK(hs.coeff(0) == 1);
  CHECK(hs.coeff(3) == 2);
  CHECK(piece_dim(*Rm, 3) == 2);

  ModPtr N = quotient_module(R, {x});  // R/xR ≅ k[y]
  CHECK(krull_dim(*N) == 1);
  for (int j = 0; j < 4; ++j) CHECK(piece_dim(*N, j) == 1);
  Ideal annN = annihilator(*N);
  CHECK(annN == Ideal(C, {x}));

  ModPtr k = residue_field(R);
  CHECK(krull_dim(*k) == 0);
  CHECK(piece_dim(*k, 0) == 1);
  CHECK(piece_dim(*k, 1) == 0);
  CHECK(annihilator(*k) == Ideal(C, {x, y}));

  ModPtr zero = quotient_module(R, {Polynomial::constant(C, 1)});
  CHECK(is_zero_module(*zero));
  CHECK(!krull_dim(*zero).has_value());
}

TEST_CASE("twist and direct sum bookkeeping") {
  auto C = Cxy();
  RingPtr R = make_ring(C, {});
  ModPtr Rm = ring_module(R);
  ModPtr Rt = twist(Rm, -2);  // R(-2): generator in degree 2
  CHECK(Rt->F0.degs[0] == 2);
  CHECK(piece_dim(*Rt, 2) == 1);
  CHECK(piece_dim(*Rt, 1) == 0);
  CHECK(hilbert_series(*Rt).coeff(4) == 3);

  ModPtr s = direct_sum(Rm, Rt);
  CHECK(piece_dim(*s, 2) == 3 + 1);
}

TEST_CASE("tensor products") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {});
  ModPtr A = quotient_module(R, {x});
  ModPtr B = quotient_module(R, {y});
  ModPtr T = tensor(A, B);
  CHECK(proxy_isomorphic(*T, *residue_field(R)));

  RingPtr Q = make_ring(C, {x * y});
  ModPtr N = quotient_module(Q, {x});
  ModPtr NN = tensor(N, N);
  CHECK(proxy_isomorphic(*NN, *N));

  ModPtr Rm = ring_module(Q);
  CHECK(proxy_isomorphic(*tensor(Rm, N), *N));
}

TEST_CASE("hom modules") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {});
  ModPtr Rm = ring_module(R);
  ModPtr A = quotient_module(R, {x});

  // Hom(R, N) ≅ N
  CHECK(proxy_isomorphic(*hom_module(Rm, A), *A));
  // Hom(R/x, R) = 0 since x is a nonzerodivisor
  CHECK(is_zero_module(*hom_module(A, Rm)));

  // over R = k[x,y]/(xy): Hom(R/x, R) ≅ (0 : x) = yR ≅ (R/x)(-1)
  RingPtr Q = make_ring(C, {x * y});
  ModPtr N = quotient_module(Q, {x});
  ModPtr H = hom_module(N, ring_module(Q));
  CHECK(!is_zero_module(*H));
  auto hs = hilbert_series(*H);
  CHECK(hs.coeff(0) == 0);
  for (int j = 1; j <= 4; ++j) CHECK(hs.coeff(j) == 1);
  CHECK(annihilator(*H) == Ideal(C, {x}));
}

TEST_CASE("kernel image cokernel homology") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {});
  ModPtr F1 = free_module(R, {1});   // R(-1)
  ModPtr F0 = ring_module(R);

  // multiplication by x: R(-1) -> R
  VecPoly mx(C, 1);
  mx[0] = x;
  Morphism f = make_morphism(F1, F0, {mx});
  CHECK(is_zero_module(*kernel(f).module));
  ModPtr cok = cokernel(f);
  CHECK(proxy_isomorphic(*cok, *quotient_module(R, {x})));
  CHECK(proxy_isomorphic(*image(f).module, *twist(quotient_module(R, {}), -1)));

  // Koszul piece: R(-1)^2 -> R with (x y); kernel generated by (y, -x)
  ModPtr F2 = free_module(R, {1, 1});
  VecPoly col0(C, 1), col1(C, 1);
  col0[0] = x;
  col1[0] = y;
  Morphism g = make_morphism(F2, F0, {col0, col1});
  SubQuot K = kernel(g);
  CHECK(K.module->ngens() == 1);
  CHECK(K.module->F0.degs == std::vector<int>{2});
  CHECK(is_zero_module(*K.module) == false);
  CHECK(K.module->rels.empty());  // free kernel

  // homology of R(-2) --(x i.e. into first slot? use maps with zero composite)
  // 0 -> R -> R: homology at middle of (0 -> R --0--> R/x) style chain:
  Morphism z = zero_morphism(F1, F0);
  ModPtr H = homology_at(z, zero_morphism(F0, F1));
  CHECK(proxy_isomorphic(*H, *F0));
}

TEST_CASE("minimal presentation prunes units") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {});
  // two generators in degree 1 glued by a unit relation, plus x killing one:
  // coker [(1,-1), (0,x)] ≅ (R/x)(-1)
  std::vector<int> degs = {1, 1};
  VecPoly a(C, 2), b(C, 2);
  a[0] = Polynomial::constant(C, 1);
  a[1] = Polynomial::constant(C, -1);
  b[1] = x;
  ModPtr M = Module::make(R, degs, {a, b});
  ModPtr P = minimal_presentation(M);
  CHECK(P->ngens() == 1);
  REQUIRE(P->rels.size() == 1);
  CHECK(proxy_isomorphic(*P, *twist(quotient_module(R, {x}), -1)));
  CHECK(proxy_isomorphic(*P, *M));
}

TEST_CASE("torsion submodule H0_m") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {});
  // N = R/(x^2, xy): torsion = (x)/(x^2,xy) ≅ k(-1); N/torsion = R/(x)
  ModPtr N = quotient_module(R, {x * x, x * y});
  SubQuot t = torsion_submodule(N);
  CHECK(piece_dim(*t.module, 1) == 1);
  CHECK(piece_dim(*t.module, 0) == 0);
  CHECK(piece_dim(*t.module, 2) == 0);
  ModPtr Np = mod_torsion(N);
  CHECK(proxy_isomorphic(*Np, *quotient_module(R, {x})));

  // torsion of a torsion-free module is zero
  CHECK(is_zero_module(*torsion_submodule(ring_module(R)).module));
}
