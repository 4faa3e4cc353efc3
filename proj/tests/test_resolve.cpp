#include "doctest.h"

#include "glc/linalg.hpp"
#include "glc/resolution.hpp"

using namespace glc;

namespace {

CtxPtr Cxy() { return make_context(Field::prime(101), {"x", "y"}); }

Polynomial var(CtxPtr c, std::size_t i) { return Polynomial::variable(c, i); }

Mat mat(const Field& F, std::size_t r, std::size_t c, std::vector<int> vals) {
  Mat A(F, r, c);
  for (std::size_t i = 0; i < vals.size(); ++i) A.a[i] = F.from_int(vals[i]);
  return A;
}

}  // namespace

TEST_CASE("exact linear algebra") {
  Field F = Field::prime(101);
  Mat A = mat(F, 2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(mat_rank(A) == 1);
  Mat N = mat_nullspace(A);
  CHECK(N.ncols == 2);
  for (std::size_t k = 0; k < N.ncols; ++k) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < N.nrows; ++i) v.push_back(N.at(i, k));
    for (const Scalar& s : A.apply(v)) CHECK(F.is_zero(s));
  }

  Mat B = mat(F, 2, 2, {1, 1, 0, 1});
  auto sol = mat_solve(B, {F.from_int(3), F.from_int(2)});
  REQUIRE(sol.has_value());
  CHECK(F.eq((*sol)[0], F.from_int(1)));
  CHECK(F.eq((*sol)[1], F.from_int(2)));
  Mat C = mat(F, 2, 1, {1, 2});
  CHECK(!mat_solve(C, {F.one(), F.one()}).has_value());

  // ker(A)/im(B') with B' columns inside the kernel
  Mat A2 = mat(F, 1, 3, {1, 1, 1});
  Mat B2 = mat(F, 3, 1, {1, -1, 0});
  QuotientSpace Q = quotient_space(A2, B2);
  CHECK(Q.dim() == 1);
  std::vector<Scalar> w = {F.from_int(0), F.from_int(1), F.from_int(-1)};
  auto cw = Q.coords(w);
  CHECK(cw.size() == 1);
  CHECK(!F.is_zero(cw[0]));
  // a vector inside im(B') has zero class
  std::vector<Scalar> b = {F.from_int(2), F.from_int(-2), F.zero()};
  CHECK(F.is_zero(Q.coords(b)[0]));

  Field Q0 = Field::rationals();
  Mat R1 = mat(Q0, 2, 2, {2, 0, 0, 3});
  CHECK(mat_rank(R1) == 2);
  auto rs = mat_solve(R1, {Q0.one(), Q0.one()});
  REQUIRE(rs.has_value());
  CHECK(Q0.eq((*rs)[0], Q0.from_rational(Rational(1, 2))));
}

TEST_CASE("graded piece bases") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {x * y});
  ModPtr Rm = ring_module(R);

  for (int j = 0; j <= 4; ++j) {
    PieceBasis B = piece_basis(*Rm, j);
    CHECK(static_cast<long long>(B.dim()) == piece_dim(*Rm, j));
  }

  // coords/element round trip in degree 2 (basis {x^2, y^2})
  PieceBasis B2 = piece_basis(*Rm, 2);
  REQUIRE(B2.dim() == 2);
  VecPoly v(C, 1);
  v[0] = x * x - y * y;
  auto c = piece_coords(*Rm, B2, v);
  VecPoly back = piece_element(*Rm, B2, c);
  CHECK(Rm->reduce(back - v).is_zero());

  // multiplication by x from degree 1 to degree 2 kills y
  PieceBasis B1 = piece_basis(*Rm, 1);
  Mat mx = mult_piece_matrix(*Rm, x, B1, B2);
  CHECK(mat_rank(mx) == 1);

  // piece of a twisted free module
  ModPtr F = free_module(R, {1, 3});
  CHECK(static_cast<long long>(piece_basis(*F, 3).dim()) == piece_dim(*F, 3));
}

TEST_CASE("koszul resolution of the residue field") {
  auto C = Cxy();
  RingPtr S = make_ring(C, {});
  ModPtr k = residue_field(S);

  Resolution r = minimal_free_resolution(k, 5);
  CHECK(r.complete);
  CHECK(r.length() == 2);
  validate_complex(r.C);
  CHECK(resolution_dd_zero(r));
  CHECK(resolution_minimal(r));

  BettiTable b = betti_table(r);
  CHECK(b.entries.at({0, 0}) == 1);
  CHECK(b.entries.at({1, 1}) == 2);
  CHECK(b.entries.at({2, 2}) == 1);
  CHECK(b.entries.size() == 3);

  CHECK(resolution_hilbert_certificate(r));
  CHECK(resolution_exactness_audit(r));

  CHECK(projective_dimension(k) == 2);
  CHECK(projective_dimension(quotient_module(S, {var(C, 0)})) == 1);
  CHECK(projective_dimension(ring_module(S)) == 0);
  CHECK(projective_dimension(free_module(S, {2, 7})) == 0);
}

TEST_CASE("periodic resolution over a hypersurface") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr R = make_ring(C, {x * y});
  ModPtr M = quotient_module(R, {x});  // R/xR, infinite projective dimension

  Resolution r = minimal_free_resolution(M, 4);
  CHECK(!r.complete);
  CHECK(r.length() == 4);
  validate_complex(r.C);
  CHECK(resolution_minimal(r));
  for (int i = 0; i <= 4; ++i) {
    CHECK(r.C.F[i].rank() == 1);
    CHECK(r.C.F[i].degs == std::vector<int>{i});
  }
  // 2-periodic: x, y, x, y
  CHECK(r.C.d[1][0][0].monic() == x);
  CHECK(r.C.d[2][0][0].monic() == y);
  CHECK(r.C.d[3][0][0].monic() == x);
  CHECK(r.C.d[4][0][0].monic() == y);

  CHECK(resolution_hilbert_certificate(r));  // capped correction term
  CHECK(resolution_exactness_audit(r));
  CHECK(!projective_dimension(M).has_value());

  // residue field over the hypersurface: betti 1,2,2,2,...
  Resolution rk = minimal_free_resolution(residue_field(R), 3);
  CHECK(!rk.complete);
  BettiTable bk = betti_table(rk);
  CHECK(bk.entries.at({0, 0}) == 1);
  CHECK(bk.entries.at({1, 1}) == 2);
  CHECK(bk.entries.at({2, 2}) == 2);
  CHECK(bk.entries.at({3, 3}) == 2);
  CHECK(resolution_hilbert_certificate(rk));
  CHECK(resolution_exactness_audit(rk));
  CHECK(!projective_dimension(residue_field(R)).has_value());

  CHECK(projective_dimension(ring_module(R)) == 0);
}

TEST_CASE("koszul complex structure") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr S = make_ring(C, {});
  Complex K = koszul_complex(S, {x, y});
  REQUIRE(K.top() == 2);
  CHECK(K.F[0].rank() == 1);
  CHECK(K.F[1].rank() == 2);
  CHECK(K.F[2].rank() == 1);
  CHECK(K.F[2].degs == std::vector<int>{2});
  // d2(e_{01}) = -y e_{0} + x e_{1}
  CHECK(K.d[2][0][0] == y.scaled(C->field.from_int(-1)));
  CHECK(K.d[2][0][1] == x);

  Complex K1 = koszul_complex(S, {x + y});
  CHECK(K1.top() == 1);
  CHECK(K1.F[1].degs == std::vector<int>{1});

  CHECK_THROWS_AS(koszul_complex(S, {x - x}), Error);

  // quadric entries pick up degree 2
  Complex K2 = koszul_complex(S, {x * x, y});
  CHECK(K2.F[2].degs == std::vector<int>{3});
  validate_complex(K2);
}

TEST_CASE("depth via koszul homology") {
  auto C = Cxy();
  auto x = var(C, 0), y = var(C, 1);
  RingPtr S = make_ring(C, {});
  CHECK(koszul_depth(ring_module(S)) == 2);
  CHECK(koszul_depth(residue_field(S)) == 0);
  CHECK(koszul_depth(quotient_module(S, {x})) == 1);
  CHECK(koszul_depth(direct_sum(ring_module(S), residue_field(S))) == 0);

  RingPtr R = make_ring(C, {x * y});
  CHECK(koszul_depth(ring_module(R)) == 1);
  CHECK(koszul_depth(quotient_module(R, {x})) == 1);

  // non-Cohen-Macaulay: dim 2 but depth 1
  auto C3 = make_context(Field::prime(101), {"x", "y", "z"});
  auto x3 = var(C3, 0), y3 = var(C3, 1), z3 = var(C3, 2);
  RingPtr T = make_ring(C3, {x3 * z3, y3 * z3});
  CHECK(T->dim == 2);
  CHECK(koszul_depth(ring_module(T)) == 1);

  auto CQ = make_context(Field::rationals(), {"t"});
  CHECK(koszul_depth(ring_module(make_ring(CQ, {}))) == 1);
}

TEST_CASE("unminimized resolutions keep the given presentation") {
  auto C = Cxy();
  auto x = var(C, 0);
  RingPtr R = make_ring(C, {});
  // coker [(1,-1),(0,x)] ≅ (R/x)(-1) presented redundantly
  VecPoly a(C, 2), b(C, 2);
  a[0] = Polynomial::constant(C, 1);
  a[1] = Polynomial::constant(C, -1);
  b[1] = x;
  ModPtr M = Module::make(R, {1, 1}, {a, b});

  Resolution r = free_resolution(M, 3, false);
  CHECK(r.C.F[0].rank() == 2);  // generators kept as given
  validate_complex(r.C);
  CHECK(!resolution_minimal(r));
  CHECK(r.complete);
  CHECK(resolution_hilbert_certificate(r));
  CHECK(resolution_exactness_audit(r));

  Resolution rm = minimal_free_resolution(M, 3);
  CHECK(rm.C.F[0].rank() == 1);
  CHECK(rm.length() == 1);

  // the zero module resolves to an empty complex
  Resolution rz = minimal_free_resolution(quotient_module(R, {Polynomial::constant(C, 1)}), 2);
  CHECK(rz.complete);
  CHECK(rz.length() == 0);
  CHECK(rz.C.F[0].rank() == 0);
}
