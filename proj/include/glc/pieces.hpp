#pragma once

#include <map>

#include "glc/linalg.hpp"
#include "glc/morphism.hpp"

namespace glc {

// Basis of the degree-j piece of a module: standard monomials m*e_c, i.e.
// those not divisible by a lead of the module's basis in component c.
struct PieceBasis {
  int j = 0;
  std::vector<std::pair<Monomial, std::size_t>> elems;
  std::map<std::pair<std::vector<int>, std::size_t>, std::size_t> index;

  std::size_t dim() const { return elems.size(); }
};

PieceBasis piece_basis(const Module& M, int j);

// coordinates of v's class (v homogeneous of degree j, or zero)
std::vector<Scalar> piece_coords(const Module& M, const PieceBasis& B, const VecPoly& v);

VecPoly piece_element(const Module& M, const PieceBasis& B, const std::vector<Scalar>& coords);

// matrix of a degree-0 morphism between the degree-j pieces
Mat morphism_piece_matrix(const Morphism& f, const PieceBasis& src, const PieceBasis& dst);
Mat morphism_piece_matrix(const Morphism& f, int j);

// matrix of multiplication by homogeneous f: M_src.j -> M_dst.j (+deg f)
Mat mult_piece_matrix(const Module& M, const Polynomial& f, const PieceBasis& src,
                      const PieceBasis& dst);

}  // namespace glc
