#pragma once

#include "sl2comod/comodule.hpp"

#include <map>

namespace sl2comod {

// Action of a tangent vector at the identity on the underlying module, as a
// matrix in the row-operator convention X.e_i = sum_j A[i][j] e_j. The
// normalization is fixed by the standard comodule: diag(1,-1) acts with
// weights (+1, -1) on (e1, e2), [[0,1],[0,0]] sends e2 to e1, and
// [[0,0],[1,0]] sends e1 to e2.
RatMat dist_action(const Comodule& c, const Mat<Rational>& direction);

// The three standard directions.
Mat<Rational> cartan_direction();    // diag(1, -1)
Mat<Rational> raising_direction();   // e2 -> e1
Mat<Rational> lowering_direction();  // e1 -> e2

// Decomposition of Z^rank into integer eigenlattices of the torus action.
struct WeightDecomposition {
    std::map<int, Lattice> eigenlattices;  // weight -> saturated eigenlattice
    bool spans = false;                     // eigenlattice ranks sum to the rank
    bool integral = false;                  // the eigenlattices sum to all of Z^rank
    Int sum_index = 0;                      // index of the sum in Z^rank (1 when integral)
};

WeightDecomposition weight_decomposition(const Comodule& c);

// Weight multiplicities; throws std::invalid_argument when the torus action is
// not diagonalizable with integer eigenvalues.
std::map<int, std::size_t> character_multiplicities(const Comodule& c);

}  // namespace sl2comod
