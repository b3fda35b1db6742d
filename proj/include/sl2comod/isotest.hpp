#pragma once

#include "sl2comod/comodule.hpp"

#include <string>
#include <vector>

namespace sl2comod {

// The module of comodule morphisms src -> dst, as the saturated lattice of
// integer solutions of the intertwining equations M_src F = F M_dst, flattened
// row-major (unknown F[i][k] at index i * dst_rank + k). Because the lattice
// is saturated, its span over any of the base rings is the full morphism
// module over that ring.
struct HomBasis {
    std::size_t src_rank = 0, dst_rank = 0;
    Lattice lattice;
    std::vector<IntMat> basis;  // canonical generators, unflattened

    std::size_t dim() const noexcept { return basis.size(); }
};

HomBasis intertwiner_lattice(const Comodule& src, const Comodule& dst);

IntMat unflatten_morphism(const std::vector<Int>& row, std::size_t src_rank, std::size_t dst_rank);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Unknown;
    IntMat witness;  // an intertwiner with unit determinant, when Isomorphic
    Int witness_det = 0;
    std::string reason;
};

// Decide whether two comodules in the same category (ring, side, variant) are
// isomorphic.
//  - Different ranks, or a zero morphism space: NotIsomorphic.
//  - One-dimensional morphism space with generator G: isomorphic iff det(G)
//    is a unit of the ring (every morphism is a ring multiple of G, and
//    scaling can never turn a non-unit determinant into a unit).
//  - Higher-dimensional morphism space: search integer coefficient vectors of
//    max-norm <= coefficient_bound. A unit determinant gives a witness; if the
//    grid is large enough to interpolate the determinant polynomial and all
//    determinants vanish, there is no isomorphism even over Q; otherwise the
//    outcome is Unknown.
IsoResult find_isomorphism(const Comodule& a, const Comodule& b, int coefficient_bound = 3);

// Pairwise classification of a family: the verdict for every pair i < j and
// the partition into isomorphism classes implied by the positive verdicts.
struct Classification {
    std::vector<std::vector<IsoResult>> table;  // table[i][j - i - 1] for i < j
    std::vector<std::size_t> class_of;          // comodule index -> class id (0-based, by first member)
    std::size_t class_count = 0;
    bool complete = true;  // no Unknown verdicts anywhere
};

Classification pairwise_classification(const std::vector<Comodule>& family, int coefficient_bound = 3);

}  // namespace sl2comod
