#pragma once

#include "sl2comod/base_ring.hpp"
#include "sl2comod/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2comod {

using RatMat = Mat<Rational>;
using RatVec = std::vector<Rational>;

// Full solution set of M x = b over a base ring: one particular point plus a
// generating set of the homogeneous solutions (ring-linear combinations give
// every solution).
struct AffineSolution {
    RatVec point;
    std::vector<RatVec> basis;
};

// Why M x = b has no solution over the ring: either an inconsistent row
// (divisor == 0, value != 0 after the unimodular row transform) or an
// elementary-divisor condition value/divisor that is not in the ring.
struct NoSolutionCertificate {
    std::size_t constraint_index = 0;
    Int divisor;
    Rational value;
    std::string reason;
};

struct SolveOutcome {
    std::optional<AffineSolution> solution;
    std::optional<NoSolutionCertificate> certificate;

    bool ok() const noexcept { return solution.has_value(); }
};

// Solve M x = b for x over `ring` (entries of M, b must lie in the ring).
// Denominators are cleared row by row, the integer system is compressed to a
// canonical basis of its row lattice (this preserves the solution set over any
// ring containing Z), and the compressed system is resolved through the Smith
// normal form: with U M V = D and z = U b, solvability over the ring is
// exactly the conjunction of z_i = 0 on zero rows and z_i / d_i in the ring on
// pivot rows.
SolveOutcome solve_over(const BaseRing& ring, const RatMat& m, const RatVec& b);

// One linear equation with integer coefficients, sparse: (unknown index, coefficient).
using SparseIntRow = std::vector<std::pair<std::size_t, Int>>;

// Saturated lattice of integer solutions of a homogeneous sparse system in
// n_unknowns unknowns. Because the returned basis is saturated and the rings
// here are localizations of Z, its ring-span is the full solution module over
// any base ring. Runs incrementally: a candidate basis shrinks by one for each
// independent equation, so huge redundant systems stay cheap.
Lattice sparse_homogeneous_kernel(const std::vector<SparseIntRow>& equations, std::size_t n_unknowns);

// Extended gcd: returns g >= 0 and (s, t) with s*a + t*b = g.
struct ExtGcd {
    Int g, s, t;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

}  // namespace sl2comod
