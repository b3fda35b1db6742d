#pragma once

#include "sl2comod/matrix.hpp"
#include "sl2comod/rational.hpp"

#include <cstddef>
#include <vector>

namespace sl2comod {

using IntMat = Mat<Int>;

// Smith normal form U*M*V = D with U, V unimodular and D diagonal with
// non-negative entries d_1 | d_2 | ... . The inverses of the transforms are
// tracked as well (they are needed for kernels, saturation and unimodular
// basis completion).
struct SnfResult {
    IntMat U, D, V;
    IntMat U_inv, V_inv;
    std::vector<Int> divisors;  // the diagonal of D, zeros trimmed from the end

    std::size_t rank() const noexcept { return divisors.size(); }
};

SnfResult smith_normal_form(const IntMat& m);

// det of a square integer matrix (fraction-free Gauss / Bareiss).
Int determinant(const IntMat& m);

// Inverse of a unimodular integer matrix.
IntMat unimodular_inverse(const IntMat& m);

}  // namespace sl2comod
