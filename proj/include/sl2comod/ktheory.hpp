#pragma once

#include "sl2comod/comodule.hpp"

#include <map>
#include <string>

namespace sl2comod {

// A virtual character: a Laurent polynomial in one variable z, stored as
// weight -> coefficient with zero coefficients dropped. The class of a
// comodule in the representation ring is its character; classes add on short
// exact sequences and multiply on tensor products.
using KClass = std::map<int, Int>;

KClass kclass_add(const KClass& a, const KClass& b);
KClass kclass_sub(const KClass& a, const KClass& b);
KClass kclass_mul(const KClass& a, const KClass& b);
bool kclass_is_zero(const KClass& a);
std::string kclass_str(const KClass& a);

// Character of a comodule via the torus eigenlattice ranks; throws when the
// torus action is not diagonalizable with integer weights.
KClass kclass_of(const Comodule& c);

// Character of the n-th symmetric power: z^n + z^(n-2) + ... + z^(-n).
KClass sym_character(int n);

// Expansion of a virtual character in the basis of symmetric-power
// characters, by repeatedly peeling the top degree. Coefficients may be
// negative (the expansion is virtual). Throws std::invalid_argument when the
// input is not in the span (it is iff the character is symmetric under
// z -> 1/z).
std::map<int, Int> sym_expansion(KClass k);

// Closed form for the expansion of sym_character(n) * sym_character(m):
// degree n+m-2i with multiplicity 1 for i = 0..min(n, m).
std::map<int, Int> expected_product_expansion(int n, int m);

// True iff the product of the two symmetric-power characters expands exactly
// to the expected staircase.
bool virtual_product_check(int n, int m);

}  // namespace sl2comod
