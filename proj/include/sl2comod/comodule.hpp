#pragma once

#include "sl2comod/base_ring.hpp"
#include "sl2comod/hopf.hpp"
#include "sl2comod/lattice.hpp"
#include "sl2comod/linear_solve.hpp"

#include <string>
#include <vector>

namespace sl2comod {

// Which side the coaction lives on. With coefficient matrix M (rows indexed by
// the source basis):
//   Right: rho(e_i) = sum_j M[i][j] (x) e_j      in R (x) V,
//   Left:  rho(e_i) = sum_j e_j (x) M[i][j]      in V (x) R.
enum class Side { Right, Left };

std::string side_name(Side s);
std::string variant_name(HopfVariant v);

using PolyMat = Mat<HopfPoly>;

// A finitely generated free comodule over O(SL_2) with a chosen basis: the
// base ring, the coaction side, the comultiplication variant, and the square
// coefficient matrix. The comodule axioms are *not* enforced on construction;
// verify_comodule checks them.
struct Comodule {
    BaseRing ring;
    Side side;
    HopfVariant variant;
    PolyMat matrix;
    std::vector<std::string> labels;

    std::size_t rank() const noexcept { return matrix.rows(); }
};

std::vector<std::string> default_labels(std::size_t n);

// Validating constructor: matrix must be square, labels (if given) must match.
Comodule make_comodule(const BaseRing& ring, Side side, HopfVariant variant, PolyMat matrix,
                       std::vector<std::string> labels = {});

struct ComoduleCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Full axiom check: every coefficient lies in the base ring, the counit of the
// matrix is the identity, and comultiplying each entry reproduces the matrix
// square on the correct side:
//   Right: Delta(M[i][k]) = sum_j M[i][j] (x) M[j][k],
//   Left:  Delta(M[i][k]) = sum_j M[j][k] (x) M[i][j].
ComoduleCheckReport verify_comodule(const Comodule& c);

// --- elementary constructions -------------------------------------------------

// Rank-n comodule with identity coaction matrix.
Comodule trivial_comodule(const BaseRing& ring, std::size_t n);

// The defining rank-2 comodule; its matrix is [[x11, x12], [x21, x22]] for the
// Right side and the transpose of that for the Left side.
Comodule standard_comodule(const BaseRing& ring, Side side = Side::Right,
                           HopfVariant variant = HopfVariant::Std);

// n-th symmetric power of the standard comodule (right/std), on the monomial
// basis v_i = e1^(n-i) e2^i, i = 0..n:
//   M[i][j] = sum_{alpha+beta=j} C(n-i,alpha) C(i,beta)
//             x11^(n-i-alpha) x12^alpha x21^(i-beta) x22^beta.
Comodule sym_power(const BaseRing& ring, int n);

// Tensor product (same ring, side and variant on both factors); the matrix is
// the Kronecker product.
Comodule tensor_product(const Comodule& a, const Comodule& b);

Comodule direct_sum(const Comodule& a, const Comodule& b);

// Linear dual on the dual basis. The matrix is the antipode of the transpose;
// the coaction naturally lands on the other side and the opposite
// comultiplication variant.
Comodule linear_dual(const Comodule& c);

// The equivalence that keeps the coefficient matrix and flips both the side
// and the variant (an involution; composing it with itself is the identity).
Comodule flip_side(const Comodule& c);

// Dual inside the same category: flip_side(linear_dual(c)). Same side and
// variant as c, matrix = antipode of the transpose.
Comodule contragredient(const Comodule& c);

// Twist by the automorphism g -> transpose(g)^(-1): apply the transposed-
// inverse variable substitution to every entry. Side and variant are kept.
Comodule transpose_inverse_twist(const Comodule& c);

// Apply the variable transposition x12 <-> x21 to every entry; this toggles
// the side and keeps the variant (an involution). Like flip_side it is an
// equivalence of categories that fixes morphism matrices.
Comodule side_transpose(const Comodule& c);

// The copy of c in the requested category, transported through flip_side and
// side_transpose (which fix morphism matrices, so isomorphism questions are
// unchanged).
Comodule in_category(const Comodule& c, Side side, HopfVariant variant);

// Canonical base change along a ring inclusion; throws unless
// c.ring.subring_of(target).
Comodule base_change(const Comodule& c, const BaseRing& target);

// Conjugate the coaction matrix by a unimodular change of basis P (new basis
// vectors are the rows of P in the old coordinates): M -> P M P^(-1).
Comodule change_basis(const Comodule& c, const IntMat& p, std::vector<std::string> labels = {});

// --- invariant sublattices / subquotients --------------------------------------

// Result of splitting a comodule along a saturated invariant sublattice: the
// sublattice with its induced coaction, the quotient, and the unimodular
// change of basis whose first rank(sub) rows are the canonical basis of the
// sublattice.
struct SubQuotient {
    Comodule sub;
    Comodule quotient;
    IntMat change_of_basis;
    IntMat change_of_basis_inverse;
};

// True iff the saturated lattice L is carried into itself by the coaction.
bool is_subcomodule(const Comodule& c, const Lattice& l);

// Split c along a saturated invariant sublattice; throws std::invalid_argument
// if l is not saturated or not invariant.
SubQuotient sub_quotient(const Comodule& c, const Lattice& l);

// Sublattice of symmetric tensors inside c^(x)d (the common kernel of all
// adjacent transpositions), with its induced coaction. For the standard
// comodule this is the divided-power counterpart of sym_power; over Z the two
// are genuinely different comodules for d >= 2.
Comodule symmetric_tensors(const Comodule& c, int d);

// d-th symmetric power of an arbitrary comodule: the quotient of c^(x)d by the
// sublattice spanned by t - swap_k(t) over all adjacent transpositions. That
// sublattice is saturated (the classical symmetric power of a free module is
// free) and invariant, so the quotient is again a comodule. For the standard
// comodule this agrees with sym_power up to a unimodular change of basis.
Comodule sym_power_of(const Comodule& c, int d);

// Sign-invariant sublattice of c (x) c (kernel of swap + identity).
Comodule exterior_square(const Comodule& c);

// --- morphisms -----------------------------------------------------------------

// A morphism src -> dst is a rank(src) x rank(dst) matrix F over the base ring
// acting on rows: phi(e_i) = sum_k F[i][k] f_k. It intertwines the coactions
// iff M_src * F = F * M_dst (the same matrix equation on either side).
struct MorphismReport {
    bool ok = true;
    std::string detail;
};

MorphismReport morphism_check(const Comodule& src, const Comodule& dst, const RatMat& f);

// Entrywise constant embeddings used to mix scalar and polynomial matrices.
PolyMat constant_matrix(const RatMat& m);
PolyMat constant_matrix(const IntMat& m);
RatMat rational_matrix(const IntMat& m);

}  // namespace sl2comod
