#pragma once

#include "sl2comod/comodule.hpp"
#include "sl2comod/isotest.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl2comod {

// Multiplication Sym^n (x) Sym^m -> Sym^(n+m) on monomial bases: the basis
// tensor (i, j) maps to v_(i+j) with coefficient 1.
IntMat multiplication_onto_sym(int n, int m);

// Multiplication by the invariant element e1(x)e2 - e2(x)e1 of the tensor
// square of the standard comodule:
//   Sym^(n-1) (x) Sym^(m-1) -> Sym^n (x) Sym^m,
//   (q, t) -> (q, t+1) - (q+1, t).
IntMat determinant_multiplication_map(int n, int m);

// Verify that 0 -> objects[0] -> ... -> objects.back() -> 0 is exact over the
// common base ring: every map intertwines, the first map is injective, the
// image of each map equals the kernel of the next up to a unit index, and the
// last map is surjective up to a unit index.
struct ExactnessReport {
    bool ok = true;
    std::vector<std::string> failures;
};

ExactnessReport check_exact_sequence(const std::vector<const Comodule*>& objects, const std::vector<IntMat>& maps);

// A finite decreasing filtration of a comodule by saturated invariant
// sublattices, with each successive quotient identified with a symmetric
// power by an explicit unit-determinant intertwiner.
struct Filtration {
    std::vector<Lattice> terms;        // terms[0] full, strictly decreasing, terms.back() zero
    std::vector<int> degrees;          // expected symmetric-power degree of terms[i]/terms[i+1]
    std::vector<Comodule> subs;        // comodule structure on terms[i] in its canonical basis
    std::vector<Comodule> quotients;   // the successive quotients terms[i]/terms[i+1]
    std::vector<IntMat> projections;   // row-convention projections subs[i] -> quotients[i]
    std::vector<IsoResult> witnesses;  // quotient i  ->  sym_power(degrees[i])
    bool ok = true;
    std::vector<std::string> failures;
};

// The universal filtration of Sym^n (x) Sym^m: the i-th term is the image of
// Sym^(n-i) (x) Sym^(m-i) under the i-fold determinant multiplication, and the
// i-th quotient is Sym^(n+m-2i). Everything is verified over the given ring.
Filtration cg_filtration(const BaseRing& ring, int n, int m);

// A filtration of tensor_product(a, b) with symmetric-power quotients, for
// factors that are themselves isomorphic to symmetric powers by
// unit-determinant witnesses: the universal filtration is pulled back through
// the induced isomorphism of the tensor product.
Filtration good_filtration_of_tensor(const Comodule& a, const Comodule& b);

// Search for a comodule section of a surjection total -> quotient (given by
// `projection` in the row convention): a morphism S with S * projection = I.
// The morphism module of candidates is the ring span of a saturated integer
// lattice, so the search reduces to one exact linear solve over the ring; a
// failure comes with the elementary-divisor certificate of the solver.
struct SectionOutcome {
    std::optional<RatMat> section;
    std::optional<NoSolutionCertificate> certificate;

    bool found() const noexcept { return section.has_value(); }
};

SectionOutcome find_section(const Comodule& total, const Comodule& quotient, const IntMat& projection,
                            const HomBasis* hom_precomputed = nullptr);

}  // namespace sl2comod
