#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2comod/comodule.hpp"
#include "sl2comod/homological.hpp"

#include <vector>

using namespace sl2comod;

namespace {

const BaseRing Z = BaseRing::integers();
const BaseRing Q = BaseRing::rationals();

IntMat scaled(const IntMat& m, const Int& c) {
    IntMat r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j) * c;
    return r;
}

void require_clean(const std::vector<std::string>& failures) {
    for (const std::string& f : failures) {
        CAPTURE(f);
        CHECK(false);
    }
}

}  // namespace

TEST_CASE("the two structure maps of the multiplication sequence") {
    // Multiplication sends basis tensor (i, j) to v_(i+j) with coefficient 1.
    const IntMat mult = multiplication_onto_sym(1, 1);
    REQUIRE(mult.rows() == 4);
    REQUIRE(mult.cols() == 3);
    CHECK(mult == IntMat{{Int(1), Int(0), Int(0)},
                         {Int(0), Int(1), Int(0)},
                         {Int(0), Int(1), Int(0)},
                         {Int(0), Int(0), Int(1)}});

    // Multiplying by e1(x)e2 - e2(x)e1 sends (q, t) to (q, t+1) - (q+1, t).
    const IntMat det_mult = determinant_multiplication_map(1, 1);
    REQUIRE(det_mult.rows() == 1);
    REQUIRE(det_mult.cols() == 4);
    CHECK(det_mult == IntMat{{Int(0), Int(1), Int(-1), Int(0)}});

    // Both are comodule morphisms.
    const Comodule vv = tensor_product(sym_power(Z, 1), sym_power(Z, 1));
    CHECK(morphism_check(vv, sym_power(Z, 2), rational_matrix(mult)).ok);
    CHECK(morphism_check(tensor_product(sym_power(Z, 0), sym_power(Z, 0)), vv, rational_matrix(det_mult)).ok);
}

TEST_CASE("the multiplication sequence is exact over Z in low degree") {
    for (int n = 1; n <= 3; ++n)
        for (int m = n; m <= 3; ++m) {
            const Comodule left = tensor_product(sym_power(Z, n - 1), sym_power(Z, m - 1));
            const Comodule middle = tensor_product(sym_power(Z, n), sym_power(Z, m));
            const Comodule right = sym_power(Z, n + m);
            const ExactnessReport r = check_exact_sequence(
                {&left, &middle, &right},
                {determinant_multiplication_map(n, m), multiplication_onto_sym(n, m)});
            CAPTURE(n);
            CAPTURE(m);
            require_clean(r.failures);
            CHECK(r.ok);
        }
}

TEST_CASE("exactness detects a finite cokernel and recovers over a localization") {
    const Comodule left = tensor_product(sym_power(Z, 0), sym_power(Z, 1));
    const Comodule middle = tensor_product(sym_power(Z, 1), sym_power(Z, 2));
    const Comodule right = sym_power(Z, 3);
    const IntMat d = determinant_multiplication_map(1, 2);
    const IntMat m = multiplication_onto_sym(1, 2);

    // Doubling the injection breaks exactness over Z: the kernel of the
    // multiplication now contains the old image with index 2.
    const ExactnessReport broken = check_exact_sequence({&left, &middle, &right}, {scaled(d, 2), m});
    CHECK(!broken.ok);

    // Over Q, and over any ring where 2 is a unit, the doubled map is fine.
    const Comodule left_q = base_change(left, Q), middle_q = base_change(middle, Q),
                   right_q = base_change(right, Q);
    CHECK(check_exact_sequence({&left_q, &middle_q, &right_q}, {scaled(d, 2), m}).ok);

    const BaseRing inv2 = BaseRing::inverted_integer(2);
    const Comodule left_2 = base_change(left, inv2), middle_2 = base_change(middle, inv2),
                   right_2 = base_change(right, inv2);
    CHECK(check_exact_sequence({&left_2, &middle_2, &right_2}, {scaled(d, 2), m}).ok);
    // ... but not over Z_(2), where 2 is still a non-unit.
    const BaseRing z2 = BaseRing::localized_at_prime(2);
    const Comodule left_p = base_change(left, z2), middle_p = base_change(middle, z2),
                   right_p = base_change(right, z2);
    CHECK(!check_exact_sequence({&left_p, &middle_p, &right_p}, {scaled(d, 2), m}).ok);
}

TEST_CASE("degenerate exact sequences") {
    const Comodule v = standard_comodule(Z);
    CHECK(check_exact_sequence({&v, &v}, {IntMat::identity(2)}).ok);

    // A non-intertwining map is rejected before any homology is computed.
    IntMat not_morphism{{Int(1), Int(0)}, {Int(1), Int(1)}};
    CHECK(!check_exact_sequence({&v, &v}, {not_morphism}).ok);

    // The zero map V -> V is neither injective nor surjective.
    CHECK(!check_exact_sequence({&v, &v}, {IntMat(2, 2)}).ok);
}

TEST_CASE("universal filtration of V (x) V") {
    const Filtration f = cg_filtration(Z, 1, 1);
    require_clean(f.failures);
    REQUIRE(f.ok);
    REQUIRE(f.terms.size() == 3);
    CHECK(f.terms[0] == Lattice::full(4));
    CHECK(f.terms[1] == Lattice(IntMat{{Int(0), Int(1), Int(-1), Int(0)}}));
    CHECK(f.terms[2].is_zero());
    CHECK(f.degrees == std::vector<int>{2, 0});

    REQUIRE(f.quotients.size() == 2);
    CHECK(f.quotients[0].rank() == 3);
    CHECK(f.quotients[1].rank() == 1);
    REQUIRE(f.witnesses.size() == 2);
    for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
        CHECK(f.witnesses[i].verdict == IsoVerdict::Isomorphic);
        CHECK(abs_int(f.witnesses[i].witness_det) == 1);
        // Re-verify the witness independently of the filtration code.
        CHECK(morphism_check(f.quotients[i], sym_power(Z, f.degrees[i]), rational_matrix(f.witnesses[i].witness)).ok);
    }

    // The projections are morphisms from the term comodules onto the quotients.
    REQUIRE(f.projections.size() == 2);
    for (std::size_t i = 0; i < f.projections.size(); ++i)
        CHECK(morphism_check(f.subs[i], f.quotients[i], rational_matrix(f.projections[i])).ok);
}

TEST_CASE("universal filtration in higher degree and over localizations") {
    for (const BaseRing& ring : {Z, Q, BaseRing::localized_at_prime(2), BaseRing::inverted_integer(6)}) {
        const Filtration f = cg_filtration(ring, 2, 3);
        CAPTURE(ring.name());
        require_clean(f.failures);
        CHECK(f.ok);
        CHECK(f.degrees == std::vector<int>{5, 3, 1});
        REQUIRE(f.terms.size() == 4);
        // Term ranks drop by the quotient ranks: 12, 6, 2, 0.
        CHECK(f.terms[0].rank() == 12);
        CHECK(f.terms[1].rank() == 6);
        CHECK(f.terms[2].rank() == 2);
        CHECK(f.terms[3].rank() == 0);
        // Each term is saturated and strictly contains the next.
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            CHECK(f.terms[i].is_saturated());
            if (i + 1 < f.terms.size()) CHECK(f.terms[i].contains(f.terms[i + 1]));
        }
    }
}

TEST_CASE("good filtrations of tensor products of symmetric-power forms") {
    // sym^1 (x) (dual of standard): degrees 2, 0.
    const Filtration f1 = good_filtration_of_tensor(sym_power(Z, 1), contragredient(standard_comodule(Z)));
    require_clean(f1.failures);
    CHECK(f1.ok);
    CHECK(f1.degrees == std::vector<int>{2, 0});

    // (twist of sym^2) (x) sym^1: degrees 3, 1.
    const Filtration f2 = good_filtration_of_tensor(transpose_inverse_twist(sym_power(Z, 2)), sym_power(Z, 1));
    require_clean(f2.failures);
    CHECK(f2.ok);
    CHECK(f2.degrees == std::vector<int>{3, 1});

    // Factors that are not unimodularly isomorphic to a symmetric power are
    // rejected with an explanation: the divided-power form fails over Z.
    const Filtration bad =
        good_filtration_of_tensor(symmetric_tensors(standard_comodule(Z), 2), sym_power(Z, 1));
    CHECK(!bad.ok);
    REQUIRE(!bad.failures.empty());
    CHECK(bad.failures.front().find("factor") != std::string::npos);

    // Over Z[1/2] the same factor becomes a symmetric power and the
    // filtration goes through.
    const BaseRing inv2 = BaseRing::inverted_integer(2);
    const Filtration good = good_filtration_of_tensor(
        symmetric_tensors(standard_comodule(inv2), 2), sym_power(inv2, 1));
    require_clean(good.failures);
    CHECK(good.ok);
    CHECK(good.degrees == std::vector<int>{3, 1});
}

TEST_CASE("sections of the multiplication onto the top symmetric power") {
    // V (x) sym^n -> sym^(n+1): a section exists over exactly the rings in
    // which n+1 is invertible.
    for (int n = 1; n <= 4; ++n) {
        const Comodule total_z = tensor_product(sym_power(Z, 1), sym_power(Z, n));
        const Comodule quot_z = sym_power(Z, n + 1);
        const IntMat proj = multiplication_onto_sym(1, n);

        const SectionOutcome over_z = find_section(total_z, quot_z, proj);
        CHECK(!over_z.found());
        REQUIRE(over_z.certificate.has_value());

        const Comodule total_q = base_change(total_z, Q);
        const Comodule quot_q = base_change(quot_z, Q);
        const SectionOutcome over_q = find_section(total_q, quot_q, proj);
        REQUIRE(over_q.found());

        // Re-verify: S is a morphism and S * projection is the identity.
        const RatMat& s = *over_q.section;
        CHECK(morphism_check(quot_q, total_q, s).ok);
        RatMat composite = s * rational_matrix(proj);
        CHECK(composite == RatMat::identity(quot_q.rank()));
    }

    // n = 1 over Z_(3): 2 is a unit, so the section exists and is integral at 3.
    const BaseRing z3 = BaseRing::localized_at_prime(3);
    const SectionOutcome local = find_section(tensor_product(sym_power(z3, 1), sym_power(z3, 1)),
                                              sym_power(z3, 2), multiplication_onto_sym(1, 1));
    REQUIRE(local.found());
    for (std::size_t i = 0; i < local.section->rows(); ++i)
        for (std::size_t j = 0; j < local.section->cols(); ++j) CHECK(z3.contains((*local.section)(i, j)));

    // The precomputed morphism lattice gives the same verdicts.
    const Comodule total = tensor_product(sym_power(Z, 1), sym_power(Z, 2));
    const Comodule quot = sym_power(Z, 3);
    const HomBasis hom = intertwiner_lattice(quot, total);
    CHECK(!find_section(total, quot, multiplication_onto_sym(1, 2), &hom).found());
    const SectionOutcome with_hom = find_section(base_change(total, Q), base_change(quot, Q),
                                                 multiplication_onto_sym(1, 2), &hom);
    CHECK(with_hom.found());
}
