#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2comod/comodule.hpp"
#include "sl2comod/isotest.hpp"

#include <stdexcept>

using namespace sl2comod;

namespace {

const BaseRing Z = BaseRing::integers();
const BaseRing Q = BaseRing::rationals();

HopfPoly x11() { return HopfPoly::x11(); }
HopfPoly x12() { return HopfPoly::x12(); }
HopfPoly x21() { return HopfPoly::x21(); }
HopfPoly x22() { return HopfPoly::x22(); }

void check_ok(const Comodule& c, const std::string& what) {
    const ComoduleCheckReport r = verify_comodule(c);
    CAPTURE(what);
    for (const std::string& f : r.failures) {
        CAPTURE(f);
        CHECK(false);
    }
    CHECK(r.ok);
}

// The rank-(n+1) coefficient matrix of the n-th symmetric power written out
// by hand from the binomial expansion of (ax + by)^k -- the oracle for
// sym_power's closed form in low degree.
PolyMat sym2_matrix() {
    return PolyMat{{x11() * x11(), Rational(2) * (x11() * x12()), x12() * x12()},
                   {x11() * x21(), x11() * x22() + x12() * x21(), x12() * x22()},
                   {x21() * x21(), Rational(2) * (x21() * x22()), x22() * x22()}};
}

// Coaction on the symmetric tensors e1(x)e1, e1(x)e2 + e2(x)e1, e2(x)e2
// inside the tensor square, expanded by hand.
PolyMat symt2_matrix() {
    return PolyMat{{x11() * x11(), x11() * x12(), x12() * x12()},
                   {Rational(2) * (x11() * x21()), x11() * x22() + x12() * x21(), Rational(2) * (x12() * x22())},
                   {x21() * x21(), x21() * x22(), x22() * x22()}};
}

}  // namespace

TEST_CASE("standard comodule on both sides, both variants") {
    const Comodule right = standard_comodule(Z);
    CHECK(right.side == Side::Right);
    CHECK(right.variant == HopfVariant::Std);
    CHECK(right.rank() == 2);
    CHECK(right.matrix == PolyMat{{x11(), x12()}, {x21(), x22()}});
    check_ok(right, "standard right/std");

    const Comodule left = standard_comodule(Z, Side::Left);
    CHECK(left.matrix == PolyMat{{x11(), x21()}, {x12(), x22()}});
    check_ok(left, "standard left/std");

    check_ok(standard_comodule(Z, Side::Right, HopfVariant::Op), "standard right/op");
    check_ok(standard_comodule(Z, Side::Left, HopfVariant::Op), "standard left/op");
    check_ok(trivial_comodule(Z, 3), "trivial rank 3");
}

TEST_CASE("verify_comodule rejects a non-coaction") {
    Comodule broken = standard_comodule(Z);
    broken.matrix(1, 1) = x11();  // counit stays fine, comultiplication does not
    const ComoduleCheckReport r = verify_comodule(broken);
    CHECK(!r.ok);
    CHECK(!r.failures.empty());

    Comodule bad_counit = standard_comodule(Z);
    bad_counit.matrix(0, 0) = Rational(2) * x11();
    CHECK(!verify_comodule(bad_counit).ok);

    // A coefficient outside the base ring is caught even when the coalgebra
    // axioms hold: this matrix is the standard coaction conjugated by
    // diag(1, 2), a perfectly good comodule over Q but not over Z.
    PolyMat scaled{{x11(), x12() * Rational(1, 2)}, {x21() * Rational(2), x22()}};
    Comodule off_ring = make_comodule(Z, Side::Right, HopfVariant::Std, scaled);
    CHECK(!verify_comodule(off_ring).ok);
    CHECK(verify_comodule(make_comodule(Q, Side::Right, HopfVariant::Std, scaled)).ok);
}

TEST_CASE("make_comodule validates shapes") {
    CHECK_THROWS_AS(make_comodule(Z, Side::Right, HopfVariant::Std, PolyMat(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(make_comodule(Z, Side::Right, HopfVariant::Std, PolyMat::identity(2), {"one label"}),
                    std::invalid_argument);
    const Comodule c = make_comodule(Z, Side::Right, HopfVariant::Std, PolyMat::identity(2), {"a", "b"});
    CHECK(c.labels == std::vector<std::string>{"a", "b"});
}

TEST_CASE("symmetric power closed form matches the hand expansion") {
    const Comodule s2 = sym_power(Z, 2);
    CHECK(s2.matrix == sym2_matrix());
    check_ok(s2, "sym^2");
    CHECK(sym_power(Z, 0).matrix == PolyMat{{HopfPoly(Rational(1))}});
    CHECK(sym_power(Z, 1).matrix == standard_comodule(Z).matrix);
    for (int n = 3; n <= 6; ++n) {
        const Comodule sn = sym_power(Z, n);
        CHECK(sn.rank() == static_cast<std::size_t>(n + 1));
        check_ok(sn, "sym^n");
    }
}

TEST_CASE("symmetric tensors in the tensor square") {
    const Comodule st2 = symmetric_tensors(standard_comodule(Z), 2);
    REQUIRE(st2.rank() == 3);
    CHECK(st2.matrix == symt2_matrix());
    check_ok(st2, "symt_2");

    const Comodule st3 = symmetric_tensors(standard_comodule(Z), 3);
    CHECK(st3.rank() == 4);
    check_ok(st3, "symt_3");

    // Degree 1 is the comodule itself; degree 0 is rejected.
    CHECK(symmetric_tensors(standard_comodule(Z), 1).matrix == standard_comodule(Z).matrix);
    CHECK_THROWS_AS(symmetric_tensors(standard_comodule(Z), 0), std::invalid_argument);
}

TEST_CASE("exterior square of the standard comodule is the determinant line") {
    const Comodule ext = exterior_square(standard_comodule(Z));
    REQUIRE(ext.rank() == 1);
    CHECK(ext.matrix(0, 0) == HopfPoly(Rational(1)));
    check_ok(ext, "ext^2");

    const Comodule ext_s2 = exterior_square(sym_power(Z, 2));
    CHECK(ext_s2.rank() == 3);
    check_ok(ext_s2, "ext^2 of sym^2");
}

TEST_CASE("tensor product and direct sum") {
    const Comodule t = tensor_product(sym_power(Z, 1), sym_power(Z, 2));
    CHECK(t.rank() == 6);
    check_ok(t, "sym^1 (x) sym^2");
    CHECK(t.matrix == kronecker(sym_power(Z, 1).matrix, sym_power(Z, 2).matrix));

    const Comodule s = direct_sum(sym_power(Z, 1), trivial_comodule(Z, 2));
    CHECK(s.rank() == 4);
    check_ok(s, "sym^1 (+) trivial^2");

    const Comodule mixed_ring = sym_power(BaseRing::localized_at_prime(3), 1);
    CHECK_THROWS_AS(tensor_product(sym_power(Z, 1), mixed_ring), std::invalid_argument);
}

TEST_CASE("contragredient of the standard comodule is the classical dual") {
    const Comodule dual = contragredient(standard_comodule(Z));
    CHECK(dual.side == Side::Right);
    CHECK(dual.variant == HopfVariant::Std);
    CHECK(dual.matrix == PolyMat{{x22(), -x21()}, {-x12(), x11()}});
    check_ok(dual, "dual of standard");

    // e1 -> f2, e2 -> -f1 intertwines V with its dual.
    const RatMat phi{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}};
    CHECK(morphism_check(standard_comodule(Z), dual, phi).ok);
    // ... and it is an isomorphism pattern the search finds on its own.
    const IsoResult iso = find_isomorphism(standard_comodule(Z), dual);
    CHECK(iso.verdict == IsoVerdict::Isomorphic);
    CHECK(abs_int(iso.witness_det) == 1);

    // A non-intertwiner is rejected.
    const RatMat not_phi{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(!morphism_check(standard_comodule(Z), dual, not_phi).ok);
}

TEST_CASE("linear dual lands on the other side and is an involution") {
    const Comodule c = sym_power(Z, 2);
    const Comodule d = linear_dual(c);
    CHECK(d.side == Side::Left);
    CHECK(d.variant == HopfVariant::Op);
    check_ok(d, "linear dual of sym^2");
    const Comodule dd = linear_dual(d);
    CHECK(dd.side == c.side);
    CHECK(dd.variant == c.variant);
    CHECK(dd.matrix == c.matrix);
}

TEST_CASE("category equivalences: flip_side, side_transpose, in_category") {
    const Comodule c = sym_power(Z, 2);

    const Comodule f = flip_side(c);
    CHECK(f.side == Side::Left);
    CHECK(f.variant == HopfVariant::Op);
    CHECK(f.matrix == c.matrix);
    check_ok(f, "flip_side of sym^2");
    CHECK(flip_side(f).matrix == c.matrix);

    const Comodule t = side_transpose(c);
    CHECK(t.side == Side::Left);
    CHECK(t.variant == HopfVariant::Std);
    check_ok(t, "side_transpose of sym^2");
    const Comodule tt = side_transpose(t);
    CHECK(tt.side == c.side);
    CHECK(tt.matrix == c.matrix);

    for (Side s : {Side::Right, Side::Left})
        for (HopfVariant v : {HopfVariant::Std, HopfVariant::Op}) {
            const Comodule moved = in_category(c, s, v);
            CHECK(moved.side == s);
            CHECK(moved.variant == v);
            check_ok(moved, "in_category copy of sym^2");
            const Comodule back = in_category(moved, c.side, c.variant);
            CHECK(back.matrix == c.matrix);
        }
}

TEST_CASE("the linear dual agrees with the antipoded matrix after side transposition") {
    // For the standard comodule, transporting the dual back to the original
    // side turns its matrix into the entrywise antipode of the original.
    const Comodule c = standard_comodule(Z);
    const Comodule moved = side_transpose(linear_dual(c));
    CHECK(moved.side == Side::Right);
    CHECK(moved.variant == HopfVariant::Op);
    PolyMat antipoded(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) antipoded(i, j) = antipode(c.matrix(i, j));
    CHECK(moved.matrix == antipoded);
    CHECK(moved.matrix.row(0) == std::vector<HopfPoly>{x22(), -x12()});
    check_ok(moved, "dual moved back to the right side");
}

TEST_CASE("transpose-inverse twist") {
    const Comodule c = sym_power(Z, 2);
    const Comodule tw = transpose_inverse_twist(c);
    CHECK(tw.side == c.side);
    CHECK(tw.variant == c.variant);
    check_ok(tw, "twist of sym^2");
    CHECK(transpose_inverse_twist(tw).matrix == c.matrix);

    // The classical sign-reversal change of basis identifies the twist of a
    // symmetric power with the symmetric power itself.
    IntMat p(3, 3);
    p(0, 2) = 1;
    p(1, 1) = -1;
    p(2, 0) = 1;
    const Comodule conj = change_basis(c, p);
    CHECK(conj.matrix == tw.matrix);
}

TEST_CASE("base change up the ring lattice") {
    const Comodule c = sym_power(Z, 2);
    const Comodule cq = base_change(c, Q);
    CHECK(cq.ring == Q);
    CHECK(cq.matrix == c.matrix);
    check_ok(cq, "sym^2 over Q");
    CHECK_THROWS_AS(base_change(cq, Z), std::invalid_argument);
    CHECK_THROWS_AS(base_change(sym_power(BaseRing::localized_at_prime(2), 1), BaseRing::localized_at_prime(3)),
                    std::invalid_argument);
}

TEST_CASE("change of basis by a unimodular matrix") {
    IntMat p{{Int(1), Int(1)}, {Int(0), Int(1)}};
    const Comodule c = change_basis(standard_comodule(Z), p);
    check_ok(c, "standard in a sheared basis");
    const IsoResult iso = find_isomorphism(c, standard_comodule(Z));
    CHECK(iso.verdict == IsoVerdict::Isomorphic);

    IntMat bad{{Int(2), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(change_basis(standard_comodule(Z), bad), std::invalid_argument);
}

TEST_CASE("invariant sublattices and subquotients") {
    const Comodule vv = tensor_product(standard_comodule(Z), standard_comodule(Z));

    // span{e1} in the standard comodule is not invariant.
    CHECK(!is_subcomodule(standard_comodule(Z), Lattice(IntMat{{Int(1), Int(0)}})));
    // The full lattice always is.
    CHECK(is_subcomodule(standard_comodule(Z), Lattice::full(2)));

    // The alternating line e1(x)e2 - e2(x)e1 inside V (x) V is invariant.
    const Lattice det_line(IntMat{{Int(0), Int(1), Int(-1), Int(0)}});
    REQUIRE(is_subcomodule(vv, det_line));

    const SubQuotient split = sub_quotient(vv, det_line);
    CHECK(split.sub.rank() == 1);
    CHECK(split.sub.matrix(0, 0) == HopfPoly(Rational(1)));
    CHECK(split.quotient.rank() == 3);
    check_ok(split.sub, "determinant line");
    check_ok(split.quotient, "V (x) V / det line");
    CHECK(split.change_of_basis * split.change_of_basis_inverse == IntMat::identity(4));

    // The quotient of the tensor square by the alternating line is the
    // symmetric power.
    const IsoResult iso = find_isomorphism(split.quotient, sym_power(Z, 2));
    CHECK(iso.verdict == IsoVerdict::Isomorphic);
    CHECK(abs_int(iso.witness_det) == 1);

    // Non-invariant and non-saturated lattices are rejected.
    CHECK_THROWS_AS(sub_quotient(standard_comodule(Z), Lattice(IntMat{{Int(1), Int(0)}})), std::invalid_argument);
    CHECK_THROWS_AS(sub_quotient(vv, Lattice(IntMat{{Int(0), Int(2), Int(-2), Int(0)}})), std::invalid_argument);
}

TEST_CASE("symmetric power of an arbitrary comodule") {
    // For the standard comodule it recovers sym_power up to unimodular change
    // of basis (and in this construction, on the nose in rank).
    for (int d = 0; d <= 4; ++d) {
        const Comodule s = sym_power_of(standard_comodule(Z), d);
        CHECK(s.rank() == static_cast<std::size_t>(d + 1));
        check_ok(s, "sym_power_of(standard)");
        const IsoResult iso = find_isomorphism(s, sym_power(Z, d));
        CHECK(iso.verdict == IsoVerdict::Isomorphic);
        CHECK(abs_int(iso.witness_det) == 1);
    }

    // Rank of Sym^2 of a rank-3 module is binom(4, 2) = 6.
    const Comodule s2s2 = sym_power_of(sym_power(Z, 2), 2);
    CHECK(s2s2.rank() == 6);
    check_ok(s2s2, "Sym^2 of sym^2");

    // Sym^2 of the dual of the standard comodule (used for dual families).
    const Comodule dual2 = sym_power_of(contragredient(standard_comodule(Z)), 2);
    CHECK(dual2.rank() == 3);
    check_ok(dual2, "Sym^2 of the dual");
    CHECK(find_isomorphism(dual2, sym_power(Z, 2)).verdict == IsoVerdict::Isomorphic);

    CHECK(sym_power_of(standard_comodule(Z), 0).rank() == 1);
    CHECK_THROWS_AS(sym_power_of(standard_comodule(Z), -1), std::invalid_argument);
}

TEST_CASE("morphism check in the row convention") {
    // Multiplication V (x) V -> Sym^2 sends the basis tensor (i, j) to v_(i+j).
    RatMat mult(4, 3);
    mult(0, 0) = 1;
    mult(1, 1) = 1;
    mult(2, 1) = 1;
    mult(3, 2) = 1;
    const Comodule vv = tensor_product(standard_comodule(Z), standard_comodule(Z));
    CHECK(morphism_check(vv, sym_power(Z, 2), mult).ok);

    // Shape mismatches and category mismatches are reported, not computed.
    CHECK(!morphism_check(vv, sym_power(Z, 2), RatMat(3, 4)).ok);
    CHECK(!morphism_check(vv, flip_side(sym_power(Z, 2)), mult).ok);
}
