#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2comod/hopf.hpp"

#include <random>
#include <vector>

using namespace sl2comod;

namespace {

std::mt19937_64 rng(424242u);

// Random element of SL_2(Z): a word in the two elementary generators and -I.
// Evaluation at such matrices is the independent oracle for every structure
// map, because it factors through the defining relation det = 1.
Mat<Rational> random_sl2() {
    Mat<Rational> g = Mat<Rational>::identity(2);
    std::uniform_int_distribution<int> coin(0, 2), shift(-2, 2);
    const int len = 2 + static_cast<int>(rng() % 4);
    for (int s = 0; s < len; ++s) {
        Mat<Rational> e = Mat<Rational>::identity(2);
        const Rational c(shift(rng));
        switch (coin(rng)) {
            case 0: e(0, 1) = c; break;
            case 1: e(1, 0) = c; break;
            default:
                e(0, 0) = -1;
                e(1, 1) = -1;
                break;
        }
        g = g * e;
    }
    return g;
}

Rational det2(const Mat<Rational>& g) { return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0); }

Mat<Rational> inverse2(const Mat<Rational>& g) {
    REQUIRE(det2(g) == 1);
    Mat<Rational> inv(2, 2);
    inv(0, 0) = g(1, 1);
    inv(0, 1) = -g(0, 1);
    inv(1, 0) = -g(1, 0);
    inv(1, 1) = g(0, 0);
    return inv;
}

HopfPoly random_poly() {
    std::uniform_int_distribution<int> deg(0, 2), coef(-4, 4);
    HopfPoly p;
    const int n_terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < n_terms; ++t) {
        Exp4 e{deg(rng), deg(rng), deg(rng), deg(rng)};
        p += HopfPoly::monomial(e, Rational(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("normal form of the determinant relation") {
    const HopfPoly product = HopfPoly::x11() * HopfPoly::x22();
    const HopfPoly expected = HopfPoly::monomial({0, 1, 1, 0}) + HopfPoly(Rational(1));
    CHECK(product == expected);
    CHECK(product.str() == "1 + x12*x21");

    // x11^2 * x22 rewrites to x11*x12*x21 + x11.
    const HopfPoly p = HopfPoly::x11() * HopfPoly::x11() * HopfPoly::x22();
    CHECK(p == HopfPoly::monomial({1, 1, 1, 0}) + HopfPoly::x11());

    // No normal-form monomial mentions both x11 and x22.
    const HopfPoly q = random_poly() * random_poly();
    for (const auto& [e, c] : q.terms()) CHECK((e[0] == 0 || e[3] == 0));

    CHECK(HopfPoly().is_zero());
    CHECK((HopfPoly::x11() - HopfPoly::x11()).is_zero());
    CHECK(HopfPoly().str() == "0");
    CHECK((HopfPoly::x11() * Rational(-2)).str() == "-2*x11");
    CHECK(HopfPoly::x11().degree() == 1);
    CHECK(HopfPoly(Rational(5)).degree() == 0);
    CHECK(HopfPoly().degree() == -1);
}

TEST_CASE("evaluation at SL_2(Z) matrices is a ring map (oracle for the normal form)") {
    for (int t = 0; t < 12; ++t) {
        const Mat<Rational> g = random_sl2();
        REQUIRE(det2(g) == 1);
        const HopfPoly p = random_poly(), q = random_poly();
        CHECK(evaluate(p * q, g) == evaluate(p, g) * evaluate(q, g));
        CHECK(evaluate(p + q, g) == evaluate(p, g) + evaluate(q, g));
        CHECK(evaluate(p - q, g) == evaluate(p, g) - evaluate(q, g));
        CHECK(evaluate(HopfPoly(Rational(1)), g) == 1);
        // The defining relation itself evaluates to det(g) = 1.
        CHECK(evaluate(HopfPoly::x11() * HopfPoly::x22() - HopfPoly::x12() * HopfPoly::x21(), g) == 1);
    }
}

TEST_CASE("comultiplication evaluates to multiplication of group elements") {
    for (int t = 0; t < 10; ++t) {
        const Mat<Rational> g = random_sl2(), h = random_sl2();
        const HopfPoly p = random_poly();
        const TensorPoly d_std = comultiply(p, HopfVariant::Std);
        const TensorPoly d_op = comultiply(p, HopfVariant::Op);
        CHECK(evaluate(d_std, g, h) == evaluate(p, g * h));
        CHECK(evaluate(d_op, g, h) == evaluate(p, h * g));
        // The two variants are each other's factor swap.
        CHECK(d_op == d_std.swapped());
    }
}

TEST_CASE("counit is evaluation at the identity") {
    CHECK(counit(HopfPoly::x11()) == 1);
    CHECK(counit(HopfPoly::x12()) == 0);
    CHECK(counit(HopfPoly::x21()) == 0);
    CHECK(counit(HopfPoly::x22()) == 1);
    for (int t = 0; t < 8; ++t) {
        const HopfPoly p = random_poly();
        CHECK(counit(p) == evaluate(p, Mat<Rational>::identity(2)));
    }
}

TEST_CASE("antipode is evaluation at the inverse") {
    CHECK(antipode(HopfPoly::x11()) == HopfPoly::x22());
    CHECK(antipode(HopfPoly::x22()) == HopfPoly::x11());
    CHECK(antipode(HopfPoly::x12()) == -HopfPoly::x12());
    CHECK(antipode(HopfPoly::x21()) == -HopfPoly::x21());
    for (int t = 0; t < 10; ++t) {
        const Mat<Rational> g = random_sl2();
        const HopfPoly p = random_poly();
        CHECK(evaluate(antipode(p), g) == evaluate(p, inverse2(g)));
        CHECK(antipode(antipode(p)) == p);
    }
}

TEST_CASE("variable transposition and transposed inverse") {
    CHECK(transpose_vars(HopfPoly::x12()) == HopfPoly::x21());
    CHECK(transpose_vars(HopfPoly::x21()) == HopfPoly::x12());
    CHECK(transpose_inverse_vars(HopfPoly::x11()) == HopfPoly::x22());
    CHECK(transpose_inverse_vars(HopfPoly::x12()) == -HopfPoly::x21());
    CHECK(transpose_inverse_vars(HopfPoly::x21()) == -HopfPoly::x12());
    for (int t = 0; t < 10; ++t) {
        const Mat<Rational> g = random_sl2();
        const HopfPoly p = random_poly();
        CHECK(evaluate(transpose_vars(p), g) == evaluate(p, g.transposed()));
        CHECK(evaluate(transpose_inverse_vars(p), g) == evaluate(p, inverse2(g).transposed()));
        CHECK(transpose_inverse_vars(p) == transpose_vars(antipode(p)));
        CHECK(transpose_inverse_vars(transpose_inverse_vars(p)) == p);
        CHECK(transpose_vars(transpose_vars(p)) == p);
    }
}

TEST_CASE("antipode axiom: mu (S (x) id) Delta = eta eps") {
    for (int t = 0; t < 8; ++t) {
        const HopfPoly p = random_poly();
        for (HopfVariant v : {HopfVariant::Std, HopfVariant::Op}) {
            const TensorPoly d = comultiply(p, v);
            CHECK(multiply_factors(d.map_left(&antipode)) == HopfPoly(counit(p)));
            CHECK(multiply_factors(d.map_right(&antipode)) == HopfPoly(counit(p)));
        }
    }
}

TEST_CASE("counit laws through the tensor factor maps") {
    for (int t = 0; t < 8; ++t) {
        const HopfPoly p = random_poly();
        for (HopfVariant v : {HopfVariant::Std, HopfVariant::Op}) {
            const TensorPoly d = comultiply(p, v);
            CHECK(counit_left_factor(d) == p);
            CHECK(counit_right_factor(d) == p);
        }
    }
}

TEST_CASE("coassociativity on random elements") {
    for (int t = 0; t < 6; ++t) {
        const HopfPoly p = random_poly();
        for (HopfVariant v : {HopfVariant::Std, HopfVariant::Op}) {
            const TensorPoly d = comultiply(p, v);
            CHECK(comultiply_left_factor(d, v) == comultiply_right_factor(d, v));
        }
    }
}

TEST_CASE("derivatives at the identity (tangent pairing)") {
    Mat<Rational> h = Mat<Rational>::identity(2);
    h(1, 1) = -1;  // diag(1, -1)
    Mat<Rational> e(2, 2), f(2, 2);
    e(0, 1) = 1;
    f(1, 0) = 1;

    CHECK(derivative_at_identity(HopfPoly::x11(), h) == 1);
    CHECK(derivative_at_identity(HopfPoly::x22(), h) == -1);
    CHECK(derivative_at_identity(HopfPoly::x12(), e) == 1);
    CHECK(derivative_at_identity(HopfPoly::x21(), f) == 1);
    CHECK(derivative_at_identity(HopfPoly::x12(), h) == 0);
    // d/dt [(1+t)(1-t)] = 0 at t = 0.
    CHECK(derivative_at_identity(HopfPoly::x11() * HopfPoly::x22(), h) == 0);
    // Leibniz rule at the identity: D(pq) = D(p) eps(q) + eps(p) D(q).
    for (int t = 0; t < 8; ++t) {
        const HopfPoly p = random_poly(), q = random_poly();
        for (const Mat<Rational>& x : {h, e, f})
            CHECK(derivative_at_identity(p * q, x) ==
                  derivative_at_identity(p, x) * counit(q) + counit(p) * derivative_at_identity(q, x));
    }
}

TEST_CASE("full axiom suite passes for both variants") {
    for (HopfVariant v : {HopfVariant::Std, HopfVariant::Op}) {
        const HopfCheckReport report = verify_hopf(v, 987654321u, 25);
        CHECK(report.ok);
        for (const std::string& f : report.failures) {
            CAPTURE(f);
            CHECK(false);
        }
    }
}
