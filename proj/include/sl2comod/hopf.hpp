#pragma once

#include "sl2comod/matrix.hpp"
#include "sl2comod/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sl2comod {

// Exponents (a, b, c, d) of the monomial x11^a x12^b x21^c x22^d.
using Exp4 = std::array<int, 4>;

// The coordinate Hopf algebra of 2x2 matrices of determinant 1 carries two
// comultiplications: Std reads off matrix products g*h, Op is its factor swap
// (equivalently, it reads off h*g).
enum class HopfVariant { Std, Op };

// An element of O(SL_2) = A[x11, x12, x21, x22]/(x11 x22 - x12 x21 - 1), kept
// in the normal form where no monomial contains both x11 and x22 (the relation
// rewrites x11*x22 -> x12*x21 + 1, which is confluent and terminating). Two
// elements are equal iff their term maps are identical.
class HopfPoly {
  public:
    HopfPoly() = default;
    explicit HopfPoly(const Rational& constant) { add_term(terms_, {0, 0, 0, 0}, constant); }

    static HopfPoly monomial(const Exp4& e, const Rational& coeff = Rational(1)) {
        HopfPoly p;
        add_term(p.terms_, e, coeff);
        return p;
    }

    static HopfPoly x11() { return monomial({1, 0, 0, 0}); }
    static HopfPoly x12() { return monomial({0, 1, 0, 0}); }
    static HopfPoly x21() { return monomial({0, 0, 1, 0}); }
    static HopfPoly x22() { return monomial({0, 0, 0, 1}); }

    const std::map<Exp4, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool operator==(const HopfPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HopfPoly& o) const { return !(*this == o); }

    HopfPoly& operator+=(const HopfPoly& o);
    HopfPoly& operator-=(const HopfPoly& o);
    HopfPoly operator+(const HopfPoly& o) const {
        HopfPoly r = *this;
        return r += o;
    }
    HopfPoly operator-(const HopfPoly& o) const {
        HopfPoly r = *this;
        return r -= o;
    }
    HopfPoly operator-() const;
    HopfPoly operator*(const HopfPoly& o) const;
    HopfPoly& operator*=(const HopfPoly& o) {
        *this = *this * o;
        return *this;
    }
    HopfPoly operator*(const Rational& c) const;

    // Total degree of the highest term, -1 for the zero polynomial.
    int degree() const;

    std::string str() const;

    // Inserts coeff * monomial(e) into `into`, rewriting through the relation
    // until normal and dropping cancelled terms.
    static void add_term(std::map<Exp4, Rational>& into, const Exp4& e, const Rational& coeff);

  private:
    std::map<Exp4, Rational> terms_;
};

inline HopfPoly operator*(const Rational& c, const HopfPoly& p) { return p * c; }

// An element of O(SL_2) tensor O(SL_2); both tensor factors are kept in
// normal form.
class TensorPoly {
  public:
    using Key = std::pair<Exp4, Exp4>;

    TensorPoly() = default;

    static TensorPoly tensor(const HopfPoly& left, const HopfPoly& right);

    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorPoly& o) const { return !(*this == o); }

    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly operator+(const TensorPoly& o) const {
        TensorPoly r = *this;
        return r += o;
    }
    TensorPoly operator-(const TensorPoly& o) const {
        TensorPoly r = *this;
        return r -= o;
    }
    TensorPoly operator*(const TensorPoly& o) const;
    TensorPoly operator*(const Rational& c) const;

    // Swap the two tensor factors (the "sigma" of coalgebra theory).
    TensorPoly swapped() const;

    // Apply a polynomial map to one factor, e.g. the antipode or a variable
    // transposition; `fn` must be an algebra map on normal-form monomials.
    TensorPoly map_left(HopfPoly (*fn)(const HopfPoly&)) const;
    TensorPoly map_right(HopfPoly (*fn)(const HopfPoly&)) const;

    std::string str() const;

    static void add_term(std::map<Key, Rational>& into, const Exp4& l, const Exp4& r, const Rational& coeff);

  private:
    std::map<Key, Rational> terms_;
};

// An element of the triple tensor power, used to state coassociativity.
class Tensor3 {
  public:
    using Key = std::tuple<Exp4, Exp4, Exp4>;

    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    bool operator==(const Tensor3& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    static void add_term(std::map<Key, Rational>& into, const Exp4& a, const Exp4& b, const Exp4& c,
                         const Rational& coeff);

    friend Tensor3 comultiply_left_factor(const TensorPoly& t, HopfVariant variant);
    friend Tensor3 comultiply_right_factor(const TensorPoly& t, HopfVariant variant);

  private:
    std::map<Key, Rational> terms_;
};

// Comultiplication. Std on the generators: Delta(x11) = x11(x)x11 + x12(x)x21,
// Delta(x12) = x11(x)x12 + x12(x)x22, Delta(x21) = x21(x)x11 + x22(x)x21,
// Delta(x22) = x21(x)x12 + x22(x)x22. Op is the factor swap of Std. Extended
// to all of O(SL_2) as an algebra map; results are memoized per monomial.
const TensorPoly& comultiply_monomial(const Exp4& e, HopfVariant variant);
TensorPoly comultiply(const HopfPoly& p, HopfVariant variant);

// Delta applied to the left / right factor of a tensor (for coassociativity).
Tensor3 comultiply_left_factor(const TensorPoly& t, HopfVariant variant);
Tensor3 comultiply_right_factor(const TensorPoly& t, HopfVariant variant);

// Counit: evaluation at the identity matrix.
Rational counit(const HopfPoly& p);

// Antipode: evaluation at the inverse matrix, x11 <-> x22, x12 -> -x12,
// x21 -> -x21 on generators.
HopfPoly antipode(const HopfPoly& p);

// Variable transposition x12 <-> x21 (evaluation at the transposed matrix).
HopfPoly transpose_vars(const HopfPoly& p);

// Transposed inverse: x11 -> x22, x22 -> x11, x12 -> -x21, x21 -> -x12.
// Equals transpose_vars composed with antipode and is an involution.
HopfPoly transpose_inverse_vars(const HopfPoly& p);

// Multiplication map mu: R (x) R -> R (for the antipode axiom).
HopfPoly multiply_factors(const TensorPoly& t);

// Counit applied to one tensor factor.
HopfPoly counit_left_factor(const TensorPoly& t);
HopfPoly counit_right_factor(const TensorPoly& t);

// Evaluate at a concrete 2x2 matrix (entries as exact rationals). Callers
// use determinant-1 matrices; evaluation is the independent oracle for the
// normal form and for all structure maps.
Rational evaluate(const HopfPoly& p, const Mat<Rational>& g);
Rational evaluate(const TensorPoly& t, const Mat<Rational>& g, const Mat<Rational>& h);

// Directional derivative at the identity matrix along `direction` (a 2x2
// matrix); this is the pairing with tangent vectors used for weight theory.
Rational derivative_at_identity(const HopfPoly& p, const Mat<Rational>& direction);

// Structural verification of the full Hopf-algebra axiom set for the chosen
// comultiplication: coassociativity, counit laws, antipode laws, involutivity
// of the antipode and of the transposed inverse, compatibility of the variable
// transpositions with Delta, and the factor-swap relation between the two
// variants. Checked on the generators and on `n_random` pseudo-random
// polynomials drawn from `seed`.
struct HopfCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

HopfCheckReport verify_hopf(HopfVariant variant, std::uint64_t seed, int n_random);

}  // namespace sl2comod
