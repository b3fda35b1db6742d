#include "sl2comod/weights.hpp"

#include <stdexcept>

namespace sl2comod {

Mat<Rational> cartan_direction() { return Mat<Rational>{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}; }
Mat<Rational> raising_direction() { return Mat<Rational>{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}; }
Mat<Rational> lowering_direction() { return Mat<Rational>{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}; }

RatMat dist_action(const Comodule& c, const Mat<Rational>& direction) {
    if (direction.rows() != 2 || direction.cols() != 2)
        throw std::invalid_argument("dist_action: direction must be a 2x2 matrix");
    // Reduce the four side/variant combinations to the two Std ones through
    // the matrix-preserving equivalence.
    if (c.variant == HopfVariant::Op) return dist_action(flip_side(c), direction);

    // On the Right/Std side the evaluation g -> M(g^t) is multiplicative, so
    // the derivative along direction^t gives the operator; on Left/Std the
    // evaluation is anti-multiplicative in the order that makes the derivative
    // along the direction itself the operator. Both normalizations agree on
    // the standard comodule and with each other under the equivalences.
    Mat<Rational> dir = direction;
    if (c.side == Side::Right) dir = dir.transposed();

    const std::size_t n = c.rank();
    RatMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = derivative_at_identity(c.matrix(i, j), dir);
    return a;
}

namespace {

// Clear denominators of a rational matrix (one global scale); kernels are
// unchanged.
IntMat integerized(const RatMat& m) {
    Int scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) scale = lcm(scale, den(m(i, j)));
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = num(m(i, j)) * (scale / den(m(i, j)));
    return out;
}

}  // namespace

WeightDecomposition weight_decomposition(const Comodule& c) {
    const std::size_t n = c.rank();
    RatMat h = dist_action(c, cartan_direction());

    // Integer eigenvalue candidates are bounded by the row-sum norm.
    Rational bound(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j) row += abs(h(i, j));
        if (row > bound) bound = row;
    }
    Int b = num(bound) / den(bound) + 1;
    if (b > 1'000'000) throw std::invalid_argument("weight_decomposition: torus action norm too large");
    const int limit = static_cast<int>(b);

    WeightDecomposition out;
    std::size_t total = 0;
    Lattice sum(n);
    for (int w = -limit; w <= limit; ++w) {
        RatMat shifted = h;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Rational(w);
        // Eigenvectors x with x H = w x, i.e. x (H - w) = 0: kernel of the
        // transpose in the row convention.
        Lattice eig = lattice_kernel(integerized(shifted).transposed());
        if (eig.is_zero()) continue;
        total += eig.rank();
        sum = sum.sum(eig);
        out.eigenlattices.emplace(w, std::move(eig));
    }
    out.spans = total == n;
    if (out.spans) {
        out.sum_index = sum.rank() == n ? sum.index_in_saturation() : Int(0);
        out.integral = sum.is_full();
    }
    return out;
}

std::map<int, std::size_t> character_multiplicities(const Comodule& c) {
    WeightDecomposition d = weight_decomposition(c);
    if (!d.spans)
        throw std::invalid_argument(
            "character_multiplicities: torus action is not diagonalizable with integer weights");
    std::map<int, std::size_t> out;
    for (const auto& [w, l] : d.eigenlattices) out.emplace(w, l.rank());
    return out;
}

}  // namespace sl2comod
