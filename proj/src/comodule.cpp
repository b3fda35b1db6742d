#include "sl2comod/comodule.hpp"

#include <stdexcept>

namespace sl2comod {

std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }
std::string variant_name(HopfVariant v) { return v == HopfVariant::Std ? "std" : "op"; }

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

Comodule make_comodule(const BaseRing& ring, Side side, HopfVariant variant, PolyMat matrix,
                       std::vector<std::string> labels) {
    if (matrix.rows() != matrix.cols()) throw std::invalid_argument("make_comodule: coaction matrix must be square");
    if (labels.empty()) labels = default_labels(matrix.rows());
    if (labels.size() != matrix.rows()) throw std::invalid_argument("make_comodule: one label per basis vector");
    return Comodule{ring, side, variant, std::move(matrix), std::move(labels)};
}

ComoduleCheckReport verify_comodule(const Comodule& c) {
    ComoduleCheckReport report;
    auto fail = [&report](std::string what) {
        report.ok = false;
        report.failures.push_back(std::move(what));
    };
    const std::size_t n = c.rank();
    if (c.matrix.cols() != n) {
        fail("coaction matrix is not square");
        return report;
    }
    if (c.labels.size() != n) fail("label count does not match the rank");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [e, coeff] : c.matrix(i, j).terms())
                if (!c.ring.contains(coeff)) {
                    fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has coefficient " +
                         to_string(coeff) + " outside " + c.ring.name());
                }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational expected = i == j ? 1 : 0;
            if (counit(c.matrix(i, j)) != expected)
                fail("counit of entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not " +
                     to_string(expected));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            TensorPoly lhs = comultiply(c.matrix(i, k), c.variant);
            TensorPoly rhs;
            for (std::size_t j = 0; j < n; ++j) {
                if (c.side == Side::Right)
                    rhs += TensorPoly::tensor(c.matrix(i, j), c.matrix(j, k));
                else
                    rhs += TensorPoly::tensor(c.matrix(j, k), c.matrix(i, j));
            }
            if (lhs != rhs)
                fail("coaction square fails at entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
        }
    return report;
}

Comodule trivial_comodule(const BaseRing& ring, std::size_t n) {
    PolyMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = HopfPoly(Rational(1));
    return make_comodule(ring, Side::Right, HopfVariant::Std, std::move(m));
}

Comodule standard_comodule(const BaseRing& ring, Side side, HopfVariant variant) {
    PolyMat m{{HopfPoly::x11(), HopfPoly::x12()}, {HopfPoly::x21(), HopfPoly::x22()}};
    // A right comodule for the factor-swapped comultiplication coacts the way
    // a left comodule does for the standard one, so the matrix transposes
    // when exactly one of (left side, swapped variant) holds.
    if ((side == Side::Left) != (variant == HopfVariant::Op)) m = m.transposed();
    return make_comodule(ring, side, variant, std::move(m));
}

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string power_label(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

Comodule sym_power(const BaseRing& ring, int n) {
    if (n < 0) throw std::invalid_argument("sym_power: exponent must be >= 0");
    const std::size_t rank = static_cast<std::size_t>(n) + 1;
    PolyMat m(rank, rank);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            HopfPoly entry;
            for (int alpha = 0; alpha <= std::min(j, n - i); ++alpha) {
                const int beta = j - alpha;
                if (beta < 0 || beta > i) continue;
                const Rational coeff(binomial(n - i, alpha) * binomial(i, beta));
                entry += HopfPoly::monomial(Exp4{n - i - alpha, alpha, i - beta, beta}, coeff);
            }
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(entry);
        }
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) {
        std::string l1 = power_label("e1", n - i), l2 = power_label("e2", i);
        std::string l = l1.empty() ? l2 : (l2.empty() ? l1 : l1 + "*" + l2);
        labels.push_back(l.empty() ? "1" : l);
    }
    return make_comodule(ring, Side::Right, HopfVariant::Std, std::move(m), std::move(labels));
}

namespace {

void require_compatible(const Comodule& a, const Comodule& b, const char* what) {
    if (a.ring != b.ring || a.side != b.side || a.variant != b.variant)
        throw std::invalid_argument(std::string(what) + ": operands must share ring, side and variant");
}

}  // namespace

Comodule tensor_product(const Comodule& a, const Comodule& b) {
    require_compatible(a, b, "tensor_product");
    PolyMat m = kronecker(a.matrix, b.matrix);
    std::vector<std::string> labels;
    labels.reserve(a.rank() * b.rank());
    for (const auto& la : a.labels)
        for (const auto& lb : b.labels) labels.push_back(la + "(x)" + lb);
    return make_comodule(a.ring, a.side, a.variant, std::move(m), std::move(labels));
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
    require_compatible(a, b, "direct_sum");
    const std::size_t n = a.rank(), m = b.rank();
    PolyMat s(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = a.matrix(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b.matrix(i, j);
    std::vector<std::string> labels = a.labels;
    labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    return make_comodule(a.ring, a.side, a.variant, std::move(s), std::move(labels));
}

Comodule linear_dual(const Comodule& c) {
    const std::size_t n = c.rank();
    PolyMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = antipode(c.matrix(j, i));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& l : c.labels) labels.push_back(l + "*");
    return Comodule{c.ring, c.side == Side::Right ? Side::Left : Side::Right,
                    c.variant == HopfVariant::Std ? HopfVariant::Op : HopfVariant::Std, std::move(m),
                    std::move(labels)};
}

Comodule flip_side(const Comodule& c) {
    Comodule out = c;
    out.side = c.side == Side::Right ? Side::Left : Side::Right;
    out.variant = c.variant == HopfVariant::Std ? HopfVariant::Op : HopfVariant::Std;
    return out;
}

Comodule contragredient(const Comodule& c) { return flip_side(linear_dual(c)); }

Comodule transpose_inverse_twist(const Comodule& c) {
    Comodule out = c;
    for (std::size_t i = 0; i < c.rank(); ++i)
        for (std::size_t j = 0; j < c.rank(); ++j) out.matrix(i, j) = transpose_inverse_vars(c.matrix(i, j));
    return out;
}

Comodule side_transpose(const Comodule& c) {
    Comodule out = c;
    out.side = c.side == Side::Right ? Side::Left : Side::Right;
    for (std::size_t i = 0; i < c.rank(); ++i)
        for (std::size_t j = 0; j < c.rank(); ++j) out.matrix(i, j) = transpose_vars(c.matrix(i, j));
    return out;
}

Comodule in_category(const Comodule& c, Side side, HopfVariant variant) {
    if (c.side == side && c.variant == variant) return c;
    if (c.side != side && c.variant != variant) return flip_side(c);
    Comodule t = side_transpose(c);
    if (t.variant != variant) t = flip_side(t);
    return t;
}

Comodule base_change(const Comodule& c, const BaseRing& target) {
    if (!c.ring.subring_of(target))
        throw std::invalid_argument("base_change: " + c.ring.name() + " is not a subring of " + target.name());
    Comodule out = c;
    out.ring = target;
    return out;
}

PolyMat constant_matrix(const RatMat& m) {
    PolyMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = HopfPoly(m(i, j));
    return out;
}

PolyMat constant_matrix(const IntMat& m) {
    PolyMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = HopfPoly(Rational(m(i, j)));
    return out;
}

RatMat rational_matrix(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

Comodule change_basis(const Comodule& c, const IntMat& p, std::vector<std::string> labels) {
    if (p.rows() != c.rank() || p.cols() != c.rank())
        throw std::invalid_argument("change_basis: transform shape mismatch");
    IntMat p_inv = unimodular_inverse(p);
    PolyMat m = constant_matrix(p) * c.matrix * constant_matrix(p_inv);
    return make_comodule(c.ring, c.side, c.variant, std::move(m), std::move(labels));
}

namespace {

struct AdaptedBasis {
    IntMat p, p_inv;
    PolyMat transformed;  // p * M * p^(-1)
};

// Unimodular change of basis whose first rank(l) rows are the canonical basis
// of l; exists exactly because l is saturated.
AdaptedBasis adapted_basis(const Comodule& c, const Lattice& l) {
    const std::size_t n = c.rank(), r = l.rank();
    if (l.ambient_rank() != n) throw std::invalid_argument("sub_quotient: ambient rank mismatch");
    if (!l.is_saturated()) throw std::invalid_argument("sub_quotient: the sublattice must be saturated");

    IntMat p(n, n), p_inv(n, n);
    if (r == 0) {
        p = IntMat::identity(n);
        p_inv = p;
    } else {
        SnfResult snf = smith_normal_form(l.basis());
        if (snf.rank() != r) throw std::logic_error("sub_quotient: basis rows are dependent");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = l.basis()(i, j);
        for (std::size_t i = r; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = snf.V_inv(i, j);
        // p = blockdiag(U^-1, I) * V^-1, so p^-1 = V * blockdiag(U, I).
        IntMat e = IntMat::identity(n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) e(i, j) = snf.U(i, j);
        p_inv = snf.V * e;
        if (p * p_inv != IntMat::identity(n)) throw std::logic_error("sub_quotient: basis completion failed");
    }
    PolyMat transformed = constant_matrix(p) * c.matrix * constant_matrix(p_inv);
    return {std::move(p), std::move(p_inv), std::move(transformed)};
}

bool invariant_in_adapted_basis(const PolyMat& t, std::size_t r) {
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = r; j < t.cols(); ++j)
            if (!t(i, j).is_zero()) return false;
    return true;
}

}  // namespace

bool is_subcomodule(const Comodule& c, const Lattice& l) {
    AdaptedBasis ab = adapted_basis(c, l);
    return invariant_in_adapted_basis(ab.transformed, l.rank());
}

SubQuotient sub_quotient(const Comodule& c, const Lattice& l) {
    AdaptedBasis ab = adapted_basis(c, l);
    const std::size_t n = c.rank(), r = l.rank();
    if (!invariant_in_adapted_basis(ab.transformed, r))
        throw std::invalid_argument("sub_quotient: the lattice is not carried into itself by the coaction");

    PolyMat sub(r, r), quot(n - r, n - r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub(i, j) = ab.transformed(i, j);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) quot(i - r, j - r) = ab.transformed(i, j);

    std::vector<std::string> sub_labels, quot_labels;
    for (std::size_t i = 1; i <= r; ++i) sub_labels.push_back("s" + std::to_string(i));
    for (std::size_t i = 1; i <= n - r; ++i) quot_labels.push_back("q" + std::to_string(i));

    return SubQuotient{make_comodule(c.ring, c.side, c.variant, std::move(sub), std::move(sub_labels)),
                       make_comodule(c.ring, c.side, c.variant, std::move(quot), std::move(quot_labels)),
                       std::move(ab.p), std::move(ab.p_inv)};
}

namespace {

// Index of the tuple (i_0, ..., i_{d-1}) in the iterated Kronecker basis.
std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t rank) {
    std::size_t idx = 0;
    for (std::size_t t : tuple) idx = idx * rank + t;
    return idx;
}

}  // namespace

namespace {

// Rows spanning the differences t - swap_k(t) inside c^(x)d, one block per
// adjacent transposition. The kernel of this matrix (as a map acting on row
// vectors from the right would be wrong -- these are *rows*) is not used
// directly; callers either take lattice_kernel of it as a matrix or its row
// span as a relations lattice.
IntMat adjacent_swap_differences(std::size_t rank, int d) {
    std::size_t big = 1;
    for (int t = 0; t < d; ++t) big *= rank;
    IntMat stacked(static_cast<std::size_t>(d - 1) * big, big);
    std::vector<std::size_t> tuple(static_cast<std::size_t>(d), 0);
    for (std::size_t idx = 0; idx < big; ++idx) {
        std::size_t rem = idx;
        for (int t = d - 1; t >= 0; --t) {
            tuple[static_cast<std::size_t>(t)] = rem % rank;
            rem /= rank;
        }
        for (int k = 0; k + 1 < d; ++k) {
            std::vector<std::size_t> swapped = tuple;
            std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k) + 1]);
            const std::size_t row = static_cast<std::size_t>(k) * big + idx;
            stacked(row, tuple_index(swapped, rank)) += 1;
            stacked(row, idx) -= 1;
        }
    }
    return stacked;
}

Comodule iterated_tensor(const Comodule& c, int d) {
    Comodule power = c;
    for (int t = 1; t < d; ++t) power = tensor_product(power, c);
    return power;
}

}  // namespace

Comodule symmetric_tensors(const Comodule& c, int d) {
    if (d < 1) throw std::invalid_argument("symmetric_tensors: degree must be >= 1");
    if (d == 1) return c;
    Comodule power = iterated_tensor(c, d);
    // The common kernel of all (P_k - I) is the symmetric-tensor sublattice.
    Lattice invariants = lattice_kernel(adjacent_swap_differences(c.rank(), d));
    return sub_quotient(power, invariants).sub;
}

Comodule sym_power_of(const Comodule& c, int d) {
    if (d < 0) throw std::invalid_argument("sym_power_of: degree must be >= 0");
    if (d == 0) return trivial_comodule(c.ring, 1);
    if (d == 1) return c;
    Comodule power = iterated_tensor(c, d);
    // The row span of all (P_k - I) is the symmetrization-relations sublattice.
    Lattice relations(adjacent_swap_differences(c.rank(), d));
    return sub_quotient(power, relations).quotient;
}

Comodule exterior_square(const Comodule& c) {
    Comodule power = tensor_product(c, c);
    const std::size_t rank = c.rank(), big = power.rank();
    IntMat swap_plus_one(big, big);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            swap_plus_one(i * rank + j, j * rank + i) += 1;
            swap_plus_one(i * rank + j, i * rank + j) += 1;
        }
    Lattice alternating = lattice_kernel(swap_plus_one);
    return sub_quotient(power, alternating).sub;
}

MorphismReport morphism_check(const Comodule& src, const Comodule& dst, const RatMat& f) {
    MorphismReport report;
    if (src.ring != dst.ring || src.side != dst.side || src.variant != dst.variant) {
        report.ok = false;
        report.detail = "source and target live in different categories";
        return report;
    }
    if (f.rows() != src.rank() || f.cols() != dst.rank()) {
        report.ok = false;
        report.detail = "matrix shape does not match the ranks";
        return report;
    }
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!src.ring.contains(f(i, j))) {
                report.ok = false;
                report.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                to_string(f(i, j)) + " is outside " + src.ring.name();
                return report;
            }
    PolyMat fp = constant_matrix(f);
    PolyMat lhs = src.matrix * fp;
    PolyMat rhs = fp * dst.matrix;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j)) {
                report.ok = false;
                report.detail = "intertwining fails at entry (" + std::to_string(i) + "," + std::to_string(j) +
                                "): " + (lhs(i, j) - rhs(i, j)).str() + " != 0";
                return report;
            }
    return report;
}

}  // namespace sl2comod
