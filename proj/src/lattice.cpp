#include "sl2comod/lattice.hpp"

#include <stdexcept>

namespace sl2comod {

IntMat hermite_basis(const IntMat& generators) {
    const std::size_t n = generators.cols();
    std::vector<std::vector<Int>> rows;
    rows.reserve(generators.rows());
    for (std::size_t i = 0; i < generators.rows(); ++i) rows.push_back(generators.row(i));

    // pivot_row[j] = index into `echelon` of the row whose pivot is column j.
    std::vector<std::vector<Int>> echelon;
    std::vector<std::size_t> pivot_col;

    auto reduce_insert = [&](std::vector<Int> r) {
        for (std::size_t j = 0; j < n; ++j) {
            if (r[j] == 0) continue;
            // Existing pivot row at column j?
            std::size_t k = 0;
            for (; k < pivot_col.size(); ++k)
                if (pivot_col[k] == j) break;
            if (k == pivot_col.size()) {
                if (r[j] < 0)
                    for (auto& x : r) x = -x;
                echelon.push_back(std::move(r));
                pivot_col.push_back(j);
                return;
            }
            std::vector<Int>& p = echelon[k];
            if (r[j] % p[j] == 0) {
                const Int q = r[j] / p[j];
                for (std::size_t t = j; t < n; ++t) r[t] -= q * p[t];
            } else {
                // gcd-combine: replace the pivot row by the gcd row, keep reducing r.
                Int g, s0, t0;
                {
                    // extended gcd of p[j], r[j]
                    Int a = p[j], b = r[j], x0 = 1, y0 = 0, x1 = 0, y1 = 1;
                    while (b != 0) {
                        Int q = a / b;
                        Int tmp = a - q * b;
                        a = b;
                        b = tmp;
                        tmp = x0 - q * x1;
                        x0 = x1;
                        x1 = tmp;
                        tmp = y0 - q * y1;
                        y0 = y1;
                        y1 = tmp;
                    }
                    g = a;
                    s0 = x0;
                    t0 = y0;
                }
                const Int pj = p[j] / g, rj = r[j] / g;
                for (std::size_t t = 0; t < n; ++t) {
                    const Int np = s0 * p[t] + t0 * r[t];
                    const Int nr = -rj * p[t] + pj * r[t];
                    p[t] = np;
                    r[t] = nr;
                }
                if (p[j] < 0)
                    for (auto& x : p) x = -x;
            }
        }
    };

    for (auto& r : rows) reduce_insert(std::move(r));

    // Sort rows by pivot column, then reduce entries above each pivot.
    std::vector<std::size_t> order(echelon.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (pivot_col[order[j]] < pivot_col[order[i]]) std::swap(order[i], order[j]);

    IntMat out(echelon.size(), n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = echelon[order[i]][j];

    // Reduce above-pivot entries into [0, pivot). For each row, clear against
    // the pivot rows below it in left-to-right pivot order: a reduction at
    // pivot column j only touches columns >= j, so earlier fixes survive.
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t k = i + 1; k < out.rows(); ++k) {
            std::size_t j = 0;
            while (j < n && out(k, j) == 0) ++j;
            if (j == n) continue;
            const Int p = out(k, j);
            Int q = out(i, j) / p;
            if (out(i, j) - q * p < 0) q -= 1;  // floor division
            if (q != 0)
                for (std::size_t t = j; t < n; ++t) out(i, t) -= q * out(k, t);
        }
    }
    return out;
}

Lattice::Lattice(const IntMat& generators) : ambient_(generators.cols()), basis_(hermite_basis(generators)) {}

bool Lattice::contains(const std::vector<Int>& v) const { return coordinates(v).has_value(); }

std::optional<std::vector<Int>> Lattice::coordinates(const std::vector<Int>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Lattice::coordinates: wrong vector length");
    std::vector<Int> w = v, coeff(basis_.rows(), 0);
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
        std::size_t j = 0;
        while (j < ambient_ && basis_(k, j) == 0) ++j;
        if (j == ambient_) continue;
        if (w[j] % basis_(k, j) != 0) {
            // Pivot columns are strictly increasing, so nothing later can fix w[j].
            if (w[j] != 0) return std::nullopt;
            continue;
        }
        const Int q = w[j] / basis_(k, j);
        coeff[k] = q;
        if (q != 0)
            for (std::size_t t = j; t < ambient_; ++t) w[t] -= q * basis_(k, t);
    }
    for (const Int& x : w)
        if (x != 0) return std::nullopt;
    return coeff;
}

bool Lattice::contains(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Lattice::contains: ambient rank mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Lattice lattice_kernel(const IntMat& m) {
    const std::size_t c = m.cols();
    if (m.rows() == 0) return Lattice::full(c);
    SnfResult s = smith_normal_form(m);
    // M x = 0  <=>  D (V^-1 x) = 0  <=>  V^-1 x supported on zero divisors;
    // kernel basis = columns of V beyond the rank.
    const std::size_t rank = s.rank();
    IntMat gens(c - rank, c);
    for (std::size_t t = rank; t < c; ++t)
        for (std::size_t i = 0; i < c; ++i) gens(t - rank, i) = s.V(i, t);
    return Lattice(gens);
}

Lattice Lattice::saturation() const {
    if (is_zero()) return Lattice(ambient_);
    // x in Q-span(L) iff x is orthogonal to ker(G .), so saturation = kernel of
    // the kernel: both kernels are computed over Z and are saturated.
    Lattice k = lattice_kernel(basis_);
    return lattice_kernel(k.basis());
}

Int Lattice::index_in_saturation() const {
    Int idx = 1;
    for (const Int& d : smith_normal_form(basis_).divisors) idx *= d;
    return idx;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Lattice::sum: ambient rank mismatch");
    IntMat stacked(rank() + other.rank(), ambient_);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked(i, j) = basis_(i, j);
    for (std::size_t i = 0; i < other.rank(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked(rank() + i, j) = other.basis_(i, j);
    return Lattice(stacked);
}

}  // namespace sl2comod
