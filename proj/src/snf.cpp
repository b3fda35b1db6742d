#include "sl2comod/snf.hpp"

#include <stdexcept>

namespace sl2comod {

namespace {

struct Worker {
    IntMat a, u, v, uinv, vinv;

    explicit Worker(const IntMat& m)
        : a(m),
          u(IntMat::identity(m.rows())),
          v(IntMat::identity(m.cols())),
          uinv(IntMat::identity(m.rows())),
          vinv(IntMat::identity(m.cols())) {}

    // row_b += c * row_a, with the matching inverse update (uinv column op).
    void add_row(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += c * a(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += c * u(src, j);
        for (std::size_t i = 0; i < uinv.rows(); ++i) uinv(i, src) -= c * uinv(i, dst);
    }

    void add_col(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += c * a(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += c * v(i, src);
        for (std::size_t j = 0; j < vinv.cols(); ++j) vinv(src, j) -= c * vinv(dst, j);
    }

    void swap_rows(std::size_t x, std::size_t y) {
        if (x == y) return;
        a.swap_rows(x, y);
        u.swap_rows(x, y);
        uinv.swap_cols(x, y);
    }

    void swap_cols(std::size_t x, std::size_t y) {
        if (x == y) return;
        a.swap_cols(x, y);
        v.swap_cols(x, y);
        vinv.swap_rows(x, y);
    }

    void negate_row(std::size_t x) {
        for (std::size_t j = 0; j < a.cols(); ++j) a(x, j) = -a(x, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(x, j) = -u(x, j);
        for (std::size_t i = 0; i < uinv.rows(); ++i) uinv(i, x) = -uinv(i, x);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    Worker w(m);
    const std::size_t steps = r < c ? r : c;

    for (std::size_t t = 0; t < steps; ++t) {
        // Find the entry of least nonzero magnitude in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Int v = abs_int(w.a(i, j));
                if (v != 0 && (!found || v < best)) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.a(i, t) == 0) continue;
                const Int q = w.a(i, t) / w.a(t, t);
                w.add_row(i, t, -q);
                if (w.a(i, t) != 0) {  // remainder becomes the new, smaller pivot
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.a(t, j) == 0) continue;
                const Int q = w.a(t, j) / w.a(t, t);
                w.add_col(j, t, -q);
                if (w.a(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot divides its row and column; enforce divisibility of the rest.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < r && divides_all; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.a(t, t) < 0) w.negate_row(t);
    }

    SnfResult res;
    res.D = w.a;
    res.U = w.u;
    res.V = w.v;
    res.U_inv = w.uinv;
    res.V_inv = w.vinv;
    for (std::size_t t = 0; t < steps; ++t) {
        if (w.a(t, t) == 0) break;
        res.divisors.push_back(w.a(t, t));
    }
    return res;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMat unimodular_inverse(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: matrix not square");
    SnfResult s = smith_normal_form(m);
    if (s.rank() != m.rows()) throw std::invalid_argument("unimodular_inverse: matrix singular");
    for (const Int& d : s.divisors)
        if (d != 1) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
    // U*M*V = I  =>  M^{-1} = V*U.
    return s.V * s.U;
}

}  // namespace sl2comod
