#include "sl2comod/linear_solve.hpp"

#include "sl2comod/snf.hpp"

#include <stdexcept>

namespace sl2comod {

ExtGcd ext_gcd(const Int& a, const Int& b) {
    // Iterative extended Euclid; normalizes g >= 0.
    Int r0 = a, r1 = b;
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) {
        r0 = -r0; s0 = -s0; t0 = -t0;
    }
    return {r0, s0, t0};
}

namespace {

// Row-wise denominator clearing: returns the integer matrix [M | b] scaled so
// each row is integral. Scaling a row by a positive integer does not change
// its solution set over any ring containing Z.
IntMat integral_augmented(const RatMat& m, const RatVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_over: size mismatch between matrix and right-hand side");
    IntMat out(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) scale = lcm(scale, den(m(i, j)));
        scale = lcm(scale, den(b[i]));
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = num(m(i, j)) * (scale / den(m(i, j)));
        out(i, m.cols()) = num(b[i]) * (scale / den(b[i]));
    }
    return out;
}

}  // namespace

SolveOutcome solve_over(const BaseRing& ring, const RatMat& m, const RatVec& b) {
    const std::size_t n = m.cols();

    // Compress to a canonical basis of the integer row lattice of [M | b].
    IntMat reduced = hermite_basis(integral_augmented(m, b));
    IntMat a(reduced.rows(), n);
    std::vector<Int> rhs(reduced.rows());
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = reduced(i, j);
        rhs[i] = reduced(i, n);
    }

    SnfResult snf = smith_normal_form(a);
    const std::size_t r = snf.rank();

    std::vector<Int> z(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (snf.U(i, k) != 0) z[i] += snf.U(i, k) * rhs[k];

    std::vector<Rational> y(n, Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < r) {
            Rational yi = Rational(z[i]) / Rational(snf.divisors[i]);
            if (!ring.contains(yi)) {
                SolveOutcome out;
                out.certificate = NoSolutionCertificate{i, snf.divisors[i], Rational(z[i]),
                                                        "elementary-divisor condition fails over the base ring"};
                return out;
            }
            y[i] = yi;
        } else if (z[i] != 0) {
            SolveOutcome out;
            out.certificate = NoSolutionCertificate{i, Int(0), Rational(z[i]), "inconsistent equation"};
            return out;
        }
    }

    AffineSolution sol;
    sol.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (snf.V(i, k) != 0 && y[k] != 0) sol.point[i] += Rational(snf.V(i, k)) * y[k];
    for (std::size_t k = r; k < n; ++k) {
        RatVec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = Rational(snf.V(i, k));
        sol.basis.push_back(std::move(col));
    }

    SolveOutcome out;
    out.solution = std::move(sol);
    return out;
}

Lattice sparse_homogeneous_kernel(const std::vector<SparseIntRow>& equations, std::size_t n_unknowns) {
    // Candidate basis of the solution lattice, one row per remaining degree of
    // freedom; starts as the standard basis and loses one generator for every
    // independent equation. Each update replaces the generators hit by the
    // equation with an unimodular recombination annihilating it, so the span
    // stays saturated throughout.
    std::vector<std::vector<Int>> basis(n_unknowns, std::vector<Int>(n_unknowns, Int(0)));
    for (std::size_t i = 0; i < n_unknowns; ++i) basis[i][i] = 1;

    for (const SparseIntRow& eq : equations) {
        if (basis.empty()) break;
        std::vector<Int> w(basis.size(), Int(0));
        for (const auto& [idx, c] : eq) {
            if (idx >= n_unknowns) throw std::invalid_argument("sparse_homogeneous_kernel: unknown index out of range");
            if (c == 0) continue;
            for (std::size_t t = 0; t < basis.size(); ++t)
                if (basis[t][idx] != 0) w[t] += c * basis[t][idx];
        }
        std::vector<std::size_t> supp;
        for (std::size_t t = 0; t < w.size(); ++t)
            if (w[t] != 0) supp.push_back(t);
        if (supp.empty()) continue;

        // Bezout chain along the support: after step k the running vector q
        // satisfies q . eq = h = gcd of the first k+1 weights, and each emitted
        // generator is an equation-killing unimodular combination of q and the
        // next hit generator.
        std::vector<std::vector<Int>> replaced;
        replaced.reserve(supp.size() - 1);
        std::vector<Int> q = std::move(basis[supp[0]]);
        Int h = w[supp[0]];
        if (h < 0) {
            h = -h;
            for (Int& x : q) x = -x;
        }
        for (std::size_t k = 1; k < supp.size(); ++k) {
            std::vector<Int>& bt = basis[supp[k]];
            ExtGcd e = ext_gcd(h, w[supp[k]]);
            Int c1 = w[supp[k]] / e.g;  // coefficient on q
            Int c2 = h / e.g;           // coefficient on bt
            std::vector<Int> killed(q.size());
            for (std::size_t j = 0; j < q.size(); ++j) {
                killed[j] = c1 * q[j] - c2 * bt[j];
                q[j] = e.s * q[j] + e.t * bt[j];
            }
            replaced.push_back(std::move(killed));
            h = e.g;
        }

        std::vector<std::vector<Int>> next;
        next.reserve(basis.size() - 1);
        std::size_t si = 0;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (si < supp.size() && supp[si] == t) {
                ++si;
                continue;
            }
            next.push_back(std::move(basis[t]));
        }
        for (auto& row : replaced) next.push_back(std::move(row));
        basis = std::move(next);
    }

    IntMat gens(basis.size(), n_unknowns);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n_unknowns; ++j) gens(i, j) = basis[i][j];
    return Lattice(gens);
}

}  // namespace sl2comod
