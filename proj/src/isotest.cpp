#include "sl2comod/isotest.hpp"

#include "sl2comod/linear_solve.hpp"
#include "sl2comod/snf.hpp"

#include <cmath>
#include <stdexcept>

namespace sl2comod {

IntMat unflatten_morphism(const std::vector<Int>& row, std::size_t src_rank, std::size_t dst_rank) {
    if (row.size() != src_rank * dst_rank) throw std::invalid_argument("unflatten_morphism: size mismatch");
    IntMat f(src_rank, dst_rank);
    for (std::size_t i = 0; i < src_rank; ++i)
        for (std::size_t k = 0; k < dst_rank; ++k) f(i, k) = row[i * dst_rank + k];
    return f;
}

HomBasis intertwiner_lattice(const Comodule& src, const Comodule& dst) {
    if (src.ring != dst.ring || src.side != dst.side || src.variant != dst.variant)
        throw std::invalid_argument("intertwiner_lattice: comodules live in different categories");
    const std::size_t n = src.rank(), m = dst.rank();

    // One polynomial equation per entry of M_src F - F M_dst; split into one
    // scalar equation per monomial and clear denominators.
    std::vector<SparseIntRow> equations;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::map<Exp4, std::map<std::size_t, Rational>> by_monomial;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [e, c] : src.matrix(i, k).terms()) by_monomial[e][k * m + j] += c;
            for (std::size_t k = 0; k < m; ++k)
                for (const auto& [e, c] : dst.matrix(k, j).terms()) by_monomial[e][i * m + k] -= c;
            for (const auto& [e, coeffs] : by_monomial) {
                Int scale = 1;
                for (const auto& [idx, c] : coeffs)
                    if (c != 0) scale = lcm(scale, den(c));
                SparseIntRow row;
                for (const auto& [idx, c] : coeffs) {
                    if (c == 0) continue;
                    row.emplace_back(idx, num(c) * (scale / den(c)));
                }
                if (!row.empty()) equations.push_back(std::move(row));
            }
        }

    HomBasis out;
    out.src_rank = n;
    out.dst_rank = m;
    out.lattice = sparse_homogeneous_kernel(equations, n * m);
    for (std::size_t r = 0; r < out.lattice.rank(); ++r) out.basis.push_back(unflatten_morphism(out.lattice.basis().row(r), n, m));
    return out;
}

namespace {

IsoResult not_isomorphic(std::string reason) {
    IsoResult r;
    r.verdict = IsoVerdict::NotIsomorphic;
    r.reason = std::move(reason);
    return r;
}

IsoResult confirmed(const Comodule& a, const Comodule& b, IntMat witness, Int det) {
    MorphismReport mr = morphism_check(a, b, rational_matrix(witness));
    if (!mr.ok) throw std::logic_error("find_isomorphism: witness fails the intertwining check: " + mr.detail);
    if (!a.ring.is_unit(Rational(det))) throw std::logic_error("find_isomorphism: witness determinant is not a unit");
    IsoResult r;
    r.verdict = IsoVerdict::Isomorphic;
    r.witness = std::move(witness);
    r.witness_det = std::move(det);
    r.reason = "intertwiner with unit determinant";
    return r;
}

}  // namespace

IsoResult find_isomorphism(const Comodule& a, const Comodule& b, int coefficient_bound) {
    if (a.ring != b.ring || a.side != b.side || a.variant != b.variant)
        throw std::invalid_argument("find_isomorphism: comodules live in different categories");
    if (a.rank() != b.rank()) return not_isomorphic("ranks differ");
    const std::size_t n = a.rank();
    if (n == 0) {
        IsoResult r;
        r.verdict = IsoVerdict::Isomorphic;
        r.witness = IntMat(0, 0);
        r.witness_det = 1;
        r.reason = "both comodules are zero";
        return r;
    }

    HomBasis hom = intertwiner_lattice(a, b);
    if (hom.dim() == 0) return not_isomorphic("the morphism module is zero");

    if (hom.dim() == 1) {
        const IntMat& g = hom.basis[0];
        Int d = determinant(g);
        if (a.ring.is_unit(Rational(d))) return confirmed(a, b, g, d);
        return not_isomorphic("every morphism is a ring multiple of one generator of determinant " + to_string(d) +
                              ", and no ring multiple has unit determinant");
    }

    // Grid search over integer coefficient vectors. The determinant of
    // sum c_t G_t is a polynomial of degree <= n in each c_t, so if it
    // vanishes on a grid with more than n points per axis it vanishes
    // identically and no invertible combination exists even over Q.
    const std::size_t k = hom.dim();
    const int bound = std::max(coefficient_bound, 1);
    const bool grid_interpolates = 2 * bound + 1 > static_cast<int>(n);
    const double grid_size = std::pow(2.0 * bound + 1, static_cast<double>(k));
    if (grid_size > 2e6) {
        IsoResult r;
        r.verdict = IsoVerdict::Unknown;
        r.reason = "morphism module has dimension " + std::to_string(k) + "; search space too large";
        return r;
    }

    std::vector<int> coeffs(k, -bound);
    bool all_zero_dets = true;
    while (true) {
        bool nonzero = false, leading_positive = false;
        for (std::size_t t = 0; t < k; ++t)
            if (coeffs[t] != 0) {
                nonzero = true;
                leading_positive = coeffs[t] > 0;
                break;
            }
        // Skip zero and one of each (c, -c) pair: det(-F) = +-det(F).
        if (nonzero && leading_positive) {
            IntMat f(n, n);
            for (std::size_t t = 0; t < k; ++t) {
                if (coeffs[t] == 0) continue;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) f(i, j) += Int(coeffs[t]) * hom.basis[t](i, j);
            }
            Int d = determinant(f);
            if (d != 0) {
                all_zero_dets = false;
                if (a.ring.is_unit(Rational(d))) return confirmed(a, b, std::move(f), d);
            }
        }
        std::size_t pos = 0;
        while (pos < k && coeffs[pos] == bound) coeffs[pos++] = -bound;
        if (pos == k) break;
        ++coeffs[pos];
    }

    if (all_zero_dets && grid_interpolates)
        return not_isomorphic("every intertwiner is singular (determinant vanishes identically)");
    IsoResult r;
    r.verdict = IsoVerdict::Unknown;
    r.reason = "no unit-determinant combination within coefficient bound " + std::to_string(bound);
    return r;
}

Classification pairwise_classification(const std::vector<Comodule>& family, int coefficient_bound) {
    Classification out;
    const std::size_t n = family.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    out.table.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IsoResult r = find_isomorphism(family[i], family[j], coefficient_bound);
            if (r.verdict == IsoVerdict::Isomorphic) parent[find(i)] = find(j);
            if (r.verdict == IsoVerdict::Unknown) out.complete = false;
            out.table[i].push_back(std::move(r));
        }

    out.class_of.assign(n, 0);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        std::size_t id = roots.size();
        for (std::size_t t = 0; t < roots.size(); ++t)
            if (roots[t] == root) {
                id = t;
                break;
            }
        if (id == roots.size()) roots.push_back(root);
        out.class_of[i] = id;
    }
    out.class_count = roots.size();
    return out;
}

}  // namespace sl2comod
