#include "sl2comod/homological.hpp"

#include "sl2comod/snf.hpp"

#include <stdexcept>

namespace sl2comod {

IntMat multiplication_onto_sym(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("multiplication_onto_sym: degrees must be >= 0");
    IntMat f(static_cast<std::size_t>(n + 1) * (m + 1), static_cast<std::size_t>(n + m + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) f(static_cast<std::size_t>(i) * (m + 1) + j, static_cast<std::size_t>(i + j)) = 1;
    return f;
}

IntMat determinant_multiplication_map(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("determinant_multiplication_map: degrees must be >= 1");
    IntMat f(static_cast<std::size_t>(n) * m, static_cast<std::size_t>(n + 1) * (m + 1));
    for (int q = 0; q < n; ++q)
        for (int t = 0; t < m; ++t) {
            const std::size_t src = static_cast<std::size_t>(q) * m + t;
            f(src, static_cast<std::size_t>(q) * (m + 1) + (t + 1)) = 1;
            f(src, static_cast<std::size_t>(q + 1) * (m + 1) + t) = -1;
        }
    return f;
}

namespace {

// Kernel of a morphism in the row convention: elements x with x F = 0.
Lattice morphism_kernel(const IntMat& f) { return lattice_kernel(f.transposed()); }

// Index [outer : inner] for a full-rank sublattice inner <= outer; 0 signals a
// rank drop.
Int lattice_index(const Lattice& outer, const Lattice& inner) {
    if (inner.rank() != outer.rank()) return 0;
    IntMat c(inner.rank(), outer.rank());
    for (std::size_t r = 0; r < inner.rank(); ++r) {
        auto coords = outer.coordinates(inner.basis().row(r));
        if (!coords) return 0;
        for (std::size_t j = 0; j < outer.rank(); ++j) c(r, j) = (*coords)[j];
    }
    return abs_int(determinant(c));
}

}  // namespace

ExactnessReport check_exact_sequence(const std::vector<const Comodule*>& objects, const std::vector<IntMat>& maps) {
    ExactnessReport report;
    auto fail = [&report](std::string what) {
        report.ok = false;
        report.failures.push_back(std::move(what));
    };
    if (objects.size() < 2 || maps.size() + 1 != objects.size())
        throw std::invalid_argument("check_exact_sequence: need k+1 objects and k maps");
    const BaseRing& ring = objects.front()->ring;

    for (std::size_t t = 0; t < maps.size(); ++t) {
        MorphismReport mr = morphism_check(*objects[t], *objects[t + 1], rational_matrix(maps[t]));
        if (!mr.ok) fail("map " + std::to_string(t) + " is not a comodule morphism: " + mr.detail);
    }

    if (!morphism_kernel(maps.front()).is_zero()) fail("the first map has a nonzero kernel");

    for (std::size_t t = 0; t + 1 < maps.size(); ++t) {
        Lattice image(maps[t]);
        Lattice kernel = morphism_kernel(maps[t + 1]);
        if (!kernel.contains(image)) {
            fail("at position " + std::to_string(t + 1) + ": the image is not contained in the kernel");
            continue;
        }
        Int index = lattice_index(kernel, image);
        if (index == 0)
            fail("at position " + std::to_string(t + 1) + ": the image has smaller rank than the kernel");
        else if (!ring.is_unit(Rational(index)))
            fail("at position " + std::to_string(t + 1) + ": [kernel : image] = " + to_string(index) +
                 " is not a unit of " + ring.name());
    }

    Lattice last_image(maps.back());
    if (last_image.rank() != objects.back()->rank()) {
        fail("the last map is not surjective (rank drop)");
    } else {
        Int index = last_image.index_in_saturation();
        if (!ring.is_unit(Rational(index)))
            fail("the last map has cokernel index " + to_string(index) + ", not a unit of " + ring.name());
    }
    return report;
}

namespace {

// Shared verification engine: checks that `terms` is a decreasing chain of
// saturated invariant sublattices of `total` starting at the full lattice and
// ending at zero, builds the successive quotients, and matches each against
// the expected symmetric power.
Filtration analyze_filtration(const Comodule& total, std::vector<Lattice> terms, std::vector<int> degrees) {
    Filtration out;
    out.terms = std::move(terms);
    out.degrees = std::move(degrees);
    auto fail = [&out](std::string what) {
        out.ok = false;
        out.failures.push_back(std::move(what));
    };

    if (out.terms.size() != out.degrees.size() + 1) throw std::invalid_argument("analyze_filtration: size mismatch");
    if (!out.terms.front().is_full()) fail("the filtration does not start at the full lattice");
    if (!out.terms.back().is_zero()) fail("the filtration does not end at zero");

    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        const Lattice& l = out.terms[i];
        if (l.ambient_rank() != total.rank()) {
            fail("term " + std::to_string(i) + " lives in the wrong ambient space");
            return out;
        }
        if (!l.is_saturated()) fail("term " + std::to_string(i) + " is not saturated");
        if (!is_subcomodule(total, l)) fail("term " + std::to_string(i) + " is not an invariant sublattice");
        if (i > 0 && !out.terms[i - 1].contains(l))
            fail("term " + std::to_string(i) + " is not contained in term " + std::to_string(i - 1));
    }
    if (!out.ok) return out;

    for (std::size_t i = 0; i + 1 < out.terms.size(); ++i) {
        SubQuotient step = sub_quotient(total, out.terms[i]);
        // Coordinates of the next term inside the current one; the quotient of
        // the two is the quotient of `step.sub` by this (saturated) lattice.
        const Lattice& next = out.terms[i + 1];
        IntMat inner(next.rank(), out.terms[i].rank());
        for (std::size_t r = 0; r < next.rank(); ++r) {
            auto coords = out.terms[i].coordinates(next.basis().row(r));
            if (!coords) throw std::logic_error("analyze_filtration: containment lost");
            for (std::size_t j = 0; j < out.terms[i].rank(); ++j) inner(r, j) = (*coords)[j];
        }
        SubQuotient split = sub_quotient(step.sub, Lattice(inner));
        Comodule layer = split.quotient;

        // In the adapted basis a vector of the sub has new coordinates
        // w * P^(-1); dropping the first rank(next) of them is the projection
        // onto the quotient, so its matrix is the right block of P^(-1).
        const std::size_t keep = split.sub.rank();
        IntMat proj(step.sub.rank(), layer.rank());
        for (std::size_t r = 0; r < proj.rows(); ++r)
            for (std::size_t j = 0; j < proj.cols(); ++j) proj(r, j) = split.change_of_basis_inverse(r, keep + j);

        Comodule expected = in_category(sym_power(total.ring, out.degrees[i]), total.side, total.variant);
        IsoResult iso = find_isomorphism(layer, expected);
        if (iso.verdict != IsoVerdict::Isomorphic)
            fail("quotient " + std::to_string(i) + " is not isomorphic to the symmetric power of degree " +
                 std::to_string(out.degrees[i]) + " (" + iso.reason + ")");
        out.subs.push_back(std::move(step.sub));
        out.quotients.push_back(std::move(layer));
        out.projections.push_back(std::move(proj));
        out.witnesses.push_back(std::move(iso));
    }
    return out;
}

}  // namespace

Filtration cg_filtration(const BaseRing& ring, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("cg_filtration: degrees must be >= 0");
    Comodule total = tensor_product(sym_power(ring, n), sym_power(ring, m));
    const int depth = std::min(n, m);

    std::vector<Lattice> terms;
    std::vector<int> degrees;
    IntMat composite = IntMat::identity(total.rank());
    terms.push_back(Lattice(composite));
    degrees.push_back(n + m);
    for (int i = 1; i <= depth; ++i) {
        composite = determinant_multiplication_map(n - i + 1, m - i + 1) * composite;
        terms.push_back(Lattice(composite));
        degrees.push_back(n + m - 2 * i);
    }
    terms.push_back(Lattice(total.rank()));  // zero

    return analyze_filtration(total, std::move(terms), std::move(degrees));
}

Filtration good_filtration_of_tensor(const Comodule& a, const Comodule& b) {
    Comodule total = tensor_product(a, b);
    const int d1 = static_cast<int>(a.rank()) - 1;
    const int d2 = static_cast<int>(b.rank()) - 1;

    auto reject = [&total](std::string why) {
        Filtration f;
        f.ok = false;
        f.failures.push_back(std::move(why));
        return f;
    };
    if (d1 < 0 || d2 < 0) return reject("factors must be nonzero");

    IsoResult ia = find_isomorphism(a, in_category(sym_power(a.ring, d1), a.side, a.variant));
    if (ia.verdict != IsoVerdict::Isomorphic || !a.ring.is_unit(Rational(ia.witness_det)))
        return reject("left factor is not isomorphic to a symmetric power by a unit-determinant intertwiner (" +
                      ia.reason + ")");
    IsoResult ib = find_isomorphism(b, in_category(sym_power(b.ring, d2), b.side, b.variant));
    if (ib.verdict != IsoVerdict::Isomorphic || !b.ring.is_unit(Rational(ib.witness_det)))
        return reject("right factor is not isomorphic to a symmetric power by a unit-determinant intertwiner (" +
                      ib.reason + ")");

    // Transport the universal filtration through psi^(-1). The witness
    // determinants are units of the base ring but need not be +-1, so the
    // inverse can have unit denominators; saturating after clearing them
    // yields the same submodule over the ring on an integral, saturated
    // lattice, which is what the filtration analysis expects.
    const IntMat psi = kronecker(ia.witness, ib.witness);
    const SnfResult snf = smith_normal_form(psi);
    RatMat psi_inv(psi.rows(), psi.cols());  // psi = U^(-1) D V^(-1), so psi^(-1) = V D^(-1) U
    for (std::size_t i = 0; i < psi.rows(); ++i)
        for (std::size_t j = 0; j < psi.cols(); ++j)
            for (std::size_t k = 0; k < psi.cols(); ++k)
                psi_inv(i, j) += Rational(snf.V(i, k) * snf.U(k, j), snf.D(k, k));

    Filtration base = cg_filtration(a.ring, d1, d2);
    if (!base.ok) return reject("the universal filtration itself failed to verify");

    std::vector<Lattice> terms;
    for (const Lattice& l : base.terms) {
        const RatMat moved = rational_matrix(l.basis()) * psi_inv;
        Int clear = 1;
        for (std::size_t i = 0; i < moved.rows(); ++i)
            for (std::size_t j = 0; j < moved.cols(); ++j) clear = lcm(clear, den(moved(i, j)));
        IntMat cleared(moved.rows(), moved.cols());
        for (std::size_t i = 0; i < moved.rows(); ++i)
            for (std::size_t j = 0; j < moved.cols(); ++j)
                cleared(i, j) = num(moved(i, j)) * (clear / den(moved(i, j)));
        terms.push_back(Lattice(cleared).saturation());
    }
    return analyze_filtration(total, std::move(terms), base.degrees);
}

SectionOutcome find_section(const Comodule& total, const Comodule& quotient, const IntMat& projection,
                            const HomBasis* hom_precomputed) {
    if (projection.rows() != total.rank() || projection.cols() != quotient.rank())
        throw std::invalid_argument("find_section: projection shape mismatch");

    HomBasis local;
    const HomBasis* hom = hom_precomputed;
    if (hom == nullptr) {
        local = intertwiner_lattice(quotient, total);
        hom = &local;
    }
    if (hom->src_rank != quotient.rank() || hom->dst_rank != total.rank())
        throw std::invalid_argument("find_section: precomputed morphism basis has the wrong shape");

    // Any section is a ring combination of the generators; S * projection = I
    // becomes one small inhomogeneous system in the combination coefficients.
    const std::size_t q = quotient.rank(), k = hom->dim();
    RatMat a(q * q, k);
    RatVec b(q * q, Rational(0));
    for (std::size_t t = 0; t < k; ++t) {
        IntMat gp = hom->basis[t] * projection;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) a(i * q + j, t) = Rational(gp(i, j));
    }
    for (std::size_t i = 0; i < q; ++i) b[i * q + i] = 1;

    SolveOutcome solved = solve_over(total.ring, a, b);
    SectionOutcome out;
    if (!solved.ok()) {
        out.certificate = solved.certificate;
        return out;
    }

    RatMat section(q, total.rank());
    for (std::size_t t = 0; t < k; ++t) {
        const Rational& y = solved.solution->point[t];
        if (y == 0) continue;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < total.rank(); ++j) section(i, j) += y * Rational(hom->basis[t](i, j));
    }

    MorphismReport mr = morphism_check(quotient, total, section);
    if (!mr.ok) throw std::logic_error("find_section: candidate section is not a morphism: " + mr.detail);
    RatMat check = section * rational_matrix(projection);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (check(i, j) != Rational(i == j ? 1 : 0))
                throw std::logic_error("find_section: candidate section does not split the projection");
    out.section = std::move(section);
    return out;
}

}  // namespace sl2comod
