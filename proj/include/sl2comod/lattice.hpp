#pragma once

#include "sl2comod/snf.hpp"

#include <optional>
#include <vector>

namespace sl2comod {

// A finitely generated sublattice of Z^n, held in a canonical basis: row-style
// Hermite normal form with positive pivots, entries above each pivot reduced
// into [0, pivot), zero rows dropped, rows ordered by pivot column. Two
// lattices are equal iff their canonical bases are identical.
class Lattice {
  public:
    Lattice() : Lattice(std::size_t(0)) {}

    // The zero sublattice of Z^n.
    explicit Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

    // Sublattice spanned by the rows of `generators` (ambient rank = cols).
    explicit Lattice(const IntMat& generators);

    static Lattice full(std::size_t n) { return Lattice(IntMat::identity(n)); }

    std::size_t ambient_rank() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return basis_.rows(); }

    // Canonical basis, one generator per row.
    const IntMat& basis() const noexcept { return basis_; }

    bool is_zero() const noexcept { return basis_.rows() == 0; }
    bool is_full() const { return rank() == ambient_ && basis_ == IntMat::identity(ambient_); }

    bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    bool contains(const std::vector<Int>& v) const;
    bool contains(const Lattice& other) const;

    // Coordinates of v in the canonical basis, if v lies in the lattice.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

    // (Q-span of this) intersected with Z^n.
    Lattice saturation() const;

    bool is_saturated() const { return *this == saturation(); }

    // [saturation : this] = product of the nonzero elementary divisors of the
    // basis matrix.
    Int index_in_saturation() const;

    Lattice sum(const Lattice& other) const;

  private:
    std::size_t ambient_;
    IntMat basis_;
};

// Row-style Hermite normal form of an arbitrary integer matrix; returns the
// canonical basis rows (zero rows dropped).
IntMat hermite_basis(const IntMat& generators);

// {x in Z^cols : M x = 0}, returned as a (saturated) lattice in Z^cols.
Lattice lattice_kernel(const IntMat& m);

}  // namespace sl2comod
