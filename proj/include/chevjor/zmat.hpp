// Dense matrices over Z with GMP entries. The construction code needs exact
// row reduction (Hermite form) with a recorded unimodular transform, plus
// lattice membership solves against an echelonized basis. Sizes stay modest
// (weight spaces of capped modules), so dense storage is fine.
//
// Same convention as fp.hpp: vectors are rows, operators multiply on the
// right.
#pragma once

#include <cstddef>
#include <vector>

#include "chevjor/fp.hpp"
#include "chevjor/numeric.hpp"

namespace chevjor {

class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ZMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const ZMat& o) const = default;

    ZMat mul(const ZMat& rhs) const;
    ZMat transpose() const;
    ZMat add(const ZMat& rhs) const;
    ZMat scale(const Int& c) const;
    bool is_zero() const;

    FpMat mod_p(long p) const;

    // Row Hermite normal form with transform: U * this = H, U unimodular.
    // Pivot entries positive, entries above each pivot reduced to [0, pivot),
    // entries below zero. pivots lists the pivot column of each nonzero row.
    struct HnfT;
    HnfT hnf_with_transform() const;

    // Hermite form without the transform. The transform's entries can grow
    // much larger than the reduced rows, so callers that only need H should
    // prefer this.
    struct Hnf;
    Hnf hnf() const;

    Int det() const; // square matrices, via fraction-free elimination

private:
    HnfT hnf_impl(bool want_transform) const;

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

struct ZMat::HnfT {
    ZMat h;
    ZMat transform;
    std::vector<std::size_t> pivots;
};

struct ZMat::Hnf {
    ZMat h;
    std::vector<std::size_t> pivots;
};

// Solve x * H = v over Z where H is a staircase matrix with pivot columns
// `pivots` (as produced by hnf_with_transform, restricted to its nonzero
// rows). Divisibility at every pivot and a zero residual are internal
// invariants: callers only pass vectors that lie in the row lattice.
std::vector<Int> solve_in_lattice(const ZMat& H, const std::vector<std::size_t>& pivots,
                                  const std::vector<Int>& v);

} // namespace chevjor
