// Construction of highest weight modules with explicit matrices, working
// entirely in exact arithmetic. Two instantiations of one recursion:
//
//   * over Z: the Weyl module (the admissible lattice spanned by applying
//     divided powers of the simple lowering operators to a highest weight
//     vector), with the contravariant form on every weight space;
//   * over GF(p): the same recursion with p-modular row reduction, which
//     quotients by the radical of the form weight by weight and therefore
//     delivers the simple module directly.
//
// The recursion processes weights from the top. At each new weight the
// spanning set is { f_i^(k) b : b a basis vector k levels up along alpha_i };
// their pairwise contravariant products are computable from data of the
// weights already done, using the sl2 commutation rule for divided powers
//   e^(a) f^(b) = sum_j f^(b-j) C(h - a - b + 2j, j) e^(a-j),
// in which the binomial evaluates on a weight vector to C(m + a - b, j)
// with m the weight's pairing against the coroot. Row-reducing the product
// matrix picks a lattice (resp. vector space) basis, and the same
// commutation rule propagates the lowering and raising matrices.
//
// Everything downstream (Jordan structure, modular heads, restriction
// reports) consumes the block data defined here.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chevjor/characters.hpp"
#include "chevjor/zmat.hpp"

namespace chevjor {

// Family member key: (simple root index, divided power).
using PowerKey = std::pair<int, long>;

template <typename MatT>
struct ModuleRep {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const RootDatum* datum = nullptr;
    Weight highest;
    long prime = 0; // 0 for the integral form

    // Weight blocks in construction order (height below the highest weight,
    // then lexicographic). Block b covers global coordinates
    // [offsets[b], offsets[b] + dims[b]). Blocks may have dimension zero in
    // the modular case.
    std::vector<Weight> weights;
    std::map<Weight, std::size_t> windex;
    std::vector<std::size_t> dims, offsets;
    std::size_t total = 0;

    // Contravariant pairings of the chosen basis, per block.
    std::vector<MatT> gram;

    // lower[b][(i,k)]: matrix of f_i^(k) from block b to the block of
    // weight w_b - k alpha_i; raise[b][(i,k)]: e_i^(k) from block b to the
    // block of w_b + k alpha_i. Rows index the source basis. Absent entries
    // are zero maps.
    std::vector<std::map<PowerKey, MatT>> lower, raise;

    std::size_t block_of(const Weight& w) const {
        auto it = windex.find(w);
        return it == windex.end() ? npos : it->second;
    }

    // Global matrices acting on row vectors of length `total`.
    MatT lower_global(int i, long k) const;
    MatT raise_global(int i, long k) const;

    // Largest power with a nonzero block in either family of root i.
    long power_bound(int i) const;

    // Weight of each global coordinate, block by block.
    std::vector<Weight> coordinate_weights() const;

    // Multiplicity of a weight in this module (0 when absent).
    std::size_t weight_dim(const Weight& w) const {
        std::size_t b = block_of(w);
        return b == npos ? 0 : dims[b];
    }
};

using IntegralRep = ModuleRep<ZMat>;
using FpRep = ModuleRep<FpMat>;

// Weyl module over Z. Refuses with cap_error when the dimension given by
// the Weyl formula exceeds dimension_cap.
IntegralRep construct_weyl_module(const RootDatum& datum, const Weight& lambda,
                                  std::size_t dimension_cap);

// Simple module over GF(p), built by the same recursion with modular row
// reduction. The cap applies to the Weyl module dimension that bounds it.
FpRep construct_simple_fp(const RootDatum& datum, const Weight& lambda, long p,
                          std::size_t dimension_cap);

} // namespace chevjor
