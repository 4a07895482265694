// Jordan normal form machinery for unipotent matrices over prime fields.
//
// Block sizes are always recovered from the ranks of powers of u - Id (the
// number of blocks of size >= k is rank((u-Id)^{k-1}) - rank((u-Id)^k)),
// never from eigenvector chains: the rank route is basis-free and has no
// special cases. Tensor decompositions are computed by brute force on an
// explicit Kronecker product, with no closed-form shortcuts, so they can
// serve as an independent check of hand calculations.
#pragma once

#include <string>
#include <vector>

#include "chevjor/fp.hpp"
#include "chevjor/numeric.hpp"

namespace chevjor {

// Multiset of Jordan block sizes, kept sorted descending. total is the
// ambient dimension (the sum of the sizes).
struct JordanType {
    std::vector<long> blocks;
    long total = 0;

    bool operator==(const JordanType& o) const = default;
};

// Normalize a list of block sizes into a JordanType (sorts descending,
// computes the total). Rejects non-positive sizes.
JordanType make_jordan(std::vector<long> blocks);

// Block sizes as a compact comma-joined string, e.g. "4,2,1". The empty
// type (dimension 0) prints as "-".
std::string format_jordan(const JordanType& t);

// Jordan type of a unipotent square matrix. Rejects non-unipotent input:
// u - Id must be nilpotent, which is checked by raising it to the matrix
// dimension.
JordanType jordan_type(const FpMat& u);

// Jordan type of J_m (x) J_n over GF(p), by explicit Kronecker product.
JordanType tensor_jordan(long m, long n, long p);

// True iff at most one block has size > 1.
bool single_nontrivial_block(const JordanType& t);

// Multiplicative order of any unipotent matrix with this Jordan type over
// GF(p): the smallest power of p that is >= the largest block size.
long unipotent_order(const JordanType& t, long p);

// Inputs for the dimension bound on a module where the unipotent element u
// satisfies |u^{p^k}| = p: p and k describe the order of u, l is the rank
// of the ambient group (an exceptional rank, 2/4/6/7/8).
struct BoundInputs {
    long p = 2;
    long k = 0;
    long l = 2;
    bool f4_p2_flag = false;
};

// The bound itself: (p-1) * p^k * (l+3), except 2^{k+3} in the special
// F4, p = 2 situation signalled by the flag.
Int dimension_bound(const BoundInputs& b);

} // namespace chevjor
