// The rank-1 laboratory: modules for A_1 over GF(p) with their standard
// unipotent, the base-p digit calculus that governs length-2 extensions,
// restriction shapes for an element of order p, and the classification
// predicate for composition data compatible with a single non-trivial
// Jordan block.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "chevjor/jordan.hpp"
#include "chevjor/modular.hpp"

namespace chevjor {

// Shared rank-1 root datum every laboratory module is built over (the
// modular layer compares datum pointers when tensoring factors).
const RootDatum& a1_datum();

// Base-p digits of a non-negative integer, least significant first,
// trailing zeros trimmed (so 0 has no digits).
struct DigitVector {
    long p = 2;
    std::vector<long> digits;
};

DigitVector digits_of(long a, long p);
long digit_value(const DigitVector& d);

// Largest r such that p^r divides n. Needs n >= 1.
long valuation(long n, long p);

enum class SL2Kind { weyl, irreducible };

// The module of highest weight a*omega_1 over GF(p): either the full
// reduced Weyl module, or the irreducible head assembled as a twisted
// tensor product over the base-p digits of a. The standard unipotent is
// root_element(mod, {1}, 1); the cap bounds the result dimension.
ModularModule sl2_module(long a, long p, SL2Kind kind, std::size_t dimension_cap);

// Digit test for the existence of a non-split length-2 module with
// irreducible factors of highest weights a*omega_1, b*omega_1: true iff
// for one of the two orderings (x, y) of (a, b) there is some
// k >= valuation(x+1, p) with x_i = y_i away from positions {k, k+1},
// x_k = p - y_k - 2, and x_{k+1} = y_{k+1} +- 1. False means any module
// with these two factors splits. Both orderings are tried because either
// factor may sit on top.
bool ext_digit_test(long a, long b, long p);

// Composition data of M/M_0 for an A_1 module M with maximal trivial
// submodule M_0: factor highest weights (descending) and dim M_0.
struct CompositionData {
    long p = 2;
    std::vector<long> factor_weights;
    long trivial_dim = 0;
};

// Dimensions of the factors by the digit product formula.
std::vector<long> factor_dims(const CompositionData& c);

// Which arm of the single-block classification the data can sit in:
// case_a when at most one factor is non-trivial; case_b when p > 2 and
// exactly two non-trivial factors with total factor dimension p+1 or
// p+2 pass the digit test, the larger weight being at least p;
// impossible otherwise.
enum class Bb1Case { case_a, case_b, impossible };
Bb1Case bb1_classify(const CompositionData& c);

// Restriction shape of a Jordan type against an element of order p.
// shape_ok: the blocks are m copies of p, at most one residual block d
// with 1 < d < p, and any number of trivial blocks (the shape forced on
// an indecomposable module for a group with a cyclic Sylow p-subgroup
// of order p and abelian normalizer quotient). single_ok additionally
// demands m <= 1, with d <= 1 when m = 1, as forced when the ambient
// module carries a single non-trivial block. d reports the residual
// block, falling back to one trivial block when no middle block exists
// and 0 when there is nothing but full blocks.
struct ShapeReport {
    bool shape_ok = false;
    bool single_ok = false;
    long m = 0;
    long d = 0;
};
ShapeReport restriction_shape_check(const JordanType& t, long p);

// Character of the irreducible of highest weight a*omega_1 over GF(p):
// weight -> multiplicity, assembled by convolving the scaled digit
// strings of the twisted tensor factorization.
std::map<long, long> a1_irreducible_character(long a, long p);

// Multiset of composition factor highest weights of the Weyl module of
// highest weight a*omega_1 over GF(p), descending, found by greedily
// peeling irreducible characters (digit products) off the Weyl
// character.
std::vector<long> a1_composition_factors(long a, long p);

// One row of the laboratory grid scan.
struct SL2ScanRow {
    long p = 2;
    long a = 0;
    SL2Kind kind = SL2Kind::weyl;
    std::size_t dim = 0;
    JordanType jordan;
    bool shape_ok = false;
    std::vector<long> factors;
};

// Scan a = 0..amax for fixed p and kind: dimension, Jordan type of the
// standard unipotent, shape verdict, composition factors.
std::vector<SL2ScanRow> sl2_scan(long p, long amax, SL2Kind kind,
                                 std::size_t dimension_cap);

} // namespace chevjor
