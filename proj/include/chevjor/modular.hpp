// Passage from the integral module to characteristic p. Root operators for
// arbitrary roots come from the integral form: a non-simple root vector is
// a commutator of lower ones divided by its structure constant, divided
// powers are exact integer divisions of matrix powers, and one-parameter
// elements x_beta(t) are the resulting finite exponential sums. The
// irreducible head is the quotient of the mod-p reduction by the radical
// of the contravariant form, computed weight space by weight space; all
// operators are checked to preserve the radical before transporting.
#pragma once

#include "chevjor/characters.hpp"
#include "chevjor/weyl_module.hpp"

namespace chevjor {

// e_beta^(k) (beta positive) or f_{-beta}^(k) (beta negative) on the
// integral module, as one dense matrix in the global basis. Throws
// internal_error if an exact division fails, which would mean the lattice
// is not stable under the operator.
ZMat integral_root_power(const IntegralRep& rep, const RootVec& beta, long k);

// x_beta(t) = sum_k t^k e_beta^(k) over the integers.
ZMat integral_root_element(const IntegralRep& rep, const RootVec& beta, const Int& t);

// A representation over GF(p) with its full stock of root operators:
// divided powers e_beta^(k) (plus_ops) and f_beta^(k) (minus_ops) for each
// positive root index, keyed by k. Absent keys are zero. Produced by
// reduction of an integral module, with or without the radical quotient,
// and closed under Frobenius twists and tensor products.
struct ModularModule {
    const RootDatum* datum = nullptr;
    long p = 2;
    Weight highest;
    std::size_t dim = 0;
    std::vector<Weight> basis_weights;
    std::vector<std::map<long, FpMat>> plus_ops, minus_ops;
};

// Quotient of the mod-p reduction by the radical of the contravariant
// form: the irreducible module of the same highest weight.
ModularModule irreducible_head_mod_p(const IntegralRep& rep, long p);

// Plain mod-p reduction, no quotient (the Weyl module over GF(p)).
ModularModule reduce_mod_p(const IntegralRep& rep, long p);

// Weight multiplicities of the irreducible head, from per-weight Gram
// ranks alone. Usable far above the scale where operator matrices are
// practical.
WeightMultTable head_multiplicities(const IntegralRep& rep, long p);

// x_beta(t) on a modular module.
FpMat root_element(const ModularModule& mod, const RootVec& beta, long t);

// Same space, weights multiplied by p; x_beta(t) acts as the untwisted
// x_beta(t^p).
ModularModule frobenius_twist(const ModularModule& mod);

// Tensor product of twisted restricted factors; highest weight is the sum
// sum p^{twist_i} lambda_i, operators act through comultiplication.
ModularModule steinberg_product(const std::vector<ModularModule>& factors,
                                const std::vector<int>& twists);

// Dimension of the joint kernel of every stored divided-power operator:
// the maximal trivial submodule.
std::size_t trivial_fixed_space(const ModularModule& mod);

// Multiplicity table read off the basis weights.
WeightMultTable modular_weight_multiplicities(const ModularModule& mod);

} // namespace chevjor
