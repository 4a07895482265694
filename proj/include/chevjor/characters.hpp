// Characters of highest-weight modules in characteristic 0: Freudenthal's
// recursion for weight multiplicities, the Weyl dimension formula, and the
// scan for characters whose non-zero weights are all multiplicity one.
//
// Multiplicities are computed lazily and memoized per highest weight, so a
// scan can abandon a candidate as soon as one multiplicity-two weight shows
// up; that keeps the rank-8 scans cheap. Whenever a full table is produced,
// its orbit-weighted total is checked against the dimension formula, which
// independently guards the dominant-weight enumeration.
#pragma once

#include <map>
#include <vector>

#include "chevjor/root_system.hpp"

namespace chevjor {

// Character of a highest-weight module: multiplicities at dominant weights
// only; other weights resolve through dominant_representative.
struct WeightMultTable {
    const RootDatum* datum = nullptr;
    Weight highest;
    std::map<Weight, Int> entries; // dominant weight -> multiplicity
    Int total_dimension() const;
    Int mult(const Weight& w) const; // any weight
};

Int weyl_dimension(const RootDatum& datum, const Weight& lambda);

WeightMultTable freudenthal_multiplicities(const RootDatum& datum, const Weight& lambda);

// Incremental view of one character, exposing multiplicities on demand.
class CharacterSession {
public:
    CharacterSession(const RootDatum& datum, const Weight& lambda);

    const RootDatum& datum() const { return *datum_; }
    const Weight& highest() const { return lambda_; }

    // Multiplicity of an arbitrary weight (0 when outside the module).
    const Int& mult(const Weight& w);

    // All dominant weights of the module, highest first (by height of
    // lambda - mu). Enumeration is closed under subtracting positive roots;
    // completeness is certified by the dimension check in full_table().
    const std::vector<Weight>& dominant_weights();

    WeightMultTable full_table(); // dimension-checked

    // True when every non-zero weight has multiplicity one. Walks dominant
    // weights from the top and stops at the first multiplicity >= 2.
    bool multiplicity_free_nonzero();

private:
    bool in_module(const Weight& w, RootVec& diff_out) const;
    const Int& mult_dominant(const Weight& w);

    // Visits dominant weights of the module highest-first; the visitor
    // returns false to stop early. Both callers live in characters.cpp, so
    // the template body stays there too.
    template <typename Visit> void walk_dominant(Visit visit);

    const RootDatum* datum_;
    Weight lambda_;
    Rat lambda_norm_; // (lambda + rho, lambda + rho)
    std::map<Weight, Int> mults_;
    std::vector<Weight> dominant_;
    bool enumerated_ = false;
    Int zero_;
};

struct ScanEntry {
    Weight lambda;
    Int dimension;
};

// Dominant lambda = sum a_i omega_i with 0 <= a_i <= coefficient_bound,
// lambda != 0, whose non-zero weights are all of multiplicity one.
std::vector<ScanEntry> scan_multiplicity_free(const RootDatum& datum, long coefficient_bound);

} // namespace chevjor
