// Structure constants of a Chevalley basis: [e_a, e_b] = N(a,b) e_{a+b}
// whenever a, b, a+b are roots. Signs are pinned down the usual way: for
// each non-simple positive root g, the pair (a, g-a) with a first in root
// order gets a positive constant, and every other pair follows from the
// Jacobi identity. The magnitude of N(a,b) is always one more than the
// number of steps the a-string extends below b; the constructor checks
// this for every pair it fills in.
#pragma once

#include <utility>
#include <vector>

#include "chevjor/root_system.hpp"

namespace chevjor {

class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootDatum& datum);

    const RootDatum& datum() const { return *datum_; }

    // N(a,b) for signed roots in simple-root coordinates; 0 when a+b is
    // not a root. Both arguments must be roots.
    long n(const RootVec& a, const RootVec& b) const;

    // Largest k >= 0 with b - k*a still a root (a, b signed roots).
    long string_down(const RootVec& a, const RootVec& b) const;

    // For a non-simple positive root g (by index): the pair (a, d) of
    // positive-root indices with a + d = g, a minimal in root order.
    // N of this pair is positive by construction.
    std::pair<std::size_t, std::size_t> defining_pair(std::size_t gamma) const;

private:
    bool is_root(const RootVec& rc) const;
    long n_positive(std::size_t i, std::size_t j) const;

    const RootDatum* datum_;
    std::vector<std::vector<long>> table_; // positive pairs only
    std::vector<std::pair<long, long>> defining_; // -1 for simple roots
};

} // namespace chevjor
