// G_2 unipotent elements given as words in one-parameter root elements:
// the stock class representatives, their Jordan types on constructed
// modules, measured matrix orders, and the scan that compares
// single-block verdicts against the rank-2 regular prediction.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chevjor/jordan.hpp"
#include "chevjor/modular.hpp"

namespace chevjor {

// A unipotent element written as prod_i x_{beta_i}(t_i), evaluated left to
// right. Roots are in simple-root coordinates and may be negative; scalars
// are read mod p.
struct UnipotentRepresentative {
    std::string label = "custom"; // regular | G2a1 | A1_3 | custom
    std::vector<std::pair<RootVec, long>> word;
    long p = 2;
};

// The stock G_2 representatives:
//   regular  x_{-a1}(1) x_{-a2}(1)        any prime
//   G2a1     x_{a2}(1) x_{3a1+a2}(1)      p = 2 only
//   A1_3     x_{2a1+a2}(1) x_{3a1+2a2}(1) p = 3 only
// Custom words are assembled directly; asking for "custom" here is an
// error, as is an inadmissible (label, p) pair.
UnipotentRepresentative g2_class_representative(const std::string& label, long p);

// The word evaluated on a module: the product of the root element matrices
// in word order. Requires mod.p == rep.p and every word root to be a root
// of the module's datum.
FpMat unipotent_matrix(const UnipotentRepresentative& rep, const ModularModule& mod);

// Jordan type of the evaluated word (checks unipotence).
JordanType jordan_on_rep(const UnipotentRepresentative& rep, const ModularModule& mod);

// Measured multiplicative order of a unipotent matrix: the smallest power
// p^j with m^(p^j) = Id, found by repeated p-th powers. Independent of the
// Jordan machinery, so the two can be checked against each other.
long matrix_order(const FpMat& m);

// One row of the single-block scan. A row is either evaluated (skip_reason
// empty, dim and verdicts filled) or skipped (skip_reason one of
// "needs-p=2", "needs-p=3", "over-cap"; nothing else filled).
//   single_block  exactly one Jordan block of size > 1
//   predicted     label is regular and 2 <= dim <= 7
//   agree         single_block == predicted
struct Mth1Row {
    long p = 2;
    Weight lambda;
    long dim = 0;
    std::string label;
    JordanType jordan;
    bool single_block = false;
    bool predicted = false;
    bool agree = false;
    std::string skip_reason;
};

// Evaluate every admissible representative on the irreducible heads of the
// listed highest weights over each prime. Weights whose characteristic-0
// construction would exceed the cap are skipped with "over-cap"; labels
// must be stock labels. Rows come out ordered by (prime, weight, label
// position in the input list).
std::vector<Mth1Row> mth1_scan(const std::vector<long>& primes,
                               const std::vector<Weight>& weights,
                               const std::vector<std::string>& labels,
                               std::size_t cap);

// Stable one-line rendering of a row, e.g.
//   p=3 weight=1,0 dim=7 class=regular jordan=7 single=1 predicted=1 agree=1
//   p=5 weight=1,0 class=G2a1 skip=needs-p=2
std::string format_mth1_row(const Mth1Row& row);

} // namespace chevjor
