// The project's acceptance suite: ten numbered end-to-end checks covering
// the tensor-block lemma, the G_2 single-block scan, measured orders, the
// multiplicity-free locus of the exceptional types, cited dimensions, the
// parabolic level examples, the modular multiplicity criterion, the rank-1
// suite, bound arithmetic, and engine self-consistency. Each check returns
// one pass/fail line; details carry the first counterexample when a check
// fails and a short summary when it passes. Output is deterministic.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chevjor {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Run all ten checks. The cap bounds every module construction; checks
// that need a module above the cap report the affected inputs as skipped
// where their contract allows skipping, and fail otherwise.
std::vector<CriterionResult> run_acceptance(std::size_t cap);

// "criterion  3 [measured orders]: PASS - ..." (one line, no trailing \n).
std::string format_criterion(const CriterionResult& r);

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace chevjor
