// Error taxonomy shared by the library and the command-line driver.
// The driver maps each class to a distinct exit status, so library code
// should pick the class by what went wrong, not by where it happened:
//
//   precondition_error  caller passed something the contract forbids
//   cap_error           construction refused because it would exceed a size cap
//   internal_error      an invariant the library itself guarantees was violated
#pragma once

#include <stdexcept>
#include <string>

namespace chevjor {

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Internal consistency check. These guard exactness invariants (integrality,
// divisibility, rank agreement); a failure means the library is wrong, never
// the caller.
inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw precondition_error(what);
}

} // namespace chevjor
