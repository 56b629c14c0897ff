#pragma once

#include <stdexcept>
#include <string>

namespace bincert {

// Always-on consistency check for identities the library itself relies on
// (dual-route equalities, algebraic rewrites). A failure is a bug, never a
// property of the input, hence logic_error.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("internal consistency check failed: " + what);
}

}  // namespace bincert
