#pragma once

#include <stdexcept>
#include <string>

namespace hookbasis {

/// Thrown when a computation would exceed a configured size bound
/// (e.g. expanding a determinant for n above the cap). The CLI maps
/// this to exit code 2, distinct from a falsified check (exit 1).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resource-bound override from the environment. Returns 0 when
/// HOOKBASIS_MAX_N is unset or unparsable; call sites substitute a
/// positive value for their built-in default bound.
unsigned env_max_n();

inline unsigned effective_bound(unsigned default_bound) {
    unsigned e = env_max_n();
    return e > 0 ? e : default_bound;
}

} // namespace hookbasis
