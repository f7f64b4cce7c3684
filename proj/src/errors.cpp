#include "hookbasis/errors.hpp"

#include <cstdlib>

namespace hookbasis {

unsigned env_max_n() {
    const char* raw = std::getenv("HOOKBASIS_MAX_N");
    if (raw == nullptr) return 0;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0 || v > 20) return 0;
    return static_cast<unsigned>(v);
}

} // namespace hookbasis
