#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace rph {

// Shortest round-trip text for a double; infinities print as "inf".
inline std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

}  // namespace rph
