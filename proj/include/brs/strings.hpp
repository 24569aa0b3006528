#pragma once

#include <cstdarg>
#include <cstdio>
#include <string>

namespace brs {

inline std::string strprintf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

inline std::string strprintf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list probe;
    va_copy(probe, args);
    const int n = std::vsnprintf(nullptr, 0, fmt, probe);
    va_end(probe);
    std::string out(n > 0 ? std::size_t(n) : 0, '\0');
    if (n > 0) std::vsnprintf(out.data(), std::size_t(n) + 1, fmt, args);
    va_end(args);
    return out;
}

}  // namespace brs
