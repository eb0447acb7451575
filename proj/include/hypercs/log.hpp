#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace hypercs {

// Diagnostic chatter is off by default; set HYPERCS_LOG=1 (or higher) to see
// warnings about truncation tails, slow contour convergence, etc.
inline int log_level() {
    static const int level = [] {
        const char* env = std::getenv("HYPERCS_LOG");
        return env ? std::atoi(env) : 0;
    }();
    return level;
}

inline void log_warn(const std::string& msg) {
    if (log_level() >= 1) std::fprintf(stderr, "[hypercs] %s\n", msg.c_str());
}

}  // namespace hypercs
