#pragma once

#include <cstdlib>

namespace hypflute {

// Default tolerance for geometric predicates and verification checks.
// Overridable through the HYPFLUTE_TOL environment variable; read once.
inline double default_tol() {
    static const double tol = [] {
        if (const char* s = std::getenv("HYPFLUTE_TOL")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && v > 0.0) return v;
        }
        return 1e-9;
    }();
    return tol;
}

} // namespace hypflute
