#pragma once

// Shared helpers for the doctest binaries: f128 -> double shortcuts,
// closeness macros that print the offending values, and exception-message
// capture for asserting on error texts without exact-string brittleness.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

#include "doctest.h"
#include "mertens/f128.hpp"

namespace tu {

inline double d(mertens::f128 v) { return mertens::to_double_checked(v); }

// Runs fn, returns the what() of whatever std::exception it throws, or ""
// if it returns normally.
inline std::string thrown(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& ex) {
        return ex.what();
    }
    return std::string();
}

inline bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Zeros table location: the ctest environment points at the shipped file,
// with the source-tree copy as fallback for bare runs.
inline std::string zeros_path() {
    if (const char* env = std::getenv("MERTENS_ZEROS_PATH")) return env;
    return std::string(MERTENS_SOURCE_DIR) + "/data/zeros2750.txt";
}

}  // namespace tu

#define CHECK_NEAR(expr, ref, tol)                                          \
    do {                                                                    \
        const double got_ = tu::d(expr);                                    \
        INFO(#expr " = ", got_, ", want ", (ref), " +- ", (tol));           \
        CHECK(std::fabs(got_ - (ref)) <= (tol));                            \
    } while (0)

#define CHECK_REL(expr, ref, rtol)                                          \
    do {                                                                    \
        const double got_ = tu::d(expr);                                    \
        INFO(#expr " = ", got_, ", want ", (ref), " rel ", (rtol));         \
        CHECK(std::fabs(got_ - (ref)) <= (rtol) * std::fabs(ref));          \
    } while (0)
