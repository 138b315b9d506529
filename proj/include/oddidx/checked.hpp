#pragma once

#include <cstdint>

#include "oddidx/error.hpp"

namespace oddidx::checked {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, const char* what = "add")
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError(std::string(what) + ": 64-bit overflow");
    return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, const char* what = "mul")
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError(std::string(what) + ": 64-bit overflow");
    return r;
}

} // namespace oddidx::checked
