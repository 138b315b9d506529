#include "oddidx/index_core.hpp"

#include <string>

#include "oddidx/checked.hpp"
#include "oddidx/error.hpp"

namespace oddidx {

std::uint64_t to_number(Index k)
{
    return checked::add(checked::mul(2, k.value(), "to_number"), 3, "to_number");
}

Index to_index(std::uint64_t n)
{
    if (n < 3 || n % 2 == 0)
        throw DomainError("to_index: " + std::to_string(n) + " is not an odd number >= 3");
    return Index{(n - 3) / 2};
}

Index k_of(std::uint64_t j, std::uint64_t n)
{
    if (n == 0)
        throw DomainError("k_of: n must be positive");
    const std::uint64_t base = checked::add(checked::mul(2, j, "k_of"), 3, "k_of");
    return Index{checked::add(checked::mul(base, n, "k_of"), j, "k_of")};
}

Index star(Index k, Index l)
{
    const std::uint64_t kl2 = checked::mul(2, checked::mul(k.value(), l.value(), "star"), "star");
    const std::uint64_t sum = checked::add(checked::add(k.value(), l.value(), "star"), 1, "star");
    return Index{checked::add(kl2, checked::mul(3, sum, "star"), "star")};
}

Index remarkable(std::uint64_t j)
{
    return k_of(j, checked::add(j, 1, "remarkable"));
}

std::uint64_t unit(std::uint64_t j)
{
    return j == 0 ? 12 : checked::add(checked::mul(4, j, "unit"), 8, "unit");
}

IntervalD interval_D(std::uint64_t j)
{
    const Index upper = k_of(checked::add(j, 1, "interval_D"), checked::add(j, 2, "interval_D"));
    return IntervalD{j, upper, checked::add(upper.value(), 1, "interval_D")};
}

std::uint64_t top_square(std::uint64_t j)
{
    const std::uint64_t side = checked::add(checked::mul(2, j, "top_square"), 5, "top_square");
    return checked::mul(side, side, "top_square");
}

} // namespace oddidx
