#pragma once

// Brute-force references for the unit tests. Nothing here touches the sieve
// or the library's formulas: trial division, direct enumeration, and exact
// rationals only.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline int mobius(std::uint64_t n)
{
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        n /= d;
        if (n % d == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

inline std::uint64_t pi(std::uint64_t x)
{
    std::uint64_t c = 0;
    for (std::uint64_t n = 2; n <= x; ++n)
        if (is_prime(n))
            ++c;
    return c;
}

// Odd primes 3 <= p <= limit.
inline std::vector<std::uint64_t> odd_primes_upto(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= limit; n += 2)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

// |B(j)|: odd composites in [5, (2j+5)^2] not divisible by 3.
inline std::uint64_t b_count(std::uint64_t j)
{
    const std::uint64_t x = (2 * j + 5) * (2 * j + 5);
    std::uint64_t c = 0;
    for (std::uint64_t n = 5; n <= x; n += 2)
        if (n % 3 != 0 && !is_prime(n))
            ++c;
    return c;
}

// Inclusion-exclusion over every bitmask K of the primes 3..2j+5, without
// pruning. literal: floor term clamped at 0; corrected: plus 1 for |K| >= 2
// when p_K <= x.
inline std::int64_t subsets_bruteforce(std::uint64_t j, bool corrected)
{
    const std::uint64_t x = (2 * j + 5) * (2 * j + 5);
    const auto primes = odd_primes_upto(2 * j + 5);
    std::int64_t total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        if (mask == 1)
            continue; // K = {0}
        unsigned __int128 p = 1;
        int size = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if ((mask >> i) & 1u) {
                p *= primes[i];
                ++size;
            }
        const std::int64_t sign = size % 2 == 1 ? 1 : -1;
        std::int64_t term = 0;
        if (p <= x) {
            term = static_cast<std::int64_t>((x - static_cast<std::uint64_t>(p)) / (2 * static_cast<std::uint64_t>(p)));
            if (corrected && size >= 2)
                term += 1;
        }
        total += sign * term;
    }
    return total;
}

// c_j as an exact rational, by full subset expansion.
inline Rational c_expansion_exact(std::uint64_t j)
{
    const auto primes = odd_primes_upto(2 * j + 5);
    Rational total = 0;
    for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        boost::multiprecision::cpp_int p = 1;
        int size = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if ((mask >> i) & 1u) {
                p *= primes[i];
                ++size;
            }
        total += Rational(size % 2 == 1 ? 1 : -1, p);
    }
    return total;
}

} // namespace oracle
