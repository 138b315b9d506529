#pragma once

// Arithmetic over the index space of odd numbers: index k stands for the odd
// number N_k = 2k + 3, so 0 -> 3, 1 -> 5, 2 -> 7, ...
//
// Every function here is pure and uses checked 64-bit arithmetic; results
// that do not fit throw OverflowError instead of wrapping.

#include <compare>
#include <cstdint>

namespace oddidx {

class Index {
public:
    constexpr Index() = default;
    constexpr explicit Index(std::uint64_t k) : k_(k) {}

    constexpr std::uint64_t value() const { return k_; }

    friend constexpr auto operator<=>(Index, Index) = default;

private:
    std::uint64_t k_ = 0;
};

// The counting interval [0, upper] of index space whose top odd number is
// (2j+5)^2. It is the disjoint union of the unit intervals I_0 .. I_j.
struct IntervalD {
    std::uint64_t j = 0;
    Index upper;
    std::uint64_t size = 0;
};

// 2k + 3
std::uint64_t to_number(Index k);

// (N - 3) / 2; throws DomainError for even N or N < 3.
Index to_index(std::uint64_t n);

// k_j(n) = (2j+3)n + j, the index of (2j+3)(2n+1). n must be >= 1.
Index k_of(std::uint64_t j, std::uint64_t n);

// Index of the product of the odd numbers indexed by k and l:
// 2kl + 3(k + l + 1).
Index star(Index k, Index l);

// k_j(j+1) = 2j^2 + 6j + 3, the index of the odd square (2j+3)^2.
Index remarkable(std::uint64_t j);

// Size of the unit interval I_j: 12 for j = 0, 4j + 8 otherwise.
std::uint64_t unit(std::uint64_t j);

IntervalD interval_D(std::uint64_t j);

// (2j+5)^2, the top odd number of interval_D(j).
std::uint64_t top_square(std::uint64_t j);

} // namespace oddidx
