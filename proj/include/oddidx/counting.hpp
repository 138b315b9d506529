#pragma once

// Sizes of A(j) (indices in [0, k_{j+1}(j+2)] not divisible by 3) and of
// B(j) = A(j) ∩ W, by every available route.
//
// The inclusion-exclusion formulas come in two readings. "literal" counts
// W_{q_K} ∩ I_D(j) with multipliers m >= 3 only, exactly as printed; for
// |K| >= 2 this drops the product p_K itself, which does lie in every W_{q_k}.
// "corrected" adds that m = 1 term back and agrees with the sieve. Both are
// always available; nothing here substitutes one for the other.

#include <cstdint>
#include <optional>

#include "oddidx/index_core.hpp"
#include "oddidx/sieve.hpp"

namespace oddidx {

enum class MobiusVariant { literal, corrected };
enum class SubsetVariant { literal, corrected, grouped };

// Subset enumeration is exponential in pi''(j); above this it is refused.
inline constexpr std::uint64_t kMaxSubsetPrimeSubscript = 24;

struct CountReport {
    std::uint64_t j = 0;
    std::uint64_t a_count = 0;
    std::uint64_t b_oracle = 0;
    std::int64_t b_mobius_literal = 0;
    std::int64_t b_mobius_corrected = 0;
    std::optional<std::int64_t> b_subsets_literal;
    std::optional<std::int64_t> b_subsets_corrected;
    std::optional<std::int64_t> b_subsets_grouped;
    std::uint64_t pi_prime = 0;
};

// floor(2/3 (k_{j+1}(j+2) + 1))
std::uint64_t count_A_closed(std::uint64_t j);

// Same count by walking [0, k_{j+1}(j+2)].
std::uint64_t count_A_enum(std::uint64_t j);

// |B(j)| read off the sieve; the reference for every other B route.
std::uint64_t count_B_sieve(std::uint64_t j, const OddSieveTable& table);

// pi((2j+5)^2) - 2
std::uint64_t pi_prime(std::uint64_t j, const OddSieveTable& table);

// pi(2j+5) - 2: subscript of the largest prime p_n <= 2j+5 with p_0 = 3.
std::uint64_t pi_dprime(std::uint64_t j, const OddSieveTable& table);

// |W_k ∩ I_D(j)| = floor((k_{j+1}(j+2) - k) / (2k+3)). Requires k <= k_{j+1}(j+2).
std::uint64_t w_cap_count(Index k, std::uint64_t j);

// The same count written with the odd number n = 2k+3:
// floor(((2j+5)^2 - n) / (2n)).
std::uint64_t w_cap_count_by_number(std::uint64_t n, std::uint64_t j);

// Moebius floor-sum -sum_{k=1}^{k_{j+1}(j+2)} mu(2k+3) |W_k ∩ I_D(j)|,
// optionally corrected by -sum mu(2k+3) over composite squarefree 2k+3.
std::int64_t b_mobius(std::uint64_t j, const OddSieveTable& table, MobiusVariant variant);

// Inclusion-exclusion over K ⊆ [0, pi''(j)], K != {}, K != {0}, with terms
// (-1)^{|K|-1} max(0, floor(((2j+5)^2 - p_K) / (2 p_K))). grouped sums the
// same terms bucketed by |K|. Throws DomainError when pi''(j) > 24.
std::int64_t b_subsets(std::uint64_t j, const OddSieveTable& table, SubsetVariant variant);

// All routes for one j. Subset routes are filled only when pi''(j) <= 24.
// Throws InvariantError if the routes that must agree do not.
CountReport count_report(std::uint64_t j, const OddSieveTable& table);

} // namespace oddidx
