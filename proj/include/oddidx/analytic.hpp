#pragma once

// Real-valued sequences built on the counts: the exact composite proportion
// p_j and its three approximations (Hadamard a_j, Euler e_j, Moebius m_j),
// the Euler-product coefficient c_j, and the odd/full Moebius partial sums
// T_N and S_N. Long sums use CompensatedSum.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddidx/sieve.hpp"

namespace oddidx {

enum class CoeffVariant { product, expansion };

// The explicit alternating subset expansion of c_j is only an oracle.
inline constexpr std::uint64_t kMaxExpansionPrimeSubscript = 20;

struct ApproxRow {
    std::uint64_t j = 0;
    std::uint64_t x = 0; // (2j+5)^2
    double p = 0.0;
    std::optional<double> a; // undefined for j < 2
    double e = 0.0;
    double m = 0.0;
};

struct PartialSums {
    std::uint64_t n = 0;
    double t = 0.0; // sum_{i<n} mu(2i+1)/(2i+1)
    double s = 0.0; // sum_{i<=n} mu(i)/i
};

// mu(n) for any n >= 1, reading odd values from the table and reducing even
// arguments by mu(2m) = -mu(m) for odd m, mu(4m) = 0.
int mobius(const OddSieveTable& table, std::uint64_t n);

// 1 - 3 / (2 ln j); DomainError for j < 2.
double hadamard_a(std::uint64_t j);

// 1 - prod over primes 5 <= p <= 2j+5 of (1 - 1/p).
double euler_e(std::uint64_t j, const OddSieveTable& table);

// c_j, either as (2/3) e_j or as the alternating sum of 1/p_K over
// K ⊆ [0, pi''(j)], K != {}, K != {0} (expansion needs pi''(j) <= 20).
double c_coeff(std::uint64_t j, const OddSieveTable& table, CoeffVariant variant);

// (3/2) sum_{k=1}^{k_{j+1}(j+2)} -mu(2k+3)/(2k+3)
double mobius_m(std::uint64_t j, const OddSieveTable& table);

// |B(j)| / |A(j)| from the sieve.
double exact_p(std::uint64_t j, const OddSieveTable& table);

PartialSums partial_sums(std::uint64_t n, const OddSieveTable& table);

// (4/3) j^2 - 2 j^2 / ln j; DomainError for j < 2.
double b_asym(std::uint64_t j);

// One row per j (ascending). Rows may be computed on several threads; the
// result does not depend on the thread count.
std::vector<ApproxRow> series_table(std::span<const std::uint64_t> j_values, const OddSieveTable& table,
                                    unsigned threads = 1);

} // namespace oddidx
