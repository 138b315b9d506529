#pragma once

// Immutable tables over index space [0, k_max]: which indices belong to W
// (2k+3 composite), the Moebius value mu(2k+3), and the ascending list of
// prime indices. Everything else in the library checks against these.

#include <cstdint>
#include <span>
#include <vector>

#include "oddidx/index_core.hpp"

namespace oddidx {

struct SieveOptions {
    // Indices per segment; rounded up to a multiple of 64.
    std::uint64_t segment_size = std::uint64_t{1} << 22;
    unsigned threads = 1;
    std::uint64_t memory_budget = std::uint64_t{4} << 30;
};

class OddSieveTable {
public:
    OddSieveTable() = default;

    // Wraps already-packed arrays (used by the cache loader). The prime list
    // is rebuilt from the composite bits. Throws FormatError on size mismatch.
    static OddSieveTable from_packed(std::uint64_t k_max,
                                     std::vector<std::uint64_t> composite_words,
                                     std::vector<std::uint64_t> mu_words);

    std::uint64_t k_max() const { return k_max_; }
    // Largest odd number covered: 2 k_max + 3.
    std::uint64_t max_number() const { return 2 * k_max_ + 3; }
    bool covers_index(std::uint64_t k) const { return k <= k_max_; }
    bool covers_number(std::uint64_t n) const { return n <= max_number(); }

    // Range-checked queries; throw RangeError when k > k_max.
    bool is_composite_index(Index k) const;
    int mu_odd(Index k) const;

    // Number of primes (2 included) not exceeding x.
    std::uint64_t pi_count(std::uint64_t x) const;

    // Unchecked accessors for hot loops.
    bool composite(std::uint64_t k) const { return (in_w_[k >> 6] >> (k & 63)) & 1u; }
    int mu(std::uint64_t k) const
    {
        const unsigned code = (mu_[k >> 5] >> (2 * (k & 31))) & 3u;
        return code == 1 ? 1 : (code == 2 ? -1 : 0);
    }

    std::span<const std::uint64_t> prime_indices() const { return primes_; }
    std::span<const std::uint64_t> composite_words() const { return in_w_; }
    std::span<const std::uint64_t> mu_words() const { return mu_; }

    friend bool operator==(const OddSieveTable&, const OddSieveTable&) = default;

private:
    friend OddSieveTable build(std::uint64_t k_max, const SieveOptions& options);

    std::uint64_t k_max_ = 0;
    std::vector<std::uint64_t> in_w_;
    std::vector<std::uint64_t> mu_;
    std::vector<std::uint64_t> primes_;
};

// Segmented smallest-prime-factor style sieve over odd numbers 3 .. 2k_max+3.
// Segments may run on several threads; output does not depend on the count.
OddSieveTable build(std::uint64_t k_max, const SieveOptions& options = {});

// Second, independent construction of the W bits: marks k_of(j, n) for every
// j and n >= 1 inside [0, k_max]. Same word layout as composite_words().
std::vector<std::uint64_t> build_w_by_enumeration(std::uint64_t k_max);

// Bytes build() will hold at peak for the given bound.
std::uint64_t estimate_memory(std::uint64_t k_max, const SieveOptions& options = {});

// Smallest table that covers every odd number up to n (n >= 3).
std::uint64_t k_max_for_number(std::uint64_t n);

inline std::size_t composite_word_count(std::uint64_t k_max) { return static_cast<std::size_t>(k_max / 64 + 1); }
inline std::size_t mu_word_count(std::uint64_t k_max) { return static_cast<std::size_t>(k_max / 32 + 1); }

} // namespace oddidx
