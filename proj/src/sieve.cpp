#include "oddidx/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oddidx/checked.hpp"
#include "oddidx/error.hpp"
#include "oddidx/parallel.hpp"

namespace oddidx {

namespace {

constexpr std::uint64_t kMuZero = 0;
constexpr std::uint64_t kMuPlus = 1;
constexpr std::uint64_t kMuMinus = 2;

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Odd primes up to limit, plain Eratosthenes over odd numbers.
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 3)
        return out;
    const std::uint64_t count = (limit - 3) / 2 + 1;
    std::vector<char> composite(count, 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        if (composite[k])
            continue;
        const std::uint64_t p = 2 * k + 3;
        out.push_back(p);
        for (std::uint64_t m = (p * p - 3) / 2; m < count; m += p)
            composite[m] = 1;
    }
    return out;
}

std::uint64_t round_segment(std::uint64_t s)
{
    if (s == 0)
        s = 64;
    return (s + 63) / 64 * 64;
}

std::uint64_t mu_code(int v)
{
    return v > 0 ? kMuPlus : (v < 0 ? kMuMinus : kMuZero);
}

void rebuild_primes(std::uint64_t k_max, const std::vector<std::uint64_t>& in_w,
                    std::vector<std::uint64_t>& primes)
{
    primes.clear();
    for (std::uint64_t k = 0; k <= k_max; ++k)
        if (!((in_w[k >> 6] >> (k & 63)) & 1u))
            primes.push_back(k);
}

} // namespace

OddSieveTable OddSieveTable::from_packed(std::uint64_t k_max,
                                         std::vector<std::uint64_t> composite_words,
                                         std::vector<std::uint64_t> mu_words)
{
    if (composite_words.size() != composite_word_count(k_max) || mu_words.size() != mu_word_count(k_max))
        throw FormatError("packed sieve arrays do not match k_max " + std::to_string(k_max));
    for (std::uint64_t k = 0; k <= k_max; ++k)
        if (((mu_words[k >> 5] >> (2 * (k & 31))) & 3u) == 3u)
            throw FormatError("invalid mu code at index " + std::to_string(k));
    const std::uint64_t w_used = (k_max + 1) % 64;
    const std::uint64_t mu_used = (k_max + 1) % 32;
    if ((w_used != 0 && (composite_words.back() >> w_used) != 0) ||
        (mu_used != 0 && (mu_words.back() >> (2 * mu_used)) != 0))
        throw FormatError("packed sieve arrays carry bits beyond k_max");
    OddSieveTable t;
    t.k_max_ = k_max;
    t.in_w_ = std::move(composite_words);
    t.mu_ = std::move(mu_words);
    rebuild_primes(k_max, t.in_w_, t.primes_);
    return t;
}

bool OddSieveTable::is_composite_index(Index k) const
{
    if (!covers_index(k.value()))
        throw RangeError("index " + std::to_string(k.value()) + " beyond table k_max " + std::to_string(k_max_));
    return composite(k.value());
}

int OddSieveTable::mu_odd(Index k) const
{
    if (!covers_index(k.value()))
        throw RangeError("index " + std::to_string(k.value()) + " beyond table k_max " + std::to_string(k_max_));
    return mu(k.value());
}

std::uint64_t OddSieveTable::pi_count(std::uint64_t x) const
{
    if (x < 2)
        return 0;
    if (x == 2)
        return 1;
    if (!covers_number(x) && x != max_number() + 1)
        throw RangeError("pi(" + std::to_string(x) + ") beyond table limit " + std::to_string(max_number()));
    const std::uint64_t k = (x - 3) / 2;
    return 1 + static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), k) - primes_.begin());
}

std::uint64_t k_max_for_number(std::uint64_t n)
{
    return n <= 3 ? 0 : (n - 3) / 2;
}

std::uint64_t estimate_memory(std::uint64_t k_max, const SieveOptions& options)
{
    const std::uint64_t words = composite_word_count(k_max) * 8 + mu_word_count(k_max) * 8;
    const double n = static_cast<double>(k_max) * 2 + 3;
    // pi(x) < 1.26 x / ln x for x > 1
    const auto prime_bytes = static_cast<std::uint64_t>(8 * 1.26 * n / std::log(std::max(n, 3.0)));
    const std::uint64_t seg = std::min(round_segment(options.segment_size), k_max + 1);
    const std::uint64_t scratch = seg * (8 + 1 + 1) * std::max(1u, options.threads);
    return words + prime_bytes + scratch;
}

OddSieveTable build(std::uint64_t k_max, const SieveOptions& options)
{
    const std::uint64_t max_n = to_number(Index{k_max});
    const std::uint64_t need = estimate_memory(k_max, options);
    if (need > options.memory_budget)
        throw ResourceError("sieve for k_max " + std::to_string(k_max) + " needs ~" + std::to_string(need) +
                            " bytes, budget is " + std::to_string(options.memory_budget));

    const std::vector<std::uint64_t> base = small_odd_primes(isqrt(max_n));
    const std::uint64_t seg = round_segment(options.segment_size);
    const std::uint64_t total = k_max + 1;
    const std::size_t segments = static_cast<std::size_t>((total + seg - 1) / seg);

    OddSieveTable t;
    t.k_max_ = k_max;
    t.in_w_.assign(composite_word_count(k_max), 0);
    t.mu_.assign(mu_word_count(k_max), 0);
    std::vector<std::vector<std::uint64_t>> seg_primes(segments);

    parallel_for(segments, options.threads, [&](std::size_t s) {
        const std::uint64_t lo = s * seg;
        const std::uint64_t hi = std::min(total, lo + seg);
        const std::size_t len = static_cast<std::size_t>(hi - lo);
        const std::uint64_t n_lo = 2 * lo + 3;
        const std::uint64_t n_hi = 2 * (hi - 1) + 3;

        // product of the distinct small primes found, their count, and the
        // square-factor flag
        std::vector<std::uint64_t> prod(len, 1);
        std::vector<std::uint8_t> omega(len, 0);
        std::vector<std::uint8_t> square(len, 0);

        for (const std::uint64_t p : base) {
            if (p > n_hi)
                break;
            std::uint64_t first = (n_lo + p - 1) / p * p;
            if (first % 2 == 0)
                first += p;
            for (std::uint64_t k = (first - 3) / 2 - lo; k < len; k += p) {
                prod[k] *= p;
                ++omega[k];
            }
            const std::uint64_t pp = p * p;
            if (pp > n_hi)
                continue;
            std::uint64_t first_sq = (n_lo + pp - 1) / pp * pp;
            if (first_sq % 2 == 0)
                first_sq += pp;
            for (std::uint64_t k = (first_sq - 3) / 2 - lo; k < len; k += pp)
                square[k] = 1;
        }

        auto& primes = seg_primes[s];
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint64_t k = lo + i;
            const std::uint64_t n = 2 * k + 3;
            const unsigned factors = omega[i] + (prod[i] != n ? 1u : 0u);
            const bool is_composite = square[i] || factors >= 2;
            int mu = 0;
            if (!square[i])
                mu = (factors % 2 == 0) ? 1 : -1;
            if (is_composite)
                t.in_w_[k >> 6] |= std::uint64_t{1} << (k & 63);
            else
                primes.push_back(k);
            t.mu_[k >> 5] |= mu_code(mu) << (2 * (k & 31));
        }
    });

    std::size_t count = 0;
    for (const auto& v : seg_primes)
        count += v.size();
    t.primes_.reserve(count);
    for (const auto& v : seg_primes)
        t.primes_.insert(t.primes_.end(), v.begin(), v.end());
    return t;
}

std::vector<std::uint64_t> build_w_by_enumeration(std::uint64_t k_max)
{
    std::vector<std::uint64_t> bits(composite_word_count(k_max), 0);
    for (std::uint64_t j = 0;; ++j) {
        const Index first = k_of(j, 1);
        if (first.value() > k_max)
            break;
        const std::uint64_t step = 2 * j + 3;
        for (std::uint64_t k = first.value(); k <= k_max; k += step)
            bits[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
    return bits;
}

} // namespace oddidx
