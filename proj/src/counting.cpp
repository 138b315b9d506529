#include "oddidx/counting.hpp"

#include <array>
#include <bit>
#include <string>
#include <vector>

#include "oddidx/checked.hpp"
#include "oddidx/error.hpp"

namespace oddidx {

namespace {

void require_index(const OddSieveTable& table, std::uint64_t k, const char* op)
{
    if (!table.covers_index(k))
        throw RangeError(std::string(op) + ": table k_max " + std::to_string(table.k_max()) +
                         " does not reach index " + std::to_string(k));
}

void require_number(const OddSieveTable& table, std::uint64_t n, const char* op)
{
    if (n > table.max_number() + 1)
        throw RangeError(std::string(op) + ": table limit " + std::to_string(table.max_number()) +
                         " does not reach " + std::to_string(n));
}

// Bits b of word w with (64w + b) mod 3 != 0; since 64 = 1 mod 3 the mask
// depends only on w mod 3.
constexpr std::array<std::uint64_t, 3> make_nonmultiple_masks()
{
    std::array<std::uint64_t, 3> masks{};
    for (unsigned r = 0; r < 3; ++r)
        for (unsigned b = 0; b < 64; ++b)
            if ((r + b) % 3 != 0)
                masks[r] |= std::uint64_t{1} << b;
    return masks;
}

constexpr auto kNonMultipleOf3 = make_nonmultiple_masks();

// Odd primes p_0 = 3, p_1 = 5, ... up to 2j+5.
std::vector<std::uint64_t> primes_through(std::uint64_t j, const OddSieveTable& table)
{
    const std::uint64_t count = pi_dprime(j, table) + 1;
    std::vector<std::uint64_t> out;
    out.reserve(count);
    const auto idx = table.prime_indices();
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(2 * idx[i] + 3);
    return out;
}

// Visits every nonempty K (as sorted subscripts) with p_K <= limit, in
// lexicographic order. Supersets of a K with p_K > limit are skipped: the
// primes are ascending, so they only grow.
template <typename Visit>
void for_each_bounded_subset(const std::vector<std::uint64_t>& primes, std::uint64_t limit, Visit&& visit)
{
    struct Frame {
        std::size_t start;
        std::uint64_t product;
        std::size_t size;
        bool has_zero;
    };
    auto dfs = [&](auto&& self, const Frame& f) -> void {
        for (std::size_t i = f.start; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (f.product > limit / p)
                break;
            const std::uint64_t next = f.product * p;
            const bool has_zero = f.has_zero || i == 0;
            visit(f.size + 1, next, has_zero && f.size == 0);
            self(self, Frame{i + 1, next, f.size + 1, has_zero});
        }
    };
    dfs(dfs, Frame{0, 1, 0, false});
}

} // namespace

std::uint64_t count_A_closed(std::uint64_t j)
{
    const IntervalD d = interval_D(j);
    return checked::mul(2, d.size, "count_A_closed") / 3;
}

std::uint64_t count_A_enum(std::uint64_t j)
{
    const std::uint64_t upper = interval_D(j).upper.value();
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k <= upper; ++k)
        if (k % 3 != 0)
            ++count;
    return count;
}

std::uint64_t count_B_sieve(std::uint64_t j, const OddSieveTable& table)
{
    const std::uint64_t upper = interval_D(j).upper.value();
    require_index(table, upper, "count_B_sieve");
    const auto words = table.composite_words();
    const std::uint64_t last = upper >> 6;
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < last; ++w)
        count += std::popcount(words[w] & kNonMultipleOf3[w % 3]);
    const unsigned tail_bits = static_cast<unsigned>(upper & 63) + 1;
    const std::uint64_t tail = tail_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;
    count += std::popcount(words[last] & kNonMultipleOf3[last % 3] & tail);
    return count;
}

std::uint64_t pi_prime(std::uint64_t j, const OddSieveTable& table)
{
    const std::uint64_t x = top_square(j);
    require_number(table, x, "pi_prime");
    return table.pi_count(x) - 2;
}

std::uint64_t pi_dprime(std::uint64_t j, const OddSieveTable& table)
{
    const std::uint64_t side = checked::add(checked::mul(2, j, "pi_dprime"), 5, "pi_dprime");
    require_number(table, side, "pi_dprime");
    return table.pi_count(side) - 2;
}

std::uint64_t w_cap_count(Index k, std::uint64_t j)
{
    const std::uint64_t upper = interval_D(j).upper.value();
    if (k.value() > upper)
        throw RangeError("w_cap_count: index " + std::to_string(k.value()) + " exceeds k_{j+1}(j+2) = " +
                         std::to_string(upper));
    return (upper - k.value()) / to_number(k);
}

std::uint64_t w_cap_count_by_number(std::uint64_t n, std::uint64_t j)
{
    const std::uint64_t x = top_square(j);
    if (n < 3 || n % 2 == 0 || n > x)
        throw RangeError("w_cap_count_by_number: " + std::to_string(n) + " is not an odd number in [3, (2j+5)^2]");
    return (x - n) / (2 * n);
}

std::int64_t b_mobius(std::uint64_t j, const OddSieveTable& table, MobiusVariant variant)
{
    const std::uint64_t upper = interval_D(j).upper.value();
    require_index(table, upper, "b_mobius");
    std::int64_t weighted = 0;
    std::int64_t composite_mu = 0;
    for (std::uint64_t k = 1; k <= upper; ++k) {
        const int mu = table.mu(k);
        if (mu == 0)
            continue;
        const std::uint64_t n = 2 * k + 3;
        weighted += mu * static_cast<std::int64_t>((upper - k) / n);
        if (table.composite(k))
            composite_mu += mu;
    }
    const std::int64_t literal = -weighted;
    return variant == MobiusVariant::literal ? literal : literal - composite_mu;
}

std::int64_t b_subsets(std::uint64_t j, const OddSieveTable& table, SubsetVariant variant)
{
    const std::uint64_t dprime = pi_dprime(j, table);
    if (dprime > kMaxSubsetPrimeSubscript)
        throw DomainError("b_subsets: pi''(" + std::to_string(j) + ") = " + std::to_string(dprime) +
                          " exceeds " + std::to_string(kMaxSubsetPrimeSubscript));
    const std::vector<std::uint64_t> primes = primes_through(j, table);
    const std::uint64_t x = top_square(j);

    std::int64_t total = 0;
    std::vector<std::int64_t> by_size(primes.size() + 1, 0);
    for_each_bounded_subset(primes, x, [&](std::size_t size, std::uint64_t p_k, bool only_three) {
        if (only_three)
            return;
        const auto floor_term = static_cast<std::int64_t>((x - p_k) / (2 * p_k));
        const std::int64_t sign = size % 2 == 1 ? 1 : -1;
        switch (variant) {
        case SubsetVariant::literal:
            total += sign * floor_term;
            break;
        case SubsetVariant::corrected:
            total += sign * (floor_term + (size >= 2 ? 1 : 0));
            break;
        case SubsetVariant::grouped:
            by_size[size] += floor_term;
            break;
        }
    });

    if (variant == SubsetVariant::grouped) {
        for (std::size_t n = 1; n < by_size.size(); ++n)
            total += (n % 2 == 1 ? 1 : -1) * by_size[n];
    }
    return total;
}

CountReport count_report(std::uint64_t j, const OddSieveTable& table)
{
    CountReport r;
    r.j = j;
    r.a_count = count_A_closed(j);
    r.b_oracle = count_B_sieve(j, table);
    r.pi_prime = pi_prime(j, table);
    r.b_mobius_literal = b_mobius(j, table, MobiusVariant::literal);
    r.b_mobius_corrected = b_mobius(j, table, MobiusVariant::corrected);
    if (pi_dprime(j, table) <= kMaxSubsetPrimeSubscript) {
        r.b_subsets_literal = b_subsets(j, table, SubsetVariant::literal);
        r.b_subsets_corrected = b_subsets(j, table, SubsetVariant::corrected);
        r.b_subsets_grouped = b_subsets(j, table, SubsetVariant::grouped);
    }

    const auto b = static_cast<std::int64_t>(r.b_oracle);
    auto fail = [&](const std::string& what) {
        throw InvariantError("count_report(j=" + std::to_string(j) + "): " + what);
    };
    if (r.a_count - r.b_oracle != r.pi_prime)
        fail("|A| - |B| != pi'");
    if (r.b_mobius_corrected != b)
        fail("corrected Moebius route disagrees with sieve");
    if (r.b_subsets_corrected && *r.b_subsets_corrected != b)
        fail("corrected subset route disagrees with sieve");
    if (r.b_subsets_grouped && *r.b_subsets_grouped != *r.b_subsets_literal)
        fail("grouped subset sum differs from literal");
    return r;
}

} // namespace oddidx
