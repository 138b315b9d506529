#include "oddidx/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oddidx/compensated_sum.hpp"
#include "oddidx/counting.hpp"
#include "oddidx/error.hpp"
#include "oddidx/parallel.hpp"

namespace oddidx {

namespace {

// Term k of the m_j sum; 0 when mu vanishes. Shared by mobius_m and the
// streaming pass in series_table so both produce identical bits.
inline double mobius_m_term(const OddSieveTable& table, std::uint64_t k)
{
    return -static_cast<double>(table.mu(k)) / static_cast<double>(2 * k + 3);
}

void require_number(const OddSieveTable& table, std::uint64_t n, const char* op)
{
    if (n > table.max_number() + 1)
        throw RangeError(std::string(op) + ": table limit " + std::to_string(table.max_number()) +
                         " does not reach " + std::to_string(n));
}

void require_j_at_least_2(std::uint64_t j, const char* op)
{
    if (j < 2)
        throw DomainError(std::string(op) + ": j must be >= 2 (ln j <= 0 otherwise)");
}

} // namespace

int mobius(const OddSieveTable& table, std::uint64_t n)
{
    if (n == 0)
        throw DomainError("mobius: n must be positive");
    if (n == 1)
        return 1;
    if (n % 4 == 0)
        return 0;
    if (n % 2 == 0)
        return -mobius(table, n / 2);
    return table.mu_odd(to_index(n));
}

double hadamard_a(std::uint64_t j)
{
    require_j_at_least_2(j, "hadamard_a");
    return 1.0 - 3.0 / (2.0 * std::log(static_cast<double>(j)));
}

double euler_e(std::uint64_t j, const OddSieveTable& table)
{
    const std::uint64_t dprime = pi_dprime(j, table);
    const auto idx = table.prime_indices();
    double product = 1.0;
    for (std::uint64_t i = 1; i <= dprime; ++i)
        product *= 1.0 - 1.0 / static_cast<double>(2 * idx[i] + 3);
    return 1.0 - product;
}

double c_coeff(std::uint64_t j, const OddSieveTable& table, CoeffVariant variant)
{
    if (variant == CoeffVariant::product)
        return 2.0 / 3.0 * euler_e(j, table);

    const std::uint64_t dprime = pi_dprime(j, table);
    if (dprime > kMaxExpansionPrimeSubscript)
        throw DomainError("c_coeff expansion: pi''(" + std::to_string(j) + ") = " + std::to_string(dprime) +
                          " exceeds " + std::to_string(kMaxExpansionPrimeSubscript));
    const auto idx = table.prime_indices();
    std::vector<double> primes;
    for (std::uint64_t i = 0; i <= dprime; ++i)
        primes.push_back(static_cast<double>(2 * idx[i] + 3));

    // Lexicographic walk over all nonempty K, skipping K = {0}.
    CompensatedSum sum;
    auto dfs = [&](auto&& self, std::size_t start, double product, std::size_t size) -> void {
        for (std::size_t i = start; i < primes.size(); ++i) {
            const double next = product * primes[i];
            const std::size_t next_size = size + 1;
            if (!(next_size == 1 && i == 0))
                sum += (next_size % 2 == 1 ? 1.0 : -1.0) / next;
            self(self, i + 1, next, next_size);
        }
    };
    dfs(dfs, 0, 1.0, 0);
    return sum.value();
}

double mobius_m(std::uint64_t j, const OddSieveTable& table)
{
    const std::uint64_t upper = interval_D(j).upper.value();
    if (!table.covers_index(upper))
        throw RangeError("mobius_m: table k_max " + std::to_string(table.k_max()) + " does not reach index " +
                         std::to_string(upper));
    CompensatedSum sum;
    for (std::uint64_t k = 1; k <= upper; ++k)
        if (table.mu(k) != 0)
            sum += mobius_m_term(table, k);
    return 1.5 * sum.value();
}

double exact_p(std::uint64_t j, const OddSieveTable& table)
{
    return static_cast<double>(count_B_sieve(j, table)) / static_cast<double>(count_A_closed(j));
}

PartialSums partial_sums(std::uint64_t n, const OddSieveTable& table)
{
    PartialSums out;
    out.n = n;
    if (n == 0)
        return out;
    require_number(table, std::max(2 * n - 1, n), "partial_sums");

    CompensatedSum t;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t odd = 2 * i + 1;
        const int mu = mobius(table, odd);
        if (mu != 0)
            t += static_cast<double>(mu) / static_cast<double>(odd);
    }
    CompensatedSum s;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const int mu = mobius(table, i);
        if (mu != 0)
            s += static_cast<double>(mu) / static_cast<double>(i);
    }
    out.t = t.value();
    out.s = s.value();
    return out;
}

double b_asym(std::uint64_t j)
{
    require_j_at_least_2(j, "b_asym");
    const double jj = static_cast<double>(j) * static_cast<double>(j);
    return 4.0 / 3.0 * jj - 2.0 * jj / std::log(static_cast<double>(j));
}

std::vector<ApproxRow> series_table(std::span<const std::uint64_t> j_values, const OddSieveTable& table,
                                    unsigned threads)
{
    if (!std::is_sorted(j_values.begin(), j_values.end()))
        throw DomainError("series_table: j values must be ascending");
    std::vector<ApproxRow> rows(j_values.size());
    if (rows.empty())
        return rows;

    const std::uint64_t top = interval_D(j_values.back()).upper.value();
    if (!table.covers_index(top))
        throw RangeError("series_table: table k_max " + std::to_string(table.k_max()) + " does not reach index " +
                         std::to_string(top));

    parallel_for(rows.size(), threads, [&](std::size_t i) {
        const std::uint64_t j = j_values[i];
        ApproxRow& row = rows[i];
        row.j = j;
        row.x = top_square(j);
        row.p = exact_p(j, table);
        if (j >= 2)
            row.a = hadamard_a(j);
        row.e = euler_e(j, table);
    });

    // m_j prefixes share one pass; the running state at each upper bound is
    // exactly what mobius_m(j) computes on its own.
    CompensatedSum sum;
    std::uint64_t k = 1;
    for (auto& row : rows) {
        const std::uint64_t upper = interval_D(row.j).upper.value();
        for (; k <= upper; ++k)
            if (table.mu(k) != 0)
                sum += mobius_m_term(table, k);
        row.m = 1.5 * sum.value();
    }
    return rows;
}

} // namespace oddidx
