#include "oddidx/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "oddidx/analytic.hpp"
#include "oddidx/compensated_sum.hpp"
#include "oddidx/counting.hpp"
#include "oddidx/error.hpp"
#include "oddidx/index_core.hpp"
#include "oddidx/parallel.hpp"

namespace oddidx {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::uint64_t kExactWeightedLimit = 1000;
constexpr double kWeightedSlack = 1e-9;
constexpr double kRelationTolerance = 1e-12;
constexpr double kCoeffTolerance = 1e-12;
constexpr std::uint64_t kSieveDualLimit = 1000000;
constexpr std::uint64_t kPiConsistencyLimit = 10000;

// mu(2i+1), with mu(1) = 1.
inline int mu_odd_number(const OddSieveTable& table, std::uint64_t i)
{
    return i == 0 ? 1 : table.mu(i - 1);
}

void require_odd(const OddSieveTable& table, std::uint64_t n, const char* op)
{
    if (n > table.max_number())
        throw RangeError(std::string(op) + ": table limit " + std::to_string(table.max_number()) +
                         " does not reach " + std::to_string(n));
}

void require_index(const OddSieveTable& table, std::uint64_t k, const char* op)
{
    if (!table.covers_index(k))
        throw RangeError(std::string(op) + ": table k_max " + std::to_string(table.k_max()) +
                         " does not reach index " + std::to_string(k));
}

std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Runs fn(i) -> optional<Counterexample> for i in [lo, hi] and keeps the
// failure with the smallest i. Chunks run concurrently; the answer does not
// depend on scheduling.
std::optional<Counterexample> first_failure(std::uint64_t lo, std::uint64_t hi, unsigned threads,
                                            const std::function<std::optional<Counterexample>(std::uint64_t)>& fn)
{
    if (hi < lo)
        return std::nullopt;
    constexpr std::uint64_t chunk = 256;
    const std::uint64_t span = hi - lo + 1;
    const std::size_t chunks = static_cast<std::size_t>((span + chunk - 1) / chunk);
    std::vector<std::optional<Counterexample>> found(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::uint64_t a = lo + c * chunk;
        const std::uint64_t b = std::min(hi, a + chunk - 1);
        for (std::uint64_t i = a; i <= b; ++i) {
            if (auto ce = fn(i)) {
                found[c] = std::move(ce);
                return;
            }
        }
    });
    for (auto& f : found)
        if (f)
            return f;
    return std::nullopt;
}

CheckResult make_result(std::string id, std::string range, std::optional<Counterexample> ce)
{
    CheckResult r;
    r.id = std::move(id);
    r.range = std::move(range);
    r.pass = !ce.has_value();
    r.counterexample = std::move(ce);
    return r;
}

// sum over blocks of k where floor((n+k+1)/(2k+1)) is constant, using
// prefix[k] = sum_{i<=k} mu(2i+1).
std::int64_t identity_one_blocked(std::uint64_t n, const std::vector<std::int32_t>& prefix)
{
    std::int64_t total = 0;
    std::uint64_t k = 0;
    while (k <= n) {
        const std::uint64_t q = (n + k + 1) / (2 * k + 1);
        const std::uint64_t last = std::min(n, (n + 1 - q) / (2 * q - 1));
        const std::int64_t block = prefix[last] - (k == 0 ? 0 : prefix[k - 1]);
        total += static_cast<std::int64_t>(q) * block;
        k = last + 1;
    }
    return total;
}

} // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::int64_t identity_one_sum(std::uint64_t n, const OddSieveTable& table)
{
    require_odd(table, 2 * n + 1, "identity_one_sum");
    std::int64_t total = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const int mu = mu_odd_number(table, k);
        if (mu != 0)
            total += mu * static_cast<std::int64_t>((n + k + 1) / (2 * k + 1));
    }
    return total;
}

double weighted_sum(std::uint64_t n, const OddSieveTable& table)
{
    require_odd(table, 2 * n + 1, "weighted_sum");
    CompensatedSum sum;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const int mu = mu_odd_number(table, k);
        if (mu != 0)
            sum += mu * static_cast<double>(n + k + 1) / static_cast<double>(2 * k + 1);
    }
    return sum.value();
}

bool weighted_bound_holds_exact(std::uint64_t n, const OddSieveTable& table)
{
    require_odd(table, 2 * n + 1, "weighted_bound_holds_exact");
    BigInt lcm = 1;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const std::uint64_t d = 2 * k + 1;
        const auto r = static_cast<std::uint64_t>(lcm % d);
        lcm *= d / std::gcd(d, r == 0 ? d : r);
    }
    BigInt numerator = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const int mu = mu_odd_number(table, k);
        if (mu != 0)
            numerator += BigInt(mu) * (n + k + 1) * (lcm / (2 * k + 1));
    }
    const BigInt lower = (BigInt(2) - BigInt(n)) * lcm;
    const BigInt upper = BigInt(n) * lcm;
    return lower <= numerator && numerator <= upper;
}

CheckResult check_identity_one(std::uint64_t n_max, const OddSieveTable& table, unsigned threads)
{
    require_odd(table, 2 * n_max + 1, "check_identity_one");
    std::vector<std::int32_t> prefix(n_max + 1);
    std::int32_t running = 0;
    for (std::uint64_t k = 0; k <= n_max; ++k) {
        running += mu_odd_number(table, k);
        prefix[k] = running;
    }
    auto ce = first_failure(0, n_max, threads, [&](std::uint64_t n) -> std::optional<Counterexample> {
        const std::int64_t v = identity_one_blocked(n, prefix);
        if (v == 1)
            return std::nullopt;
        return Counterexample{"n", n, "sum = " + std::to_string(v) + ", expected 1"};
    });
    return make_result("identity_one", "0<=n<=" + std::to_string(n_max), std::move(ce));
}

CheckResult check_weighted_bound(std::uint64_t n_max, const OddSieveTable& table)
{
    require_odd(table, 2 * n_max + 1, "check_weighted_bound");
    std::optional<Counterexample> ce;

    // Exact part: the sum equals (n+1) A_n + B_n with A_n = sum mu/(2k+1) and
    // B_n = sum mu k/(2k+1), kept over a common denominator.
    const std::uint64_t exact_top = std::min(n_max, kExactWeightedLimit);
    BigInt lcm = 1, a_num = 1, b_num = 0; // k = 0 term: mu(1)/1, 0
    for (std::uint64_t n = 1; n <= exact_top && !ce; ++n) {
        const std::uint64_t d = 2 * n + 1;
        const auto r = static_cast<std::uint64_t>(lcm % d);
        const std::uint64_t scale = d / std::gcd(d, r == 0 ? d : r);
        lcm *= scale;
        a_num *= scale;
        b_num *= scale;
        const int mu = mu_odd_number(table, n);
        if (mu != 0) {
            const BigInt part = lcm / d;
            a_num += mu * part;
            b_num += BigInt(mu) * n * part;
        }
        const BigInt value = BigInt(n + 1) * a_num + b_num;
        if (value < (BigInt(2) - BigInt(n)) * lcm || value > BigInt(n) * lcm)
            ce = Counterexample{"n", n, "exact weighted sum outside [-n+2, n]"};
    }

    // Float part, same decomposition over compensated prefix sums.
    if (!ce && n_max > exact_top) {
        CompensatedSum a, b;
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            const int mu = mu_odd_number(table, n);
            if (mu != 0) {
                a += mu / static_cast<double>(2 * n + 1);
                b += mu * static_cast<double>(n) / static_cast<double>(2 * n + 1);
            }
            if (n <= exact_top)
                continue;
            const double value = static_cast<double>(n + 1) * a.value() + b.value();
            const double lo = 2.0 - static_cast<double>(n);
            const double hi = static_cast<double>(n);
            if (value < lo - kWeightedSlack || value > hi + kWeightedSlack) {
                ce = Counterexample{"n", n, "weighted sum " + fmt_double(value) + " outside [-n+2, n]"};
                break;
            }
        }
    }
    return make_result("weighted_bound", "1<=n<=" + std::to_string(n_max), std::move(ce));
}

CheckResult check_t_bound(std::uint64_t n_max, const OddSieveTable& table)
{
    require_odd(table, 2 * n_max + 1, "check_t_bound");
    std::optional<Counterexample> ce;
    CompensatedSum t;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const int mu = mu_odd_number(table, n);
        if (mu != 0)
            t += static_cast<double>(mu) / static_cast<double>(2 * n + 1);
        if (!(std::fabs(t.value()) < 2.0)) {
            ce = Counterexample{"n", n, "|sum| = " + fmt_double(std::fabs(t.value()))};
            break;
        }
    }
    return make_result("t_bound", "0<=n<=" + std::to_string(n_max), std::move(ce));
}

CheckResult check_s_t_relation(std::uint64_t n_max, const OddSieveTable& table)
{
    const std::uint64_t big_n = n_max / 4;
    std::optional<Counterexample> ce;
    if (big_n > 0) {
        require_odd(table, 4 * big_n - 1, "check_s_t_relation");
        // t_prefix[n] = T_n = sum_{i<n} mu(2i+1)/(2i+1), built in the same
        // order as partial_sums.
        std::vector<double> t_prefix(2 * big_n + 1);
        CompensatedSum t;
        t_prefix[0] = 0.0;
        for (std::uint64_t n = 1; n <= 2 * big_n; ++n) {
            const std::uint64_t i = n - 1;
            const int mu = mu_odd_number(table, i);
            if (mu != 0)
                t += static_cast<double>(mu) / static_cast<double>(2 * i + 1);
            t_prefix[n] = t.value();
        }
        CompensatedSum s;
        for (std::uint64_t i = 1; i <= 4 * big_n; ++i) {
            const int mu = mobius(table, i);
            if (mu != 0)
                s += static_cast<double>(mu) / static_cast<double>(i);
            if (i % 4 != 0)
                continue;
            const std::uint64_t nn = i / 4;
            const double diff = s.value() - (t_prefix[2 * nn] - t_prefix[nn] / 2.0);
            if (!(std::fabs(diff) <= kRelationTolerance)) {
                ce = Counterexample{"N", nn, "S_4N - (T_2N - T_N/2) = " + fmt_double(diff)};
                break;
            }
        }
    }
    return make_result("s_t_relation", "1<=N<=" + std::to_string(big_n), std::move(ce));
}

CheckResult check_structure(std::uint64_t j_max, const OddSieveTable& table)
{
    require_index(table, interval_D(j_max).upper.value(), "check_structure");
    std::optional<Counterexample> ce;
    for (std::uint64_t j = 0; j <= j_max && !ce; ++j) {
        const std::uint64_t residue = remarkable(j).value() % 3;
        const std::uint64_t expected = j % 3 == 0 ? 0 : 2;
        const std::uint64_t a = count_A_closed(j);
        const std::uint64_t b = count_B_sieve(j, table);
        const std::uint64_t pp = pi_prime(j, table);
        if (residue != expected)
            ce = Counterexample{"j", j, "remarkable index residue " + std::to_string(residue)};
        else if (a % 2 != 0)
            ce = Counterexample{"j", j, "|A(j)| = " + std::to_string(a) + " is odd"};
        else if (a - b != pp)
            ce = Counterexample{"j", j, "|A|-|B| = " + std::to_string(a - b) + ", pi' = " + std::to_string(pp)};
    }
    return make_result("structure", "0<=j<=" + std::to_string(j_max), std::move(ce));
}

CheckResult check_a_remainder(std::uint64_t j_max)
{
    std::optional<Counterexample> ce;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        const auto a = static_cast<__int128>(count_A_closed(j));
        const auto jj = static_cast<__int128>(j);
        const __int128 scaled = 3 * a - 4 * jj * jj - 20 * jj;
        if (scaled != 22 && scaled != 24) {
            ce = Counterexample{"j", j, "3*remainder = " + std::to_string(static_cast<long long>(scaled))};
            break;
        }
    }
    return make_result("a_remainder", "0<=j<=" + std::to_string(j_max), std::move(ce));
}

CheckResult check_a_routes(std::uint64_t j_max)
{
    std::optional<Counterexample> ce;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        const std::uint64_t closed = count_A_closed(j);
        const std::uint64_t enumerated = count_A_enum(j);
        if (closed != enumerated) {
            ce = Counterexample{"j", j,
                                "closed " + std::to_string(closed) + " vs enumerated " + std::to_string(enumerated)};
            break;
        }
    }
    return make_result("a_routes", "0<=j<=" + std::to_string(j_max), std::move(ce));
}

CheckResult check_b_routes(std::uint64_t j_max, const OddSieveTable& table, unsigned threads)
{
    require_index(table, interval_D(j_max).upper.value(), "check_b_routes");
    auto ce = first_failure(0, j_max, threads, [&](std::uint64_t j) -> std::optional<Counterexample> {
        const auto oracle = static_cast<std::int64_t>(count_B_sieve(j, table));
        const std::int64_t mob = b_mobius(j, table, MobiusVariant::corrected);
        if (mob != oracle)
            return Counterexample{"j", j,
                                  "corrected Moebius " + std::to_string(mob) + " vs sieve " + std::to_string(oracle)};
        if (pi_dprime(j, table) <= kMaxSubsetPrimeSubscript) {
            const std::int64_t corr = b_subsets(j, table, SubsetVariant::corrected);
            if (corr != oracle)
                return Counterexample{"j", j,
                                      "corrected subsets " + std::to_string(corr) + " vs sieve " +
                                          std::to_string(oracle)};
            const std::int64_t lit = b_subsets(j, table, SubsetVariant::literal);
            const std::int64_t grp = b_subsets(j, table, SubsetVariant::grouped);
            if (lit != grp)
                return Counterexample{"j", j,
                                      "grouped " + std::to_string(grp) + " vs literal " + std::to_string(lit)};
        }
        return std::nullopt;
    });
    return make_result("b_routes", "0<=j<=" + std::to_string(j_max), std::move(ce));
}

CheckResult check_lemma_residues(std::uint64_t seed, std::uint64_t cases)
{
    auto count = [](std::uint64_t x0, std::uint64_t len, std::uint64_t n, std::uint64_t residues) {
        std::uint64_t c = 0;
        for (std::uint64_t x = x0; x < x0 + len; ++x)
            if ((residues >> (x % n)) & 1u)
                ++c;
        return c;
    };
    std::optional<Counterexample> ce;
    std::uint64_t case_no = 0;
    auto test = [&](std::uint64_t x0, std::uint64_t a, std::uint64_t n, std::uint64_t residues) {
        const std::uint64_t len = a * n;
        const std::uint64_t expected = static_cast<std::uint64_t>(std::popcount(residues)) * len / n;
        const std::uint64_t got = count(x0, len, n, residues);
        if (got != expected && !ce)
            ce = Counterexample{"case", case_no,
                                "x0=" + std::to_string(x0) + " |X|=" + std::to_string(len) + " n=" +
                                    std::to_string(n) + " R=" + std::to_string(residues) + ": " +
                                    std::to_string(got) + " vs " + std::to_string(expected)};
        ++case_no;
    };

    for (std::uint64_t n = 1; n <= 6 && !ce; ++n)
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
            for (std::uint64_t x0 = 0; x0 < 2 * n; ++x0)
                for (std::uint64_t a = 0; a <= 3; ++a)
                    test(x0, a, n, r);

    std::mt19937_64 rng(seed);
    for (std::uint64_t c = 0; c < cases && !ce; ++c) {
        const std::uint64_t n = 1 + rng() % 50;
        const std::uint64_t a = rng() % 41;
        const std::uint64_t x0 = rng() % 1000000000;
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        test(x0, a, n, rng() & mask);
    }
    auto r = make_result("lemma_residues", "n<=50, " + std::to_string(cases) + " random cases", std::move(ce));
    r.seed = seed;
    return r;
}

CheckResult check_lemma_multiples(std::uint64_t seed, std::uint64_t cases)
{
    std::optional<Counterexample> ce;
    std::uint64_t case_no = 0;
    auto test = [&](std::uint64_t m, std::uint64_t n) {
        std::uint64_t c = 0;
        for (std::uint64_t x = 1; x <= m; ++x)
            if (x % n == 0)
                ++c;
        if (c != m / n && !ce)
            ce = Counterexample{"case", case_no,
                                "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + std::to_string(c)};
        ++case_no;
    };
    for (std::uint64_t m = 1; m <= 60; ++m)
        for (std::uint64_t n = 1; n <= 60; ++n)
            test(m, n);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t c = 0; c < cases && !ce; ++c)
        test(1 + rng() % 5000, 1 + rng() % 5000);
    auto r = make_result("lemma_multiples", "m,n<=60 exhaustive, " + std::to_string(cases) + " random cases",
                         std::move(ce));
    r.seed = seed;
    return r;
}

CheckResult check_c_identity(std::uint64_t j_max, const OddSieveTable& table)
{
    std::optional<Counterexample> ce;
    std::uint64_t last = 0;
    bool any = false;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        if (pi_dprime(j, table) > kMaxExpansionPrimeSubscript)
            break;
        any = true;
        last = j;
        const double prod = c_coeff(j, table, CoeffVariant::product);
        const double expn = c_coeff(j, table, CoeffVariant::expansion);
        if (!(std::fabs(prod - expn) <= kCoeffTolerance * std::fabs(prod))) {
            ce = Counterexample{"j", j, "product " + fmt_double(prod) + " vs expansion " + fmt_double(expn)};
            break;
        }
    }
    const std::string range = any ? "0<=j<=" + std::to_string(last) + " (pi''<=20)" : "empty";
    return make_result("c_identity", range, std::move(ce));
}

CheckResult check_euler_monotone(std::uint64_t j_max, const OddSieveTable& table)
{
    std::optional<Counterexample> ce;
    double prev = euler_e(0, table);
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        const double e = euler_e(j, table);
        if (e < prev) {
            ce = Counterexample{"j", j, "e_j " + fmt_double(e) + " < e_{j-1} " + fmt_double(prev)};
            break;
        }
        prev = e;
    }
    return make_result("euler_monotone", "0<=j<=" + std::to_string(j_max), std::move(ce));
}

CheckResult check_exact_p_restatement(std::uint64_t j_max, const OddSieveTable& table)
{
    std::optional<Counterexample> ce;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        const std::uint64_t a = count_A_closed(j);
        const std::uint64_t b = count_B_sieve(j, table);
        const std::uint64_t pp = pi_prime(j, table);
        const double p = exact_p(j, table);
        const double alt = 1.0 - static_cast<double>(pp) / static_cast<double>(a);
        if (b != a - pp || std::fabs(p - alt) > 0x1p-50) {
            ce = Counterexample{"j", j, "p_j " + fmt_double(p) + " vs 1 - pi'/|A| " + fmt_double(alt)};
            break;
        }
    }
    return make_result("exact_p_restatement", "0<=j<=" + std::to_string(j_max), std::move(ce));
}

CheckResult check_sieve_dual(const OddSieveTable& table)
{
    const std::uint64_t limit = std::min(table.k_max(), kSieveDualLimit);
    const auto enumerated = build_w_by_enumeration(limit);
    std::optional<Counterexample> ce;
    for (std::uint64_t k = 0; k <= limit; ++k) {
        const bool a = (enumerated[k >> 6] >> (k & 63)) & 1u;
        if (a != table.composite(k)) {
            ce = Counterexample{"k", k, std::string("enumeration says ") + (a ? "composite" : "prime")};
            break;
        }
    }
    return make_result("sieve_dual", "0<=k<=" + std::to_string(limit), std::move(ce));
}

CheckResult check_mu_multiplicative(std::uint64_t seed, std::uint64_t cases, const OddSieveTable& table)
{
    std::optional<Counterexample> ce;
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    const std::uint64_t top = table.max_number();
    std::uint64_t done = 0;
    if (top >= 15) {
        for (std::uint64_t attempt = 0; done < cases && attempt < 50 * cases; ++attempt) {
            const std::uint64_t a = 2 * (rng() % (top / 6 + 1)) + 1;
            const std::uint64_t b = 2 * (rng() % (top / a / 2 + 1)) + 1;
            if (a * b > top || std::gcd(a, b) != 1)
                continue;
            const int lhs = mobius(table, a * b);
            const int rhs = mobius(table, a) * mobius(table, b);
            if (lhs != rhs) {
                ce = Counterexample{"case", done,
                                    "mu(" + std::to_string(a) + "*" + std::to_string(b) + ") = " +
                                        std::to_string(lhs) + " vs " + std::to_string(rhs)};
                break;
            }
            ++done;
        }
    }
    auto r = make_result("mu_multiplicative", std::to_string(done) + " coprime pairs, ab<=" + std::to_string(top),
                         std::move(ce));
    r.seed = seed;
    return r;
}

CheckResult check_pi_consistency(const OddSieveTable& table)
{
    const std::uint64_t limit = std::min(table.k_max(), kPiConsistencyLimit);
    std::optional<Counterexample> ce;
    std::uint64_t primes = 1; // the prime 2
    for (std::uint64_t k = 0; k <= limit; ++k) {
        if (!table.composite(k))
            ++primes;
        const std::uint64_t pi = table.pi_count(2 * k + 3);
        if (pi != primes) {
            ce = Counterexample{"k", k, "pi(2k+3) = " + std::to_string(pi) + ", counted " + std::to_string(primes)};
            break;
        }
    }
    return make_result("pi_consistency", "0<=k<=" + std::to_string(limit), std::move(ce));
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all",      "sieve",      "lemmas",  "structure",
                                                "counting", "identities", "analytic"};
    return names;
}

bool is_suite(std::string_view selector)
{
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), selector) != names.end();
}

std::uint64_t required_k_max(std::string_view selector, const VerifyBounds& bounds)
{
    if (!is_suite(selector))
        throw DomainError("unknown suite '" + std::string(selector) + "'");
    const bool all = selector == "all";
    std::uint64_t k = 0;
    if (all || selector == "structure" || selector == "counting" || selector == "analytic")
        k = std::max(k, interval_D(bounds.j_max).upper.value());
    if (all || selector == "identities")
        k = std::max(k, bounds.n_max);
    if (all || selector == "sieve")
        k = std::max<std::uint64_t>(k, kPiConsistencyLimit);
    return k;
}

VerifyReport run_suite(std::string_view selector, const VerifyBounds& bounds, const OddSieveTable& table,
                       unsigned threads)
{
    if (!is_suite(selector))
        throw DomainError("unknown suite '" + std::string(selector) + "'");

    struct Entry {
        const char* id;
        const char* suite;
        std::function<CheckResult()> run;
    };
    const std::uint64_t j = bounds.j_max;
    const std::uint64_t n = bounds.n_max;
    const std::vector<Entry> entries{
        {"sieve_dual", "sieve", [&] { return check_sieve_dual(table); }},
        {"mu_multiplicative", "sieve",
         [&] { return check_mu_multiplicative(bounds.seed, bounds.random_cases, table); }},
        {"pi_consistency", "sieve", [&] { return check_pi_consistency(table); }},
        {"lemma_residues", "lemmas", [&] { return check_lemma_residues(bounds.seed, bounds.random_cases); }},
        {"lemma_multiples", "lemmas", [&] { return check_lemma_multiples(bounds.seed, bounds.random_cases); }},
        {"structure", "structure", [&] { return check_structure(j, table); }},
        {"a_remainder", "structure", [&] { return check_a_remainder(j); }},
        {"a_routes", "counting", [&] { return check_a_routes(j); }},
        {"b_routes", "counting", [&] { return check_b_routes(j, table, threads); }},
        {"identity_one", "identities", [&] { return check_identity_one(n, table, threads); }},
        {"weighted_bound", "identities", [&] { return check_weighted_bound(n, table); }},
        {"t_bound", "identities", [&] { return check_t_bound(n, table); }},
        {"s_t_relation", "identities", [&] { return check_s_t_relation(n, table); }},
        {"c_identity", "analytic", [&] { return check_c_identity(j, table); }},
        {"euler_monotone", "analytic", [&] { return check_euler_monotone(j, table); }},
        {"exact_p_restatement", "analytic", [&] { return check_exact_p_restatement(j, table); }},
    };

    VerifyReport report;
    report.suite = std::string(selector);
    for (const auto& e : entries) {
        if (selector != "all" && selector != e.suite)
            continue;
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = e.run();
        } catch (const std::exception& ex) {
            r.id = e.id;
            r.range = "not run";
            r.pass = false;
            r.counterexample = Counterexample{"error", 0, ex.what()};
        }
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(r));
    }
    return report;
}

std::string to_jsonl(const VerifyReport& report, bool include_timing)
{
    std::string out;
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["id"] = c.id;
        j["range"] = c.range;
        j["pass"] = c.pass;
        if (c.counterexample)
            j["counterexample"] = {{"parameter", c.counterexample->parameter},
                                   {"value", c.counterexample->value},
                                   {"detail", c.counterexample->detail}};
        else
            j["counterexample"] = nullptr;
        j["seed"] = c.seed ? nlohmann::ordered_json(*c.seed) : nlohmann::ordered_json(nullptr);
        if (include_timing)
            j["elapsed_ms"] = c.elapsed_ms;
        out += j.dump();
        out += '\n';
    }
    return out;
}

} // namespace oddidx
