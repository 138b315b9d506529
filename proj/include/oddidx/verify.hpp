#pragma once

// Check batteries over the identities, bounds and structural facts the
// library implements. Each check scans a range and records the first
// parameter value where it fails, so the failure can be replayed through the
// corresponding operation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddidx/sieve.hpp"

namespace oddidx {

struct Counterexample {
    std::string parameter; // "n", "j", "N", "k", "case"
    std::uint64_t value = 0;
    std::string detail;
};

struct CheckResult {
    std::string id;
    std::string range;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::optional<std::uint64_t> seed; // randomized checks only
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20181003;

struct VerifyBounds {
    std::uint64_t j_max = 50;
    std::uint64_t n_max = 10000;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t random_cases = 10000;
};

// sum_{k=0}^{n} mu(2k+1) floor((n+k+1)/(2k+1)), term by term.
std::int64_t identity_one_sum(std::uint64_t n, const OddSieveTable& table);

// sum_{k=0}^{n} mu(2k+1) (n+k+1)/(2k+1) in compensated floating point.
double weighted_sum(std::uint64_t n, const OddSieveTable& table);

// Exact test of -n+2 <= weighted sum <= n using a common denominator.
bool weighted_bound_holds_exact(std::uint64_t n, const OddSieveTable& table);

CheckResult check_identity_one(std::uint64_t n_max, const OddSieveTable& table, unsigned threads = 1);
CheckResult check_weighted_bound(std::uint64_t n_max, const OddSieveTable& table);
CheckResult check_t_bound(std::uint64_t n_max, const OddSieveTable& table);
// S_{4N} = T_{2N} - T_N / 2 to 1e-12 for 1 <= N <= n_max / 4.
CheckResult check_s_t_relation(std::uint64_t n_max, const OddSieveTable& table);
CheckResult check_structure(std::uint64_t j_max, const OddSieveTable& table);
// 3|A(j)| - 4j^2 - 20j in {22, 24}, i.e. the remainder is 22/3 or 8.
CheckResult check_a_remainder(std::uint64_t j_max);
CheckResult check_a_routes(std::uint64_t j_max);
CheckResult check_b_routes(std::uint64_t j_max, const OddSieveTable& table, unsigned threads = 1);
CheckResult check_lemma_residues(std::uint64_t seed, std::uint64_t cases);
CheckResult check_lemma_multiples(std::uint64_t seed, std::uint64_t cases);
CheckResult check_c_identity(std::uint64_t j_max, const OddSieveTable& table);
CheckResult check_euler_monotone(std::uint64_t j_max, const OddSieveTable& table);
CheckResult check_exact_p_restatement(std::uint64_t j_max, const OddSieveTable& table);
CheckResult check_sieve_dual(const OddSieveTable& table);
CheckResult check_mu_multiplicative(std::uint64_t seed, std::uint64_t cases, const OddSieveTable& table);
CheckResult check_pi_consistency(const OddSieveTable& table);

// Suite names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view selector);

// Table bound needed by run_suite for the given selector and bounds.
std::uint64_t required_k_max(std::string_view selector, const VerifyBounds& bounds);

// Runs the selected checks in a fixed order. A check that throws is recorded
// as failed with the error text; the suite carries on. Throws DomainError
// for an unknown selector.
VerifyReport run_suite(std::string_view selector, const VerifyBounds& bounds, const OddSieveTable& table,
                       unsigned threads = 1);

// One JSON object per check. elapsed_ms is included only on request since it
// varies between runs.
std::string to_jsonl(const VerifyReport& report, bool include_timing = false);

} // namespace oddidx
