#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "oddidx/analytic.hpp"
#include "oddidx/error.hpp"
#include "oddidx/verify.hpp"

using namespace oddidx;

namespace {

const OddSieveTable& table()
{
    static const OddSieveTable t = build(200000);
    return t;
}

// Same table with mu(15) flipped from +1 to -1.
OddSieveTable corrupted()
{
    const auto& t = table();
    std::vector<std::uint64_t> w(t.composite_words().begin(), t.composite_words().end());
    std::vector<std::uint64_t> mu(t.mu_words().begin(), t.mu_words().end());
    const std::uint64_t k = 6;
    mu[k >> 5] &= ~(std::uint64_t{3} << (2 * (k & 31)));
    mu[k >> 5] |= std::uint64_t{2} << (2 * (k & 31));
    return OddSieveTable::from_packed(t.k_max(), std::move(w), std::move(mu));
}

} // namespace

TEST_CASE("identity_one_sum")
{
    CHECK(identity_one_sum(0, table()) == 1);
    CHECK(identity_one_sum(4, table()) == 1);
    for (std::uint64_t n = 0; n <= 3000; ++n)
        REQUIRE(identity_one_sum(n, table()) == 1);
}

TEST_CASE("check_identity_one uses blocks but matches the direct sum")
{
    const auto r = check_identity_one(100000, table());
    CHECK(r.pass);
    CHECK(r.range == "0<=n<=100000");

    const auto bad = corrupted();
    const auto f = check_identity_one(3000, bad, 4);
    REQUIRE_FALSE(f.pass);
    REQUIRE(f.counterexample.has_value());
    CHECK(f.counterexample->parameter == "n");
    CHECK(f.counterexample->value == 7);
    // replay through the direct route
    CHECK(identity_one_sum(f.counterexample->value, bad) != 1);
    for (std::uint64_t n = 0; n < 7; ++n)
        CHECK(identity_one_sum(n, bad) == 1);
}

TEST_CASE("weighted bound")
{
    CHECK(weighted_sum(1, table()) == doctest::Approx(1.0));
    CHECK(weighted_bound_holds_exact(1, table()));
    const double w2 = weighted_sum(2, table());
    CHECK(w2 >= 0.0);
    CHECK(w2 <= 2.0);
    for (std::uint64_t n = 1; n <= 300; ++n)
        REQUIRE(weighted_bound_holds_exact(n, table()));
    CHECK(check_weighted_bound(10000, table()).pass);

    // float route (prefix decomposition) against the direct compensated sum
    for (std::uint64_t n = 1; n <= 2000; n += 37) {
        double a = 0, b = 0;
        for (std::uint64_t k = 0; k <= n; ++k) {
            const int mu = k == 0 ? 1 : table().mu(k - 1);
            a += mu / static_cast<double>(2 * k + 1);
            b += mu * static_cast<double>(k) / static_cast<double>(2 * k + 1);
        }
        CHECK(static_cast<double>(n + 1) * a + b == doctest::Approx(weighted_sum(n, table())).epsilon(1e-9));
    }
}

TEST_CASE("T bound and S/T relation")
{
    CHECK(check_t_bound(199000, table()).pass);
    const auto st = check_s_t_relation(200000, table());
    CHECK(st.pass);
    CHECK(st.range == "1<=N<=50000");
    CHECK(check_s_t_relation(3, table()).pass);
    CHECK_THROWS_AS(check_t_bound(300000, table()), RangeError);
}

TEST_CASE("structure and counting checks")
{
    CHECK(check_structure(150, table()).pass);
    CHECK(check_a_remainder(100000).pass);
    CHECK(check_a_routes(150).pass);
    CHECK(check_b_routes(150, table(), 3).pass);
    CHECK(check_c_identity(1000, table()).range == "0<=j<=38 (pi''<=20)");
    CHECK(check_euler_monotone(150, table()).pass);
    CHECK(check_exact_p_restatement(150, table()).pass);
}

TEST_CASE("randomized checks are seeded and reproducible")
{
    const auto a = check_lemma_residues(42, 2000);
    const auto b = check_lemma_residues(42, 2000);
    CHECK(a.pass);
    CHECK(a.seed == 42u);
    CHECK(a.range == b.range);
    CHECK(check_lemma_multiples(42, 2000).pass);
    const auto mu = check_mu_multiplicative(42, 10000, table());
    CHECK(mu.pass);
    CHECK(mu.range.rfind("10000 coprime pairs", 0) == 0);
}

TEST_CASE("sieve checks")
{
    CHECK(check_sieve_dual(table()).pass);
    CHECK(check_pi_consistency(table()).pass);
}

TEST_CASE("run_suite")
{
    VerifyBounds bounds;
    bounds.j_max = 30;
    bounds.n_max = 2000;
    const auto t = build(required_k_max("all", bounds));
    const auto report = run_suite("all", bounds, t);
    CHECK(report.checks.size() >= 10);
    CHECK(report.all_passed());

    const auto ids = run_suite("identities", bounds, t);
    REQUIRE(ids.checks.size() == 4);
    CHECK(ids.checks[0].id == "identity_one");
    CHECK(ids.all_passed());

    CHECK_THROWS_AS(run_suite("bogus", bounds, t), DomainError);
    CHECK_THROWS_AS(required_k_max("bogus", bounds), DomainError);

    // a table that is too small fails the affected checks without aborting
    const auto small = build(100);
    const auto partial = run_suite("identities", bounds, small);
    REQUIRE(partial.checks.size() == 4);
    CHECK_FALSE(partial.all_passed());
    for (const auto& c : partial.checks) {
        if (!c.pass) {
            REQUIRE(c.counterexample.has_value());
        }
    }

    const auto failing = run_suite("identities", bounds, corrupted());
    CHECK_FALSE(failing.all_passed());
}

TEST_CASE("jsonl report")
{
    VerifyBounds bounds;
    bounds.j_max = 5;
    bounds.n_max = 100;
    const auto report = run_suite("lemmas", bounds, table());
    const std::string text = to_jsonl(report);
    std::istringstream lines(text);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["suite"] == "lemmas");
        CHECK(j["pass"] == true);
        CHECK(j["counterexample"].is_null());
        CHECK(j["seed"] == kDefaultSeed);
        CHECK_FALSE(j.contains("elapsed_ms"));
        ++count;
    }
    CHECK(count == 2);
    CHECK(to_jsonl(report, true).find("elapsed_ms") != std::string::npos);

    VerifyReport bad;
    bad.suite = "x";
    bad.checks.push_back(CheckResult{"c", "r", false, Counterexample{"n", 7, "boom"}, std::nullopt, 0});
    const auto j = nlohmann::json::parse(to_jsonl(bad));
    CHECK(j["counterexample"]["value"] == 7);
    CHECK(j["counterexample"]["parameter"] == "n");
}
