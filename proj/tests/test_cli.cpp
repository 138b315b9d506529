#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "oddidx/sieve.hpp"
#include "oddidx/sieve_io.hpp"

using namespace oddidx;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("oddidx_test_" + name);
}

} // namespace

TEST_CASE("format_real")
{
    CHECK(cli::format_real(0.125, 6) == "0.125000");
    CHECK(cli::format_real(-1.1640425613334453, 6) == "-1.164043");
    CHECK(cli::format_real(0.8270054484484421, 6) == "0.827005");
    CHECK(cli::format_real(0.5, 15) == "0.500000000000000");
}

TEST_CASE("count")
{
    const auto r = run_cli({"count", "--j-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "j,x,A,B_oracle,B_mobius_literal,B_mobius_corrected,B_subsets_literal,B_subsets_corrected,pi_prime\n"
          "0,25,8,1,3,1,2,1,7\n"
          "1,49,16,3,8,3,6,3,13\n"
          "2,81,26,6,17,6,9,6,20\n");

    const auto js = run_cli({"count", "--j-max", "0", "--format", "jsonl"});
    REQUIRE(js.code == 0);
    const auto row = nlohmann::json::parse(js.out);
    CHECK(row["A"] == 8);
    CHECK(row["B_oracle"] == 1);
    CHECK(row["B_mobius_literal"] == 3);
    CHECK(row["B_subsets_literal"] == 2);
    CHECK(row["pi_prime"] == 7);

    // subset columns are empty once pi'' exceeds 24
    const auto wide = run_cli({"count", "--j", "60"});
    REQUIRE(wide.code == 0);
    CHECK(wide.out.find(",,") != std::string::npos);
    const auto wide_json = run_cli({"count", "--j", "60", "--format", "jsonl"});
    CHECK(nlohmann::json::parse(wide_json.out)["B_subsets_literal"].is_null());

    CHECK(run_cli({"count", "--j-max", "-1"}).code == 2);
    CHECK(run_cli({"count"}).code == 2);
    CHECK(run_cli({"count", "--j-max", "2", "--format", "xml"}).code == 2);
    CHECK(run_cli({"count", "--j-max", "2", "--threads", "0"}).code == 2);
    CHECK(run_cli({"count", "--j-max", "3000", "--memory-mb", "1"}).code == 3);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("approx matches the golden file")
{
    const auto r = run_cli({"approx", "--j-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(std::filesystem::path(ODDIDX_GOLDEN_DIR) / "approx_j_max_2.csv"));

    const auto single = run_cli({"approx", "--j", "2"});
    REQUIRE(single.code == 0);
    CHECK(single.out == "j,x,p,a,e,m\n2,81,0.230769,-1.164043,0.314286,0.958337\n");

    const auto precise = run_cli({"approx", "--j", "0", "--precision", "15"});
    REQUIRE(precise.code == 0);
    CHECK(precise.out.find("0,25,0.125000000000000,,0.200000000000000,0.82700544844844") != std::string::npos);
    CHECK(run_cli({"approx", "--j", "0", "--precision", "16"}).code == 2);
    CHECK(run_cli({"approx", "--j", "0", "--precision", "0"}).code == 2);

    const auto js = run_cli({"approx", "--j", "0,5", "--format", "jsonl"});
    REQUIRE(js.code == 0);
    std::istringstream lines(js.out);
    std::string line;
    std::getline(lines, line);
    auto first = nlohmann::json::parse(line);
    CHECK(first["a"].is_null());
    CHECK(first["x"] == 25);
    std::getline(lines, line);
    CHECK(nlohmann::json::parse(line)["a"].is_number());
}

TEST_CASE("approx writes files and a plot script")
{
    const auto csv = temp_path("approx.csv");
    const auto gp = temp_path("approx.gp");
    const auto r = run_cli({"approx", "--j-max", "2", "--out", csv.string(), "--plot-script", gp.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(csv) == slurp(std::filesystem::path(ODDIDX_GOLDEN_DIR) / "approx_j_max_2.csv"));
    const std::string script = slurp(gp);
    CHECK(script.find("set logscale x") != std::string::npos);
    CHECK(script.find(csv.string()) != std::string::npos);
    std::filesystem::remove(csv);
    std::filesystem::remove(gp);

    CHECK(run_cli({"approx", "--j-max", "2", "--out", "/nonexistent-dir/x.csv"}).code == 3);
}

TEST_CASE("verify")
{
    const auto ids = run_cli({"verify", "--suite", "identities", "--n-max", "100000"});
    CHECK(ids.code == 0);
    CHECK(ids.err.find("4/4 checks passed") != std::string::npos);

    const auto all = run_cli({"verify", "--suite", "all", "--j-max", "200"});
    CHECK(all.code == 0);
    std::istringstream lines(all.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        CHECK(nlohmann::json::parse(line)["pass"] == true);
        ++n;
    }
    CHECK(n >= 10);

    CHECK(run_cli({"verify", "--suite", "bogus"}).code == 2);
    const auto timed = run_cli({"verify", "--suite", "lemmas", "--timing"});
    CHECK(timed.out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("sieve cache")
{
    const auto path = temp_path("cache.odsv");
    std::filesystem::remove(path);
    REQUIRE(run_cli({"sieve", "--k-max", "1000000", "--out", path.string()}).code == 0);
    const std::string bytes = slurp(path);
    CHECK(bytes.substr(0, 4) == "ODSV");
    CHECK(peek_k_max(path) == 1000000);
    CHECK(load_table(path) == build(1000000));

    // commands reuse a large enough cache and produce the same output
    const auto direct = run_cli({"count", "--j-max", "20"});
    const auto cached = run_cli({"count", "--j-max", "20", "--sieve-cache", path.string()});
    CHECK(cached.code == 0);
    CHECK(cached.out == direct.out);
    std::filesystem::remove(path);

    // a missing cache is created
    const auto fresh = temp_path("fresh.odsv");
    std::filesystem::remove(fresh);
    CHECK(run_cli({"approx", "--j-max", "3", "--sieve-cache", fresh.string()}).code == 0);
    CHECK(std::filesystem::exists(fresh));
    CHECK(peek_k_max(fresh) == interval_D(3).upper.value());
    std::filesystem::remove(fresh);

    const auto zero = temp_path("zero.odsv");
    CHECK(run_cli({"sieve", "--k-max", "0", "--out", zero.string()}).code == 0);
    CHECK(load_table(zero).k_max() == 0);
    std::filesystem::remove(zero);

    const auto garbage = temp_path("garbage.odsv");
    {
        std::ofstream g(garbage);
        g << "not a cache";
    }
    CHECK(run_cli({"count", "--j-max", "1", "--sieve-cache", garbage.string()}).code == 3);
    std::filesystem::remove(garbage);

    CHECK(run_cli({"sieve", "--k-max", "10"}).code == 2);
    CHECK(run_cli({"sieve", "--out", "x"}).code == 2);
}

TEST_CASE("output does not depend on thread count")
{
    const std::vector<std::vector<std::string>> commands{
        {"count", "--j-max", "60"},
        {"approx", "--j-max", "120"},
        {"verify", "--suite", "all", "--j-max", "40", "--n-max", "5000"},
    };
    for (const auto& base : commands) {
        std::string reference;
        for (const char* t : {"1", "2", "8"}) {
            auto args = base;
            args.push_back("--threads");
            args.push_back(t);
            const auto r = run_cli(args);
            REQUIRE(r.code == 0);
            if (reference.empty())
                reference = r.out;
            CHECK(r.out == reference);
        }
    }
}

TEST_CASE("thread count from the environment")
{
    setenv("ODDIDX_THREADS", "3", 1);
    CHECK(run_cli({"count", "--j-max", "3"}).code == 0);
    setenv("ODDIDX_THREADS", "zero", 1);
    CHECK(run_cli({"count", "--j-max", "3"}).code == 2);
    // the flag wins over the environment
    CHECK(run_cli({"count", "--j-max", "3", "--threads", "2"}).code == 0);
    unsetenv("ODDIDX_THREADS");
}

TEST_CASE("process exit codes")
{
    const std::string tool = ODDIDX_TOOL;
    auto status = [&](const std::string& args) {
        const int s = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    CHECK(status("count --j-max 1") == 0);
    CHECK(status("count --j-max -1") == 2);
    CHECK(status("verify --suite bogus") == 2);
    CHECK(status("--help") == 0);
}
