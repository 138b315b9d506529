#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "oddidx/analytic.hpp"
#include "oddidx/counting.hpp"
#include "oddidx/error.hpp"
#include "oddidx/index_core.hpp"
#include "oddidx/parallel.hpp"
#include "oddidx/sieve.hpp"
#include "oddidx/sieve_io.hpp"
#include "oddidx/verify.hpp"

namespace oddidx::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kThreadsEnv = "ODDIDX_THREADS";

class UsageError : public Error {
public:
    using Error::Error;
};

std::uint64_t require_non_negative(std::int64_t v, const char* flag)
{
    if (v < 0)
        throw UsageError(std::string(flag) + " must be >= 0");
    return static_cast<std::uint64_t>(v);
}

// Requested j values, ascending and without duplicates.
std::vector<std::uint64_t> j_values(const RunConfig& cfg)
{
    std::vector<std::uint64_t> js;
    if (cfg.j_max) {
        const std::uint64_t top = require_non_negative(*cfg.j_max, "--j-max");
        js.reserve(top + 1);
        for (std::uint64_t j = 0; j <= top; ++j)
            js.push_back(j);
    }
    for (const auto v : cfg.j_list)
        js.push_back(require_non_negative(v, "--j"));
    if (js.empty())
        throw UsageError("one of --j-max or --j is required");
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    return js;
}

SieveOptions sieve_options(const RunConfig& cfg)
{
    SieveOptions o;
    o.segment_size = cfg.segment_size;
    o.threads = cfg.threads;
    o.memory_budget = cfg.memory_mb << 20;
    return o;
}

// Loads the cache when it is large enough; otherwise builds and, if a cache
// path was given, writes it.
OddSieveTable acquire_table(std::uint64_t k_needed, const RunConfig& cfg)
{
    if (!cfg.sieve_cache.empty() && std::filesystem::exists(cfg.sieve_cache)) {
        if (peek_k_max(cfg.sieve_cache) >= k_needed)
            return load_table(std::filesystem::path(cfg.sieve_cache));
    }
    OddSieveTable table = build(k_needed, sieve_options(cfg));
    if (!cfg.sieve_cache.empty())
        save_table(table, std::filesystem::path(cfg.sieve_cache));
    return table;
}

// Either the file named by --out or the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_)
                throw ResourceError("cannot open " + path + " for writing");
            stream_ = &file_;
        }
    }

    std::ostream& stream() { return *stream_; }

    void finish()
    {
        stream_->flush();
        if (!*stream_)
            throw ResourceError("write failed");
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string opt_int(const std::optional<std::int64_t>& v)
{
    return v ? std::to_string(*v) : std::string();
}

ordered_json opt_json(const std::optional<std::int64_t>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

int cmd_count(const RunConfig& cfg, std::ostream& out)
{
    const auto js = j_values(cfg);
    const OddSieveTable table = acquire_table(interval_D(js.back()).upper.value(), cfg);

    std::vector<CountReport> reports(js.size());
    parallel_for(js.size(), cfg.threads, [&](std::size_t i) { reports[i] = count_report(js[i], table); });

    Sink sink(cfg.output_path, out);
    auto& os = sink.stream();
    if (cfg.format == Format::csv) {
        os << "j,x,A,B_oracle,B_mobius_literal,B_mobius_corrected,B_subsets_literal,B_subsets_corrected,pi_prime\n";
        for (const auto& r : reports)
            os << r.j << ',' << top_square(r.j) << ',' << r.a_count << ',' << r.b_oracle << ','
               << r.b_mobius_literal << ',' << r.b_mobius_corrected << ',' << opt_int(r.b_subsets_literal) << ','
               << opt_int(r.b_subsets_corrected) << ',' << r.pi_prime << '\n';
    } else {
        for (const auto& r : reports) {
            ordered_json row;
            row["j"] = r.j;
            row["x"] = top_square(r.j);
            row["A"] = r.a_count;
            row["B_oracle"] = r.b_oracle;
            row["B_mobius_literal"] = r.b_mobius_literal;
            row["B_mobius_corrected"] = r.b_mobius_corrected;
            row["B_subsets_literal"] = opt_json(r.b_subsets_literal);
            row["B_subsets_corrected"] = opt_json(r.b_subsets_corrected);
            row["pi_prime"] = r.pi_prime;
            os << row.dump() << '\n';
        }
    }
    sink.finish();
    return kOk;
}

std::string plot_script_text(const std::string& csv_path)
{
    const std::string data = csv_path.empty() ? "approx.csv" : csv_path;
    std::ostringstream os;
    os << "# gnuplot script for the j,x,p,a,e,m table\n"
       << "set datafile separator ','\n"
       << "set logscale x\n"
       << "set xlabel '(2j+5)^2'\n"
       << "set ylabel 'proportion of composites'\n"
       << "set key bottom right\n"
       << "plot '" << data << "' using 2:3 skip 1 with lines title 'p (exact)', \\\n"
       << "     '' using 2:4 skip 1 with lines title 'a (Hadamard)', \\\n"
       << "     '' using 2:5 skip 1 with lines title 'e (Euler)', \\\n"
       << "     '' using 2:6 skip 1 with lines title 'm (Moebius)'\n";
    return os.str();
}

int cmd_approx(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.precision < 1 || cfg.precision > 15)
        throw UsageError("--precision must be between 1 and 15");
    const auto js = j_values(cfg);
    const OddSieveTable table = acquire_table(interval_D(js.back()).upper.value(), cfg);
    const auto rows = series_table(js, table, cfg.threads);

    Sink sink(cfg.output_path, out);
    auto& os = sink.stream();
    if (cfg.format == Format::csv) {
        os << "j,x,p,a,e,m\n";
        for (const auto& r : rows)
            os << r.j << ',' << r.x << ',' << format_real(r.p, cfg.precision) << ','
               << (r.a ? format_real(*r.a, cfg.precision) : std::string()) << ','
               << format_real(r.e, cfg.precision) << ',' << format_real(r.m, cfg.precision) << '\n';
    } else {
        for (const auto& r : rows) {
            ordered_json row;
            row["j"] = r.j;
            row["x"] = r.x;
            row["p"] = r.p;
            row["a"] = r.a ? ordered_json(*r.a) : ordered_json(nullptr);
            row["e"] = r.e;
            row["m"] = r.m;
            os << row.dump() << '\n';
        }
    }
    sink.finish();

    if (!cfg.plot_script.empty()) {
        std::ofstream plot(cfg.plot_script, std::ios::binary | std::ios::trunc);
        if (!plot)
            throw ResourceError("cannot open " + cfg.plot_script + " for writing");
        plot << plot_script_text(cfg.output_path);
        if (!plot)
            throw ResourceError("write failed: " + cfg.plot_script);
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!is_suite(cfg.suite))
        throw UsageError("unknown suite '" + cfg.suite + "'");
    VerifyBounds bounds;
    bounds.j_max = require_non_negative(cfg.j_max.value_or(50), "--j-max");
    bounds.n_max = require_non_negative(cfg.n_max, "--n-max");
    bounds.seed = cfg.seed;
    bounds.random_cases = cfg.cases;

    const OddSieveTable table = acquire_table(required_k_max(cfg.suite, bounds), cfg);
    const VerifyReport report = run_suite(cfg.suite, bounds, table, cfg.threads);

    Sink sink(cfg.output_path, out);
    sink.stream() << to_jsonl(report, cfg.timing);
    sink.finish();

    const auto passed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const CheckResult& c) { return c.pass; });
    err << "verify " << report.suite << ": " << passed << '/' << report.checks.size() << " checks passed\n";
    return report.all_passed() ? kOk : kVerifyFailed;
}

int cmd_sieve(const RunConfig& cfg)
{
    const std::uint64_t k_max = require_non_negative(cfg.k_max, "--k-max");
    if (cfg.output_path.empty())
        throw UsageError("--out is required");
    const OddSieveTable table = build(k_max, sieve_options(cfg));
    save_table(table, std::filesystem::path(cfg.output_path));
    return kOk;
}

unsigned threads_from_env()
{
    const char* v = std::getenv(kThreadsEnv);
    if (v == nullptr || *v == '\0')
        return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1)
        throw UsageError(std::string(kThreadsEnv) + " must be a positive integer");
    return static_cast<unsigned>(n);
}

} // namespace

std::string format_real(double v, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Odd-number index calculus: composite counts, approximation tables, identity checks", "oddidx"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.seed = kDefaultSeed;
    std::int64_t j_max = -1;
    std::string format = "csv";
    std::optional<std::int64_t> threads;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", threads, "Worker threads (default: $ODDIDX_THREADS or 1)");
        sub->add_option("--segment-size", cfg.segment_size, "Sieve segment size in indices");
        sub->add_option("--memory-mb", cfg.memory_mb, "Sieve memory budget in MiB");
        sub->add_option("--out", cfg.output_path, "Output file (default: standard output)");
    };
    auto add_table_source = [&](CLI::App* sub) {
        sub->add_option("--sieve-cache", cfg.sieve_cache, "Sieve cache file to load or create");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    };

    auto* count = app.add_subcommand("count", "Count |A(j)| and |B(j)| by every route");
    add_common(count);
    add_table_source(count);
    auto* count_jmax = count->add_option("--j-max", j_max, "Emit j = 0 .. j-max");
    count->add_option("--j", cfg.j_list, "Emit the listed j values")->delimiter(',');

    auto* approx = app.add_subcommand("approx", "Table of p_j, a_j, e_j, m_j against x = (2j+5)^2");
    add_common(approx);
    add_table_source(approx);
    auto* approx_jmax = approx->add_option("--j-max", j_max, "Emit j = 0 .. j-max");
    approx->add_option("--j", cfg.j_list, "Emit the listed j values")->delimiter(',');
    approx->add_option("--precision", cfg.precision, "Decimals for real fields (1..15)");
    approx->add_option("--plot-script", cfg.plot_script, "Also write a gnuplot script (log-scale x)");

    auto* verify = app.add_subcommand("verify", "Run identity and structure checks, JSON lines report");
    add_common(verify);
    verify->add_option("--sieve-cache", cfg.sieve_cache, "Sieve cache file to load or create");
    verify->add_option("--suite", cfg.suite, "all|sieve|lemmas|structure|counting|identities|analytic");
    auto* verify_jmax = verify->add_option("--j-max", j_max, "Upper j for j-indexed checks (default 50)");
    verify->add_option("--n-max", cfg.n_max, "Upper n for the Moebius identities (default 10000)");
    verify->add_option("--seed", cfg.seed, "Seed for randomized checks");
    verify->add_option("--cases", cfg.cases, "Random cases per randomized check");
    verify->add_flag("--timing", cfg.timing, "Include elapsed_ms per check (output no longer reproducible)");

    auto* sieve = app.add_subcommand("sieve", "Build a sieve table and write it as a cache file");
    add_common(sieve);
    sieve->add_option("--k-max", cfg.k_max, "Largest index covered")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*count_jmax || *approx_jmax || *verify_jmax)
            cfg.j_max = j_max;
        cfg.format = format == "jsonl" ? Format::jsonl : Format::csv;
        if (threads && *threads < 1)
            throw UsageError("--threads must be >= 1");
        cfg.threads = threads ? static_cast<unsigned>(*threads) : threads_from_env();

        if (count->parsed()) {
            cfg.command = "count";
            return cmd_count(cfg, out);
        }
        if (approx->parsed()) {
            cfg.command = "approx";
            return cmd_approx(cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, out, err);
        }
        cfg.command = "sieve";
        return cmd_sieve(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResource;
    }
}

} // namespace oddidx::cli
