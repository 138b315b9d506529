#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace oddidx::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kResource = 3,
};

enum class Format { csv, jsonl };

struct RunConfig {
    std::string command;
    std::optional<std::int64_t> j_max;
    std::vector<std::int64_t> j_list;
    std::int64_t n_max = 10000;
    std::int64_t k_max = 0;
    std::uint64_t segment_size = std::uint64_t{1} << 22;
    std::uint64_t memory_mb = 4096;
    unsigned threads = 1;
    std::string output_path;
    Format format = Format::csv;
    std::string sieve_cache;
    std::string plot_script;
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::uint64_t cases = 10000;
    int precision = 6;
    bool timing = false;
};

// Runs one command line (without the program name). Normal output goes to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Fixed-point rendering used for every real-valued CSV field.
std::string format_real(double v, int precision);

} // namespace oddidx::cli
