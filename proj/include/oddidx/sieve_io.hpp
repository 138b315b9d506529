#pragma once

// Binary cache for OddSieveTable. All integers little-endian:
//
//   offset 0   "ODSV"
//          4   u32 version (1)
//          8   u64 k_max
//         16   u64 w_words, then w_words x u64   composite bits, bit k = index k
//              u64 mu_words, then mu_words x u64 2-bit mu codes (0, 1 = +1, 2 = -1)
//              u64 FNV-1a 64 of every preceding byte
//
// The prime list is not stored; it is rebuilt from the composite bits.

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "oddidx/sieve.hpp"

namespace oddidx {

inline constexpr std::uint32_t kSieveFormatVersion = 1;

void save_table(const OddSieveTable& table, std::ostream& out);
OddSieveTable load_table(std::istream& in);

void save_table(const OddSieveTable& table, const std::filesystem::path& path);
OddSieveTable load_table(const std::filesystem::path& path);

// Reads only the header; returns k_max. Throws FormatError on a bad header.
std::uint64_t peek_k_max(const std::filesystem::path& path);

} // namespace oddidx
