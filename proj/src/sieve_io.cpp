#include "oddidx/sieve_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "oddidx/error.hpp"

namespace oddidx {

namespace {

constexpr std::array<char, 4> kMagic{'O', 'D', 'S', 'V'};
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void bytes(const char* p, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i) {
            hash_ ^= static_cast<unsigned char>(p[i]);
            hash_ *= kFnvPrime;
        }
        out_.write(p, static_cast<std::streamsize>(n));
    }

    template <typename T>
    void le(T v)
    {
        std::array<char, sizeof(T)> buf;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        bytes(buf.data(), buf.size());
    }

    std::uint64_t hash() const { return hash_; }

private:
    std::ostream& out_;
    std::uint64_t hash_ = kFnvOffset;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    void bytes(char* p, std::size_t n)
    {
        if (!in_.read(p, static_cast<std::streamsize>(n)))
            throw FormatError("sieve cache truncated");
        for (std::size_t i = 0; i < n; ++i) {
            hash_ ^= static_cast<unsigned char>(p[i]);
            hash_ *= kFnvPrime;
        }
    }

    template <typename T>
    T le()
    {
        std::array<char, sizeof(T)> buf;
        bytes(buf.data(), buf.size());
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<T>(static_cast<unsigned char>(buf[i])) << (8 * i);
        return v;
    }

    std::uint64_t hash() const { return hash_; }

private:
    std::istream& in_;
    std::uint64_t hash_ = kFnvOffset;
};

std::uint64_t read_header(Reader& r)
{
    std::array<char, 4> magic;
    r.bytes(magic.data(), magic.size());
    if (magic != kMagic)
        throw FormatError("not a sieve cache (bad magic)");
    const auto version = r.le<std::uint32_t>();
    if (version != kSieveFormatVersion)
        throw FormatError("unsupported sieve cache version " + std::to_string(version));
    return r.le<std::uint64_t>();
}

std::vector<std::uint64_t> read_words(Reader& r, std::size_t expected, const char* what)
{
    const auto n = r.le<std::uint64_t>();
    if (n != expected)
        throw FormatError(std::string("sieve cache: unexpected ") + what + " word count");
    std::vector<std::uint64_t> words(expected);
    for (auto& w : words)
        w = r.le<std::uint64_t>();
    return words;
}

} // namespace

void save_table(const OddSieveTable& table, std::ostream& out)
{
    Writer w(out);
    w.bytes(kMagic.data(), kMagic.size());
    w.le<std::uint32_t>(kSieveFormatVersion);
    w.le<std::uint64_t>(table.k_max());
    w.le<std::uint64_t>(table.composite_words().size());
    for (const auto word : table.composite_words())
        w.le<std::uint64_t>(word);
    w.le<std::uint64_t>(table.mu_words().size());
    for (const auto word : table.mu_words())
        w.le<std::uint64_t>(word);
    const std::uint64_t digest = w.hash();
    w.le<std::uint64_t>(digest);
    if (!out)
        throw ResourceError("failed writing sieve cache");
}

OddSieveTable load_table(std::istream& in)
{
    Reader r(in);
    const std::uint64_t k_max = read_header(r);
    auto w_words = read_words(r, composite_word_count(k_max), "composite");
    auto mu_words = read_words(r, mu_word_count(k_max), "mu");
    const std::uint64_t digest = r.hash();
    if (r.le<std::uint64_t>() != digest)
        throw FormatError("sieve cache checksum mismatch");
    return OddSieveTable::from_packed(k_max, std::move(w_words), std::move(mu_words));
}

void save_table(const OddSieveTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ResourceError("cannot open " + path.string() + " for writing");
    save_table(table, out);
}

OddSieveTable load_table(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ResourceError("cannot open " + path.string());
    return load_table(in);
}

std::uint64_t peek_k_max(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ResourceError("cannot open " + path.string());
    Reader r(in);
    return read_header(r);
}

} // namespace oddidx
