#include "doctest.h"

#include <cstdint>
#include <limits>
#include <random>

#include "oddidx/error.hpp"
#include "oddidx/index_core.hpp"

using namespace oddidx;

TEST_CASE("to_number and to_index")
{
    CHECK(to_number(Index{0}) == 3);
    CHECK(to_number(Index{11}) == 25);
    CHECK(to_number(Index{16}) == 35);

    CHECK(to_index(3) == Index{0});
    CHECK(to_index(25) == Index{11});
    CHECK_THROWS_AS(to_index(4), DomainError);
    CHECK_THROWS_AS(to_index(1), DomainError);

    const std::uint64_t big = std::numeric_limits<std::uint64_t>::max() / 2;
    CHECK_THROWS_AS(to_number(Index{big}), OverflowError);
}

TEST_CASE("index round trip")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const Index k{rng() >> 2};
        CHECK(to_index(to_number(k)) == k);
    }
    for (std::uint64_t k = 0; k < 1000; ++k)
        CHECK(to_index(to_number(Index{k})).value() == k);
}

TEST_CASE("k_of")
{
    CHECK(k_of(0, 1) == Index{3});
    CHECK(k_of(1, 2) == Index{11});
    CHECK(k_of(1, 1) == Index{6});
    CHECK_THROWS_AS(k_of(4, 0), DomainError);
    CHECK_THROWS_AS(k_of(std::numeric_limits<std::uint64_t>::max() / 4, 3), OverflowError);

    for (std::uint64_t j = 0; j < 40; ++j)
        for (std::uint64_t n = 1; n < 40; ++n)
            CHECK(to_number(k_of(j, n)) == (2 * j + 3) * (2 * n + 1));
}

TEST_CASE("star is the index image of multiplication")
{
    CHECK(star(Index{0}, Index{0}) == Index{3});
    CHECK(star(Index{1}, Index{2}) == Index{16});
    CHECK(star(Index{0}, Index{1}) == Index{6});

    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Index a{rng() % 100000}, b{rng() % 100000}, c{rng() % 100000};
        CHECK(to_number(star(a, b)) == to_number(a) * to_number(b));
        CHECK(star(a, b) == star(b, a));
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
    }
    CHECK_THROWS_AS(star(Index{std::uint64_t{1} << 40}, Index{std::uint64_t{1} << 40}), OverflowError);
}

TEST_CASE("remarkable indices")
{
    CHECK(remarkable(0) == Index{3});
    CHECK(remarkable(1) == Index{11});
    CHECK(remarkable(2) == Index{23});
    for (std::uint64_t j = 0; j <= 100000; ++j) {
        const std::uint64_t r = remarkable(j).value();
        REQUIRE(r == 2 * j * j + 6 * j + 3);
        REQUIRE(r % 3 == (j % 3 == 0 ? 0u : 2u));
    }
    CHECK(to_number(remarkable(7)) == 17 * 17);
}

TEST_CASE("unit and interval_D")
{
    CHECK(unit(0) == 12);
    CHECK(unit(1) == 12);
    CHECK(unit(5) == 28);

    auto d0 = interval_D(0);
    CHECK(d0.upper == Index{11});
    CHECK(d0.size == 12);
    auto d1 = interval_D(1);
    CHECK(d1.upper == Index{23});
    CHECK(d1.size == 24);
    auto d2 = interval_D(2);
    CHECK(d2.upper == Index{39});
    CHECK(d2.size == 40);

    std::uint64_t units = 0;
    for (std::uint64_t j = 0; j <= 100000; ++j) {
        units += unit(j);
        const auto d = interval_D(j);
        REQUIRE(2 * d.upper.value() + 3 == (2 * j + 5) * (2 * j + 5));
        REQUIRE(d.size == d.upper.value() + 1);
        REQUIRE(d.size == 2 * j * j + 10 * j + 12);
        REQUIRE(d.size == units);
        // each unit interval I_j ends where I_D(j) does
        if (j > 0)
            REQUIRE(remarkable(j).value() + 1 + unit(j) - 1 == d.upper.value());
    }
    CHECK(top_square(0) == 25);
    CHECK_THROWS_AS(interval_D(std::uint64_t{1} << 40), OverflowError);
}
