#include "rwa/combinatorics.hpp"
#include "rwa/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <vector>

using rwa::BigInt;
using rwa::MultiIndex;
using rwa::Rational;

TEST_CASE("pochhammer evaluates rising factorials") {
    REQUIRE(rwa::pochhammer(Rational(2), 3) == 24);  // 2*3*4
    REQUIRE(rwa::pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    REQUIRE(rwa::pochhammer(Rational(5, 3), 0) == 1);
    REQUIRE(rwa::pochhammer(Rational(-7, 2), 0) == 1);
    REQUIRE(rwa::pochhammer(Rational(1), 5) == 120);
    REQUIRE(rwa::pochhammer(Rational(-2), 3) == 0);  // factor hits zero
}

TEST_CASE("pochhammer composition law") {
    // (a)_{j+k} = (a)_j * (a+j)_k
    rwa::RngStream rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto num = static_cast<std::int64_t>(rng.next_u64() % 16) + 1;
        const auto den = static_cast<std::int64_t>(rng.next_u64() % 8) + 1;
        const Rational a(num, den);
        const auto j = static_cast<unsigned>(rng.next_u64() % 9);
        const auto k = static_cast<unsigned>(rng.next_u64() % 9);
        REQUIRE(rwa::pochhammer(a, j + k) ==
                rwa::pochhammer(a, j) * rwa::pochhammer(a + j, k));
    }
}

TEST_CASE("binomial coefficients") {
    REQUIRE(rwa::binomial(5, 2) == 10);
    REQUIRE(rwa::binomial(6, 0) == 1);
    REQUIRE(rwa::binomial(6, 6) == 1);
    REQUIRE(rwa::binomial(3, 5) == 0);
    REQUIRE(rwa::binomial(52, 5) == 2598960);
}

TEST_CASE("multinomial coefficients") {
    REQUIRE(rwa::multinomial(2, MultiIndex({1, 1})) == 2);
    REQUIRE(rwa::multinomial(3, MultiIndex({2, 1})) == 3);
    for (unsigned k = 0; k <= 6; ++k) REQUIRE(rwa::multinomial(k, MultiIndex({k})) == 1);
    REQUIRE(rwa::multinomial(4, MultiIndex({2, 2})) == 6);
    REQUIRE(rwa::multinomial(6, MultiIndex({2, 2, 2})) == 90);
    REQUIRE_THROWS_AS(rwa::multinomial(3, MultiIndex({1, 1})), std::invalid_argument);
}

TEST_CASE("MultiIndex validates and sums its parts") {
    const MultiIndex idx({2, 0, 3});
    REQUIRE(idx.order() == 5);
    REQUIRE(idx.size() == 3);
    REQUIRE(idx[2] == 3);
    REQUIRE_THROWS_AS(MultiIndex({}), std::invalid_argument);
}

TEST_CASE("compositions enumerate in lexicographically decreasing order") {
    const auto two_two = rwa::compositions(2, 2);
    REQUIRE(two_two == std::vector<MultiIndex>{MultiIndex({2, 0}), MultiIndex({1, 1}),
                                               MultiIndex({0, 2})});

    REQUIRE(rwa::compositions(4, 3).size() == 15);

    const auto zero = rwa::compositions(0, 4);
    REQUIRE(zero == std::vector<MultiIndex>{MultiIndex({0, 0, 0, 0})});

    const auto singles = rwa::compositions(5, 1);
    REQUIRE(singles == std::vector<MultiIndex>{MultiIndex({5})});

    REQUIRE_THROWS_AS(rwa::compositions(3, 0), std::invalid_argument);

    const auto all = rwa::compositions(5, 3);
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto& prev = all[i - 1].parts();
        const auto& cur = all[i].parts();
        REQUIRE(std::lexicographical_compare(cur.begin(), cur.end(), prev.begin(), prev.end()));
    }
}

TEST_CASE("composition visitor matches the materialized list") {
    std::vector<std::vector<unsigned>> seen;
    rwa::for_each_composition(3, 3, [&](std::span<const unsigned> c) {
        seen.emplace_back(c.begin(), c.end());
    });
    const auto materialized = rwa::compositions(3, 3);
    REQUIRE(seen.size() == materialized.size());
    for (std::size_t i = 0; i < seen.size(); ++i) REQUIRE(seen[i] == materialized[i].parts());
}

TEST_CASE("composition count equals binomial(k+r-1, r-1)") {
    for (unsigned k = 0; k <= 12; ++k) {
        for (std::size_t r = 1; r <= 6; ++r) {
            const auto expected = rwa::binomial(k + static_cast<unsigned>(r) - 1,
                                                static_cast<unsigned>(r) - 1);
            REQUIRE(rwa::composition_count(k, r) == expected);
            REQUIRE(BigInt(rwa::compositions(k, r).size()) == expected);
        }
    }
}

TEST_CASE("multinomials over compositions sum to r^k") {
    for (unsigned k = 0; k <= 10; ++k) {
        for (std::size_t r = 1; r <= 5; ++r) {
            BigInt total(0);
            rwa::for_each_composition(
                k, r, [&](std::span<const unsigned> c) { total += rwa::multinomial(k, c); });
            REQUIRE(total == boost::multiprecision::pow(BigInt(r), k));
        }
    }
}
