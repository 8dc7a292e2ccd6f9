#include <catch2/catch_amalgamated.hpp>

#include "oracle_helpers.hpp"

#include <horrocks/spectrum.hpp>

using namespace horrocks;

TEST_CASE("the published c2 = 9 table, in order")
{
    auto spectra = enumerate_spectra(9);
    REQUIRE(spectra.size() == 11);
    const std::vector<std::vector<int>> expected = {
        {9},          {7, 1},          {5, 2},    {5, 1, 1},
        {3, 2, 1},    {3, 1, 1, 1},    {1, 4},    {1, 3, 1},
        {1, 2, 2},    {1, 2, 1, 1},    {1, 1, 1, 1, 1},
    };
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(spectra[i].multiplicities() == expected[i]);
    CHECK(spectra[8].str() == "-2,-2,-1,-1,0,1,1,2,2");
    CHECK(spectra[0].compact_str() == "{0^9}");
    CHECK(spectra[10].compact_str() == "{-4,-3,-2,-1,0,1,2,3,4}");
}

TEST_CASE("the seven c2 = 8 spectra")
{
    auto spectra = enumerate_spectra(8);
    REQUIRE(spectra.size() == 7);
    const std::vector<std::vector<int>> expected = {
        {8},       {6, 1},       {4, 2}, {4, 1, 1},
        {2, 3},    {2, 2, 1},    {2, 1, 1, 1},
    };
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(spectra[i].multiplicities() == expected[i]);
}

TEST_CASE("small c2 cases")
{
    auto one = enumerate_spectra(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].str() == "0");

    auto two = enumerate_spectra(2);
    REQUIRE(two.size() == 1); // {-1,1} is disconnected
    CHECK(two[0].str() == "0,0");

    CHECK_THROWS_AS(enumerate_spectra(0), std::invalid_argument);
}

TEST_CASE("enumeration equals the brute-force multiset filter")
{
    for (int c2 = 1; c2 <= 10; ++c2) {
        auto fast = enumerate_spectra(c2);
        auto slow = oracle::brute_force_spectra(c2);
        REQUIRE(fast.size() == slow.size());
        std::vector<std::vector<int>> fast_multisets;
        for (const auto& sp : fast) {
            auto ms = sp.full_multiset();
            std::sort(ms.begin(), ms.end());
            fast_multisets.push_back(std::move(ms));
        }
        std::sort(fast_multisets.begin(), fast_multisets.end());
        std::sort(slow.begin(), slow.end());
        CHECK(fast_multisets == slow);
    }
}

TEST_CASE("every enumerated spectrum is symmetric and validates")
{
    for (int c2 : {5, 8, 9, 10}) {
        for (const auto& sp : enumerate_spectra(c2)) {
            CHECK(sp.c2() == c2);
            CHECK(sp.well_formed());
            auto ms = sp.full_multiset();
            std::vector<int> neg;
            for (int e : ms)
                neg.push_back(-e);
            std::sort(ms.begin(), ms.end());
            std::sort(neg.begin(), neg.end());
            CHECK(ms == neg);
        }
    }
}

TEST_CASE("n_l counts entries at least l-1")
{
    auto spectra = enumerate_spectra(9);
    const Spectrum& x9 = spectra[8]; // {-2^2,-1^2,0,1^2,2^2}
    CHECK(n_l(x9, 1) == 5);
    CHECK(n_l(x9, 2) == 4);
    CHECK(n_l(x9, 3) == 2);
    CHECK(n_l(x9, 4) == 0);

    const Spectrum& x1 = spectra[0];
    CHECK(n_l(x1, 1) == 9);
    CHECK(n_l(x1, 2) == 0);

    CHECK_THROWS_AS(n_l(x1, 0), std::invalid_argument);
}

TEST_CASE("h1 prediction from the spectrum")
{
    auto spectra = enumerate_spectra(9);
    const Spectrum& family = spectra[8];
    CHECK(h1_predicted(family, -1) == 11);
    CHECK(h1_predicted(family, -2) == 6);
    CHECK(h1_predicted(family, -3) == 2);
    CHECK(h1_predicted(family, -4) == 0);

    CHECK(h1_predicted(spectra[0], -1) == 9);
    CHECK_THROWS_AS(h1_predicted(spectra[0], 0), std::invalid_argument);
}

TEST_CASE("n_l telescopes to the first h1 value")
{
    for (int c2 : {6, 9}) {
        for (const auto& sp : enumerate_spectra(c2)) {
            std::int64_t total = 0;
            for (int l = 1; l <= sp.max_support() + 1; ++l)
                total += n_l(sp, l);
            CHECK(total == h1_predicted(sp, -1));
        }
    }
}

TEST_CASE("spectrum text forms round trip")
{
    for (const auto& sp : enumerate_spectra(9)) {
        CHECK(parse_spectrum(sp.str()) == sp);
        CHECK(parse_spectrum(sp.compact_str()) == sp);
    }
    CHECK_THROWS_AS(parse_spectrum("1,2"), std::invalid_argument);   // asymmetric
    CHECK_THROWS_AS(parse_spectrum("-1,1"), std::invalid_argument);  // gap at 0
}

TEST_CASE("spectrum constructors reject invalid data")
{
    CHECK_THROWS_AS(Spectrum::from_multiplicities({1, 0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Spectrum::from_multiplicities({}),
                    std::invalid_argument);
    // multiplicity-one tail: {-3,-2^2,...} with s(2) = 2 after s(3)... and
    // a singleton at 2 below a double at 3 violates monotonicity too
    CHECK_THROWS_AS(Spectrum::from_multiplicities({1, 1, 1, 2}),
                    std::invalid_argument);
    // zero dominance
    CHECK_THROWS_AS(Spectrum::from_multiplicities({3, 3}),
                    std::invalid_argument);
}
