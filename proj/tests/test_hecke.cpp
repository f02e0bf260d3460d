#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gonality/hecke.hpp"
#include "gonality/modgenus.hpp"
#include "gonality/rules.hpp"
#include "oracles.hpp"

using namespace gonality;

TEST_CASE("traces")
{
    CHECK(trace_Tm(Level(37), 1).value == 2);
    CHECK(trace_Tm(Level(11), 2).value == -2);
    CHECK(trace_Tm(Level(420), 1).value == 85);
    CHECK_THROWS_AS(trace_Tm(Level(70), 2), domain_error);
    CHECK_THROWS_AS(trace_Tm(Level(70), 0), domain_error);
}

TEST_CASE("Tr T_1 equals the genus for N <= 500")
{
    for (std::int64_t n = 1; n <= 500; ++n)
        REQUIRE_MESSAGE(trace_Tm(Level(n), 1).value == genus_X0(Level(n)).genus, "N = " << n);
}

TEST_CASE("point counts")
{
    auto const c = count_points(Level(420), 11, 2);
    CHECK(c.q == 121);
    CHECK(c.count == 1128);
    CHECK(count_points(Level(11), 2, 1).count == 5);
    CHECK(count_points(Level(8), 3, 1).count == 4);
    CHECK_THROWS_AS(count_points(Level(70), 7, 1), domain_error);
    CHECK_THROWS_AS(count_points(Level(70), 9, 1), domain_error);
    CHECK_THROWS_AS(count_points(Level(70), 3, 3), domain_error);
}

TEST_CASE("X0(11) counts match the Weierstrass model")
{
    for (std::int64_t p : {2, 3, 5, 7, 13, 17, 19, 23})
        CHECK_MESSAGE(count_points(Level(11), p, 1).count == oracle::x0_11_points(p), "p = " << p);
}

TEST_CASE("genus-0 levels have exactly q + 1 points")
{
    for (std::int64_t n = 1; n <= 50; ++n) {
        if (genus_X0(Level(n)).genus != 0)
            continue;
        for (auto p : primes_up_to(23)) {
            if (n % p == 0)
                continue;
            for (int e : {1, 2}) {
                auto const c = count_points(Level(n), p, e);
                REQUIRE_MESSAGE(c.count == c.q + 1, "N = " << n << ", q = " << c.q);
            }
        }
    }
}

TEST_CASE("genus-1 levels: a_{p^2} = a_p^2 - p")
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        if (genus_X0(Level(n)).genus != 1)
            continue;
        for (auto p : primes_up_to(40)) {
            if (n % p == 0)
                continue;
            auto const ap = trace_Tm(Level(n), p).value;
            REQUIRE(trace_Tm(Level(n), p * p).value == ap * ap - p);
        }
    }
}

TEST_CASE("Weil bound and Ogg's supersingular bound hold on computed counts")
{
    for (std::int64_t n = 2; n <= 300; ++n) {
        Level const level(n);
        auto const g = genus_X0(level).genus;
        for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
            if (n % p == 0)
                continue;
            for (int e : {1, 2}) {
                auto const c = count_points(level, p, e);
                REQUIRE_MESSAGE(satisfies_weil_bound(c.count, c.q, g), "N = " << n << ", q = " << c.q);
            }
            auto const c2 = count_points(level, p, 2).count;
            REQUIRE_MESSAGE(Rational(c2) >= ogg_Lp(level, p).value, "N = " << n << ", p = " << p);
        }
    }
}

TEST_CASE("Weil bound predicate")
{
    CHECK(satisfies_weil_bound(5, 2, 1));
    CHECK(satisfies_weil_bound(4, 3, 0));
    CHECK_FALSE(satisfies_weil_bound(5, 3, 0));
    CHECK_FALSE(satisfies_weil_bound(1128, 121, 0));
}
