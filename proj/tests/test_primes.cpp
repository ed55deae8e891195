#include "antimagic/errors.hpp"
#include "antimagic/primes.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <vector>

using namespace antimagic;

namespace {

std::vector<Prime> as_vector(const PrimeTable& t) { return {t.values().begin(), t.values().end()}; }

} // namespace

TEST_CASE("first_m_primes worked examples") {
    CHECK(as_vector(first_m_primes(6)) == std::vector<Prime>{2, 3, 5, 7, 11, 13});
    CHECK(first_m_primes(0).count() == 0);
    CHECK(as_vector(first_m_primes(14)) ==
          std::vector<Prime>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43});
}

TEST_CASE("first_m_primes matches trial division for every small m") {
    const auto reference = oracle::trial_division_primes(600);
    for (std::size_t m = 0; m <= reference.size(); ++m) {
        const PrimeTable t = first_m_primes(m);
        REQUIRE(t.count() == m);
        CHECK(std::equal(t.values().begin(), t.values().end(), reference.begin()));
    }
}

TEST_CASE("first_m_primes matches trial division at 1e5") {
    const auto reference = oracle::incremental_trial_division_primes(100000);
    CHECK(as_vector(first_m_primes(100000)) == reference);
}

TEST_CASE("first_m_primes crosses sieve segment boundaries") {
    // 2^18 odd numbers per segment; 60000 primes reach past 740000.
    const auto reference = oracle::incremental_trial_division_primes(60000);
    CHECK(as_vector(first_m_primes(60000)) == reference);
}

TEST_CASE("first_m_primes refuses requests above the cap") {
    CHECK_THROWS_AS(first_m_primes(11, 10), CapacityError);
    CHECK(first_m_primes(10, 10).count() == 10);
}

TEST_CASE("nth_prime is 1-indexed") {
    const PrimeTable t = first_m_primes(30);
    CHECK(nth_prime(t, 1) == 2);
    CHECK(nth_prime(t, 13) == 41);
    CHECK(nth_prime(t, 30) == 113);
    CHECK_THROWS_AS(nth_prime(t, 0), IndexError);
    CHECK_THROWS_AS(nth_prime(t, 31), IndexError);
    for (std::size_t i = 1; i < t.count(); ++i) CHECK(t.at(i) < t.at(i + 1));
}

TEST_CASE("sieve_upper_bound admits enough primes") {
    CHECK(sieve_upper_bound(6) >= 13);
    CHECK(sieve_upper_bound(14) >= 43);
    CHECK(sieve_upper_bound(1000) >= 7919);

    const auto reference = oracle::incremental_trial_division_primes(10000);
    for (std::size_t m = 1; m <= reference.size(); ++m) {
        REQUIRE(sieve_upper_bound(m) >= reference[m - 1]);
    }
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(43));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(25));
    CHECK_FALSE(is_prime(49));
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(4294967297ULL)); // 641 * 6700417

    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = rng() % 2'000'000;
        REQUIRE(is_prime(n) == oracle::divides_none(n));
    }
}
