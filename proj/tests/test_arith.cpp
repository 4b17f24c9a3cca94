#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "sfpr/arith.hpp"

using namespace sfpr;

namespace {

bool trial_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<PrimePower> trial_factor(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// Multiplicative order of a mod p by repeated multiplication.
std::uint64_t brute_order(std::uint64_t a, std::uint64_t p) {
    std::uint64_t x = a % p, k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("sieve_primes small cases and bounds") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(sieve_primes(1), DomainError);
    CHECK_THROWS_AS(sieve_primes(0), DomainError);
}

TEST_CASE("sieve_primes to 10^6 matches an independent trial-division count") {
    const auto primes = sieve_primes(1'000'000);
    std::uint64_t oracle = 0;
    for (std::uint64_t n = 2; n <= 1'000'000; ++n) oracle += trial_is_prime(n) ? 1 : 0;
    CHECK(oracle == 78498);
    CHECK(primes.size() == oracle);
    CHECK(std::is_sorted(primes.begin(), primes.end()));
    CHECK(primes.back() == 999983);
}

TEST_CASE("for_each_prime on a window crossing segment boundaries") {
    std::vector<std::uint64_t> got;
    const std::uint64_t lo = 1'000'000'000 - 1000, hi = 1'000'000'000 + 1000;
    for_each_prime(lo, hi, [&](std::uint64_t q) { got.push_back(q); });
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (trial_is_prime(n)) want.push_back(n);
    CHECK(got == want);
}

TEST_CASE("factorize") {
    CHECK(factorize(12).factors() == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(1).factors().empty());
    CHECK_THROWS_AS(factorize(0), DomainError);

    const auto f = factorize(1052040);
    CHECK(f.factors() == trial_factor(1052040));
    CHECK(f.factors() == std::vector<PrimePower>{{2, 3}, {3, 1}, {5, 1}, {11, 1}, {797, 1}});

    // Pollard rho path: a semiprime with both factors above the trial bound.
    const std::uint64_t a = 1'000'000'007, b = 998'244'353;
    CHECK(factorize(a * b).factors() == std::vector<PrimePower>{{b, 1}, {a, 1}});
    CHECK(factorize(a * a).factors() == std::vector<PrimePower>{{a, 2}});
    const std::uint64_t big_prime = 2305843009213693951ULL;  // 2^61 - 1
    CHECK(factorize(big_prime).factors() == std::vector<PrimePower>{{big_prime, 1}});
}

TEST_CASE("factorize agrees with trial division on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ULL);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = dist(rng);
        const auto f = factorize(n);
        CHECK(f.factors() == trial_factor(n));
        std::uint64_t product = 1;
        for (const auto& [q, e] : f.factors())
            for (unsigned k = 0; k < e; ++k) product *= q;
        CHECK(product == n);
    }
}

TEST_CASE("multiplicative functions") {
    CHECK(euler_phi(6) == 2);
    CHECK(mobius(6) == 1);
    CHECK(omega(6) == 2);
    CHECK(mobius(12) == 0);
    CHECK(euler_phi(1) == 1);
    CHECK(mobius(1) == 1);

    std::uint64_t coprime = 0;
    for (std::uint64_t k = 1; k <= 1052040; ++k) coprime += std::gcd(k, std::uint64_t{1052040}) == 1;
    CHECK(coprime == 254720);
    CHECK(euler_phi(1052040) == 254720);
}

TEST_CASE("divisor sums of phi and mu for n <= 10^4") {
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        const auto divs = factorize(n).divisors();
        std::uint64_t phi_sum = 0;
        int mu_sum = 0;
        for (std::uint64_t d : divs) {
            phi_sum += euler_phi(d);
            mu_sum += mobius(d);
        }
        REQUIRE(phi_sum == n);
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("squarefree divisors") {
    CHECK(factorize(12).squarefree_divisors() == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(factorize(1).squarefree_divisors() == std::vector<std::uint64_t>{1});
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(2, 3, 7) == 1);
    CHECK(mod_pow(3, 6, 7) == 1);
    CHECK(mod_pow(5, 1052040, 1052041) == 1);
    CHECK(mod_pow(5, 0, 1) == 0);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), DomainError);
    // Near 2^63: Fermat for the largest prime below 2^63.
    const std::uint64_t p = 9223372036854775783ULL;
    CHECK(is_prime(p));
    CHECK(mod_pow(123456789, p - 1, p) == 1);
}

TEST_CASE("is_prime matches trial division below 10^5") {
    for (std::uint64_t n = 0; n < 100'000; ++n) REQUIRE(is_prime(n) == trial_is_prime(n));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(1052041));
}

TEST_CASE("legendre") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(7, 7) == 0);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(-1, 5) == 1);
    CHECK_THROWS_AS(legendre(1, 2), DomainError);
    CHECK_THROWS_AS(legendre(1, 9), DomainError);
}

TEST_CASE("legendre equals Euler's criterion for p <= 10^3") {
    for (std::uint64_t p : sieve_primes(1000)) {
        if (p == 2) continue;
        for (std::uint64_t a = 1; a < p; ++a) {
            const std::uint64_t e = mod_pow(a, (p - 1) / 2, p);
            REQUIRE(legendre(static_cast<std::int64_t>(a), p) == (e == 1 ? 1 : -1));
        }
    }
}

TEST_CASE("primitive roots") {
    const PrimeModulus seven(7);
    CHECK(brute_order(3, 7) == 6);
    CHECK(is_primitive_root(3, seven));
    CHECK_FALSE(is_primitive_root(2, seven));
    CHECK_FALSE(is_primitive_root(7, seven));
    CHECK_FALSE(is_primitive_root(0, seven));
    CHECK(is_primitive_root(-4, seven));  // -4 = 3 mod 7

    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(5) == 2);
    CHECK(least_primitive_root(41) == 6);
    CHECK_THROWS_AS(least_primitive_root(9), UnsupportedModulus);
    CHECK_THROWS_AS(least_primitive_root(2), UnsupportedModulus);
    CHECK_THROWS_AS(PrimeModulus(4), UnsupportedModulus);
}

TEST_CASE("primitive-root test agrees with brute order and counts phi(p-1)") {
    for (std::uint64_t p : sieve_primes(1000)) {
        if (p == 2) continue;
        const PrimeModulus m(p);
        std::uint64_t count = 0, least = 0;
        for (std::uint64_t a = 1; a < p; ++a) {
            const bool pr = is_primitive_root_u(a, m);
            REQUIRE(pr == (brute_order(a, p) == p - 1));
            if (pr) {
                ++count;
                if (!least) least = a;
            }
        }
        REQUIRE(count == euler_phi(p - 1));
        REQUIRE(least_primitive_root(m) == least);
    }
}

TEST_CASE("integer roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
    CHECK(icbrt(26) == 2);
    CHECK(icbrt(27) == 3);
    CHECK(icbrt(~std::uint64_t{0}) == 2642245);
}
