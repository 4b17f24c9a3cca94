#pragma once

// Integer kernel: sieving, factorization, multiplicative functions,
// modular arithmetic and primitive-root tests for moduli below 2^63.

#include <cstdint>
#include <functional>
#include <vector>

#include "sfpr/error.hpp"

namespace sfpr {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1,
/// and the product of prime^exponent equal to value().
class Factorization {
public:
    Factorization() = default;
    Factorization(std::uint64_t value, std::vector<PrimePower> factors);

    std::uint64_t value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }

    unsigned omega() const noexcept { return static_cast<unsigned>(factors_.size()); }
    std::uint64_t euler_phi() const noexcept;
    int mobius() const noexcept;

    /// All positive divisors, ascending.
    std::vector<std::uint64_t> divisors() const;
    /// Divisors d with mobius(d) != 0, ascending.
    std::vector<std::uint64_t> squarefree_divisors() const;

private:
    std::uint64_t value_ = 1;
    std::vector<PrimePower> factors_;
};

// ---------------------------------------------------------------------------
// Modular arithmetic. Products go through 128-bit intermediates.

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exponent mod modulus. Throws DomainError for modulus 0.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Integer floor roots, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n) noexcept;
std::uint64_t icbrt(std::uint64_t n) noexcept;

// ---------------------------------------------------------------------------
// Primes.

/// Primes in [2, limit], ascending, via a segmented sieve.
/// Throws DomainError when limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Calls visit(p) for every prime p in [lo, hi] in ascending order.
/// Memory is O(sqrt(hi)) plus one segment.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit);

/// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime(std::uint64_t n) noexcept;

/// Trial division by primes below 10^6, then Pollard rho (Brent).
/// Throws DomainError for n = 0.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
unsigned omega(std::uint64_t n);

/// Legendre symbol (a | p) by Euler's criterion.
/// Throws DomainError unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

// ---------------------------------------------------------------------------
// Primitive roots.

/// An odd prime together with the data a primitive-root test needs:
/// the factorization of p - 1 and the exponents (p - 1) / q for q | p - 1.
class PrimeModulus {
public:
    /// Throws UnsupportedModulus unless p is an odd prime below 2^63.
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    const Factorization& p_minus_1() const noexcept { return p_minus_1_; }
    const std::vector<std::uint64_t>& cofactor_exponents() const noexcept { return cofactors_; }

private:
    std::uint64_t p_;
    Factorization p_minus_1_;
    std::vector<std::uint64_t> cofactors_;
};

/// True iff gcd(a, p) = 1 and a^((p-1)/q) != 1 mod p for every prime q | p - 1.
bool is_primitive_root(std::int64_t a, const PrimeModulus& modulus) noexcept;
bool is_primitive_root_u(std::uint64_t a, const PrimeModulus& modulus) noexcept;

/// g(p). Throws UnsupportedModulus unless p is an odd prime.
std::uint64_t least_primitive_root(std::uint64_t p);
std::uint64_t least_primitive_root(const PrimeModulus& modulus) noexcept;

}  // namespace sfpr
