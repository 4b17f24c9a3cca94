#pragma once

// Counting primitive roots in restricted sets, by brute force and through the
// character decomposition of the primitive-root indicator:
//
//   [m is a primitive root] = phi(p-1)/(p-1) * sum_{d | p-1} mu(d)/phi(d) sum_{chi in Gamma_d} chi(m)
//
// Summing over m in a set turns the right side into restricted character sums.

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sfpr/characters.hpp"

namespace sfpr {

enum class CountTarget { squarefull, S, squarefree };
enum class CountMethod { brute, charsum, both };

std::string to_string(CountTarget target);
std::string to_string(CountMethod method);
CountTarget parse_count_target(const std::string& text);
CountMethod parse_count_method(const std::string& text);

struct CountReport {
    std::uint64_t p = 0;
    std::uint64_t x = 0;
    CountTarget target = CountTarget::squarefull;
    CountMethod method = CountMethod::both;
    std::optional<std::uint64_t> brute_count;
    std::optional<double> charsum_value;
    /// Largest |imaginary part| seen in the charsum total; zero up to rounding.
    double charsum_imag = 0.0;
    /// |brute - charsum| when both routes ran, else nullopt.
    std::optional<double> residual;
    std::uint64_t characters_used = 0;
    double brute_seconds = 0.0;
    double charsum_seconds = 0.0;
};

/// The decomposition evaluated at a single m. 1 for primitive roots, else 0,
/// up to rounding.
double pr_indicator_charsum(const PrimeContext& context, std::int64_t m);

/// Brute-force count of primitive roots m <= x in the target set.
std::uint64_t brute_count_pr(const PrimeModulus& modulus, std::uint64_t x, CountTarget target);

/// Throws DomainError for x = 0.
CountReport count_pr(const PrimeContext& context, std::uint64_t x, CountTarget target,
                     CountMethod method);

inline CountReport count_squarefull_pr(const PrimeContext& c, std::uint64_t x, CountMethod m) {
    return count_pr(c, x, CountTarget::squarefull, m);
}
inline CountReport count_S_pr(const PrimeContext& c, std::uint64_t x, CountMethod m) {
    return count_pr(c, x, CountTarget::S, m);
}
inline CountReport count_squarefree_pr(const PrimeContext& c, std::uint64_t x, CountMethod m) {
    return count_pr(c, x, CountTarget::squarefree, m);
}

struct SearchOptions {
    /// Largest m examined before SearchCeilingExceeded is thrown.
    std::uint64_t ceiling = std::uint64_t{1} << 32;
    std::uint64_t initial_limit = 64;
};

/// g_sf(p): least square-full primitive root. Streams square-full numbers with
/// a doubling limit.
std::uint64_t least_squarefull_pr(const PrimeModulus& modulus, SearchOptions options = {});

/// As above, but scans a precomputed ascending list of every square-full
/// m <= covered_limit first and only streams past it when nothing is found.
std::uint64_t least_squarefull_pr(const PrimeModulus& modulus,
                                  std::span<const std::uint64_t> squarefull_prefix,
                                  std::uint64_t covered_limit, SearchOptions options = {});

/// g^sq(p): least square-free primitive root.
std::uint64_t least_squarefree_pr(const PrimeModulus& modulus, SearchOptions options = {});

}  // namespace sfpr
