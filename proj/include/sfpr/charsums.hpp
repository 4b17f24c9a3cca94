#pragma once

// Character sums over intervals, square-full numbers, square-free numbers,
// primes and S = { q^2 r^3 }. The restricted sums each have a direct route
// (accumulate chi over the enumerated set) and a factored route:
//
//   square-full:  sum_{b <= x^(1/3)} mu^2(b) chi^3(b) sum_{a <= (x/b^3)^(1/2)} chi^2(a)
//   square-free:  sum_{d <= x^(1/2)} mu(d) chi(d^2)   sum_{m <= x/d^2} chi(m)
//   S:            sum_{r <= x^(1/3)} chi^3(r)         sum_{q <= (x/r^3)^(1/2)} chi^2(q)
//                 (r, q prime)
//
// The two routes are algebraically equal; their agreement is tested.

#include <complex>
#include <cstdint>
#include <vector>

#include "sfpr/characters.hpp"

namespace sfpr {

enum class Route { direct, factored };

struct SumResult {
    std::complex<double> value;
    /// Number of integers m in the summation domain (including multiples of p).
    std::uint64_t terms_used = 0;
    Route route = Route::direct;
};

/// Prefix sums of a character, P(y) = sum_{1 <= m <= y} chi(m).
/// Stores one period when p - 1 <= max_argument, otherwise [0, max_argument].
class CharPrefix {
public:
    CharPrefix(const Character& chi, std::uint64_t max_argument);
    std::complex<double> operator()(std::uint64_t y) const;

private:
    std::vector<std::complex<double>> prefix_;
    std::uint64_t p_;
    bool periodic_;
    std::complex<double> period_sum_;
};

SumResult sum_char_interval(const Character& chi, std::uint64_t x);
SumResult sum_char_squarefull(const Character& chi, std::uint64_t x, Route route);
SumResult sum_char_squarefree(const Character& chi, std::uint64_t x, Route route);
SumResult sum_char_primes(const Character& chi, std::uint64_t x);
SumResult sum_char_S(const Character& chi, std::uint64_t x, Route route);

/// Absolute tolerance for comparing two routes: 1e-9 per 10^6 accumulated
/// terms, relative to max(1, |value|).
double identity_tolerance(double magnitude, std::uint64_t terms_used) noexcept;
bool routes_agree(const SumResult& a, const SumResult& b) noexcept;

/// x^(1-1/r) p^((r+1)/(4r^2)) (log p)^(1/(2r)).
double burgess_envelope(std::uint64_t p, double x, unsigned r);
/// |sum_{m <= x} chi(m)| / burgess_envelope. Throws DomainError for principal chi,
/// r < 2 or x < 2.
double burgess_ratio(const Character& chi, std::uint64_t x, unsigned r);

/// sqrt(x) log^2(p x).
double grh_prime_envelope(std::uint64_t p, double x);
/// |sum_{q <= x prime} chi(q)| / grh_prime_envelope. Throws DomainError for
/// principal chi or x < 2.
double grh_prime_ratio(const Character& chi, std::uint64_t x);

struct GaugeMax {
    double value = 0.0;
    std::uint64_t at_x = 0;
};

/// max over 2 <= x <= x_max of burgess_ratio(chi, x, r), in one pass.
GaugeMax max_burgess_ratio(const Character& chi, std::uint64_t x_max, unsigned r);
/// max over 2 <= x <= x_max of grh_prime_ratio(chi, x). Between consecutive
/// primes the ratio only decreases, so primes are the only candidates.
GaugeMax max_grh_prime_ratio(const Character& chi, std::uint64_t x_max);

}  // namespace sfpr
