#include "sfpr/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace sfpr {

namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;
constexpr std::uint64_t kSegmentSize = 1u << 18;

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = sieve_primes(kTrialBound);
    return primes;
}

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

// ---------------------------------------------------------------------------

Factorization::Factorization(std::uint64_t value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {}

std::uint64_t Factorization::euler_phi() const noexcept {
    std::uint64_t phi = 1;
    for (const auto& [q, e] : factors_) {
        phi *= q - 1;
        for (unsigned i = 1; i < e; ++i) phi *= q;
    }
    return phi;
}

int Factorization::mobius() const noexcept {
    for (const auto& f : factors_)
        if (f.exponent > 1) return 0;
    return factors_.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> Factorization::divisors() const {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [q, e] : factors_) {
        const std::size_t base = divs.size();
        std::uint64_t power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= q;
            for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint64_t> Factorization::squarefree_divisors() const {
    std::vector<std::uint64_t> divs{1};
    for (const auto& f : factors_) {
        const std::size_t base = divs.size();
        for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * f.prime);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// ---------------------------------------------------------------------------

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0) throw DomainError("mod_pow: modulus must be positive");
    if (modulus == 1) return 0;
    std::uint64_t result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1u) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t icbrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(n)));
    auto cube = [](std::uint64_t v) {
        return static_cast<unsigned __int128>(v) * v * v;
    };
    while (r > 0 && cube(r) > n) --r;
    while (cube(r + 1) <= n) ++r;
    return r;
}

// ---------------------------------------------------------------------------

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit) {
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo) return;
    const auto base = simple_sieve(isqrt(hi));
    std::vector<bool> composite;
    for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegmentSize - 1);
        composite.assign(seg_hi - seg_lo + 1, false);
        for (std::uint64_t q : base) {
            if (q * q > seg_hi) break;
            std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
            for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = true;
        }
        for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
            if (!composite[n - seg_lo]) visit(n);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw DomainError("sieve_primes: empty range, limit must be at least 2");
    std::vector<std::uint64_t> primes;
    if (limit > 100) {
        const double n = static_cast<double>(limit);
        primes.reserve(static_cast<std::size_t>(1.26 * n / std::log(n)) + 16);
    }
    for_each_prime(2, limit, [&](std::uint64_t q) { primes.push_back(q); });
    return primes;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set valid for every n < 2^64.
    static constexpr std::array<std::uint64_t, 7> witnesses{
        2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (std::uint64_t a : witnesses)
        if (!miller_rabin_round(n, a, d, s)) return false;
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    const std::uint64_t original = n;
    std::vector<PrimePower> factors;
    for (std::uint64_t q : trial_primes()) {
        if (q * q > n) break;
        if (n % q != 0) continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        factors.push_back({q, e});
    }
    if (n > 1) {
        std::vector<std::uint64_t> large;
        if (n < kTrialBound * kTrialBound) {
            large.push_back(n);
        } else {
            split_large(n, large);
        }
        std::sort(large.begin(), large.end());
        for (std::uint64_t q : large) {
            if (!factors.empty() && factors.back().prime == q) {
                ++factors.back().exponent;
            } else {
                factors.push_back({q, 1});
            }
        }
    }
    return Factorization(original, std::move(factors));
}

std::uint64_t euler_phi(std::uint64_t n) { return factorize(n).euler_phi(); }
int mobius(std::uint64_t n) { return factorize(n).mobius(); }
unsigned omega(std::uint64_t n) { return factorize(n).omega(); }

int legendre(std::int64_t a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw DomainError("legendre: modulus must be an odd prime");
    const auto sp = static_cast<std::int64_t>(p);
    const auto r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
    if (r == 0) return 0;
    return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 63) || !is_prime(p))
        throw UnsupportedModulus("modulus must be an odd prime");
    p_minus_1_ = factorize(p - 1);
    for (const auto& f : p_minus_1_.factors()) cofactors_.push_back((p - 1) / f.prime);
}

bool is_primitive_root_u(std::uint64_t a, const PrimeModulus& modulus) noexcept {
    const std::uint64_t p = modulus.p();
    a %= p;
    if (a == 0) return false;
    for (std::uint64_t e : modulus.cofactor_exponents()) {
        std::uint64_t result = 1, base = a, k = e;
        while (k > 0) {
            if (k & 1u) result = mul_mod(result, base, p);
            base = mul_mod(base, base, p);
            k >>= 1;
        }
        if (result == 1) return false;
    }
    return true;
}

bool is_primitive_root(std::int64_t a, const PrimeModulus& modulus) noexcept {
    const auto sp = static_cast<std::int64_t>(modulus.p());
    return is_primitive_root_u(static_cast<std::uint64_t>(((a % sp) + sp) % sp), modulus);
}

std::uint64_t least_primitive_root(const PrimeModulus& modulus) noexcept {
    for (std::uint64_t g = 1;; ++g)
        if (is_primitive_root_u(g, modulus)) return g;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    return least_primitive_root(PrimeModulus(p));
}

}  // namespace sfpr
