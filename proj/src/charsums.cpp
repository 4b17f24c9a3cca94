#include "sfpr/charsums.hpp"

#include <algorithm>
#include <cmath>

#include "sfpr/squarefull.hpp"

namespace sfpr {

CharPrefix::CharPrefix(const Character& chi, std::uint64_t max_argument)
    : p_(chi.context().p()), periodic_(chi.context().p() - 1 <= max_argument) {
    const std::uint64_t length = periodic_ ? p_ - 1 : max_argument;
    prefix_.resize(length + 1);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t m = 1; m <= length; ++m) {
        acc += chi.at(m);
        prefix_[m] = acc;
    }
    // Exact period sums: 0 for non-principal characters, p - 1 otherwise.
    period_sum_ = chi.is_principal() ? std::complex<double>(static_cast<double>(p_ - 1), 0.0)
                                     : std::complex<double>(0.0, 0.0);
}

std::complex<double> CharPrefix::operator()(std::uint64_t y) const {
    if (!periodic_) return prefix_[y];
    const std::uint64_t residue = y % p_;
    const auto full = static_cast<double>(y / p_);
    return full * period_sum_ + prefix_[residue];
}

// ---------------------------------------------------------------------------

SumResult sum_char_interval(const Character& chi, std::uint64_t x) {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t m = 1; m <= x; ++m) acc += chi.at(m);
    return {acc, x, Route::direct};
}

SumResult sum_char_squarefull(const Character& chi, std::uint64_t x, Route route) {
    SumResult out{{0.0, 0.0}, 0, route};
    if (route == Route::direct) {
        SquarefullStream stream(x);
        while (auto m = stream.next()) {
            out.value += chi.at(m->value);
            ++out.terms_used;
        }
        return out;
    }
    const std::uint64_t b_max = icbrt(x);
    const auto mu = mobius_table(b_max);
    const Character chi2 = chi.pow(2);
    const Character chi3 = chi.pow(3);
    const CharPrefix inner(chi2, isqrt(x));
    for (std::uint64_t b = 1; b <= b_max; ++b) {
        if (mu[b] == 0) continue;
        const std::uint64_t a_max = isqrt(x / (b * b * b));
        out.value += chi3.at(b) * inner(a_max);
        out.terms_used += a_max;
    }
    return out;
}

SumResult sum_char_squarefree(const Character& chi, std::uint64_t x, Route route) {
    SumResult out{{0.0, 0.0}, 0, route};
    if (route == Route::direct) {
        const SquarefreeTable table(x);
        for (std::uint64_t m = 1; m <= x; ++m)
            if (table[m]) out.value += chi.at(m);
        out.terms_used = table.count();
        return out;
    }
    const std::uint64_t d_max = isqrt(x);
    const auto mu = mobius_table(d_max);
    const Character chi_sq = chi.pow(2);
    const CharPrefix inner(chi, x);
    std::int64_t count = 0;
    for (std::uint64_t d = 1; d <= d_max; ++d) {
        if (mu[d] == 0) continue;
        const std::uint64_t y = x / (d * d);
        out.value += static_cast<double>(mu[d]) * chi_sq.at(d) * inner(y);
        count += mu[d] * static_cast<std::int64_t>(y);
    }
    out.terms_used = static_cast<std::uint64_t>(count);
    return out;
}

SumResult sum_char_primes(const Character& chi, std::uint64_t x) {
    SumResult out{{0.0, 0.0}, 0, Route::direct};
    if (x < 2) return out;
    for_each_prime(2, x, [&](std::uint64_t q) {
        out.value += chi.at(q);
        ++out.terms_used;
    });
    return out;
}

SumResult sum_char_S(const Character& chi, std::uint64_t x, Route route) {
    SumResult out{{0.0, 0.0}, 0, route};
    if (route == Route::direct) {
        for (std::uint64_t m : enumerate_S(x)) {
            out.value += chi.at(m);
            ++out.terms_used;
        }
        return out;
    }
    const std::uint64_t r_max = icbrt(x);
    if (r_max < 2) return out;
    const std::uint64_t q_max = std::max<std::uint64_t>(2, isqrt(x / 8));
    const auto primes = sieve_primes(std::max(r_max, q_max));
    const Character chi2 = chi.pow(2);
    const Character chi3 = chi.pow(3);
    // prime_prefix[k] = sum of chi^2 over the first k primes.
    std::vector<std::complex<double>> prime_prefix(primes.size() + 1);
    for (std::size_t k = 0; k < primes.size(); ++k)
        prime_prefix[k + 1] = prime_prefix[k] + chi2.at(primes[k]);
    for (std::uint64_t r : primes) {
        if (r > r_max) break;
        const std::uint64_t q_bound = isqrt(x / (r * r * r));
        const auto count = static_cast<std::size_t>(
            std::upper_bound(primes.begin(), primes.end(), q_bound) - primes.begin());
        out.value += chi3.at(r) * prime_prefix[count];
        out.terms_used += count;
    }
    return out;
}

// ---------------------------------------------------------------------------

double identity_tolerance(double magnitude, std::uint64_t terms_used) noexcept {
    const double scale = std::max(1.0, static_cast<double>(terms_used) / 1e6);
    return 1e-9 * std::max(1.0, magnitude) * scale;
}

bool routes_agree(const SumResult& a, const SumResult& b) noexcept {
    const double tol =
        identity_tolerance(std::max(std::abs(a.value), std::abs(b.value)),
                           std::max(a.terms_used, b.terms_used));
    return std::abs(a.value - b.value) <= tol;
}

// ---------------------------------------------------------------------------

double burgess_envelope(std::uint64_t p, double x, unsigned r) {
    const double rd = r;
    const double lp = std::log(static_cast<double>(p));
    return std::pow(x, 1.0 - 1.0 / rd) *
           std::pow(static_cast<double>(p), (rd + 1.0) / (4.0 * rd * rd)) *
           std::pow(lp, 1.0 / (2.0 * rd));
}

namespace {

void require_burgess_domain(const Character& chi, std::uint64_t x, unsigned r) {
    if (chi.is_principal()) throw DomainError("burgess_ratio: character must be non-principal");
    if (r < 2) throw DomainError("burgess_ratio: r must be at least 2");
    if (x < 2) throw DomainError("burgess_ratio: x must be at least 2");
}

void require_grh_domain(const Character& chi, std::uint64_t x) {
    if (chi.is_principal()) throw DomainError("grh_prime_ratio: character must be non-principal");
    if (x < 2) throw DomainError("grh_prime_ratio: x must be at least 2");
}

}  // namespace

double burgess_ratio(const Character& chi, std::uint64_t x, unsigned r) {
    require_burgess_domain(chi, x, r);
    const double sum = std::abs(sum_char_interval(chi, x).value);
    return sum / burgess_envelope(chi.context().p(), static_cast<double>(x), r);
}

double grh_prime_envelope(std::uint64_t p, double x) {
    const double l = std::log(static_cast<double>(p) * x);
    return std::sqrt(x) * l * l;
}

double grh_prime_ratio(const Character& chi, std::uint64_t x) {
    require_grh_domain(chi, x);
    const double sum = std::abs(sum_char_primes(chi, x).value);
    return sum / grh_prime_envelope(chi.context().p(), static_cast<double>(x));
}

GaugeMax max_burgess_ratio(const Character& chi, std::uint64_t x_max, unsigned r) {
    require_burgess_domain(chi, x_max, r);
    GaugeMax best;
    std::complex<double> acc = chi.at(1);
    for (std::uint64_t x = 2; x <= x_max; ++x) {
        acc += chi.at(x);
        const double ratio =
            std::abs(acc) / burgess_envelope(chi.context().p(), static_cast<double>(x), r);
        if (ratio > best.value) best = {ratio, x};
    }
    return best;
}

GaugeMax max_grh_prime_ratio(const Character& chi, std::uint64_t x_max) {
    require_grh_domain(chi, x_max);
    GaugeMax best;
    std::complex<double> acc{0.0, 0.0};
    const std::uint64_t p = chi.context().p();
    for_each_prime(2, x_max, [&](std::uint64_t q) {
        acc += chi.at(q);
        const double ratio = std::abs(acc) / grh_prime_envelope(p, static_cast<double>(q));
        if (ratio > best.value) best = {ratio, q};
    });
    return best;
}

}  // namespace sfpr
