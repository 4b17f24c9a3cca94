#include "sfpr/squarefull.hpp"

#include <algorithm>

#include "sfpr/arith.hpp"

namespace sfpr {

namespace {

// a^2 b^3, or nullopt past the limit.
std::optional<std::uint64_t> canonical_value(std::uint64_t a, std::uint64_t b,
                                             std::uint64_t limit) {
    const auto v = static_cast<unsigned __int128>(a) * a * b * b * b;
    if (v > limit) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

}  // namespace

bool is_squarefull(std::uint64_t n) {
    if (n == 0) throw DomainError("is_squarefull: n must be positive");
    const Factorization f = factorize(n);
    for (const auto& [q, e] : f.factors())
        if (e < 2) return false;
    return true;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) throw DomainError("is_squarefree: n must be positive");
    return factorize(n).mobius() != 0;
}

CanonicalPair canonical_decompose(std::uint64_t n) {
    if (n == 0) throw DomainError("canonical_decompose: n must be positive");
    CanonicalPair pair{1, 1, n};
    const Factorization f = factorize(n);
    for (const auto& [q, e] : f.factors()) {
        if (e < 2) throw DomainError("canonical_decompose: n is not square-full");
        unsigned a_exp = e / 2;
        if (e % 2 == 1) {
            pair.b *= q;
            a_exp = (e - 3) / 2;
        }
        for (unsigned i = 0; i < a_exp; ++i) pair.a *= q;
    }
    return pair;
}

// ---------------------------------------------------------------------------

SquarefullStream::SquarefullStream(std::uint64_t limit) : limit_(limit) {
    const std::uint64_t b_max = icbrt(limit);
    if (b_max == 0) return;
    const auto mu = mobius_table(b_max);
    for (std::uint64_t b = 1; b <= b_max; ++b)
        if (mu[b] != 0) push(1, b);
}

void SquarefullStream::push(std::uint64_t a, std::uint64_t b) {
    if (auto v = canonical_value(a, b, limit_)) heap_.push({a, b, *v});
}

std::optional<CanonicalPair> SquarefullStream::next() {
    if (heap_.empty()) return std::nullopt;
    CanonicalPair top = heap_.top();
    heap_.pop();
    push(top.a + 1, top.b);
    return top;
}

SquarefullStream enumerate_squarefull(std::uint64_t limit) { return SquarefullStream(limit); }

std::vector<std::uint64_t> squarefull_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    SquarefullStream stream(limit);
    while (auto m = stream.next()) out.push_back(m->value);
    return out;
}

// ---------------------------------------------------------------------------

SquarefreeTable::SquarefreeTable(std::uint64_t limit) : limit_(limit), bits_(limit + 1, true) {
    bits_[0] = false;
    for (std::uint64_t d = 2; d * d <= limit; ++d) {
        const std::uint64_t sq = d * d;
        for (std::uint64_t m = sq; m <= limit; m += sq) bits_[m] = false;
    }
    for (std::uint64_t m = 1; m <= limit; ++m) count_ += bits_[m] ? 1 : 0;
}

SquarefreeTable squarefree_table(std::uint64_t limit) { return SquarefreeTable(limit); }

std::vector<std::int8_t> mobius_table(std::uint64_t limit) {
    std::vector<std::int8_t> mu(limit + 1, 1);
    mu[0] = 0;
    std::vector<std::uint64_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::uint64_t q : primes) {
            if (i * q > limit) break;
            composite[i * q] = true;
            if (i % q == 0) {
                mu[i * q] = 0;
                break;
            }
            mu[i * q] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> enumerate_S(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    const std::uint64_t r_max = icbrt(limit);
    if (r_max < 2) return out;
    const std::uint64_t q_max = isqrt(limit / 8);
    const auto primes = sieve_primes(std::max<std::uint64_t>(2, std::max(r_max, q_max)));
    for (std::uint64_t r : primes) {
        if (r > r_max) break;
        const std::uint64_t cube = r * r * r;
        const std::uint64_t q_bound = isqrt(limit / cube);
        for (std::uint64_t q : primes) {
            if (q > q_bound) break;
            out.push_back(q * q * cube);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sfpr
