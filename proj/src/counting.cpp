#include "sfpr/counting.hpp"

#include <chrono>
#include <cmath>

#include "sfpr/charsums.hpp"
#include "sfpr/squarefull.hpp"

namespace sfpr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SumResult restricted_sum(const Character& chi, std::uint64_t x, CountTarget target) {
    switch (target) {
        case CountTarget::squarefull: return sum_char_squarefull(chi, x, Route::factored);
        case CountTarget::S: return sum_char_S(chi, x, Route::factored);
        case CountTarget::squarefree: return sum_char_squarefree(chi, x, Route::factored);
    }
    throw DomainError("unknown count target");
}

}  // namespace

std::string to_string(CountTarget target) {
    switch (target) {
        case CountTarget::squarefull: return "squarefull";
        case CountTarget::S: return "S";
        case CountTarget::squarefree: return "squarefree";
    }
    return "?";
}

std::string to_string(CountMethod method) {
    switch (method) {
        case CountMethod::brute: return "brute";
        case CountMethod::charsum: return "charsum";
        case CountMethod::both: return "both";
    }
    return "?";
}

CountTarget parse_count_target(const std::string& text) {
    if (text == "squarefull") return CountTarget::squarefull;
    if (text == "S" || text == "s") return CountTarget::S;
    if (text == "squarefree") return CountTarget::squarefree;
    throw DomainError("unknown target '" + text + "' (expected squarefull, S or squarefree)");
}

CountMethod parse_count_method(const std::string& text) {
    if (text == "brute") return CountMethod::brute;
    if (text == "charsum") return CountMethod::charsum;
    if (text == "both") return CountMethod::both;
    throw DomainError("unknown method '" + text + "' (expected brute, charsum or both)");
}

// ---------------------------------------------------------------------------

double pr_indicator_charsum(const PrimeContext& context, std::int64_t m) {
    const Factorization& n = context.p_minus_1();
    std::complex<double> total{0.0, 0.0};
    for (std::uint64_t d : n.squarefree_divisors()) {
        const Factorization fd = factorize(d);
        std::complex<double> inner{0.0, 0.0};
        for (const Character& chi : characters_of_order(context, d)) inner += chi(m);
        total += static_cast<double>(fd.mobius()) / static_cast<double>(fd.euler_phi()) * inner;
    }
    return static_cast<double>(n.euler_phi()) / static_cast<double>(n.value()) * total.real();
}

std::uint64_t brute_count_pr(const PrimeModulus& modulus, std::uint64_t x, CountTarget target) {
    std::uint64_t count = 0;
    switch (target) {
        case CountTarget::squarefull: {
            SquarefullStream stream(x);
            while (auto m = stream.next())
                if (is_primitive_root_u(m->value, modulus)) ++count;
            break;
        }
        case CountTarget::S:
            for (std::uint64_t m : enumerate_S(x))
                if (is_primitive_root_u(m, modulus)) ++count;
            break;
        case CountTarget::squarefree: {
            const SquarefreeTable table(x);
            for (std::uint64_t m = 1; m <= x; ++m)
                if (table[m] && is_primitive_root_u(m, modulus)) ++count;
            break;
        }
    }
    return count;
}

CountReport count_pr(const PrimeContext& context, std::uint64_t x, CountTarget target,
                     CountMethod method) {
    if (x == 0) throw DomainError("count: x must be at least 1");
    CountReport report;
    report.p = context.p();
    report.x = x;
    report.target = target;
    report.method = method;

    if (method != CountMethod::charsum) {
        const auto start = Clock::now();
        report.brute_count = brute_count_pr(context.modulus(), x, target);
        report.brute_seconds = seconds_since(start);
    }
    if (method != CountMethod::brute) {
        const auto start = Clock::now();
        const Factorization& n = context.p_minus_1();
        // Fixed order: divisors ascending, characters ascending in j.
        std::complex<double> total{0.0, 0.0};
        for (std::uint64_t d : n.squarefree_divisors()) {
            const Factorization fd = factorize(d);
            std::complex<double> inner{0.0, 0.0};
            for (const Character& chi : characters_of_order(context, d)) {
                inner += restricted_sum(chi, x, target).value;
                ++report.characters_used;
            }
            total += static_cast<double>(fd.mobius()) / static_cast<double>(fd.euler_phi()) * inner;
        }
        const double prefactor = static_cast<double>(n.euler_phi()) / static_cast<double>(n.value());
        report.charsum_value = prefactor * total.real();
        report.charsum_imag = std::abs(prefactor * total.imag());
        report.charsum_seconds = seconds_since(start);
    }
    if (report.brute_count && report.charsum_value)
        report.residual = std::abs(static_cast<double>(*report.brute_count) - *report.charsum_value);
    return report;
}

// ---------------------------------------------------------------------------

namespace {

// Streams square-full m in (floor, ...] with a doubling limit.
std::uint64_t stream_search(const PrimeModulus& modulus, std::uint64_t floor,
                            const SearchOptions& options) {
    std::uint64_t limit = std::max(options.initial_limit, floor);
    while (true) {
        if (floor >= options.ceiling)
            throw SearchCeilingExceeded("least square-full primitive root exceeds the search ceiling");
        limit = std::min(std::max(limit, floor + 1), options.ceiling);
        SquarefullStream stream(limit);
        while (auto m = stream.next())
            if (m->value > floor && is_primitive_root_u(m->value, modulus)) return m->value;
        floor = limit;
        limit = limit > options.ceiling / 2 ? options.ceiling : 2 * limit;
    }
}

}  // namespace

std::uint64_t least_squarefull_pr(const PrimeModulus& modulus, SearchOptions options) {
    return stream_search(modulus, 0, options);
}

std::uint64_t least_squarefull_pr(const PrimeModulus& modulus,
                                  std::span<const std::uint64_t> squarefull_prefix,
                                  std::uint64_t covered_limit, SearchOptions options) {
    for (std::uint64_t m : squarefull_prefix) {
        if (m > options.ceiling)
            throw SearchCeilingExceeded("least square-full primitive root exceeds the search ceiling");
        if (is_primitive_root_u(m, modulus)) return m;
    }
    return stream_search(modulus, covered_limit, options);
}

std::uint64_t least_squarefree_pr(const PrimeModulus& modulus, SearchOptions options) {
    for (std::uint64_t m = 1; m <= options.ceiling; ++m)
        if (is_primitive_root_u(m, modulus) && is_squarefree(m)) return m;
    throw SearchCeilingExceeded("least square-free primitive root exceeds the search ceiling");
}

}  // namespace sfpr
