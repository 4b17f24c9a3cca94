#include "sfpr/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sfpr/analytics.hpp"
#include "sfpr/charsums.hpp"
#include "sfpr/counting.hpp"

namespace sfpr {

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) { summary_.suite = std::move(suite); }

    void check(bool ok, double residual, const std::string& note) {
        ++summary_.cases;
        if (std::isfinite(residual)) summary_.max_residual = std::max(summary_.max_residual, residual);
        if (!ok) {
            ++summary_.failures;
            if (summary_.failure_notes.size() < 20) summary_.failure_notes.push_back(note);
        }
    }

    void merge(const VerifySummary& other) {
        summary_.cases += other.cases;
        summary_.failures += other.failures;
        summary_.max_residual = std::max(summary_.max_residual, other.max_residual);
        for (const auto& n : other.failure_notes)
            if (summary_.failure_notes.size() < 20) summary_.failure_notes.push_back(n);
    }

    VerifySummary take() { return std::move(summary_); }

private:
    VerifySummary summary_;
};

std::vector<std::uint64_t> odd_primes_below(std::uint64_t bound) {
    auto primes = sieve_primes(bound - 1);
    primes.erase(primes.begin());
    return primes;
}

VerifySummary identities_suite() {
    Recorder rec("identities");
    for (std::uint64_t p : odd_primes_below(200)) {
        const PrimeContext ctx(p);
        for (std::uint64_t x : {100u, 1000u, 10000u}) {
            for (CountTarget target : {CountTarget::squarefull, CountTarget::S, CountTarget::squarefree}) {
                const CountReport r = count_pr(ctx, x, target, CountMethod::both);
                const double residual = *r.residual;
                rec.check(residual < 1e-6, residual,
                          "count " + to_string(target) + " p=" + std::to_string(p) + " x=" + std::to_string(x));
            }
        }
    }

    std::mt19937_64 rng(20240601);
    const auto primes = odd_primes_below(10'000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_real_distribution<double> decades(0.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t p = primes[pick(rng)];
        const PrimeContext ctx(p);
        const Character chi(ctx, std::uniform_int_distribution<std::uint64_t>(0, p - 2)(rng));
        const auto x = static_cast<std::uint64_t>(std::pow(10.0, decades(rng)));
        const std::string where = " p=" + std::to_string(p) + " j=" + std::to_string(chi.exponent_index()) +
                                  " x=" + std::to_string(x);
        const std::pair<SumResult, SumResult> pairs[] = {
            {sum_char_squarefull(chi, x, Route::direct), sum_char_squarefull(chi, x, Route::factored)},
            {sum_char_squarefree(chi, x, Route::direct), sum_char_squarefree(chi, x, Route::factored)},
            {sum_char_S(chi, x, Route::direct), sum_char_S(chi, x, Route::factored)},
        };
        const char* names[] = {"squarefull", "squarefree", "S"};
        for (int k = 0; k < 3; ++k) {
            const auto& [a, b] = pairs[k];
            const double residual = std::abs(a.value - b.value) / std::max(1.0, std::abs(a.value));
            rec.check(routes_agree(a, b), residual, std::string("routes ") + names[k] + where);
        }
    }
    return rec.take();
}

VerifySummary characters_suite() {
    Recorder rec("characters");
    for (std::uint64_t p : odd_primes_below(200)) {
        const PrimeContext ctx(p);
        for (std::uint64_t m = 2; m < p; ++m) {
            std::complex<double> total{0.0, 0.0};
            for (std::uint64_t j = 0; j + 1 < p; ++j) total += Character(ctx, j).at(m);
            const double tol = 1e-9 * static_cast<double>(p - 1);
            rec.check(std::abs(total) < tol, std::abs(total) / static_cast<double>(p - 1),
                      "orthogonality p=" + std::to_string(p) + " m=" + std::to_string(m));
        }
    }
    for (std::uint64_t p : odd_primes_below(1000)) {
        const PrimeContext ctx(p);
        const Character chi2 = quadratic_character(ctx);
        bool ok = true;
        for (std::uint64_t m = 1; m < p; ++m)
            ok = ok && chi2.at(m) == std::complex<double>(legendre(static_cast<std::int64_t>(m), p), 0.0);
        rec.check(ok, 0.0, "quadratic character p=" + std::to_string(p));

        std::uint64_t total = 0;
        for (std::uint64_t d : ctx.p_minus_1().divisors()) total += characters_of_order(ctx, d).size();
        rec.check(total == p - 1, 0.0, "order partition p=" + std::to_string(p));
    }
    return rec.take();
}

VerifySummary constants_suite() {
    Recorder rec("constants");
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 101u}) {
        const CpEvaluation cp = compute_Cp(PrimeModulus(p));
        rec.check(cp.identity_residual < 1e-8, cp.identity_residual, "C_p identity p=" + std::to_string(p));
        const Certified c = shapiro_c(PrimeModulus(p));
        rec.check(c.value <= cp.value && c.value > 0.0, 0.0, "shapiro_c <= C_p p=" + std::to_string(p));
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double z2 = std::abs(zeta(2.0) - pi2 / 6.0);
    rec.check(z2 < 1e-12, z2, "zeta(2)");
    const double z3 = std::abs(zeta(3.0) - 1.2020569031595942854);
    rec.check(z3 < 1e-12, z3, "zeta(3)");
    const double z23 = std::abs(zeta(2.0 / 3.0) + 2.4475807362336582);
    rec.check(z23 < 1e-10, z23, "zeta(2/3)");
    const double exponent = corollary_constants().least_squarefull_exponent;
    rec.check(std::floor(exponent * 1000.0) == 1121.0, std::abs(exponent - 1.121), "corollary exponent 1.121");
    return rec.take();
}

}  // namespace

VerifySummary run_verify_suite(const std::string& suite) {
    if (suite == "identities") return identities_suite();
    if (suite == "characters") return characters_suite();
    if (suite == "constants") return constants_suite();
    if (suite == "all") {
        Recorder rec("all");
        rec.merge(identities_suite());
        rec.merge(characters_suite());
        rec.merge(constants_suite());
        return rec.take();
    }
    throw DomainError("unknown suite '" + suite + "' (expected identities, characters, constants or all)");
}

}  // namespace sfpr
