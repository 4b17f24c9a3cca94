#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "sfpr/analytics.hpp"

using namespace sfpr;

namespace {

// zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1).
double zeta_euler_maclaurin(double s) {
    const int n_cut = 50;
    double sum = 0.0;
    for (int n = 1; n < n_cut; ++n) sum += std::pow(n, -s);
    const double N = n_cut;
    sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
    const double bernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    double rising = s;  // s (s+1) ... (s+2k-2)
    double factorial = 2.0;
    for (int k = 1; k <= 7; ++k) {
        sum += bernoulli[k - 1] / factorial * rising * std::pow(N, -s - 2 * k + 1);
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        factorial *= (2 * k + 1) * (2 * k + 2);
    }
    return sum;
}

// li(x) = gamma + log log x + sum_k (log x)^k / (k k!); every term is positive.
double li_series(double x) {
    const double L = std::log(x);
    double term = 1.0, sum = 0.0;
    for (int k = 1; k < 400; ++k) {
        term *= L / k;
        sum += term / k;
    }
    return std::numbers::egamma + std::log(L) + sum;
}

// Reference values: Hurwitz-zeta evaluation at 30 digits.
struct PrimeReference {
    std::uint64_t p;
    double L;
    double Cp;
    double shapiro;
};
constexpr PrimeReference kReference[] = {
    {3, 0.70396824486873326, 1.4056552335541187, 0.80956727453099603},
    {5, 0.58766283928582861, 1.791054554903441, 1.2016060394503468},
    {7, 1.1789522429991985, 1.2923680954051174, 0.92423503133551952},
    {11, 0.91801158231128179, 1.6227582387447551, 1.2281814260907468},
    {101, 0.66164935729328801, 1.948152317504349, 1.6046374741206295},
};

}  // namespace

TEST_CASE("zeta") {
    CHECK(zeta(2.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-14));
    CHECK(std::abs(zeta(3.0) - 1.2020569031595942854) < 1e-12);
    CHECK(std::abs(zeta(2.0 / 3.0) - zeta_euler_maclaurin(2.0 / 3.0)) < 1e-12);
    CHECK(std::abs(zeta(2.0 / 3.0) + 2.44758) < 1e-5);
    for (double s : {0.1, 0.5, 0.9, 0.999, 1.001, 1.5, 2.5, 4.0, 10.0, 30.0})
        CHECK(std::abs(zeta(s) - zeta_euler_maclaurin(s)) < 1e-12 * std::max(1.0, std::abs(zeta(s))));
    CHECK_THROWS_AS(zeta(1.0), DomainError);
    CHECK_THROWS_AS(zeta(0.0), DomainError);
    CHECK_THROWS_AS(zeta(-1.0), DomainError);
}

TEST_CASE("L(3/2, chi_2), C_p and shapiro_c against reference values") {
    for (const auto& ref : kReference) {
        CAPTURE(ref.p);
        const PrimeModulus m(ref.p);
        const Certified L = L_quadratic(m);
        CHECK(L.tail_bound <= 1e-9);
        CHECK(std::abs(L.value - ref.L) <= L.tail_bound + 1e-12);
        CHECK(std::abs(L.value) <= zeta(1.5));

        const CpEvaluation cp = compute_Cp(m);
        CHECK(std::abs(cp.value - ref.Cp) < 1e-9);
        CHECK(std::abs(cp.direct - ref.Cp) < 1e-9);
        CHECK(cp.identity_residual < 1e-8);
        CHECK(cp.value > 0.0);
        CHECK(cp.value < 2.0 * zeta(1.5));

        const Certified c = shapiro_c(m);
        CHECK(c.tail_bound < 1e-9);
        CHECK(std::abs(c.value - ref.shapiro) < 1e-9);
        CHECK(c.value <= cp.value);
    }
}

TEST_CASE("L(3/2, chi_2) for p = 3 by direct class sums") {
    // Partial sums over n = 1, 2 mod 3 up to 10^7 with an integral tail.
    double s = 0.0;
    const double N = 1e7;
    for (double n = 1; n <= N; ++n) {
        const int r = static_cast<int>(std::fmod(n, 3.0));
        if (r == 1) s += std::pow(n, -1.5);
        if (r == 2) s -= std::pow(n, -1.5);
    }
    CHECK(std::abs(L_quadratic(PrimeModulus(3)).value - s) < 1e-9);
}

TEST_CASE("shapiro_c for p = 3 by a truncated square-free sum") {
    const int N = 2'000'000;
    std::vector<bool> squarefree(N + 1, true);
    for (long d = 2; d * d <= N; ++d)
        for (long k = d * d; k <= N; k += d * d) squarefree[k] = false;
    double s = 0.0;
    for (int n = 2; n <= N; n += 3)
        if (squarefree[n]) s += std::pow(n, -1.5);
    // Tail: density of square-free n = 2 mod 3 is (3/8)(6/pi^2) = 9/(4 pi^2).
    s += 9.0 / (4.0 * std::numbers::pi * std::numbers::pi) * 2.0 / std::sqrt(static_cast<double>(N));
    CHECK(std::abs(shapiro_c(PrimeModulus(3)).value - 2.0 * (2.0 / 3.0) * s) < 1e-5);
}

TEST_CASE("C_p for large p") {
    const CpEvaluation cp = compute_Cp(PrimeModulus(1052041));
    CHECK(cp.identity_residual < 1e-8);
    CHECK(cp.value == doctest::Approx(0.27144630128805).epsilon(1e-10));
    CHECK(constants_report(PrimeModulus(1052041)).cp_lower_ratio == doctest::Approx(0.7766983079367314).epsilon(1e-9));
    const CpEvaluation cp1009 = compute_Cp(PrimeModulus(1009));
    CHECK(cp1009.value == doctest::Approx(0.5746187082337135).epsilon(1e-10));
    CHECK(cp1009.identity_residual < 1e-8);
}

TEST_CASE("logarithmic integral") {
    CHECK(li(2.0) == 0.0);
    CHECK(li_or_zero(1.5) == 0.0);
    CHECK_THROWS_AS(li(1.9), DomainError);
    const double li2 = li_series(2.0);
    CHECK(li2 == doctest::Approx(1.04516378011749278).epsilon(1e-14));
    CHECK(li(10.0) == doctest::Approx(5.1204357246698051).epsilon(1e-13));
    for (double x : {3.0, 10.0, 100.0, 1e4, 1e6, 1e8}) {
        CAPTURE(x);
        CHECK(std::abs(li(x) - (li_series(x) - li2)) < std::max(1e-10, 1e-13 * li(x)));
    }
    CHECK(std::abs(li(1e6) - 78498.0) < 0.003 * 78498.0);
    double prev = 0.0;
    for (double x = 1e2; x <= 1e8; x *= 10) {
        const double ratio = li(x) / (x / std::log(x));
        CHECK(ratio > 1.0);
        if (prev > 0.0) CHECK(ratio < prev);
        prev = ratio;
    }
}

TEST_CASE("exponent constants") {
    const auto c = corollary_constants();
    CHECK(c.least_squarefull_exponent == doctest::Approx(1.12156466145114).epsilon(1e-14));
    CHECK(c.cp_lower_exponent == doctest::Approx(0.07581633246407918).epsilon(1e-14));
    CHECK(std::floor(c.least_squarefull_exponent * 1000.0) == 1121.0);
    CHECK(3.0 / (4.0 * std::sqrt(std::numbers::e)) == doctest::Approx(6.0 * c.cp_lower_exponent));
}

TEST_CASE("main term examples") {
    const PrimeContext ctx7(7);
    const auto t = main_term_thm1(ctx7, 108);
    CHECK(t.exact == 1);
    const double want = (2.0 / 6.0) * compute_Cp(PrimeModulus(7)).value * std::sqrt(108.0) /
                        (zeta(3.0) * (1.0 + 1.0 / 7 + 1.0 / 49));
    CHECK(t.predicted == doctest::Approx(want).epsilon(1e-12));
    CHECK(t.relative_error == doctest::Approx((1.0 - want) / want).epsilon(1e-12));

    CHECK(main_term_lemma22(ctx7, 100, true).exact == 13);

    const auto p42 = main_term_prop42(ctx7, 10);
    CHECK(p42.exact == 3);
    CHECK(p42.predicted == doctest::Approx(7.0 * 2.0 / 48.0 * 6.0 / (std::numbers::pi * std::numbers::pi) * 10.0));

    const auto s = main_term_thm31(ctx7, 1'000'000);
    CHECK(s.exact == 70);
    CHECK(s.predicted > 0.0);
    double leading = 0.0;
    for (std::uint64_t r = 2; r <= 100; ++r) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= r; ++d) prime = prime && r % d != 0;
        if (prime && r % 7 != 0 && mod_pow(r, 3, 7) == 6)
            leading += 2.0 * li_or_zero(1000.0 / std::pow(static_cast<double>(r), 1.5));
    }
    CHECK(s.leading_term == doctest::Approx(leading).epsilon(1e-12));
    CHECK(s.predicted == doctest::Approx(leading / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(main_term_thm31(ctx7, 7), DomainError);
}

TEST_CASE("main-term breakdown invariants") {
    const PrimeContext ctx(101);
    const MainTerms terms(ctx);
    for (auto kind : {MainTermKind::thm1, MainTermKind::lemma22_principal, MainTermKind::lemma22_quadratic,
                      MainTermKind::thm31, MainTermKind::prop42}) {
        const auto b = terms.evaluate(kind, 100'000);
        CHECK(b.p == 101);
        CHECK(b.x == 100'000);
        CHECK(b.relative_error == doctest::Approx((b.exact - b.predicted) / b.predicted));
    }
    const auto t = terms.thm1(100'000);
    CHECK(t.predicted == doctest::Approx(t.leading_term * 40.0 / 100.0));
    CHECK(parse_main_term_kind("lemma22") == MainTermKind::lemma22_principal);
    CHECK_THROWS_AS(parse_main_term_kind("thm9"), DomainError);
}

TEST_CASE("error profiles at p = 101") {
    const PrimeContext ctx(101);
    const MainTerms terms(ctx);
    double prev = 1e300;
    double lx = 0, ly = 0, lxx = 0, lxy = 0;
    int n = 0;
    for (std::uint64_t x : {10'000ULL, 1'000'000ULL, 100'000'000ULL, 10'000'000'000ULL}) {
        const double rel = std::abs(terms.thm1(x).relative_error);
        CHECK(rel < prev);
        prev = rel;
        CHECK(terms.lemma22(x, true).residual_scaled <= 0.42882690143103624 * (1 + 1e-9));
        const auto q = terms.lemma22(x, false);
        const double a = std::log(static_cast<double>(x)), b = std::log(std::abs(q.exact - q.predicted));
        lx += a, ly += b, lxx += a * a, lxy += a * b, ++n;
    }
    const double slope = (n * lxy - lx * ly) / (n * lxx - lx * lx);
    CHECK(slope < 0.30);
}

TEST_CASE("square-free main term within 1% at 10^6") {
    for (std::uint64_t p : {7u, 101u, 1009u}) {
        const PrimeContext ctx(p);
        CHECK(std::abs(main_term_prop42(ctx, 1'000'000).relative_error) < 0.01);
    }
}

TEST_CASE("cp_lower_ratio") {
    const auto r = constants_report(PrimeModulus(101));
    CHECK(r.cp_lower_ratio == doctest::Approx(r.cp.value * std::pow(101.0, 1.0 / (8.0 * std::sqrt(std::numbers::e)))));
    const auto sweep = cp_lower_ratio_sweep(2000);
    CHECK(sweep.primes_checked == 302);
    CHECK(sweep.argmin_p == 1559);
    CHECK(sweep.min_ratio == doctest::Approx(0.6743767448227795).epsilon(1e-9));
    CHECK(sweep.failures == 18);
}
