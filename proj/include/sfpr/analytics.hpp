#pragma once

// Analytic constants and main terms for the counting functions, together with
// the harnesses that compare each main term against an exact count.
//
// Truncated Dirichlet series return their value with a certified bound on the
// discarded tail.

#include <cstdint>
#include <string>

#include "sfpr/arith.hpp"
#include "sfpr/characters.hpp"

namespace sfpr {

struct Certified {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// Riemann zeta for real s in (0, 1) or (1, inf), through the alternating
/// eta series with Cohen-Villegas-Zagier acceleration. Absolute error ~1e-15
/// away from the pole. Throws DomainError at s = 1 and for s <= 0.
double zeta(double s);

/// L(3/2, chi_2): direct sum up to N with an Abel-summation tail bound
/// 2 B (N+1)^(-3/2), where B bounds |sum_{n <= t} chi_2(n)| over one period.
/// N is chosen so the certified tail is below 1e-9.
Certified L_quadratic(const PrimeModulus& modulus);

/// 2 sum_{chi_2(n) = -1} n^(-3/2), summed one non-residue class a mod p at a
/// time: a few leading terms of a + kp directly, the rest by Euler-Maclaurin
/// with a bounded remainder.
Certified cp_direct(const PrimeModulus& modulus);

struct CpEvaluation {
    double value = 0.0;        ///< closed route: zeta(3/2)(1 - p^(-3/2)) - L(3/2, chi_2)
    double direct = 0.0;       ///< direct non-residue route
    double closed_tail = 0.0;  ///< certified tail of the L(3/2, chi_2) sum
    double direct_tail = 0.0;  ///< certified remainder of the direct route
    double identity_residual = 0.0;
};

CpEvaluation compute_Cp(const PrimeModulus& modulus);

/// 2 (1 - 1/p) sum over square-free quadratic non-residues q of q^(-3/2),
/// evaluated as 2 (1 - 1/p) * (C_p / 2) * sum_{d <= D, p !| d} mu(d) d^(-3)
/// (mu^2(q) = sum_{d^2 | q} mu(d) and chi_2(d^2 m) = chi_2(m)).
Certified shapiro_c(const PrimeModulus& modulus);

/// Li(x) = integral from 2 to x of dt / log t, adaptive Gauss-Kronrod.
/// Throws DomainError for x < 2.
double li(double x);

/// Li(x) for x >= 2, and 0 below 2.
double li_or_zero(double x);

/// 2/3 + 3/(4 sqrt e) and 1/(8 sqrt e).
struct CorollaryConstants {
    double least_squarefull_exponent = 0.0;
    double cp_lower_exponent = 0.0;
};
CorollaryConstants corollary_constants();

struct ConstantsReport {
    std::uint64_t p = 0;
    CpEvaluation cp;
    Certified shapiro;
    Certified L_three_halves_quadratic;
    double zeta3 = 0.0;
    double zeta_three_halves = 0.0;
    double zeta_two_thirds = 0.0;
    /// C_p * p^(1/(8 sqrt e)).
    double cp_lower_ratio = 0.0;
};

ConstantsReport constants_report(const PrimeModulus& modulus);

struct CpSweep {
    double min_ratio = 0.0;
    std::uint64_t argmin_p = 0;
    std::uint64_t primes_checked = 0;
    std::uint64_t failures = 0;  ///< primes with ratio <= 1
};

/// cp_lower_ratio from the direct route for every odd prime p <= limit.
CpSweep cp_lower_ratio_sweep(std::uint64_t limit, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Main terms.

enum class MainTermKind { thm1, lemma22_principal, lemma22_quadratic, thm31, prop42 };

std::string to_string(MainTermKind kind);
/// Accepts thm1, lemma22 (principal), lemma22-principal, lemma22-quadratic,
/// thm31, prop42.
MainTermKind parse_main_term_kind(const std::string& text);

struct MainTermBreakdown {
    std::uint64_t p = 0;
    std::uint64_t x = 0;
    double leading_term = 0.0;
    double secondary_term = 0.0;
    /// With the phi(p-1)/(p-1) prefactor where the counting formula carries it.
    double predicted = 0.0;
    std::int64_t exact = 0;
    double relative_error = 0.0;
    /// |exact - predicted| / error envelope at this p.
    double residual_scaled = 0.0;
};

/// Per-prime constants computed once; main-term queries are then cheap apart
/// from the exact count.
class MainTerms {
public:
    explicit MainTerms(const PrimeContext& context);

    double Cp() const noexcept { return cp_; }
    double L_quadratic() const noexcept { return l_quadratic_; }

    /// phi(p-1)/(p-1) C_p sqrt(x) / (zeta(3) (1 + 1/p + 1/p^2)).
    MainTermBreakdown thm1(std::uint64_t x) const;
    /// Square-full character sums for chi_0 (two terms) or chi_2 (one term).
    MainTermBreakdown lemma22(std::uint64_t x, bool principal) const;
    /// phi(p-1)/(p-1) * 2 sum over prime non-residues r <= x^(1/3) of Li(sqrt(x)/r^(3/2)).
    MainTermBreakdown thm31(std::uint64_t x) const;
    /// p phi(p-1)/(p^2-1) (6/pi^2) x.
    MainTermBreakdown prop42(std::uint64_t x) const;

    MainTermBreakdown evaluate(MainTermKind kind, std::uint64_t x) const;

private:
    const PrimeContext* context_;
    double cp_;
    double l_quadratic_;
    double phi_ratio_;
};

MainTermBreakdown main_term_thm1(const PrimeContext& context, std::uint64_t x);
MainTermBreakdown main_term_lemma22(const PrimeContext& context, std::uint64_t x, bool principal);
MainTermBreakdown main_term_thm31(const PrimeContext& context, std::uint64_t x);
MainTermBreakdown main_term_prop42(const PrimeContext& context, std::uint64_t x);

}  // namespace sfpr
