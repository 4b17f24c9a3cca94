#include "sfpr/analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "sfpr/charsums.hpp"
#include "sfpr/counting.hpp"
#include "sfpr/squarefull.hpp"

namespace sfpr {

namespace {

/// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double inv_pow_three_halves(double n) noexcept { return 1.0 / (n * std::sqrt(n)); }

// Quadratic-residue flags for [0, p): +1 residue, -1 non-residue, 0 at 0.
std::vector<std::int8_t> quadratic_character_table(std::uint64_t p) {
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) chi[mul_mod(k, k, p)] = 1;
    return chi;
}

// B_2, B_4, ..., B_30.
constexpr std::array<double, 15> kBernoulliEven{
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

struct Tail {
    double value;
    double bound;
};

// sum_{k >= K} (a + k p)^(-s) by Euler-Maclaurin. Correction terms are added
// while they shrink; the remainder is bounded by the last one included.
Tail residue_class_tail(double a, double p, std::uint64_t K, double s) {
    const double u = a + static_cast<double>(K) * p;
    const double head = std::pow(u, -s);
    double value = u * head / (p * (s - 1.0)) + 0.5 * head;
    // derivative factor (s)_{2j-1} p^{2j-1} u^{-s-2j+1}, built incrementally
    double deriv = s * p / u * head;  // j = 1: (s)_1 p u^{-s-1}
    double factorial = 2.0;           // (2j)!
    double last = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= kBernoulliEven.size(); ++j) {
        const double term = kBernoulliEven[j - 1] / factorial * deriv;
        if (std::abs(term) >= last) break;
        value += term;
        last = std::abs(term);
        if (last < 1e-18 * value) break;
        const double m = static_cast<double>(2 * j - 1);  // current derivative order
        deriv *= (s + m) * (s + m + 1.0) * (p / u) * (p / u);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return {value, last};
}

double cp_lower_exponent() { return 1.0 / (8.0 * std::sqrt(std::numbers::e)); }

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod (7, 15).

constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gauss_kronrod(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <class F>
double integrate_adaptive(const F& f, double lo, double hi, double abs_tol, double rel_tol) {
    struct Interval {
        double lo, hi, value, error;
    };
    std::vector<Interval> pending;
    auto [v0, e0] = gauss_kronrod(f, lo, hi);
    pending.push_back({lo, hi, v0, e0});
    double total = v0;
    double error = e0;
    for (int iter = 0; iter < 2000 && error > std::max(abs_tol, rel_tol * std::abs(total)); ++iter) {
        auto worst = std::max_element(pending.begin(), pending.end(),
                                      [](const Interval& x, const Interval& y) { return x.error < y.error; });
        const Interval w = *worst;
        pending.erase(worst);
        const double mid = 0.5 * (w.lo + w.hi);
        auto [lv, le] = gauss_kronrod(f, w.lo, mid);
        auto [rv, re] = gauss_kronrod(f, mid, w.hi);
        pending.push_back({w.lo, mid, lv, le});
        pending.push_back({mid, w.hi, rv, re});
        total = 0.0;
        error = 0.0;
        for (const auto& iv : pending) {
            total += iv.value;
            error += iv.error;
        }
    }
    CompensatedSum sum;
    for (const auto& iv : pending) sum.add(iv.value);
    return sum.value();
}

}  // namespace

// ---------------------------------------------------------------------------

double zeta(double s) {
    if (s == 1.0) throw DomainError("zeta: pole at s = 1");
    if (!(s > 0.0)) throw DomainError("zeta: only s > 0 is supported");
    // eta(s) = sum_{k >= 0} (-1)^k (k+1)^(-s), accelerated.
    constexpr int n = 40;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(static_cast<double>(k + 1), -s);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    const double eta = sum / d;
    return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

Certified L_quadratic(const PrimeModulus& modulus) {
    const std::uint64_t p = modulus.p();
    const auto chi = quadratic_character_table(p);
    // Largest partial sum over one period; the partial sums are p-periodic.
    std::int64_t partial = 0;
    std::int64_t bound = 0;
    for (std::uint64_t n = 1; n < p; ++n) {
        partial += chi[n];
        bound = std::max<std::int64_t>(bound, std::abs(partial));
    }
    const double b = std::max<double>(1.0, static_cast<double>(bound));
    constexpr double target = 5e-10;
    const auto terms = static_cast<std::uint64_t>(std::ceil(std::pow(2.0 * b / target, 2.0 / 3.0)));

    CompensatedSum sum;
    std::uint64_t residue = 0;
    for (std::uint64_t n = 1; n <= terms; ++n) {
        if (++residue == p) residue = 0;
        if (chi[residue] != 0)
            sum.add(chi[residue] > 0 ? inv_pow_three_halves(static_cast<double>(n))
                                     : -inv_pow_three_halves(static_cast<double>(n)));
    }
    const double tail = 2.0 * b * std::pow(static_cast<double>(terms + 1), -1.5);
    return {sum.value(), tail};
}

Certified cp_direct(const PrimeModulus& modulus) {
    const std::uint64_t p = modulus.p();
    const auto chi = quadratic_character_table(p);
    constexpr std::uint64_t kHead = 6;
    constexpr double s = 1.5;
    const auto pd = static_cast<double>(p);
    CompensatedSum sum;
    double bound = 0.0;
    for (std::uint64_t a = 1; a < p; ++a) {
        if (chi[a] >= 0) continue;
        double head = 0.0;
        for (std::uint64_t k = 0; k < kHead; ++k)
            head += inv_pow_three_halves(static_cast<double>(a + k * p));
        const Tail tail = residue_class_tail(static_cast<double>(a), pd, kHead, s);
        sum.add(head + tail.value);
        bound += tail.bound;
    }
    const double value = 2.0 * sum.value();
    // Remainders plus a generous allowance for rounding in the per-class sums.
    const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * value;
    return {value, 2.0 * bound + rounding};
}

CpEvaluation compute_Cp(const PrimeModulus& modulus) {
    const auto p = static_cast<double>(modulus.p());
    const Certified l = L_quadratic(modulus);
    const Certified direct = cp_direct(modulus);
    CpEvaluation out;
    out.value = zeta(1.5) * (1.0 - std::pow(p, -1.5)) - l.value;
    out.direct = direct.value;
    out.closed_tail = l.tail_bound;
    out.direct_tail = direct.tail_bound;
    out.identity_residual = std::abs(out.value - out.direct);
    return out;
}

Certified shapiro_c(const PrimeModulus& modulus) {
    const std::uint64_t p = modulus.p();
    const Certified cp = cp_direct(modulus);
    const double nonresidue_sum = 0.5 * cp.value;
    constexpr std::uint64_t kMobiusBound = 100'000;
    const auto mu = mobius_table(kMobiusBound);
    CompensatedSum dirichlet;
    for (std::uint64_t d = 1; d <= kMobiusBound; ++d) {
        if (mu[d] == 0 || d % p == 0) continue;
        const auto dd = static_cast<double>(d);
        dirichlet.add(static_cast<double>(mu[d]) / (dd * dd * dd));
    }
    // sum_{d > D} d^-3 <= 1 / (2 D^2)
    const double d_tail = 0.5 / (static_cast<double>(kMobiusBound) * kMobiusBound);
    const double factor = 2.0 * (1.0 - 1.0 / static_cast<double>(p));
    const double m = dirichlet.value();
    const double value = factor * nonresidue_sum * m;
    const double tail = factor * (nonresidue_sum * d_tail + 0.5 * cp.tail_bound * (std::abs(m) + d_tail));
    return {value, tail};
}

double li(double x) {
    if (!(x >= 2.0)) throw DomainError("li: x must be at least 2");
    if (x == 2.0) return 0.0;
    // t = e^u: integral of e^u / u over [log 2, log x].
    auto integrand = [](double u) { return std::exp(u) / u; };
    return integrate_adaptive(integrand, std::log(2.0), std::log(x), 1e-10, 1e-15);
}

double li_or_zero(double x) { return x < 2.0 ? 0.0 : li(x); }

CorollaryConstants corollary_constants() {
    const double root_e = std::sqrt(std::numbers::e);
    return {2.0 / 3.0 + 3.0 / (4.0 * root_e), 1.0 / (8.0 * root_e)};
}

ConstantsReport constants_report(const PrimeModulus& modulus) {
    ConstantsReport r;
    r.p = modulus.p();
    r.cp = compute_Cp(modulus);
    r.shapiro = shapiro_c(modulus);
    const auto p = static_cast<double>(modulus.p());
    r.zeta3 = zeta(3.0);
    r.zeta_three_halves = zeta(1.5);
    r.zeta_two_thirds = zeta(2.0 / 3.0);
    r.L_three_halves_quadratic = {r.zeta_three_halves * (1.0 - std::pow(p, -1.5)) - r.cp.value,
                                  r.cp.closed_tail};
    r.cp_lower_ratio = r.cp.value * std::pow(p, cp_lower_exponent());
    return r;
}

CpSweep cp_lower_ratio_sweep(std::uint64_t limit, unsigned jobs) {
    std::vector<std::uint64_t> primes;
    if (limit >= 3) primes = sieve_primes(limit);
    if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());
    jobs = std::max(1u, jobs);
    std::vector<double> ratios(primes.size());
    auto worker = [&](unsigned w) {
        for (std::size_t i = w; i < primes.size(); i += jobs) {
            const Certified cp = cp_direct(PrimeModulus(primes[i]));
            ratios[i] = cp.value * std::pow(static_cast<double>(primes[i]), cp_lower_exponent());
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    }
    CpSweep out;
    out.min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        ++out.primes_checked;
        if (ratios[i] <= 1.0) ++out.failures;
        if (ratios[i] < out.min_ratio) {
            out.min_ratio = ratios[i];
            out.argmin_p = primes[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string to_string(MainTermKind kind) {
    switch (kind) {
        case MainTermKind::thm1: return "thm1";
        case MainTermKind::lemma22_principal: return "lemma22-principal";
        case MainTermKind::lemma22_quadratic: return "lemma22-quadratic";
        case MainTermKind::thm31: return "thm31";
        case MainTermKind::prop42: return "prop42";
    }
    return "?";
}

MainTermKind parse_main_term_kind(const std::string& text) {
    if (text == "thm1") return MainTermKind::thm1;
    if (text == "lemma22" || text == "lemma22-principal") return MainTermKind::lemma22_principal;
    if (text == "lemma22-quadratic") return MainTermKind::lemma22_quadratic;
    if (text == "thm31") return MainTermKind::thm31;
    if (text == "prop42") return MainTermKind::prop42;
    throw DomainError("unknown profile target '" + text + "'");
}

namespace {

void finish(MainTermBreakdown& b, double envelope) {
    const double diff = static_cast<double>(b.exact) - b.predicted;
    b.relative_error = b.predicted != 0.0 ? diff / b.predicted : 0.0;
    b.residual_scaled = envelope > 0.0 ? std::abs(diff) / envelope : 0.0;
}

}  // namespace

MainTerms::MainTerms(const PrimeContext& context) : context_(&context) {
    const CpEvaluation cp = compute_Cp(context.modulus());
    cp_ = cp.value;
    l_quadratic_ = zeta(1.5) * (1.0 - std::pow(static_cast<double>(context.p()), -1.5)) - cp.value;
    const Factorization& n = context.p_minus_1();
    phi_ratio_ = static_cast<double>(n.euler_phi()) / static_cast<double>(n.value());
}

MainTermBreakdown MainTerms::thm1(std::uint64_t x) const {
    if (x == 0) throw DomainError("main term: x must be at least 1");
    const auto p = static_cast<double>(context_->p());
    const auto xd = static_cast<double>(x);
    MainTermBreakdown b;
    b.p = context_->p();
    b.x = x;
    b.leading_term = cp_ * std::sqrt(xd) / (zeta(3.0) * (1.0 + 1.0 / p + 1.0 / (p * p)));
    b.predicted = phi_ratio_ * b.leading_term;
    b.exact = static_cast<std::int64_t>(brute_count_pr(context_->modulus(), x, CountTarget::squarefull));
    const double envelope = std::cbrt(xd) * std::log(std::max(xd, std::numbers::e)) *
                            std::pow(p, 1.0 / 9.0) * std::pow(std::log(p), 1.0 / 6.0) *
                            std::ldexp(1.0, static_cast<int>(context_->p_minus_1().omega()));
    finish(b, phi_ratio_ * envelope);
    return b;
}

MainTermBreakdown MainTerms::lemma22(std::uint64_t x, bool principal) const {
    if (x == 0) throw DomainError("main term: x must be at least 1");
    const auto p = static_cast<double>(context_->p());
    const auto xd = static_cast<double>(x);
    const double local = zeta(3.0) * (1.0 + 1.0 / p + 1.0 / (p * p));
    MainTermBreakdown b;
    b.p = context_->p();
    b.x = x;
    const Character chi = principal ? principal_character(*context_) : quadratic_character(*context_);
    b.exact = std::llround(sum_char_squarefull(chi, x, Route::direct).value.real());
    double envelope = 0.0;
    if (principal) {
        b.leading_term = zeta(1.5) * (1.0 - std::pow(p, -1.5)) / local * std::sqrt(xd);
        b.secondary_term = zeta(2.0 / 3.0) / zeta(2.0) * (1.0 - std::pow(p, -2.0 / 3.0)) /
                           (1.0 + 1.0 / p) * std::cbrt(xd);
        envelope = std::pow(xd, 1.0 / 6.0 + 0.01);
    } else {
        b.leading_term = l_quadratic_ / local * std::sqrt(xd);
        envelope = std::pow(xd, 0.25) * std::sqrt(std::log(std::max(xd, std::numbers::e))) *
                   std::pow(p, 3.0 / 32.0);
    }
    b.predicted = b.leading_term + b.secondary_term;
    finish(b, envelope);
    return b;
}

MainTermBreakdown MainTerms::thm31(std::uint64_t x) const {
    if (x < 8) throw DomainError("thm31 main term: x must be at least 8");
    const std::uint64_t p = context_->p();
    const auto xd = static_cast<double>(x);
    MainTermBreakdown b;
    b.p = p;
    b.x = x;
    CompensatedSum sum;
    for (std::uint64_t r : sieve_primes(std::max<std::uint64_t>(2, icbrt(x)))) {
        if (r * r * r > x) break;
        if (r == p || legendre(static_cast<std::int64_t>(r), p) != -1) continue;
        const auto rd = static_cast<double>(r);
        sum.add(2.0 * li_or_zero(std::sqrt(xd) / (rd * std::sqrt(rd))));
    }
    b.leading_term = sum.value();
    b.predicted = phi_ratio_ * b.leading_term;
    b.exact = static_cast<std::int64_t>(brute_count_pr(context_->modulus(), x, CountTarget::S));
    const double l = std::log(static_cast<double>(p) * xd);
    const double envelope = std::ldexp(1.0, static_cast<int>(context_->p_minus_1().omega())) *
                            std::cbrt(xd) * l * l;
    finish(b, phi_ratio_ * envelope);
    return b;
}

MainTermBreakdown MainTerms::prop42(std::uint64_t x) const {
    if (x == 0) throw DomainError("main term: x must be at least 1");
    const auto p = static_cast<double>(context_->p());
    const auto xd = static_cast<double>(x);
    MainTermBreakdown b;
    b.p = context_->p();
    b.x = x;
    b.leading_term = 6.0 / (std::numbers::pi * std::numbers::pi) * xd;
    const auto phi = static_cast<double>(context_->p_minus_1().euler_phi());
    b.predicted = p * phi / (p * p - 1.0) * b.leading_term;
    b.exact = static_cast<std::int64_t>(brute_count_pr(context_->modulus(), x, CountTarget::squarefree));
    // r = 3 instance of x^(1-1/r) p^((r+1)/(4r^2)) (log p)^(1/(2r)).
    finish(b, burgess_envelope(context_->p(), xd, 3));
    return b;
}

MainTermBreakdown MainTerms::evaluate(MainTermKind kind, std::uint64_t x) const {
    switch (kind) {
        case MainTermKind::thm1: return thm1(x);
        case MainTermKind::lemma22_principal: return lemma22(x, true);
        case MainTermKind::lemma22_quadratic: return lemma22(x, false);
        case MainTermKind::thm31: return thm31(x);
        case MainTermKind::prop42: return prop42(x);
    }
    throw DomainError("unknown main term");
}

MainTermBreakdown main_term_thm1(const PrimeContext& context, std::uint64_t x) {
    return MainTerms(context).thm1(x);
}
MainTermBreakdown main_term_lemma22(const PrimeContext& context, std::uint64_t x, bool principal) {
    return MainTerms(context).lemma22(x, principal);
}
MainTermBreakdown main_term_thm31(const PrimeContext& context, std::uint64_t x) {
    return MainTerms(context).thm31(x);
}
MainTermBreakdown main_term_prop42(const PrimeContext& context, std::uint64_t x) {
    return MainTerms(context).prop42(x);
}

}  // namespace sfpr
