#include "sfpr/characters.hpp"

#include <cmath>
#include <numbers>

namespace sfpr {

namespace {

// exp(2 pi i k / n), exact at quarter turns.
std::complex<double> unit_root(std::uint64_t k, std::uint64_t n) {
    const auto k4 = static_cast<unsigned __int128>(k) * 4;
    const auto n4 = static_cast<unsigned __int128>(n);
    if (k == 0) return {1.0, 0.0};
    if (k4 == 2 * n4) return {-1.0, 0.0};
    if (k4 == n4) return {0.0, 1.0};
    if (k4 == 3 * n4) return {0.0, -1.0};
    const long double angle = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>(k) / static_cast<long double>(n);
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace

PrimeContext::PrimeContext(std::uint64_t p, ContextOptions options)
    : modulus_(p), generator_(least_primitive_root(modulus_)) {
    const std::uint64_t n = p - 1;
    if (p <= options.table_threshold) {
        backend_ = IndexBackend::table;
        index_table_.assign(p, 0);
        std::uint64_t power = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            index_table_[power] = static_cast<std::uint32_t>(k);
            power = mul_mod(power, generator_, p);
        }
        roots_.resize(n);
        for (std::uint64_t k = 0; k < n; ++k) roots_[k] = unit_root(k, n);
    } else {
        backend_ = IndexBackend::baby_giant;
        baby_steps_ = isqrt(n);
        if (baby_steps_ * baby_steps_ < n) ++baby_steps_;
        baby_table_.reserve(baby_steps_);
        std::uint64_t power = 1;
        for (std::uint64_t i = 0; i < baby_steps_; ++i) {
            baby_table_.emplace(power, i);
            power = mul_mod(power, generator_, p);
        }
        giant_factor_ = mod_pow(generator_, n - baby_steps_ % n, p);
    }
}

std::uint64_t PrimeContext::baby_giant_index(std::uint64_t r) const {
    std::uint64_t y = r;
    for (std::uint64_t k = 0; k <= baby_steps_; ++k) {
        if (auto it = baby_table_.find(y); it != baby_table_.end())
            return (k * baby_steps_ + it->second) % order();
        y = mul_mod(y, giant_factor_, p());
    }
    throw Error("discrete log failed; generator is not a primitive root");
}

std::uint64_t PrimeContext::index(std::uint64_t m) const {
    const std::uint64_t r = m % p();
    if (r == 0) throw DomainError("index: argument divisible by p");
    if (backend_ == IndexBackend::table) return index_table_[r];
    return baby_giant_index(r);
}

std::complex<double> PrimeContext::root_of_unity(std::uint64_t k) const {
    k %= order();
    if (backend_ == IndexBackend::table) return roots_[k];
    return unit_root(k, order());
}

std::shared_ptr<const PrimeContext> build_context(std::uint64_t p, ContextOptions options) {
    return std::make_shared<const PrimeContext>(p, options);
}

// ---------------------------------------------------------------------------

Character::Character(const PrimeContext& context, std::uint64_t exponent_index)
    : context_(&context), j_(exponent_index % context.order()) {}

std::uint64_t Character::order() const noexcept {
    return context_->order() / gcd(j_, context_->order());
}

Character Character::pow(std::uint64_t e) const {
    return Character(*context_, mul_mod(j_, e % context_->order(), context_->order()));
}

Character Character::conj() const {
    return Character(*context_, (context_->order() - j_) % context_->order());
}

std::complex<double> Character::at(std::uint64_t m) const {
    const std::uint64_t r = m % context_->p();
    if (r == 0) return {0.0, 0.0};
    if (j_ == 0) return {1.0, 0.0};
    return context_->root_of_unity(mul_mod(j_, context_->index(r), context_->order()));
}

std::complex<double> Character::operator()(std::int64_t m) const {
    const auto sp = static_cast<std::int64_t>(context_->p());
    return at(static_cast<std::uint64_t>(((m % sp) + sp) % sp));
}

Character principal_character(const PrimeContext& context) { return Character(context, 0); }

Character quadratic_character(const PrimeContext& context) {
    return Character(context, context.order() / 2);
}

std::vector<Character> characters_of_order(const PrimeContext& context, std::uint64_t d) {
    const std::uint64_t n = context.order();
    if (d == 0 || n % d != 0) throw DomainError("characters_of_order: d must divide p - 1");
    // Order d means j = k * (n / d) with gcd(k, d) = 1.
    std::vector<Character> out;
    const std::uint64_t step = n / d;
    for (std::uint64_t k = 0; k < d; ++k)
        if (gcd(k, d) == 1) out.emplace_back(context, k * step);
    return out;
}

}  // namespace sfpr
