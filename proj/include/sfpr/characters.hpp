#pragma once

// Dirichlet characters modulo an odd prime p. A character is identified by
// its exponent index j in [0, p-2]:
//     chi_j(m) = exp(2 pi i * j * ind(m) / (p-1)),   chi_j(m) = 0 when p | m,
// where ind is the discrete logarithm to the least primitive root.

#include <complex>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "sfpr/arith.hpp"

namespace sfpr {

enum class IndexBackend { table, baby_giant };

struct ContextOptions {
    /// Use a full discrete-log table iff p <= table_threshold.
    std::uint64_t table_threshold = std::uint64_t{1} << 20;
};

/// Immutable environment for character work modulo p. Shareable across threads.
class PrimeContext {
public:
    /// Throws UnsupportedModulus unless p is an odd prime below 2^63.
    explicit PrimeContext(std::uint64_t p, ContextOptions options = {});

    std::uint64_t p() const noexcept { return modulus_.p(); }
    std::uint64_t order() const noexcept { return modulus_.p() - 1; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    const Factorization& p_minus_1() const noexcept { return modulus_.p_minus_1(); }
    std::uint64_t generator() const noexcept { return generator_; }
    IndexBackend backend() const noexcept { return backend_; }

    /// Discrete log of m (not divisible by p) to the generator, in [0, p-2].
    std::uint64_t index(std::uint64_t m) const;

    /// exp(2 pi i k / (p-1)).
    std::complex<double> root_of_unity(std::uint64_t k) const;

private:
    std::uint64_t baby_giant_index(std::uint64_t r) const;

    PrimeModulus modulus_;
    std::uint64_t generator_;
    IndexBackend backend_;

    // table backend
    std::vector<std::uint32_t> index_table_;
    std::vector<std::complex<double>> roots_;

    // baby-step/giant-step backend
    std::uint64_t baby_steps_ = 0;
    std::uint64_t giant_factor_ = 0;  // generator^(-baby_steps_)
    std::unordered_map<std::uint64_t, std::uint64_t> baby_table_;
};

std::shared_ptr<const PrimeContext> build_context(std::uint64_t p, ContextOptions options = {});

class Character {
public:
    Character(const PrimeContext& context, std::uint64_t exponent_index);

    const PrimeContext& context() const noexcept { return *context_; }
    std::uint64_t exponent_index() const noexcept { return j_; }

    /// (p-1) / gcd(j, p-1).
    std::uint64_t order() const noexcept;
    bool is_principal() const noexcept { return j_ == 0; }
    bool is_quadratic() const noexcept { return 2 * j_ == context_->order(); }

    /// The character chi^e.
    Character pow(std::uint64_t e) const;
    Character conj() const;

    std::complex<double> operator()(std::int64_t m) const;
    std::complex<double> at(std::uint64_t m) const;

    friend bool operator==(const Character& a, const Character& b) noexcept {
        return a.context_ == b.context_ && a.j_ == b.j_;
    }

private:
    const PrimeContext* context_;
    std::uint64_t j_;
};

inline std::complex<double> char_eval(const Character& chi, std::int64_t m) { return chi(m); }

Character principal_character(const PrimeContext& context);
Character quadratic_character(const PrimeContext& context);

/// Gamma_d: the phi(d) characters of exact order d, ascending in j.
/// Throws DomainError unless d | p - 1.
std::vector<Character> characters_of_order(const PrimeContext& context, std::uint64_t d);

}  // namespace sfpr
