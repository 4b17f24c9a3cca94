#pragma once

// Square-full integers (every prime divisor appears at least squared),
// square-free integers, and the prime-pattern set S = { q^2 r^3 : q, r prime }.

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

namespace sfpr {

/// m = a^2 b^3 with b square-free. Every square-full m has exactly one such pair.
struct CanonicalPair {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    std::uint64_t value = 1;

    friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;
};

/// 1 counts as square-full. Throws DomainError for n = 0.
bool is_squarefull(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Throws DomainError unless n is square-full.
CanonicalPair canonical_decompose(std::uint64_t n);

/// Ascending, duplicate-free enumeration of square-full m <= limit.
///
/// One arithmetic stream a -> a^2 b^3 per square-free b <= limit^(1/3),
/// merged through a min-heap keyed on value, so memory is O(limit^(1/3)).
class SquarefullStream {
public:
    explicit SquarefullStream(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    std::optional<CanonicalPair> next();

private:
    struct Greater {
        bool operator()(const CanonicalPair& x, const CanonicalPair& y) const noexcept {
            return x.value > y.value;
        }
    };

    void push(std::uint64_t a, std::uint64_t b);

    std::uint64_t limit_;
    std::priority_queue<CanonicalPair, std::vector<CanonicalPair>, Greater> heap_;
};

SquarefullStream enumerate_squarefull(std::uint64_t limit);

/// Drains a stream into a vector of values.
std::vector<std::uint64_t> squarefull_upto(std::uint64_t limit);

/// Bit table of mu^2(m) for 0 <= m <= limit (entry 0 is false).
class SquarefreeTable {
public:
    explicit SquarefreeTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    bool operator[](std::uint64_t m) const { return bits_[m]; }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t limit_;
    std::uint64_t count_ = 0;
    std::vector<bool> bits_;
};

SquarefreeTable squarefree_table(std::uint64_t limit);

/// Mobius function on [0, limit] by linear sieve (entry 0 unused).
std::vector<std::int8_t> mobius_table(std::uint64_t limit);

/// Elements of S up to limit, ascending. q = r (fifth powers) is admitted.
std::vector<std::uint64_t> enumerate_S(std::uint64_t limit);

}  // namespace sfpr
