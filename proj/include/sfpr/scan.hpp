#pragma once

// Parallel per-prime scanner. Primes are split into contiguous blocks that
// workers pull from a shared counter; finished blocks are handed to the sink
// strictly in block order, so output never depends on the worker count.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace sfpr {

struct ScanRecord {
    std::uint64_t p = 0;
    std::uint64_t g_squarefull = 0;
    std::uint64_t g_squarefree = 0;  ///< 0 when not computed
    std::uint64_t g_least_pr = 0;    ///< 0 when not computed
    double ratio = 0.0;              ///< g_squarefull / p
    unsigned omega_p_minus_1 = 0;
};

enum class ScanFields { all, squarefull_only };

struct ScanOptions {
    std::uint64_t from = 3;
    std::uint64_t to = 3;
    unsigned jobs = 1;
    std::size_t block_size = 4096;
    ScanFields fields = ScanFields::all;
    /// Called from the flushing thread after each block: (primes done, total).
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Number of workers to use when none is requested: SFPR_JOBS if set,
/// otherwise the hardware concurrency.
unsigned default_jobs();

/// Computes one record; squarefull_prefix must list every square-full number
/// up to covered_limit in ascending order.
ScanRecord scan_prime(std::uint64_t p, const std::vector<std::uint64_t>& squarefull_prefix,
                      std::uint64_t covered_limit, ScanFields fields = ScanFields::all);

/// Visits the record of every odd prime in [from, to], ascending in p.
/// Throws DomainError unless 3 <= from <= to.
void scan_primes(const ScanOptions& options, const std::function<void(const ScanRecord&)>& sink);

inline constexpr const char* kScanCsvHeader = "p,g_squarefull,g_squarefree,g_least_pr,ratio,omega";
std::string to_csv_row(const ScanRecord& record);

/// Header plus one row per prime.
void write_scan_csv(std::ostream& out, const ScanOptions& options);

struct ExceptionalPrime {
    std::uint64_t p = 0;
    std::uint64_t g_squarefull = 0;
};

struct HypothesisReport {
    std::uint64_t limit = 0;
    std::uint64_t primes_checked = 0;
    std::vector<ExceptionalPrime> exceptional;  ///< ascending in p
    std::uint64_t largest_exceptional = 0;      ///< 0 when none
    double max_ratio = 0.0;
    std::uint64_t max_ratio_p = 0;
};

/// Every prime 3 <= p <= limit with g_squarefull(p) >= p.
HypothesisReport run_hypothesis(std::uint64_t limit, unsigned jobs,
                                std::function<void(std::uint64_t, std::uint64_t)> progress = {});

}  // namespace sfpr
