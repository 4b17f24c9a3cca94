#include "sfpr/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "sfpr/arith.hpp"
#include "sfpr/counting.hpp"
#include "sfpr/squarefull.hpp"

namespace sfpr {

unsigned default_jobs() {
    if (const char* env = std::getenv("SFPR_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ScanRecord scan_prime(std::uint64_t p, const std::vector<std::uint64_t>& squarefull_prefix,
                      std::uint64_t covered_limit, ScanFields fields) {
    const PrimeModulus modulus(p);
    ScanRecord r;
    r.p = p;
    r.g_squarefull = least_squarefull_pr(modulus, squarefull_prefix, covered_limit);
    if (fields == ScanFields::all) {
        r.g_squarefree = least_squarefree_pr(modulus);
        r.g_least_pr = least_primitive_root(modulus);
    }
    r.ratio = static_cast<double>(r.g_squarefull) / static_cast<double>(p);
    r.omega_p_minus_1 = modulus.p_minus_1().omega();
    return r;
}

void scan_primes(const ScanOptions& options, const std::function<void(const ScanRecord&)>& sink) {
    if (options.from < 3 || options.from > options.to)
        throw DomainError("scan: need 3 <= from <= to");
    std::vector<std::uint64_t> primes;
    for_each_prime(options.from, options.to, [&](std::uint64_t q) { primes.push_back(q); });
    if (primes.empty()) return;

    // Least square-full primitive roots rarely exceed a small multiple of p;
    // anything past the cached prefix falls back to streaming.
    const std::uint64_t covered =
        std::min<std::uint64_t>(std::uint64_t{1} << 40, std::max<std::uint64_t>(1u << 16, 64 * options.to));
    const auto prefix = squarefull_upto(covered);

    const std::size_t block = std::max<std::size_t>(1, options.block_size);
    const std::size_t blocks = (primes.size() + block - 1) / block;
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(blocks)));

    auto compute_block = [&](std::size_t b) {
        std::vector<ScanRecord> rows;
        const std::size_t lo = b * block;
        const std::size_t hi = std::min(primes.size(), lo + block);
        rows.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i)
            rows.push_back(scan_prime(primes[i], prefix, covered, options.fields));
        return rows;
    };

    std::uint64_t done = 0;
    auto flush = [&](const std::vector<ScanRecord>& rows) {
        for (const auto& r : rows) sink(r);
        done += rows.size();
        if (options.progress) options.progress(done, primes.size());
    };

    if (jobs == 1) {
        for (std::size_t b = 0; b < blocks; ++b) flush(compute_block(b));
        return;
    }

    std::vector<std::optional<std::vector<ScanRecord>>> results(blocks);
    std::atomic<std::size_t> next_block{0};
    std::mutex mutex;
    std::condition_variable ready;
    std::exception_ptr failure;

    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::size_t b; (b = next_block.fetch_add(1)) < blocks;) {
                try {
                    auto rows = compute_block(b);
                    std::lock_guard lock(mutex);
                    results[b] = std::move(rows);
                } catch (...) {
                    std::lock_guard lock(mutex);
                    if (!failure) failure = std::current_exception();
                    next_block = blocks;
                }
                ready.notify_all();
            }
        });
    }

    for (std::size_t b = 0; b < blocks; ++b) {
        std::vector<ScanRecord> rows;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return results[b].has_value() || failure; });
            if (failure) break;
            rows = std::move(*results[b]);
            results[b].reset();
        }
        flush(rows);
    }
    next_block = blocks;
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

std::string to_csv_row(const ScanRecord& r) {
    char ratio[64];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    return std::to_string(r.p) + ',' + std::to_string(r.g_squarefull) + ',' +
           std::to_string(r.g_squarefree) + ',' + std::to_string(r.g_least_pr) + ',' + ratio + ',' +
           std::to_string(r.omega_p_minus_1);
}

void write_scan_csv(std::ostream& out, const ScanOptions& options) {
    out << kScanCsvHeader << '\n';
    scan_primes(options, [&](const ScanRecord& r) { out << to_csv_row(r) << '\n'; });
}

HypothesisReport run_hypothesis(std::uint64_t limit, unsigned jobs,
                                std::function<void(std::uint64_t, std::uint64_t)> progress) {
    if (limit < 3) throw DomainError("hypothesis: limit must be at least 3");
    HypothesisReport report;
    report.limit = limit;
    ScanOptions options;
    options.from = 3;
    options.to = limit;
    options.jobs = jobs;
    options.fields = ScanFields::squarefull_only;
    options.progress = std::move(progress);
    scan_primes(options, [&](const ScanRecord& r) {
        ++report.primes_checked;
        if (r.g_squarefull >= r.p) {
            report.exceptional.push_back({r.p, r.g_squarefull});
            report.largest_exceptional = r.p;
        }
        if (r.ratio > report.max_ratio) {
            report.max_ratio = r.ratio;
            report.max_ratio_p = r.p;
        }
    });
    return report;
}

}  // namespace sfpr
