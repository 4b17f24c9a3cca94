// sfpr: command-line front end for counting, searching and profiling
// square-full primitive roots.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfpr/analytics.hpp"
#include "sfpr/counting.hpp"
#include "sfpr/scan.hpp"
#include "sfpr/squarefull.hpp"
#include "sfpr/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

/// Parses a positive integer written plainly or as 1e6 / 2.5e3.
std::uint64_t parse_integer(const std::string& text, const char* what) {
    std::size_t used = 0;
    long double v = 0;
    try {
        v = std::stold(text, &used);
    } catch (const std::exception&) {
        throw sfpr::DomainError(std::string(what) + ": not a number: '" + text + "'");
    }
    if (used != text.size() || v < 0 || v != std::floor(v) || v > 9.2e18L)
        throw sfpr::DomainError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Writes to --out when given, else stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) throw sfpr::DomainError("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close() {
        stream().flush();
        if (file_ && !*file_) throw sfpr::DomainError("failed writing output file");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::function<void(std::uint64_t, std::uint64_t)> stderr_progress(const char* label) {
    if (!isatty(STDERR_FILENO)) return {};
    return [label](std::uint64_t done, std::uint64_t total) {
        std::fprintf(stderr, "\r%s: %llu / %llu primes", label, static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(total));
        if (done == total) std::fputc('\n', stderr);
    };
}

ordered_json certified_json(const sfpr::Certified& c) {
    return {{"value", c.value}, {"tail_bound", c.tail_bound}};
}

struct XGrid {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

XGrid parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw sfpr::DomainError("--x-grid must look like lo:hi:decade");
    XGrid g{parse_integer(text.substr(0, first), "--x-grid lo"),
            parse_integer(text.substr(first + 1, second - first - 1), "--x-grid hi")};
    if (text.substr(second + 1) != "decade") throw sfpr::DomainError("--x-grid step must be 'decade'");
    if (g.lo == 0 || g.lo > g.hi) throw sfpr::DomainError("--x-grid needs 1 <= lo <= hi");
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Square-full and square-free primitive roots modulo primes"};
    app.require_subcommand(1);

    std::string p_text, x_text, from_text, to_text, limit_text;
    std::string method = "both", target = "squarefull", out_path, grid_text, suite = "all";
    unsigned jobs = sfpr::default_jobs();
    double tolerance = 1e-6;

    auto* count = app.add_subcommand("count", "count primitive roots in a set, by brute force and/or character sums");
    count->add_option("--p", p_text, "odd prime modulus")->required();
    count->add_option("--x", x_text, "upper bound x >= 1")->required();
    count->add_option("--method", method, "brute | charsum | both")->capture_default_str();
    count->add_option("--target", target, "squarefull | S | squarefree")->capture_default_str();
    count->add_option("--tolerance", tolerance, "allowed |brute - charsum|")->capture_default_str();

    auto* least = app.add_subcommand("least", "least square-full, square-free and plain primitive roots");
    least->add_option("--p", p_text, "odd prime modulus")->required();

    auto* scan = app.add_subcommand("scan", "CSV of least primitive roots for every prime in a range");
    scan->add_option("--from", from_text, "first candidate (>= 3)")->required();
    scan->add_option("--to", to_text, "last candidate")->required();
    scan->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    scan->add_option("--out", out_path, "output path (default stdout)");

    auto* hypothesis = app.add_subcommand("hypothesis", "list primes p <= limit with g_squarefull(p) >= p");
    hypothesis->add_option("--limit", limit_text, "largest candidate (>= 3)")->required();
    hypothesis->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    hypothesis->add_option("--out", out_path, "output path (default stdout)");

    auto* constants = app.add_subcommand("constants", "analytic constants for one prime");
    constants->add_option("--p", p_text, "odd prime modulus")->required();

    auto* profile = app.add_subcommand("profile", "main term against exact count over a decade grid");
    profile->add_option("--p", p_text, "odd prime modulus")->required();
    profile->add_option("--x-grid", grid_text, "lo:hi:decade")->required();
    profile->add_option("--target", target, "thm1 | lemma22[-principal|-quadratic] | thm31 | prop42")->required();
    profile->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run self-check suites");
    verify->add_option("--suite", suite, "identities | characters | constants | all")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) {
            const sfpr::PrimeContext ctx(parse_integer(p_text, "--p"));
            const std::uint64_t x = parse_integer(x_text, "--x");
            if (x == 0) throw sfpr::DomainError("--x must be at least 1");
            const auto report = sfpr::count_pr(ctx, x, sfpr::parse_count_target(target),
                                               sfpr::parse_count_method(method));
            ordered_json j;
            j["p"] = report.p;
            j["x"] = report.x;
            j["target"] = sfpr::to_string(report.target);
            j["method"] = sfpr::to_string(report.method);
            j["brute_count"] = report.brute_count ? ordered_json(*report.brute_count) : ordered_json();
            j["charsum_value"] = report.charsum_value ? ordered_json(*report.charsum_value) : ordered_json();
            j["charsum_imag"] = report.charsum_imag;
            j["residual"] = report.residual ? ordered_json(*report.residual) : ordered_json();
            j["tolerance"] = tolerance;
            j["characters_used"] = report.characters_used;
            j["elapsed_seconds"] = {{"brute", report.brute_seconds}, {"charsum", report.charsum_seconds}};
            const bool ok = !report.residual || *report.residual <= tolerance;
            j["ok"] = ok;
            std::cout << j.dump(2) << '\n';
            return ok ? 0 : kExitVerification;
        }

        if (*least) {
            const std::uint64_t p = parse_integer(p_text, "--p");
            const sfpr::PrimeModulus modulus(p);
            const auto covered = std::uint64_t{1} << 16;
            const auto prefix = sfpr::squarefull_upto(covered);
            std::cout << sfpr::kScanCsvHeader << '\n'
                      << sfpr::to_csv_row(sfpr::scan_prime(p, prefix, covered)) << '\n';
            return 0;
        }

        if (*scan) {
            sfpr::ScanOptions options;
            options.from = parse_integer(from_text, "--from");
            options.to = parse_integer(to_text, "--to");
            options.jobs = jobs;
            options.progress = stderr_progress("scan");
            if (options.from < 3 || options.from > options.to)
                throw sfpr::DomainError("scan needs 3 <= --from <= --to");
            Output out(out_path);
            sfpr::write_scan_csv(out.stream(), options);
            out.close();
            return 0;
        }

        if (*hypothesis) {
            const std::uint64_t limit = parse_integer(limit_text, "--limit");
            const auto report = sfpr::run_hypothesis(limit, jobs, stderr_progress("hypothesis"));
            ordered_json j;
            j["limit"] = report.limit;
            j["primes_checked"] = report.primes_checked;
            ordered_json list = ordered_json::array();
            for (const auto& e : report.exceptional) list.push_back({{"p", e.p}, {"g_squarefull", e.g_squarefull}});
            j["exceptional"] = list;
            j["exceptional_count"] = report.exceptional.size();
            j["largest_exceptional"] = report.largest_exceptional;
            j["max_ratio"] = report.max_ratio;
            j["max_ratio_p"] = report.max_ratio_p;
            Output out(out_path);
            out.stream() << j.dump(2) << '\n';
            out.close();
            return 0;
        }

        if (*constants) {
            const sfpr::PrimeModulus modulus(parse_integer(p_text, "--p"));
            const auto r = sfpr::constants_report(modulus);
            ordered_json j;
            j["p"] = r.p;
            j["C_p"] = r.cp.value;
            j["C_p_direct"] = r.cp.direct;
            j["C_p_identity_residual"] = r.cp.identity_residual;
            j["C_p_closed_tail_bound"] = r.cp.closed_tail;
            j["C_p_direct_tail_bound"] = r.cp.direct_tail;
            j["shapiro_c"] = certified_json(r.shapiro);
            j["L_three_halves_quadratic"] = certified_json(r.L_three_halves_quadratic);
            j["zeta3"] = r.zeta3;
            j["zeta_three_halves"] = r.zeta_three_halves;
            j["zeta_two_thirds"] = r.zeta_two_thirds;
            j["cp_lower_ratio"] = r.cp_lower_ratio;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*profile) {
            const sfpr::PrimeContext ctx(parse_integer(p_text, "--p"));
            const auto kind = sfpr::parse_main_term_kind(target);
            const XGrid grid = parse_grid(grid_text);
            if (kind == sfpr::MainTermKind::thm31 && grid.lo < 8)
                throw sfpr::DomainError("thm31 profile needs x >= 8");
            const sfpr::MainTerms terms(ctx);
            Output out(out_path);
            out.stream() << "x,exact,predicted,relative_error,residual_scaled\n";
            for (std::uint64_t x = grid.lo;; x *= 10) {
                const auto b = terms.evaluate(kind, x);
                out.stream() << b.x << ',' << b.exact << ',' << fmt_double(b.predicted) << ','
                             << fmt_double(b.relative_error) << ',' << fmt_double(b.residual_scaled) << '\n';
                if (x > grid.hi / 10) break;
            }
            out.close();
            return 0;
        }

        if (*verify) {
            const auto s = sfpr::run_verify_suite(suite);
            ordered_json j;
            j["suite"] = s.suite;
            j["cases"] = s.cases;
            j["failures"] = s.failures;
            j["max_residual"] = s.max_residual;
            if (!s.failure_notes.empty()) j["failure_notes"] = s.failure_notes;
            std::cout << j.dump(2) << '\n';
            return s.failures == 0 ? 0 : kExitVerification;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
