#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "sfpr/arith.hpp"
#include "sfpr/scan.hpp"
#include "sfpr/squarefull.hpp"

using namespace sfpr;

namespace {

std::string scan_text(std::uint64_t from, std::uint64_t to, unsigned jobs, std::size_t block = 4096) {
    ScanOptions o;
    o.from = from;
    o.to = to;
    o.jobs = jobs;
    o.block_size = block;
    std::ostringstream out;
    write_scan_csv(out, o);
    return out.str();
}

}  // namespace

TEST_CASE("rows for small primes") {
    CHECK(to_csv_row(scan_prime(7, squarefull_upto(1000), 1000)) == "7,108,3,3,15.428571,2");
    CHECK(to_csv_row(scan_prime(3, squarefull_upto(1000), 1000)) == "3,8,2,2,2.666667,1");
    CHECK(to_csv_row(scan_prime(5, squarefull_upto(1000), 1000)) == "5,8,2,2,1.600000,1");
    // Prefix too short: the search continues past it.
    CHECK(scan_prime(7, squarefull_upto(50), 50).g_squarefull == 108);
}

TEST_CASE("scan 3..100") {
    const std::string text = scan_text(3, 100, 1);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,g_squarefull,g_squarefree,g_least_pr,ratio,omega");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 24);
    CHECK(scan_text(3, 100, 8) == text);
    CHECK(scan_text(3, 100, 3, 5) == text);
}

TEST_CASE("scan rows satisfy the record invariants") {
    ScanOptions o;
    o.from = 3;
    o.to = 20'000;
    o.jobs = 4;
    o.block_size = 100;
    std::uint64_t previous = 0;
    scan_primes(o, [&](const ScanRecord& r) {
        const PrimeModulus m(r.p);
        REQUIRE(r.p > previous);
        previous = r.p;
        REQUIRE(is_squarefull(r.g_squarefull));
        REQUIRE(is_squarefree(r.g_squarefree));
        REQUIRE(is_primitive_root_u(r.g_squarefull, m));
        REQUIRE(is_primitive_root_u(r.g_squarefree, m));
        REQUIRE(is_primitive_root_u(r.g_least_pr, m));
        REQUIRE(r.g_least_pr <= r.g_squarefree);
        REQUIRE(r.omega_p_minus_1 == omega(r.p - 1));
    });
    CHECK(previous == 19997);
}

TEST_CASE("scan arguments") {
    ScanOptions o;
    o.from = 2;
    o.to = 10;
    CHECK_THROWS_AS(scan_primes(o, [](const ScanRecord&) {}), DomainError);
    o.from = 11;
    CHECK_THROWS_AS(scan_primes(o, [](const ScanRecord&) {}), DomainError);
    CHECK(scan_text(24, 28, 2) == std::string(kScanCsvHeader) + "\n");
}

TEST_CASE("progress reaches the total") {
    ScanOptions o;
    o.from = 3;
    o.to = 5000;
    o.jobs = 2;
    o.block_size = 64;
    std::uint64_t last_done = 0, last_total = 0;
    o.progress = [&](std::uint64_t done, std::uint64_t total) {
        CHECK(done > last_done);
        last_done = done;
        last_total = total;
    };
    scan_primes(o, [](const ScanRecord&) {});
    CHECK(last_done == last_total);
    CHECK(last_total == 668);
}

TEST_CASE("hypothesis reports") {
    const auto ten = run_hypothesis(10, 1);
    CHECK(ten.primes_checked == 3);
    REQUIRE(ten.exceptional.size() == 3);
    CHECK(ten.exceptional[0].p == 3);
    CHECK(ten.exceptional[0].g_squarefull == 8);
    CHECK(ten.exceptional[1].p == 5);
    CHECK(ten.exceptional[2].p == 7);
    CHECK(ten.largest_exceptional == 7);
    CHECK(ten.max_ratio_p == 7);

    const auto seven = run_hypothesis(7, 2);
    CHECK(seven.largest_exceptional == 7);
    CHECK(seven.exceptional.back().g_squarefull == 108);
    CHECK_THROWS_AS(run_hypothesis(2, 1), DomainError);

    const auto a = run_hypothesis(50'000, 1), b = run_hypothesis(50'000, 8);
    CHECK(a.exceptional.size() == b.exceptional.size());
    CHECK(a.largest_exceptional == b.largest_exceptional);
    CHECK(a.max_ratio == b.max_ratio);
}
