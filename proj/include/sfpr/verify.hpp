#pragma once

// Self-check suites run by `sfpr verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace sfpr {

struct VerifySummary {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    double max_residual = 0.0;
    std::vector<std::string> failure_notes;  ///< first few failing cases
};

/// identities: counting identities for p < 200 and route equality of the
///             factored character sums on seeded random cases.
/// characters: orthogonality, chi_2 = Legendre symbol, Gamma_d partition.
/// constants:  C_p two-route identity, zeta spot values, corollary exponent.
/// all:        every suite above, merged.
/// Throws DomainError for an unknown suite name.
VerifySummary run_verify_suite(const std::string& suite);

}  // namespace sfpr
