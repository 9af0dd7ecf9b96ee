#pragma once

#include "shy/image.hpp"
#include "shy/maps.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shy {

// Brute-force decision procedures that quantify over every connected subset,
// found by filtering the full power set. They are exponential, so each one
// refuses (BoundExceeded) to run on an enumerated image above its guard.
// They exist to be checked against the polynomial procedures in maps.hpp.

inline constexpr std::size_t default_oracle_guard = 15;

/// f is continuous iff f(A) is connected for every connected A in the domain.
class ContinuityOracle {
public:
    ContinuityOracle(const DigitalImage& domain, const DigitalImage& codomain,
                     std::size_t guard = default_oracle_guard);

    /// Witness on failure: the first connected A (in bitmask order) whose
    /// image is disconnected.
    [[nodiscard]] Verdict operator()(const DigitalFunction& f) const;

private:
    std::size_t domain_size_ = 0;
    std::vector<std::uint64_t> domain_connected_;
    std::vector<std::uint64_t> codomain_neighbors_;
};

/// A continuous surjection is shy iff f^{-1}(Y') is connected for every
/// connected Y' in the codomain.
class ShynessOracle {
public:
    ShynessOracle(const DigitalImage& domain, const DigitalImage& codomain,
                  std::size_t guard = default_oracle_guard);

    /// Throws PreconditionViolation unless f is a continuous surjection.
    [[nodiscard]] Verdict operator()(const DigitalFunction& f) const;

private:
    std::vector<std::uint64_t> codomain_connected_;
    std::vector<std::uint64_t> domain_neighbors_;
};

bool continuity_oracle(const DigitalFunction& f, std::size_t guard = default_oracle_guard);
bool shyness_oracle(const DigitalFunction& f, std::size_t guard = default_oracle_guard);

/// m(A) is connected for every connected A in the source.
Verdict connectivity_preserving_oracle(const MultiFunction& m,
                                       std::size_t guard = default_oracle_guard);

} // namespace shy
