#pragma once

// Data-parallel sweeps. Every kernel has a serial reference with identical
// output; the OpenMP version is what the library calls.

#include "spinforge/tables.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace spinforge {

struct BasisTriple {
  std::uint8_t i, j, k;
  friend bool operator==(const BasisTriple&, const BasisTriple&) = default;
};

/// Basis triples with (e_i e_j) e_k != e_i (e_j e_k), in lexicographic order.
std::vector<BasisTriple> associativity_failures_serial(const StarTable& t);
std::vector<BasisTriple> associativity_failures(const StarTable& t);

/// Sign assignment over the 6 conjugation signs and 6 form coefficients.
struct SignAssignment {
  std::uint16_t mask = 0;  // flips relative to the searched product
  SignedPermutation conj;
  FormTerms form;
  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

inline constexpr std::uint32_t kRepairSpaceSize = 1u << 12;

/// All sign assignments (ascending mask) whose star product is associative
/// on every basis triple and keeps e0 as two-sided identity.
std::vector<SignAssignment> repair_search_serial(const ProductSpec& spec);
std::vector<SignAssignment> repair_search_parallel(const ProductSpec& spec);

/// Smallest index in [0, n) for which pred fails, or nullopt. pred must be
/// safe to call concurrently.
std::optional<std::size_t> first_failure_serial(std::size_t n,
                                                const std::function<bool(std::size_t)>& pred);
std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& pred);

bool has_two_sided_identity(const StarTable& t);

/// Number of worker threads OpenMP would use (1 when built without OpenMP).
int parallel_threads();

}  // namespace spinforge
