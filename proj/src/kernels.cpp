#include "spinforge/kernels.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinforge {

namespace {

using Vec8i = std::array<std::int64_t, 8>;

Vec8i mul_unit_left(const StarTable& t, std::size_t i, std::size_t j) {
  Vec8i r{};
  for (std::size_t k = 0; k < 8; ++k) r[k] = t.coef[i][j][k];
  return r;
}

// (sum_l x_l e_l) * e_k
Vec8i mul_right_unit(const StarTable& t, const Vec8i& x, std::size_t k) {
  Vec8i r{};
  for (std::size_t l = 0; l < 8; ++l) {
    if (x[l] == 0) continue;
    for (std::size_t m = 0; m < 8; ++m) r[m] += x[l] * t.coef[l][k][m];
  }
  return r;
}

// e_i * (sum_l x_l e_l)
Vec8i mul_left_unit(const StarTable& t, std::size_t i, const Vec8i& x) {
  Vec8i r{};
  for (std::size_t l = 0; l < 8; ++l) {
    if (x[l] == 0) continue;
    for (std::size_t m = 0; m < 8; ++m) r[m] += x[l] * t.coef[i][l][m];
  }
  return r;
}

bool triple_associates(const StarTable& t, std::size_t i, std::size_t j, std::size_t k) {
  auto lhs = mul_right_unit(t, mul_unit_left(t, i, j), k);
  auto rhs = mul_left_unit(t, i, mul_unit_left(t, j, k));
  return lhs == rhs;
}

bool fully_associative(const StarTable& t) {
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      for (std::size_t k = 0; k < 8; ++k) {
        if (!triple_associates(t, i, j, k)) return false;
      }
    }
  }
  return true;
}

BasisTriple triple_of(std::size_t n) {
  return {static_cast<std::uint8_t>(n / 64), static_cast<std::uint8_t>((n / 8) % 8),
          static_cast<std::uint8_t>(n % 8)};
}

SignAssignment assignment_of(const ProductSpec& s, std::uint16_t mask) {
  return {mask, s.conj, s.form};
}

}  // namespace

bool has_two_sided_identity(const StarTable& t) {
  for (std::size_t j = 0; j < 8; ++j) {
    for (std::size_t k = 0; k < 8; ++k) {
      std::int32_t want = j == k ? 1 : 0;
      if (t.coef[0][j][k] != want || t.coef[j][0][k] != want) return false;
    }
  }
  return true;
}

std::vector<BasisTriple> associativity_failures_serial(const StarTable& t) {
  std::vector<BasisTriple> out;
  for (std::size_t n = 0; n < 512; ++n) {
    auto [i, j, k] = triple_of(n);
    if (!triple_associates(t, i, j, k)) out.push_back({i, j, k});
  }
  return out;
}

std::vector<BasisTriple> associativity_failures(const StarTable& t) {
  std::array<bool, 512> failed{};
#pragma omp parallel for schedule(static)
  for (int n = 0; n < 512; ++n) {
    auto [i, j, k] = triple_of(static_cast<std::size_t>(n));
    failed[static_cast<std::size_t>(n)] = !triple_associates(t, i, j, k);
  }
  std::vector<BasisTriple> out;
  for (std::size_t n = 0; n < 512; ++n) {
    if (failed[n]) out.push_back(triple_of(n));
  }
  return out;
}

std::vector<SignAssignment> repair_search_serial(const ProductSpec& spec) {
  std::vector<SignAssignment> out;
  for (std::uint32_t mask = 0; mask < kRepairSpaceSize; ++mask) {
    auto s = spec.with_flips(static_cast<std::uint16_t>(mask));
    auto t = s.table();
    if (has_two_sided_identity(t) && fully_associative(t)) {
      out.push_back(assignment_of(s, static_cast<std::uint16_t>(mask)));
    }
  }
  return out;
}

std::vector<SignAssignment> repair_search_parallel(const ProductSpec& spec) {
  std::vector<std::uint8_t> ok(kRepairSpaceSize, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int mask = 0; mask < static_cast<int>(kRepairSpaceSize); ++mask) {
    auto t = spec.with_flips(static_cast<std::uint16_t>(mask)).table();
    ok[static_cast<std::size_t>(mask)] = has_two_sided_identity(t) && fully_associative(t);
  }
  std::vector<SignAssignment> out;
  for (std::uint32_t mask = 0; mask < kRepairSpaceSize; ++mask) {
    if (ok[mask]) {
      out.push_back(assignment_of(spec.with_flips(static_cast<std::uint16_t>(mask)),
                                  static_cast<std::uint16_t>(mask)));
    }
  }
  return out;
}

std::optional<std::size_t> first_failure_serial(std::size_t n,
                                                const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!pred(i)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_failure(std::size_t n,
                                         const std::function<bool(std::size_t)>& pred) {
  std::vector<std::uint8_t> failed(n, 0);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    failed[static_cast<std::size_t>(i)] = !pred(static_cast<std::size_t>(i));
  }
  auto it = std::find(failed.begin(), failed.end(), 1);
  if (it == failed.end()) return std::nullopt;
  return static_cast<std::size_t>(it - failed.begin());
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace spinforge
