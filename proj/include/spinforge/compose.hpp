#pragma once

// Ordered composition of long chains of Spin(4) elements under three
// encodings, for the benchmark. The product is associative, so the OpenMP
// version folds contiguous chunks and multiplies the chunk results in order.

#include "spinforge/matrix.hpp"
#include "spinforge/quaternion.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace spinforge {

enum class Encoding { Mat8, Mat4C, QuatPair };

std::string_view encoding_name(Encoding e);
std::optional<Encoding> parse_encoding(std::string_view name);

/// (left factor, right factor): the second quaternion reverses products.
using QuatPair = std::pair<Quaternion<double>, Quaternion<double>>;

struct ElementBatch {
  std::vector<Mat8<double>> mat8;
  std::vector<Mat4C<double>> mat4c;
  std::vector<QuatPair> quatpair;
};

/// n random group elements in every encoding (same elements across encodings).
ElementBatch random_spin4_batch(std::size_t n, std::uint64_t seed);

Mat8<double> compose_serial(const std::vector<Mat8<double>>& xs);
Mat4C<double> compose_serial(const std::vector<Mat4C<double>>& xs);
QuatPair compose_serial(const std::vector<QuatPair>& xs);

Mat8<double> compose_parallel(const std::vector<Mat8<double>>& xs);
Mat4C<double> compose_parallel(const std::vector<Mat4C<double>>& xs);
QuatPair compose_parallel(const std::vector<QuatPair>& xs);

QuatPair compose(const QuatPair& a, const QuatPair& b);

/// Parallel composition of the n-element chain pool[0], pool[1], ... cycling
/// through the pool, so long chains need no long arrays.
Mat8<double> compose_cycled(const std::vector<Mat8<double>>& pool, std::size_t n);
Mat4C<double> compose_cycled(const std::vector<Mat4C<double>>& pool, std::size_t n);
QuatPair compose_cycled(const std::vector<QuatPair>& pool, std::size_t n);

inline constexpr std::size_t kBenchPoolSize = 4096;

struct BenchResult {
  Encoding encoding;
  double median_ns_per_op;
};

/// Median over `repeats` timed runs composing a chain of n elements drawn
/// cyclically from kBenchPoolSize random ones.
std::vector<BenchResult> bench_compose(const std::vector<Encoding>& encodings, std::size_t n,
                                       std::uint64_t seed, int repeats = 5);

}  // namespace spinforge
