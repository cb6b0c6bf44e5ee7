#include "spinforge/compose.hpp"

#include "spinforge/iso_maps.hpp"
#include "spinforge/reps.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinforge {

namespace {

Mat8<double> unit_of(const std::vector<Mat8<double>>&) { return Mat8<double>::identity(); }
Mat4C<double> unit_of(const std::vector<Mat4C<double>>&) { return Mat4C<double>::identity(); }
QuatPair unit_of(const std::vector<QuatPair>&) {
  return {Quaternion<double>::real(1), Quaternion<double>::real(1)};
}

Mat8<double> mul(const Mat8<double>& a, const Mat8<double>& b) { return a * b; }
Mat4C<double> mul(const Mat4C<double>& a, const Mat4C<double>& b) { return a * b; }
QuatPair mul(const QuatPair& a, const QuatPair& b) { return compose(a, b); }

// Element i of the chain is pool[i % pool.size()].
template <class E>
E fold(const std::vector<E>& pool, std::size_t n) {
  E acc = unit_of(pool);
  for (std::size_t i = 0; i < n; ++i) acc = mul(acc, pool[i % pool.size()]);
  return acc;
}

template <class E>
E fold_parallel(const std::vector<E>& pool, std::size_t n) {
#ifdef _OPENMP
  int threads = omp_get_max_threads();
  if (threads <= 1 || n < 2 * static_cast<std::size_t>(threads)) return fold(pool, n);
  std::vector<E> partial(static_cast<std::size_t>(threads), unit_of(pool));
#pragma omp parallel num_threads(threads)
  {
    auto t = static_cast<std::size_t>(omp_get_thread_num());
    auto nt = static_cast<std::size_t>(omp_get_num_threads());
    std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
    E acc = unit_of(pool);
    for (std::size_t i = lo; i < hi; ++i) acc = mul(acc, pool[i % pool.size()]);
    partial[t] = acc;
  }
  E acc = unit_of(pool);
  for (const auto& p : partial) acc = mul(acc, p);
  return acc;
#else
  return fold(pool, n);
#endif
}

Quaternion<double> random_unit_quaternion(Rng& rng) {
  Quaternion<double> q{normal_deviate(rng), normal_deviate(rng), normal_deviate(rng),
                       normal_deviate(rng)};
  double n = std::sqrt(q.norm());
  return (1.0 / n) * q;
}

template <class F>
double time_ns(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

}  // namespace

std::string_view encoding_name(Encoding e) {
  switch (e) {
    case Encoding::Mat8: return "mat8";
    case Encoding::Mat4C: return "mat4c";
    case Encoding::QuatPair: return "quatpair";
  }
  return "?";
}

std::optional<Encoding> parse_encoding(std::string_view name) {
  for (auto e : {Encoding::Mat8, Encoding::Mat4C, Encoding::QuatPair})
    if (encoding_name(e) == name) return e;
  return std::nullopt;
}

QuatPair compose(const QuatPair& a, const QuatPair& b) {
  return {a.first * b.first, b.second * a.second};
}

ElementBatch random_spin4_batch(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ElementBatch batch;
  batch.mat8.reserve(n);
  batch.mat4c.reserve(n);
  batch.quatpair.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = random_unit_quaternion(rng);
    auto q = random_unit_quaternion(rng);
    auto x = from_quat_pair(p, q);
    batch.mat8.push_back(derived_rep(x, Variant::Spin4));
    batch.mat4c.push_back(complex_rep(x));
    batch.quatpair.push_back(to_quat_pair(x));
  }
  return batch;
}

Mat8<double> compose_serial(const std::vector<Mat8<double>>& xs) { return fold(xs, xs.size()); }
Mat4C<double> compose_serial(const std::vector<Mat4C<double>>& xs) { return fold(xs, xs.size()); }
QuatPair compose_serial(const std::vector<QuatPair>& xs) { return fold(xs, xs.size()); }

Mat8<double> compose_parallel(const std::vector<Mat8<double>>& xs) { return fold_parallel(xs, xs.size()); }
Mat4C<double> compose_parallel(const std::vector<Mat4C<double>>& xs) { return fold_parallel(xs, xs.size()); }
QuatPair compose_parallel(const std::vector<QuatPair>& xs) { return fold_parallel(xs, xs.size()); }

Mat8<double> compose_cycled(const std::vector<Mat8<double>>& pool, std::size_t n) {
  return fold_parallel(pool, n);
}
Mat4C<double> compose_cycled(const std::vector<Mat4C<double>>& pool, std::size_t n) {
  return fold_parallel(pool, n);
}
QuatPair compose_cycled(const std::vector<QuatPair>& pool, std::size_t n) {
  return fold_parallel(pool, n);
}

std::vector<BenchResult> bench_compose(const std::vector<Encoding>& encodings, std::size_t n,
                                       std::uint64_t seed, int repeats) {
  auto batch = random_spin4_batch(std::min(n, kBenchPoolSize), seed);
  std::vector<BenchResult> out;
  for (auto e : encodings) {
    std::vector<double> samples;
    for (int r = 0; r < repeats; ++r) {
      double ns = time_ns([&] {
        switch (e) {
          case Encoding::Mat8: {
            volatile double sink = compose_cycled(batch.mat8, n).m[0][0];
            (void)sink;
            break;
          }
          case Encoding::Mat4C: {
            volatile double sink = compose_cycled(batch.mat4c, n).m[0][0].re;
            (void)sink;
            break;
          }
          case Encoding::QuatPair: {
            volatile double sink = compose_cycled(batch.quatpair, n).first.w;
            (void)sink;
            break;
          }
        }
      });
      samples.push_back(ns / static_cast<double>(std::max<std::size_t>(n, 1)));
    }
    std::sort(samples.begin(), samples.end());
    out.push_back({e, samples[samples.size() / 2]});
  }
  return out;
}

}  // namespace spinforge
