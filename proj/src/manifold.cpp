#include "spinforge/manifold.hpp"

#include <cmath>
#include <vector>

namespace spinforge {

namespace {

std::array<Rational, 3> rational_sphere_point(Rng& rng) {
  Rational u = random_rational(rng, 6);
  Rational v = random_rational(rng, 6);
  Rational t = u * u + v * v;
  Rational d = 1 + t;
  return {2 * u / d, 2 * v / d, (1 - t) / d};
}

template <class T>
Vec6<T> remove_normal_part(const Vec6<T>& u, const Vec6<T>& p, const Vec6<T>& pbar) {
  return u - dot(u, p) * p - dot(u, pbar) * pbar;
}

}  // namespace

ProjectionResult project_to_manifold(const Vec6<double>& x0, double tol, int max_iter) {
  Vec6<double> x = x0;
  for (int it = 0;; ++it) {
    auto point = PointOnM<double>::at(x);
    if (point.on_manifold(tol)) return {point, it};
    if (it == max_iter) {
      throw NoConvergence("Newton projection did not converge in " + std::to_string(max_iter) +
                          " iterations");
    }
    auto j = jacobian(x).matrix;
    auto g = j * j.transpose();
    double tr = g.m[0][0] + g.m[1][1];
    double det = determinant2(g);
    if (tr == 0.0 || std::abs(det) <= 1e-14 * tr * tr) {
      throw SingularJacobian("Gram matrix of the Jacobian is singular");
    }
    double r0 = point.residual.first;
    double r1 = point.residual.second;
    // y = G^{-1} r
    double y0 = (g.m[1][1] * r0 - g.m[0][1] * r1) / det;
    double y1 = (-g.m[1][0] * r0 + g.m[0][0] * r1) / det;
    for (std::size_t i = 0; i < 6; ++i) x.c[i] -= j.m[0][i] * y0 + j.m[1][i] * y1;
  }
}

std::array<Vec6<Rational>, 4> tangent_basis(const PointOnM<Rational>& p) {
  const auto pbar = conj(p.x, Variant::Spin4);
  std::vector<Vec6<Rational>> basis;
  for (std::size_t k = 0; k < 6 && basis.size() < 4; ++k) {
    auto v = remove_normal_part(Vec6<Rational>::unit(k), p.x, pbar);
    for (const auto& b : basis) v = v - (dot(v, b) / dot(b, b)) * b;
    if (!v.is_zero()) basis.push_back(v);
  }
  if (basis.size() != 4) throw std::logic_error("tangent space is not four-dimensional");
  return {basis[0], basis[1], basis[2], basis[3]};
}

std::array<Vec6<double>, 4> tangent_basis(const PointOnM<double>& p) {
  const auto pbar = conj(p.x, Variant::Spin4);
  std::vector<Vec6<double>> basis;
  for (std::size_t k = 0; k < 6 && basis.size() < 4; ++k) {
    auto v = remove_normal_part(Vec6<double>::unit(k), p.x, pbar);
    for (const auto& b : basis) v = v - dot(v, b) * b;
    // second pass for stability
    v = remove_normal_part(v, p.x, pbar);
    for (const auto& b : basis) v = v - dot(v, b) * b;
    double n = std::sqrt(dot(v, v));
    if (n > 1e-6) basis.push_back((1.0 / n) * v);
  }
  if (basis.size() != 4) throw std::logic_error("tangent space is not four-dimensional");
  return {basis[0], basis[1], basis[2], basis[3]};
}

ManifoldSample sample_manifold(std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Vec6<double> d;
    for (auto& c : d.c) c = normal_deviate(rng);
    double n = std::sqrt(dot(d, d));
    if (n == 0.0) continue;
    d = (1.0 / n) * d;
    try {
      auto r = project_to_manifold(d);
      return {r.point, attempt, r.iterations};
    } catch (const SingularJacobian&) {
    } catch (const NoConvergence&) {
    }
  }
  throw SamplerExhausted("no manifold sample after " + std::to_string(kSampleRetries) +
                         " attempts");
}

PointOnM<Rational> manifold_point_from_spheres(const std::array<Rational, 3>& s,
                                               const std::array<Rational, 3>& t) {
  const Rational h(1, 2);
  Vec6<Rational> x;
  x.c = {h * (s[0] + t[0]), h * (s[1] + t[1]), h * (s[2] + t[2]),
         h * (s[2] - t[2]), h * (t[1] - s[1]), h * (s[0] - t[0])};
  return PointOnM<Rational>::at(x);
}

PointOnM<Rational> sample_manifold_exact(std::uint64_t seed) {
  Rng rng(seed);
  auto s = rational_sphere_point(rng);
  auto t = rational_sphere_point(rng);
  return manifold_point_from_spheres(s, t);
}

}  // namespace spinforge
