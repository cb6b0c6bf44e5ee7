#include "spinforge/reps.hpp"

#include "spinforge/iso_maps.hpp"

#include <cmath>

namespace spinforge {

namespace {

Rational sum_of_squares(const Oct<Rational>& a) {
  Rational s = 0;
  for (const auto& v : a.c) s += v * v;
  return s;
}

Rational squared(const Rational& v) { return v * v; }

Mat2<Rational> random_sl2r(Rng& rng) {
  Rational a = 0;
  while (a == 0) a = random_rational(rng, 5);
  Rational b = random_rational(rng, 5);
  Rational c = random_rational(rng, 5);
  Mat2<Rational> m;
  m.m = {{{a, b}, {c, (1 + b * c) / a}}};
  return m;
}

Mat2C<Rational> random_sl2c(Rng& rng) {
  Complex<Rational> a;
  while (a == Complex<Rational>()) a = {random_rational(rng, 5), random_rational(rng, 5)};
  Complex<Rational> b{random_rational(rng, 5), random_rational(rng, 5)};
  Complex<Rational> c{random_rational(rng, 5), random_rational(rng, 5)};
  Mat2C<Rational> m;
  m.m = {{{a, b}, {c, (Complex<Rational>(1) + b * c) / a}}};
  return m;
}

Quaternion<Rational> random_unit_quaternion(Rng& rng) {
  auto u = random_rational(rng, 5);
  auto v = random_rational(rng, 5);
  auto w = random_rational(rng, 5);
  return unit_quaternion_from(u, v, w);
}

}  // namespace

DetFactors<Rational> det_factorization_check(const Oct<Rational>& a) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = a.c;
  Rational s = sum_of_squares(a);
  Rational q = a0 * a1 + a2 * a7 + a4 * a5 - a3 * a6;
  Rational n1 = s + 2 * q;
  Rational n2 = s - 2 * q;
  Rational det = determinant(derived_rep(a, Variant::Spin4));
  return {n1, n2, det == n1 * n1 * n2 * n2};
}

DetFactors<Rational> printed_det_factors(const Oct<Rational>& a) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = a.c;
  Rational n1 = squared(a0 + a1) + squared(a2 - a7) + squared(a4 - a5) + squared(a6 + a3);
  Rational n2 = squared(a0 - a1) + squared(a2 + a7) + squared(a4 + a5) + squared(a6 - a3);
  Rational det = determinant(derived_rep(a, Variant::Spin4));
  return {n1, n2, det == n1 * n1 * n2 * n2};
}

bool is_group_member(const Oct<Rational>& a, Group g) {
  if (quadratic_form(a, g) != 0) return false;
  return determinant(derived_rep(a, variant_of(g))) == 1;
}

bool is_group_member(const Oct<double>& a, Group g, double tol) {
  if (std::abs(quadratic_form(a, g)) > tol) return false;
  return std::abs(determinant(derived_rep(a, variant_of(g))) - 1.0) <= tol;
}

Oct<Rational> pullback_sample(Group g, std::uint64_t seed) {
  Rng rng(seed);
  switch (g) {
    case Group::Spin4: {
      auto q1 = random_unit_quaternion(rng);
      auto q2 = random_unit_quaternion(rng);
      return from_quat_pair(q1, q2);
    }
    case Group::G1: {
      auto a = random_sl2r(rng);
      auto b = random_sl2r(rng);
      return from_sl2r_pair(a, b);
    }
    case Group::G2: return from_sl2c(random_sl2c(rng));
  }
  return Oct<Rational>::unit(0);
}

bool inverse_map_consistent(Group g) {
  const auto table = star_table(variant_of(g));
  MapId map = MapId::QuatPair;
  bool round_trip = true;
  for (std::size_t i = 0; i < 8; ++i) {
    auto e = Oct<Rational>::unit(i);
    switch (g) {
      case Group::Spin4: {
        auto [p, q] = to_quat_pair(e);
        round_trip = round_trip && from_quat_pair(p, q) == e;
        break;
      }
      case Group::G1: {
        auto [a, b] = g1_to_sl2r_pair(e);
        round_trip = round_trip && from_sl2r_pair(a, b) == e;
        map = MapId::Sl2rPair;
        break;
      }
      case Group::G2:
        round_trip = round_trip && from_sl2c(g2_to_sl2c(e)) == e;
        map = MapId::Sl2c;
        break;
    }
  }
  if (!round_trip) return false;
  const auto e0 = Oct<Rational>::unit(0);
  bool unital = true;
  switch (g) {
    case Group::Spin4: {
      auto one = Quaternion<Rational>::real(1);
      unital = to_quat_pair(e0) == std::pair{one, one};
      break;
    }
    case Group::G1: {
      auto id = Mat2<Rational>::identity();
      unital = g1_to_sl2r_pair(e0) == std::pair{id, id};
      break;
    }
    case Group::G2: unital = g2_to_sl2c(e0) == Mat2C<Rational>::identity(); break;
  }
  if (!unital) return false;
  for (auto t : multiplicativity_type(map, table)) {
    if (t == MultType::Neither) return false;
  }
  return true;
}

Oct<Rational> sample_group_element(Group g, std::uint64_t seed) {
  if (!inverse_map_consistent(g)) {
    throw SamplerUnavailable("inverse map for group '" + std::string(group_name(g)) +
                             "' fails its multiplicativity audit");
  }
  return pullback_sample(g, seed);
}

}  // namespace spinforge
