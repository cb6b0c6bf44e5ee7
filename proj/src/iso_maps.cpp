#include "spinforge/iso_maps.hpp"

#include <array>

namespace spinforge {

namespace {

using Q = Rational;

template <std::size_t N, class Map, class Mul>
std::vector<MultType> classify(const Map& f, const Mul& mul, const StarTable& table) {
  std::array<bool, N> hom;
  std::array<bool, N> anti;
  hom.fill(true);
  anti.fill(true);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      auto ei = Oct<Q>::unit(i);
      auto ej = Oct<Q>::unit(j);
      auto image = f(apply(table, ei, ej));
      auto fi = f(ei);
      auto fj = f(ej);
      for (std::size_t c = 0; c < N; ++c) {
        if (!(image[c] == mul(fi[c], fj[c]))) hom[c] = false;
        if (!(image[c] == mul(fj[c], fi[c]))) anti[c] = false;
      }
    }
  }
  std::vector<MultType> out;
  for (std::size_t c = 0; c < N; ++c) {
    out.push_back(hom[c] ? MultType::Hom : anti[c] ? MultType::AntiHom : MultType::Neither);
  }
  return out;
}

template <class E>
E times(const E& a, const E& b) {
  return a * b;
}

}  // namespace

std::vector<MultType> multiplicativity_type(MapId map, const StarTable& product) {
  switch (map) {
    case MapId::Identity:
      return classify<1>([](const Oct<Q>& x) { return std::array<Oct<Q>, 1>{x}; },
                         [&](const Oct<Q>& a, const Oct<Q>& b) { return apply(product, a, b); },
                         product);
    case MapId::QuatPair:
      return classify<2>(
          [](const Oct<Q>& x) {
            auto [p, q] = to_quat_pair(x);
            return std::array<Quaternion<Q>, 2>{p, q};
          },
          times<Quaternion<Q>>, product);
    case MapId::SplitQuatPair:
      return classify<2>(
          [](const Oct<Q>& x) {
            auto [p, q] = to_splitquat_pair(x);
            return std::array<SplitQuaternion<Q>, 2>{p, q};
          },
          times<SplitQuaternion<Q>>, product);
    case MapId::Sl2rPair:
      return classify<2>(
          [](const Oct<Q>& x) {
            auto [a, b] = g1_to_sl2r_pair(x);
            return std::array<Mat2<Q>, 2>{a, b};
          },
          times<Mat2<Q>>, product);
    case MapId::Sl2c:
      return classify<1>([](const Oct<Q>& x) { return std::array<Mat2C<Q>, 1>{g2_to_sl2c(x)}; },
                         times<Mat2C<Q>>, product);
    case MapId::DerivedRep:
      return classify<1>(
          [&](const Oct<Q>& a) {
            Mat8<Q> m;
            for (std::size_t i = 0; i < 8; ++i) m.m[i] = apply(product, Oct<Q>::unit(i), a).c;
            return std::array<Mat8<Q>, 1>{m};
          },
          times<Mat8<Q>>, product);
  }
  return {};
}

std::vector<MultType> multiplicativity_type(MapId map, Variant v) {
  return multiplicativity_type(map, star_table(v));
}

}  // namespace spinforge
