#include "spinforge/iso_maps.hpp"
#include "spinforge/reps.hpp"
#include "spinforge/vec6.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace spinforge {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Spin4: return "spin4";
    case Variant::B1: return "b1";
    case Variant::B2: return "b2";
    case Variant::B3: return "b3";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  auto n = lower(name);
  for (auto v : kAllVariants) {
    if (variant_name(v) == n) return v;
  }
  return std::nullopt;
}

std::string_view form_name(Form f) {
  switch (f) {
    case Form::Euclid: return "euclid";
    case Form::Form1: return "form1";
    case Form::Form23: return "form23";
  }
  return "?";
}

std::string_view group_name(Group g) {
  switch (g) {
    case Group::Spin4: return "spin4";
    case Group::G1: return "g1";
    case Group::G2: return "g2";
  }
  return "?";
}

std::optional<Group> parse_group(std::string_view name) {
  auto n = lower(name);
  for (auto g : {Group::Spin4, Group::G1, Group::G2}) {
    if (group_name(g) == n) return g;
  }
  return std::nullopt;
}

std::string_view mult_type_name(MultType t) {
  switch (t) {
    case MultType::Hom: return "HOM";
    case MultType::AntiHom: return "ANTIHOM";
    case MultType::Neither: return "NEITHER";
  }
  return "?";
}

std::string_view map_name(MapId id) {
  switch (id) {
    case MapId::Identity: return "identity";
    case MapId::QuatPair: return "quat_pair";
    case MapId::SplitQuatPair: return "splitquat_pair";
    case MapId::Sl2rPair: return "sl2r_pair";
    case MapId::Sl2c: return "sl2c";
    case MapId::DerivedRep: return "derived_rep";
  }
  return "?";
}

}  // namespace spinforge
