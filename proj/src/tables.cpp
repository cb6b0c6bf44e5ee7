#include "spinforge/tables.hpp"

#include <stdexcept>

namespace spinforge {

namespace {

std::int32_t to_int(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("basis product is not integral");
  return numerator(r).convert_to<std::int32_t>();
}

}  // namespace

StarTable star_table(Variant v) {
  StarTable t;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      auto e = star(Oct<Rational>::unit(i), Oct<Rational>::unit(j), v);
      for (std::size_t k = 0; k < 8; ++k) t.coef[i][j][k] = to_int(e.c[k]);
    }
  }
  return t;
}

BracketTable bracket_table(Variant v) {
  BracketTable t;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      auto e = cross(Vec6<Rational>::unit(i), Vec6<Rational>::unit(j), v);
      for (std::size_t k = 0; k < 6; ++k) t.coef[i][j][k] = to_int(e.c[k]);
    }
  }
  return t;
}

SignedPermutation conj_permutation(Variant v) {
  SignedPermutation s;
  for (std::size_t k = 0; k < 6; ++k) {
    auto img = conj(Vec6<Rational>::unit(k), v);
    // conj(e_k) = sign[m] e_m where perm[m] = k
    for (std::size_t m = 0; m < 6; ++m) {
      if (img.c[m] != 0) {
        s.perm[m] = static_cast<std::uint8_t>(k);
        s.sign[m] = img.c[m] > 0 ? 1 : -1;
      }
    }
  }
  return s;
}

FormTerms form_terms(Form f) {
  FormTerms terms;
  std::size_t t = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      auto value = inner(Vec6<Rational>::unit(i), Vec6<Rational>::unit(j), f);
      if (value == 0) continue;
      if (t == 6) throw std::logic_error("form has more than six terms");
      terms.left[t] = static_cast<std::uint8_t>(i);
      terms.right[t] = static_cast<std::uint8_t>(j);
      terms.coef[t] = value > 0 ? 1 : -1;
      ++t;
    }
  }
  if (t != 6) throw std::logic_error("form has fewer than six terms");
  return terms;
}

ProductSpec ProductSpec::from_variant(Variant v) {
  return ProductSpec{bracket_table(v), conj_permutation(v), form_terms(form_of(v))};
}

ProductSpec ProductSpec::with_flips(std::uint16_t mask) const {
  ProductSpec s = *this;
  for (std::size_t k = 0; k < 6; ++k) {
    if (mask & (1u << k)) s.conj.sign[k] = static_cast<std::int8_t>(-s.conj.sign[k]);
    if (mask & (1u << (k + 6))) s.form.coef[k] = static_cast<std::int8_t>(-s.form.coef[k]);
  }
  return s;
}

StarTable ProductSpec::table() const {
  StarTable t;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      auto e = star(Oct<long long>::unit(i), Oct<long long>::unit(j));
      for (std::size_t k = 0; k < 8; ++k) t.coef[i][j][k] = static_cast<std::int32_t>(e.c[k]);
    }
  }
  return t;
}

}  // namespace spinforge
