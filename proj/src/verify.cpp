#include "spinforge/verify.hpp"

#include "spinforge/em_field.hpp"
#include "spinforge/iso_maps.hpp"
#include "spinforge/lie.hpp"
#include "spinforge/manifold.hpp"
#include "spinforge/reps.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace spinforge {

namespace {

using Q = Rational;
using Tuple = std::vector<Arg>;

constexpr std::size_t kRandomTuples = 24;
constexpr std::size_t kRandomOctets = 20;

// ---------------------------------------------------------------- conversions

Vec6<Q> v6(const Arg& a) {
  Vec6<Q> v;
  std::copy(a.begin(), a.end(), v.c.begin());
  return v;
}

Oct<Q> o8(const Arg& a) {
  Oct<Q> x;
  std::copy(a.begin(), a.end(), x.c.begin());
  return x;
}

template <std::size_t N>
Arg arg(const std::array<Q, N>& c) {
  return Arg(c.begin(), c.end());
}

template <class Container>
std::vector<Q> flat(const Container& c) {
  return std::vector<Q>(c.begin(), c.end());
}

template <std::size_t R, std::size_t C>
std::vector<Q> flat(const Matrix<Q, R, C>& m) {
  std::vector<Q> out;
  for (const auto& row : m.m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Outcome compare(const std::vector<Q>& lhs, const std::vector<Q>& rhs) {
  return {lhs == rhs, join_scalars(lhs), join_scalars(rhs)};
}

Outcome compare_text(std::string lhs, std::string rhs) {
  bool same = lhs == rhs;
  return {same, std::move(lhs), std::move(rhs)};
}

// ------------------------------------------------------------ tuple builders

std::vector<Tuple> basis_tuples(std::initializer_list<std::size_t> dims) {
  std::vector<Tuple> out{Tuple{}};
  for (auto d : dims) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (std::size_t i = 0; i < d; ++i) {
        Arg e(d, Q(0));
        e[i] = 1;
        auto u = t;
        u.push_back(std::move(e));
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

Arg random_arg(std::size_t d, Rng& rng) {
  Arg a(d);
  for (auto& v : a) v = random_rational(rng);
  return a;
}

std::vector<Tuple> random_tuples(std::initializer_list<std::size_t> dims, std::size_t n,
                                 Rng& rng) {
  std::vector<Tuple> out;
  for (std::size_t k = 0; k < n; ++k) {
    Tuple t;
    for (auto d : dims) t.push_back(random_arg(d, rng));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tuple> basis_and_random(std::initializer_list<std::size_t> dims, std::size_t n,
                                    Rng& rng) {
  auto out = basis_tuples(dims);
  auto extra = random_tuples(dims, n, rng);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<Tuple> nullary(const AlgebraModel&, Rng&) { return {Tuple{}}; }

// ------------------------------------------------------------- model algebra

Vec6<Q> br(const AlgebraModel& m, const Vec6<Q>& a, const Vec6<Q>& b) {
  return apply(m.bracket, a, b);
}
Vec6<Q> cj(const AlgebraModel& m, const Vec6<Q>& a) { return m.conj.apply(a); }
Q form(const AlgebraModel& m, const Vec6<Q>& a, const Vec6<Q>& b) { return m.form.apply(a, b); }
Oct<Q> st(const AlgebraModel& m, const Oct<Q>& x, const Oct<Q>& y) {
  return apply(m.star, x, y);
}

Mat8<Q> model_rep(const AlgebraModel& m, const Oct<Q>& a) {
  Mat8<Q> r;
  for (std::size_t i = 0; i < 8; ++i) r.m[i] = st(m, Oct<Q>::unit(i), a).c;
  return r;
}

std::string types_text(const std::vector<MultType>& types) {
  std::string s;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += ',';
    s += mult_type_name(types[i]);
  }
  return s;
}

Outcome no_neither(const std::vector<MultType>& types) {
  bool ok = std::none_of(types.begin(), types.end(),
                         [](MultType t) { return t == MultType::Neither; });
  std::string want;
  for (std::size_t i = 0; i < types.size(); ++i) want += i ? ",HOM|ANTIHOM" : "HOM|ANTIHOM";
  return {ok, types_text(types), want};
}

IdentityDef def(std::string id, EntryKind kind,
                std::function<std::vector<Tuple>(const AlgebraModel&, Rng&)> tuples,
                std::function<Outcome(const AlgebraModel&, std::span<const Arg>)> eval) {
  return IdentityDef{std::move(id), kind, std::move(tuples), std::move(eval)};
}

// ---------------------------------------------------------- shared identities

IdentityDef jacobi_identity(EntryKind kind, std::string id) {
  return def(std::move(id), kind, [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6, 6}); },
             [](const AlgebraModel& m, std::span<const Arg> a) {
               auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
               auto d = br(m, br(m, x, y), z) + br(m, br(m, y, z), x) + br(m, br(m, z, x), y);
               return compare(flat(d.c), flat(Vec6<Q>{}.c));
             });
}

IdentityDef killing_identity(EntryKind kind, std::string id) {
  return def(std::move(id), kind, nullary, [](const AlgebraModel& m, std::span<const Arg>) {
    auto k = killing_signature(structure_constants(m.bracket));
    std::string lhs = to_string(k.signature);
    if (!k.lie_algebra) lhs += " not-a-lie-algebra";
    return compare_text(lhs, to_string(expected_signature(m.variant)));
  });
}

IdentityDef associativity_identity(EntryKind kind, std::string id) {
  return def(std::move(id), kind, [](const AlgebraModel&, Rng&) { return basis_tuples({8, 8, 8}); },
             [](const AlgebraModel& m, std::span<const Arg> a) {
               auto x = o8(a[0]), y = o8(a[1]), z = o8(a[2]);
               return compare(flat(st(m, st(m, x, y), z).c), flat(st(m, x, st(m, y, z)).c));
             });
}

IdentityDef printed_rep_identity(EntryKind kind, std::string id) {
  return def(std::move(id), kind, [](const AlgebraModel&, Rng&) { return basis_tuples({8}); },
             [](const AlgebraModel& m, std::span<const Arg> a) {
               auto x = o8(a[0]);
               return compare(flat(printed_rep(x, m.variant)), flat(model_rep(m, x)));
             });
}

IdentityDef repair_identity(EntryKind kind, std::string id) {
  return def(std::move(id), kind, nullary, [](const AlgebraModel& m, std::span<const Arg>) {
    ProductSpec spec{m.bracket, m.conj, m.form};
    auto found = repair_search(spec);
    bool unmodified = !found.empty() && found.front().mask == 0;
    std::string lhs = std::to_string(found.size()) + " associative assignments";
    if (!found.empty()) {
      lhs += "; masks";
      for (std::size_t i = 0; i < found.size() && i < 8; ++i) lhs += " " + std::to_string(found[i].mask);
      if (found.size() > 8) lhs += " ...";
    }
    return Outcome{unmodified, lhs, "mask 0 (unmodified) associative"};
  });
}

Outcome multiplicativity(const AlgebraModel& m, MapId map, const std::vector<MultType>& want) {
  auto got = multiplicativity_type(map, m.star);
  return compare_text(types_text(got), types_text(want));
}

// ------------------------------------------------------------------- claims

std::vector<IdentityDef> common_claims() {
  constexpr auto C = EntryKind::Claim;
  std::vector<IdentityDef> s;

  s.push_back(def("cross.antisymmetry", C,
                  [](const AlgebraModel&, Rng& r) { return basis_and_random({6, 6}, kRandomTuples, r); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]);
                    return compare(flat(br(m, x, y).c), flat((-br(m, y, x)).c));
                  }));
  s.push_back(def("cross.self_product_zero", C,
                  [](const AlgebraModel&, Rng& r) { return basis_and_random({6}, kRandomTuples, r); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]);
                    return compare(flat(br(m, x, x).c), flat(Vec6<Q>{}.c));
                  }));
  s.push_back(def("cross.homogeneity", C,
                  [](const AlgebraModel&, Rng& r) {
                    std::vector<Tuple> out;
                    for (const Q& t : {Q(-2), Q(0), Q(1, 3), Q(7, 5)}) {
                      for (auto& pair : basis_tuples({6, 6})) {
                        Tuple tup{Arg{t}};
                        tup.insert(tup.end(), pair.begin(), pair.end());
                        out.push_back(std::move(tup));
                      }
                    }
                    auto extra = random_tuples({1, 6, 6}, kRandomTuples, r);
                    out.insert(out.end(), extra.begin(), extra.end());
                    return out;
                  },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    const Q& t = a[0][0];
                    auto x = v6(a[1]), y = v6(a[2]);
                    return compare(flat(br(m, t * x, y).c), flat((t * br(m, x, y)).c));
                  }));
  s.push_back(def("cross.additivity", C,
                  [](const AlgebraModel&, Rng& r) { return basis_and_random({6, 6, 6}, kRandomTuples, r); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
                    return compare(flat(br(m, x, y + z).c), flat((br(m, x, y) + br(m, x, z)).c));
                  }));
  s.push_back(def("cross.triple_product", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
                    return compare({form(m, br(m, x, y), z)}, {form(m, x, br(m, y, z))});
                  }));
  s.push_back(def("cross.orthogonal_both_sides_zero", C,
                  [](const AlgebraModel&, Rng& r) { return basis_and_random({6, 6}, kRandomTuples, r); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]);
                    auto xy = br(m, x, y);
                    Q lhs = form(m, xy, x);
                    Q rhs = form(m, y, xy);
                    return Outcome{lhs == 0 && rhs == 0, to_string(lhs), to_string(rhs)};
                  }));
  s.push_back(def("cross.conj_outside_equals_right", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]);
                    return compare(flat(cj(m, br(m, x, y)).c), flat(br(m, x, cj(m, y)).c));
                  }));
  s.push_back(def("cross.conj_outside_equals_left", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]);
                    return compare(flat(cj(m, br(m, x, y)).c), flat(br(m, cj(m, x), y).c));
                  }));
  s.push_back(def("conj.form_symmetric", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]);
                    return compare({form(m, x, cj(m, y))}, {form(m, cj(m, x), y)});
                  }));
  s.push_back(def("cross.double_cross_expansion", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
                    auto cx = cj(m, x), cy = cj(m, y);
                    auto rhs = form(m, z, x) * y - form(m, z, y) * x + form(m, z, cx) * cy -
                               form(m, z, cy) * cx;
                    return compare(flat(br(m, br(m, x, y), z).c), flat(rhs.c));
                  }));
  s.push_back(jacobi_identity(C, "lie.jacobi"));
  s.push_back(killing_identity(C, "lie.killing_signature"));
  s.push_back(def("lie.ad_invariance", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto k = killing_matrix(structure_constants(m.bracket));
                    auto kf = [&](const Vec6<Q>& x, const Vec6<Q>& y) {
                      Q s = 0;
                      for (std::size_t i = 0; i < 6; ++i)
                        for (std::size_t j = 0; j < 6; ++j) s += x.c[i] * k.m[i][j] * y.c[j];
                      return s;
                    };
                    auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
                    return compare({kf(br(m, x, y), z) + kf(y, br(m, x, z))}, {Q(0)});
                  }));
  s.push_back(def("conj.form_invariant", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]);
                    return compare({form(m, cj(m, x), cj(m, y))}, {form(m, x, y)});
                  }));
  s.push_back(def("conj.involution", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]);
                    return compare(flat(cj(m, cj(m, x)).c), flat(x.c));
                  }));
  s.push_back(def("cross.triple_conj_shift", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
                    return compare({form(m, br(m, x, y), cj(m, z))}, {form(m, br(m, x, cj(m, y)), z)});
                  }));
  s.push_back(def("lie.jacobi_rearranged", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = v6(a[0]), y = v6(a[1]), z = v6(a[2]);
                    return compare(flat((br(m, br(m, x, y), z) - br(m, x, br(m, y, z))).c),
                                   flat((-br(m, br(m, z, x), y)).c));
                  }));
  s.push_back(def("star.identity_element", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({8}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = o8(a[0]);
                    auto e0 = Oct<Q>::unit(0);
                    auto l = flat(st(m, e0, x).c);
                    auto r = flat(st(m, x, e0).c);
                    l.insert(l.end(), r.begin(), r.end());
                    auto w = flat(x.c);
                    w.insert(w.end(), x.c.begin(), x.c.end());
                    return compare(l, w);
                  }));
  s.push_back(associativity_identity(C, "star.associativity"));
  s.push_back(def("rep.homomorphism", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({8, 8}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = o8(a[0]), y = o8(a[1]);
                    return compare(flat(model_rep(m, st(m, x, y))),
                                   flat(model_rep(m, x) * model_rep(m, y)));
                  }));
  s.push_back(printed_rep_identity(C, "rep.printed_matches_derived"));
  s.push_back(repair_identity(C, "repair.unmodified_assignment"));
  return s;
}

std::vector<IdentityDef> spin4_claims() {
  constexpr auto C = EntryKind::Claim;
  std::vector<IdentityDef> s;
  s.push_back(def("star.cross_embedding", C,
                  [](const AlgebraModel&, Rng&) { return basis_tuples({6, 6}); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto p = v6(a[0]), q = v6(a[1]);
                    auto prod = st(m, Oct<Q>::assemble(0, 0, p), Oct<Q>::assemble(0, 0, q));
                    return compare(flat(prod.vector_part().c), flat(cross(p, q, Variant::Spin4).c));
                  }));
  s.push_back(def("rep.complex_block_structure", C,
                  [](const AlgebraModel&, Rng& r) { return random_tuples({8}, kRandomOctets, r); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto rep = model_rep(m, o8(a[0]));
                    std::vector<Q> lhs, rhs;
                    for (std::size_t i = 0; i < 4; ++i)
                      for (std::size_t j = 0; j < 4; ++j) {
                        lhs.push_back(rep.m[i + 4][j + 4]);
                        lhs.push_back(rep.m[i + 4][j]);
                        rhs.push_back(rep.m[i][j]);
                        rhs.push_back(-rep.m[i][j + 4]);
                      }
                    return compare(lhs, rhs);
                  }));
  s.push_back(def("rep.det_factorization", C,
                  [](const AlgebraModel&, Rng& r) { return random_tuples({8}, kRandomOctets, r); },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = o8(a[0]);
                    auto f = det_factorization_check(x);
                    return compare({determinant(model_rep(m, x))}, {f.n1 * f.n1 * f.n2 * f.n2});
                  }));
  s.push_back(def("iso.norm_bridge", C,
                  [](const AlgebraModel&, Rng& r) { return random_tuples({8}, kRandomOctets, r); },
                  [](const AlgebraModel&, std::span<const Arg> a) {
                    auto x = o8(a[0]);
                    auto f = det_factorization_check(x);
                    auto [p, q] = to_quat_pair(x);
                    return compare({f.n1, f.n2}, {q.norm(), p.norm()});
                  }));
  s.push_back(def("iso.constraint_identity", C,
                  [](const AlgebraModel&, Rng& r) { return random_tuples({8}, kRandomOctets, r); },
                  [](const AlgebraModel&, std::span<const Arg> a) {
                    auto x = o8(a[0]);
                    auto [p, q] = to_quat_pair(x);
                    return compare({quadratic_form(x, Group::Spin4)}, {(q.norm() - p.norm()) / 4});
                  }));
  s.push_back(def("iso.multiplicativity.quat_pair", C, nullary,
                  [](const AlgebraModel& m, std::span<const Arg>) {
                    return multiplicativity(m, MapId::QuatPair, {MultType::Hom, MultType::AntiHom});
                  }));
  s.push_back(def("iso.multiplicativity.identity", C, nullary,
                  [](const AlgebraModel& m, std::span<const Arg>) {
                    return multiplicativity(m, MapId::Identity, {MultType::Hom});
                  }));
  s.push_back(def("iso.multiplicativity.derived_rep", C, nullary,
                  [](const AlgebraModel& m, std::span<const Arg>) {
                    return multiplicativity(m, MapId::DerivedRep, {MultType::Hom});
                  }));
  s.push_back(def("group.sample_membership", C,
                  [](const AlgebraModel&, Rng& r) {
                    std::vector<Tuple> out;
                    for (std::size_t k = 0; k < 8; ++k) {
                      out.push_back({arg(sample_group_element(Group::Spin4, r()).c)});
                    }
                    return out;
                  },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto x = o8(a[0]);
                    return compare({determinant(model_rep(m, x)), quadratic_form(x, Group::Spin4)},
                                   {Q(1), Q(0)});
                  }));
  s.push_back(def("group.closure", C,
                  [](const AlgebraModel&, Rng& r) {
                    std::vector<Tuple> out;
                    for (std::size_t k = 0; k < 8; ++k) {
                      out.push_back({arg(sample_group_element(Group::Spin4, r()).c),
                                     arg(sample_group_element(Group::Spin4, r()).c)});
                    }
                    return out;
                  },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto xy = st(m, o8(a[0]), o8(a[1]));
                    return compare({determinant(model_rep(m, xy)), quadratic_form(xy, Group::Spin4)},
                                   {Q(1), Q(0)});
                  }));
  s.push_back(def("manifold.j_preserves_tangent", C,
                  [](const AlgebraModel&, Rng& r) {
                    std::vector<Tuple> out;
                    for (std::size_t k = 0; k < 8; ++k) {
                      auto p = sample_manifold_exact(r());
                      for (const auto& v : tangent_basis(p)) out.push_back({arg(p.x.c), arg(v.c)});
                    }
                    return out;
                  },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto p = v6(a[0]), v = v6(a[1]);
                    auto jv = br(m, p, v);
                    return compare({dot(p, jv), dot(conj(p, Variant::Spin4), jv)}, {Q(0), Q(0)});
                  }));
  s.push_back(def("manifold.j_squared", C,
                  [](const AlgebraModel&, Rng& r) {
                    std::vector<Tuple> out;
                    for (std::size_t k = 0; k < 8; ++k) {
                      auto p = sample_manifold_exact(r());
                      for (const auto& v : tangent_basis(p)) out.push_back({arg(p.x.c), arg(v.c)});
                    }
                    return out;
                  },
                  [](const AlgebraModel& m, std::span<const Arg> a) {
                    auto p = v6(a[0]), v = v6(a[1]);
                    return compare(flat(br(m, p, br(m, p, v)).c), flat((-v).c));
                  }));
  return s;
}

// ------------------------------------------------------------------- audits

std::vector<Tuple> em_fields(Rng& r) {
  std::vector<Tuple> out;
  out.push_back({Arg{0, 0, 0, 1, 1, 1, 0, 0}});
  out.push_back({Arg{1, 0, 0, 0, 0, 0, 0, 0}});
  out.push_back({Arg{0, 0, 0, 1, 2, 3, 0, 0}});
  for (std::size_t k = 0; k < 4; ++k) out.push_back({random_arg(8, r)});
  return out;
}

EMField<Q> field_of(const Arg& a) {
  EMField<Q> f;
  f.e = {a[0], a[1], a[2]};
  f.b = {a[3], a[4], a[5]};
  f.e0 = a[6];
  f.b0 = a[7];
  return f;
}

}  // namespace

// ------------------------------------------------------------------ model

AlgebraModel AlgebraModel::of(Variant v) {
  return AlgebraModel{v, bracket_table(v), conj_permutation(v), form_terms(form_of(v)),
                      star_table(v)};
}

StarTable flip_random_sign(const StarTable& t, std::uint64_t seed) {
  std::vector<std::array<std::size_t, 3>> nonzero;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k)
        if (t.coef[i][j][k] != 0) nonzero.push_back({i, j, k});
  Rng rng(seed);
  auto pick = nonzero[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<std::int64_t>(nonzero.size()) - 1))];
  StarTable out = t;
  out.coef[pick[0]][pick[1]][pick[2]] = -out.coef[pick[0]][pick[1]][pick[2]];
  return out;
}

AlgebraModel AlgebraModel::with_star_sign_flip(std::uint64_t seed) const {
  AlgebraModel m = *this;
  m.star = flip_random_sign(star, seed);
  return m;
}

AlgebraModel AlgebraModel::with_bracket_sign_flip(std::size_t i, std::size_t j) const {
  AlgebraModel m = *this;
  for (std::size_t k = 0; k < 6; ++k) {
    m.bracket.coef[i][j][k] = -m.bracket.coef[i][j][k];
    if (i != j) m.bracket.coef[j][i][k] = -m.bracket.coef[j][i][k];
  }
  return m;
}

// ------------------------------------------------------------------ suites

std::vector<IdentityDef> claim_suite(Variant v) {
  auto s = common_claims();
  if (v == Variant::Spin4) {
    auto extra = spin4_claims();
    s.insert(s.end(), extra.begin(), extra.end());
  }
  return s;
}

std::vector<std::pair<IdentityDef, Variant>> audit_suite() {
  constexpr auto A = EntryKind::Audit;
  constexpr std::array<Variant, 3> split = {Variant::B1, Variant::B2, Variant::B3};
  std::vector<std::pair<IdentityDef, Variant>> s;

  s.emplace_back(def("audit.star.compact_a1b1_sign", A,
                     [](const AlgebraModel&, Rng&) { return basis_tuples({8, 8}); },
                     [](const AlgebraModel& m, std::span<const Arg> a) {
                       auto x = o8(a[0]), y = o8(a[1]);
                       return compare(flat(star_compact_printed(x, y).c), flat(st(m, x, y).c));
                     }),
                 Variant::Spin4);
  s.emplace_back(def("audit.det.printed_factors", A,
                     [](const AlgebraModel&, Rng& r) { return random_tuples({8}, kRandomOctets, r); },
                     [](const AlgebraModel& m, std::span<const Arg> a) {
                       auto x = o8(a[0]);
                       auto f = printed_det_factors(x);
                       return compare({determinant(model_rep(m, x))}, {f.n1 * f.n1 * f.n2 * f.n2});
                     }),
                 Variant::Spin4);
  s.emplace_back(def("audit.manifold.printed_level_set", A,
                     [](const AlgebraModel&, Rng&) {
                       return std::vector<Tuple>{{arg(Vec6<Q>::unit(0).c)}};
                     },
                     [](const AlgebraModel&, std::span<const Arg> a) {
                       auto [n, c] = defining_map(v6(a[0]));
                       return compare({n, c}, {Q(0), Q(0)});
                     }),
                 Variant::Spin4);
  s.emplace_back(def("audit.em.field_antisymmetry", A,
                     [](const AlgebraModel&, Rng& r) { return em_fields(r); },
                     [](const AlgebraModel&, std::span<const Arg> a) {
                       return compare({antisymmetry_defect_squared(field_matrix(field_of(a[0])))},
                                      {Q(0)});
                     }),
                 Variant::Spin4);
  s.emplace_back(def("audit.em.spin_entry_pattern", A,
                     [](const AlgebraModel&, Rng& r) { return em_fields(r); },
                     [](const AlgebraModel&, std::span<const Arg> a) {
                       auto mat = spin_field_matrix(field_of(a[0]));
                       auto l = mat.m[3][2];
                       auto r = -mat.m[2][3];
                       return compare({l.re, l.im}, {r.re, r.im});
                     }),
                 Variant::Spin4);

  for (auto v : split) {
    s.emplace_back(printed_rep_identity(A, "audit.rep.printed_matches_derived"), v);
    s.emplace_back(def("audit.rep.printed_minus_derived", A, nullary,
                       [](const AlgebraModel& m, std::span<const Arg>) {
                         std::string diffs;
                         std::size_t count = 0;
                         for (std::size_t k = 0; k < 8; ++k) {
                           auto e = Oct<Q>::unit(k);
                           auto d = printed_rep(e, m.variant) - model_rep(m, e);
                           for (std::size_t r = 0; r < 8; ++r)
                             for (std::size_t c = 0; c < 8; ++c)
                               if (d.m[r][c] != 0) {
                                 if (count++) diffs += ';';
                                 diffs += "a" + std::to_string(k) + "@(" + std::to_string(r) + "," +
                                          std::to_string(c) + ")=" + to_string(d.m[r][c]);
                               }
                         }
                         return Outcome{count == 0,
                                        std::to_string(count) + " differing entries" +
                                            (count ? ": " + diffs : std::string()),
                                        "0 differing entries"};
                       }),
                   v);
    s.emplace_back(associativity_identity(A, "audit.star.associativity"), v);
    s.emplace_back(def("audit.star.literal_b0_term", A,
                       [](const AlgebraModel&, Rng&) { return basis_tuples({8, 8}); },
                       [](const AlgebraModel& m, std::span<const Arg> a) {
                         auto x = o8(a[0]), y = o8(a[1]);
                         return compare(flat(star_literal_b0(x, y, m.variant).c), flat(st(m, x, y).c));
                       }),
                   v);
    s.emplace_back(def("audit.star.literal_b0_identity", A,
                       [](const AlgebraModel&, Rng&) { return basis_tuples({8}); },
                       [](const AlgebraModel& m, std::span<const Arg> a) {
                         auto x = o8(a[0]);
                         return compare(flat(star_literal_b0(x, Oct<Q>::unit(0), m.variant).c),
                                        flat(x.c));
                       }),
                   v);
    s.emplace_back(jacobi_identity(A, "audit.lie.jacobi"), v);
    s.emplace_back(killing_identity(A, "audit.lie.killing_signature"), v);
    s.emplace_back(def("audit.iso.splitquat_pair", A, nullary,
                       [](const AlgebraModel& m, std::span<const Arg>) {
                         return no_neither(multiplicativity_type(MapId::SplitQuatPair, m.star));
                       }),
                   v);
    s.emplace_back(repair_identity(A, "audit.repair.unmodified_assignment"), v);
  }
  s.emplace_back(def("audit.iso.sl2r_pair", A, nullary,
                     [](const AlgebraModel& m, std::span<const Arg>) {
                       return no_neither(multiplicativity_type(MapId::Sl2rPair, m.star));
                     }),
                 Variant::B1);
  for (auto v : {Variant::B1, Variant::B2}) {
    s.emplace_back(def("audit.iso.sl2c", A, nullary,
                       [](const AlgebraModel& m, std::span<const Arg>) {
                         return no_neither(multiplicativity_type(MapId::Sl2c, m.star));
                       }),
                   v);
  }
  for (auto v : {Variant::B1, Variant::B2}) {
    s.emplace_back(def("audit.group.pullback_membership", A,
                       [](const AlgebraModel& m, Rng& r) {
                         Group g = m.variant == Variant::B1 ? Group::G1 : Group::G2;
                         std::vector<Tuple> out;
                         for (std::size_t k = 0; k < 4; ++k) out.push_back({arg(pullback_sample(g, r()).c)});
                         return out;
                       },
                       [](const AlgebraModel& m, std::span<const Arg> a) {
                         Group g = m.variant == Variant::B1 ? Group::G1 : Group::G2;
                         auto x = o8(a[0]);
                         return compare({determinant(model_rep(m, x)), quadratic_form(x, g)},
                                        {Q(1), Q(0)});
                       }),
                   v);
  }
  return s;
}

// ----------------------------------------------------------------- running

ReportEntry run_identity(const IdentityDef& d, const AlgebraModel& model, std::uint64_t seed) {
  // Per-identity stream so that adding identities does not shift others.
  std::uint64_t h = seed;
  for (char c : d.id) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
  h = h * 31 + static_cast<std::uint64_t>(model.variant);
  Rng rng(h);
  auto tuples = d.tuples(model, rng);

  ReportEntry e;
  e.identity = d.id;
  e.variant = std::string(variant_name(model.variant));
  e.kind = d.kind;

  auto failing = first_failure(tuples.size(), [&](std::size_t i) {
    return d.eval(model, std::span<const Arg>(tuples[i])).holds;
  });
  if (tuples.size() == 1 && tuples[0].empty()) {
    // Nullary: always record both sides.
    auto out = d.eval(model, {});
    e.status = out.holds ? Status::Pass : Status::Fail;
    e.lhs = out.lhs;
    e.rhs = out.rhs;
    if (!out.holds) e.counterexample = std::vector<std::string>{};
    return e;
  }
  if (!failing) {
    e.status = Status::Pass;
    return e;
  }
  const auto& t = tuples[*failing];
  auto out = d.eval(model, std::span<const Arg>(t));
  e.status = Status::Fail;
  std::vector<std::string> cex;
  for (const auto& a : t) cex.push_back(join_scalars(a));
  e.counterexample = std::move(cex);
  e.lhs = out.lhs;
  e.rhs = out.rhs;
  return e;
}

VerificationReport verify_identities(const AlgebraModel& model, std::uint64_t seed) {
  VerificationReport r;
  r.seed = seed;
  for (const auto& d : claim_suite(model.variant)) r.entries.push_back(run_identity(d, model, seed));
  r.canonicalize();
  return r;
}

VerificationReport verify_identities(Variant v, std::uint64_t seed) {
  return verify_identities(AlgebraModel::of(v), seed);
}

VerificationReport run_audits(std::uint64_t seed) {
  VerificationReport r;
  r.seed = seed;
  std::map<Variant, AlgebraModel> models;
  for (auto v : kAllVariants) models.emplace(v, AlgebraModel::of(v));
  for (const auto& [d, v] : audit_suite()) r.entries.push_back(run_identity(d, models.at(v), seed));
  r.canonicalize();
  return r;
}

namespace {

VerificationReport merge(VerificationReport a, const VerificationReport& b) {
  a.entries.insert(a.entries.end(), b.entries.begin(), b.entries.end());
  a.canonicalize();
  return a;
}

}  // namespace

VerificationReport default_verification(std::uint64_t seed) {
  return merge(verify_identities(Variant::Spin4, seed), run_audits(seed));
}

VerificationReport full_verification(std::uint64_t seed) {
  VerificationReport r = run_audits(seed);
  for (auto v : kAllVariants) r = merge(std::move(r), verify_identities(v, seed));
  return r;
}

bool replay(const ReportEntry& entry, const AlgebraModel& model) {
  const IdentityDef* found = nullptr;
  std::vector<IdentityDef> claims;
  std::vector<std::pair<IdentityDef, Variant>> audits;
  if (entry.kind == EntryKind::Claim) {
    claims = claim_suite(model.variant);
    for (const auto& d : claims)
      if (d.id == entry.identity) found = &d;
  } else {
    audits = audit_suite();
    for (const auto& [d, v] : audits)
      if (d.id == entry.identity && v == model.variant) found = &d;
  }
  if (!found) throw std::invalid_argument("unknown identity '" + entry.identity + "'");
  std::vector<Arg> args;
  if (entry.counterexample) {
    for (const auto& s : *entry.counterexample) args.push_back(parse_list<Rational>(s));
  }
  return found->eval(model, std::span<const Arg>(args)).holds;
}

bool replay(const ReportEntry& entry) {
  auto v = parse_variant(entry.variant);
  if (!v) throw std::invalid_argument("unknown variant '" + entry.variant + "'");
  return replay(entry, AlgebraModel::of(*v));
}

// ------------------------------------------------------------------ report

void VerificationReport::canonicalize() {
  std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
    return std::tie(a.identity, a.variant) < std::tie(b.identity, b.variant);
  });
}

bool VerificationReport::claims_pass() const { return failures(EntryKind::Claim) == 0; }

std::size_t VerificationReport::failures(EntryKind kind) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const auto& e) {
    return e.kind == kind && e.status == Status::Fail;
  }));
}

const ReportEntry* VerificationReport::find(std::string_view identity,
                                            std::string_view variant) const {
  for (const auto& e : entries)
    if (e.identity == identity && e.variant == variant) return &e;
  return nullptr;
}

std::string_view status_name(Status s) { return s == Status::Pass ? "PASS" : "FAIL"; }
std::string_view kind_name(EntryKind k) { return k == EntryKind::Claim ? "claim" : "audit"; }

std::vector<SignAssignment> repair_search(const ProductSpec& spec, std::uint32_t budget) {
  if (budget < kRepairSpaceSize) {
    throw BudgetExceeded("repair search needs " + std::to_string(kRepairSpaceSize) +
                         " evaluations, budget is " + std::to_string(budget));
  }
  return repair_search_parallel(spec);
}

std::vector<SignAssignment> repair_search(Variant v, std::uint32_t budget) {
  return repair_search(ProductSpec::from_variant(v), budget);
}

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  VerificationReport sorted = r;
  sorted.canonicalize();
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : sorted.entries) {
      nlohmann::ordered_json j;
      j["identity"] = e.identity;
      j["variant"] = e.variant;
      j["kind"] = kind_name(e.kind);
      j["status"] = status_name(e.status);
      j["counterexample"] = e.counterexample ? nlohmann::ordered_json(*e.counterexample)
                                             : nlohmann::ordered_json(nullptr);
      j["lhs"] = e.lhs ? nlohmann::ordered_json(*e.lhs) : nlohmann::ordered_json(nullptr);
      j["rhs"] = e.rhs ? nlohmann::ordered_json(*e.rhs) : nlohmann::ordered_json(nullptr);
      entries.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["seed"] = sorted.seed;
    doc["mode"] = sorted.mode;
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# seed " << sorted.seed << ", mode " << sorted.mode;
  if (!sorted.timestamp.empty()) os << ", " << sorted.timestamp;
  os << "\n";
  for (const auto& e : sorted.entries) {
    os << status_name(e.status) << "  " << kind_name(e.kind) << "  " << e.variant << "  "
       << e.identity;
    if (e.counterexample && !e.counterexample->empty()) {
      os << "  at (";
      for (std::size_t i = 0; i < e.counterexample->size(); ++i)
        os << (i ? " | " : "") << (*e.counterexample)[i];
      os << ")";
    }
    if (e.status == Status::Fail && e.lhs && e.rhs) os << "  lhs=[" << *e.lhs << "] rhs=[" << *e.rhs << "]";
    else if (e.lhs && e.rhs) os << "  " << *e.lhs;
    os << "\n";
  }
  os << "# claims failed: " << sorted.failures(EntryKind::Claim)
     << ", audit discrepancies: " << sorted.failures(EntryKind::Audit) << "\n";
  return os.str();
}

}  // namespace spinforge
