// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "spinforge/cli.hpp"
#include "spinforge/iso_maps.hpp"
#include "spinforge/kernels.hpp"
#include "spinforge/lie.hpp"
#include "spinforge/manifold.hpp"
#include "spinforge/em_field.hpp"
#include "spinforge/reps.hpp"
#include "spinforge/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace spinforge;
using Q = Rational;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

Oct<Q> random_oct(Rng& rng) {
  Oct<Q> x;
  for (auto& v : x.c) v = random_rational(rng);
  return x;
}

Verdict c1_associativity() {
  Verdict v;
  auto t = star_table(Variant::Spin4);
  v.require(associativity_failures(t).empty(), "SPIN4 basis triple fails associativity");
  auto model = AlgebraModel::of(Variant::Spin4);
  int detected = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto m = model.with_star_sign_flip(seed);
    if (!associativity_failures(m.star).empty()) ++detected;
  }
  v.require(detected == 5, "only " + std::to_string(detected) + "/5 mutations detected");
  v.detail = v.pass ? "512 triples exact; 5/5 mutations detected" : v.detail;
  return v;
}

Verdict c2_cross_identities() {
  Verdict v;
  auto model = AlgebraModel::of(Variant::Spin4);
  std::size_t checked = 0;
  const std::set<std::string> items{
      "cross.antisymmetry",          "cross.self_product_zero",
      "cross.homogeneity",           "cross.additivity",
      "cross.triple_product",        "cross.orthogonal_both_sides_zero",
      "cross.conj_outside_equals_right", "cross.conj_outside_equals_left",
      "conj.form_symmetric",         "cross.double_cross_expansion"};
  for (const auto& d : claim_suite(Variant::Spin4)) {
    if (!items.count(d.id)) continue;
    auto e = run_identity(d, model, 42);
    ++checked;
    v.require(e.status == Status::Pass, d.id + " failed");
  }
  // Item 5 evaluated directly: both sides must be identically zero.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto a = Vec6<Q>::unit(i), b = Vec6<Q>::unit(j);
      auto ab = cross(a, b, Variant::Spin4);
      v.require(dot(ab, a) == 0 && dot(b, ab) == 0, "item 5 side nonzero");
    }
  v.require(checked == 10, "expected 10 identities, ran " + std::to_string(checked));
  if (v.pass) v.detail = std::to_string(checked) + " identities over basis pairs/triples";
  return v;
}

Verdict c3_representations() {
  Verdict v;
  for (std::size_t k = 0; k < 8; ++k) {
    auto e = Oct<Q>::unit(k);
    v.require(printed_rep(e, Variant::Spin4) == derived_rep(e, Variant::Spin4),
              "printed != derived at e" + std::to_string(k));
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      auto a = Oct<Q>::unit(i), b = Oct<Q>::unit(j);
      v.require(derived_rep(star(a, b, Variant::Spin4), Variant::Spin4) ==
                    derived_rep(a, Variant::Spin4) * derived_rep(b, Variant::Spin4),
                "homomorphism fails");
    }
  Rng rng(301);
  for (int n = 0; n < 50; ++n) {
    auto a = random_oct(rng);
    try {
      auto c = complex_rep(a);
      auto m = derived_rep(a, Variant::Spin4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
          v.require(c.m[r][s] == Complex<Q>(m.m[r][s], m.m[r][s + 4]), "complex_rep mismatch");
    } catch (const BlockStructureError& e) {
      v.require(false, e.what());
    }
  }
  if (v.pass) v.detail = "8 basis octets, 64 pairs, 50 block checks";
  return v;
}

Verdict c4_determinant() {
  Verdict v;
  Rng rng(401);
  for (int n = 0; n < 200; ++n) {
    auto a = random_oct(rng);
    auto f = det_factorization_check(a);
    v.require(determinant(derived_rep(a, Variant::Spin4)) == f.n1 * f.n1 * f.n2 * f.n2,
              "det != N1^2 N2^2 at " + format(a));
    auto [p, q] = to_quat_pair(a);
    v.require(quadratic_form(a, Group::Spin4) == (q.norm() - p.norm()) / 4,
              "constraint identity fails at " + format(a));
  }
  if (v.pass) v.detail = "200 octets exact";
  return v;
}

Verdict c5_membership() {
  Verdict v;
  auto check = [&](const Oct<Q>& x) {
    v.require(determinant(derived_rep(x, Variant::Spin4)) == 1, "det != 1 at " + format(x));
    v.require(quadratic_form(x, Group::Spin4) == 0, "qf != 0 at " + format(x));
  };
  for (std::uint64_t s = 0; s < 100; ++s) check(sample_group_element(Group::Spin4, 1000 + s));
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto x = sample_group_element(Group::Spin4, 2000 + 2 * s);
    auto y = sample_group_element(Group::Spin4, 2001 + 2 * s);
    check(star(x, y, Variant::Spin4));
  }
  if (v.pass) v.detail = "100 samples, 100 products";
  return v;
}

Verdict c6_multiplicativity() {
  Verdict v;
  using M = MultType;
  v.require(multiplicativity_type(MapId::QuatPair, Variant::Spin4) ==
                std::vector<M>{M::Hom, M::AntiHom}, "to_quat_pair not (HOM, ANTIHOM)");
  v.require(multiplicativity_type(MapId::Identity, Variant::Spin4) == std::vector<M>{M::Hom},
            "identity not HOM");
  v.require(multiplicativity_type(MapId::DerivedRep, Variant::Spin4) == std::vector<M>{M::Hom},
            "derived rep not HOM");
  if (v.pass) v.detail = "(HOM,ANTIHOM); HOM; HOM";
  return v;
}

Verdict c7_lie(const std::string& golden_path) {
  Verdict v;
  auto sc = structure_constants(Variant::Spin4);
  v.require(jacobi_holds(sc), "SPIN4 Jacobi fails");
  v.require(killing_signature(sc).signature == Signature{0, 6, 0}, "SPIN4 signature not (0,6,0)");

  std::ifstream in(golden_path);
  v.require(static_cast<bool>(in), "golden file missing: " + golden_path);
  if (in) {
    auto golden = nlohmann::json::parse(in);
    auto fresh = run_audits(42);
    int matched = 0;
    for (const auto& e : golden["entries"]) {
      std::string id = e["identity"];
      if (id != "audit.lie.jacobi" && id != "audit.lie.killing_signature") continue;
      const auto* f = fresh.find(id, e["variant"].get<std::string>());
      v.require(f != nullptr, "missing fresh entry " + id);
      if (!f) continue;
      v.require(std::string(status_name(f->status)) == e["status"], id + " status differs");
      v.require(e["lhs"].is_null() ? !f->lhs : (f->lhs && *f->lhs == e["lhs"]), id + " lhs differs");
      ++matched;
    }
    v.require(matched == 6, "expected 6 golden Lie entries, found " + std::to_string(matched));
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto moved = change_basis(sc, random_unimodular(seed));
    v.require(killing_signature(moved).signature == Signature{0, 6, 0}, "signature changed");
  }
  if (v.pass) v.detail = "216 triples, (0,6,0), golden B1-B3, 5 basis changes";
  return v;
}

Verdict c8_manifold() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = sample_manifold_exact(seed);
    v.require(defining_map(p.x) == std::make_pair(Q(1), Q(0)), "exact point off M");
    auto basis = tangent_basis(p);
    Matrix<Q, 4, 6> b;
    for (std::size_t k = 0; k < 4; ++k) {
      b.m[k] = basis[k].c;
      auto jv = almost_complex_J(p, basis[k]);
      v.require(is_tangent(p, jv), "J leaves the tangent space");
      v.require(almost_complex_J(p, jv) == -basis[k], "J^2 != -id");
    }
    v.require(rank(b) == 4, "tangent basis rank != 4");
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = sample_manifold(seed);
    v.require(s.point.on_manifold(kManifoldTolerance), "float sample residual above 1e-12");
    for (const auto& t : tangent_basis(s.point)) {
      auto jj = almost_complex_J(s.point, almost_complex_J(s.point, t)) + t;
      double worst = 0;
      for (double c : jj.c) worst = std::max(worst, std::abs(c));
      v.require(worst <= 1e-12, "float J^2 + id above 1e-12");
    }
  }
  Rng rng(801);
  int retries = 0, worst_iter = 0;
  for (int n = 0; n < 100; ++n) {
    for (int attempt = 0;; ++attempt) {
      Vec6<double> x;
      double norm = 0;
      for (auto& c : x.c) norm += (c = normal_deviate(rng)) * c;
      x = (1 / std::sqrt(norm)) * x;
      try {
        auto r = project_to_manifold(x);
        worst_iter = std::max(worst_iter, r.iterations);
        break;
      } catch (const std::runtime_error&) {
        ++retries;
        if (attempt > 5) break;
      }
    }
  }
  v.require(worst_iter <= kNewtonMaxIterations, "Newton exceeded 25 iterations");
  v.require(retries <= 5, std::to_string(retries) + "% retries");
  if (v.pass) {
    v.detail = "100 exact + 100 float points; Newton max " + std::to_string(worst_iter) +
               " iterations, " + std::to_string(retries) + "% retries";
  }
  return v;
}

Verdict c9_em() {
  Verdict v;
  Rng rng(901);
  int zero_fields = 0;
  for (int n = 0; n < 50; ++n) {
    EMField<Q> f;
    if (n % 5 != 0)
      for (auto& c : f.e) c = random_rational(rng);
    for (auto& c : f.b) c = random_rational(rng);
    Q e2 = f.e[0] * f.e[0] + f.e[1] * f.e[1] + f.e[2] * f.e[2];
    Q d2 = antisymmetry_defect_squared(field_matrix(f));
    v.require(d2 == 8 * e2, "defect^2 != 8|E|^2");
    v.require((d2 == 0) == (e2 == 0), "zero defect does not track E = 0");
    zero_fields += e2 == 0;
  }
  if (v.pass) v.detail = "50 fields (" + std::to_string(zero_fields) + " with E = 0)";
  return v;
}

Verdict c10_report() {
  Verdict v;
  auto a = cli::run({"verify"});
  auto b = cli::run({"verify"});
  v.require(a.exitCode == 0, "default verify exit " + std::to_string(a.exitCode));
  v.require(a.payload == b.payload, "two runs differ");
  auto j = nlohmann::json::parse(a.payload);
  auto status_of = [&](const std::string& id, const std::string& var) -> std::string {
    for (const auto& e : j["entries"])
      if (e["identity"] == id && e["variant"] == var) return e["status"];
    return "missing";
  };
  v.require(status_of("audit.star.compact_a1b1_sign", "spin4") == "FAIL", "a1b1 sign not flagged");
  for (const char* var : {"b1", "b2", "b3"})
    v.require(status_of("audit.rep.printed_matches_derived", var) == "FAIL",
              std::string("printed matrix for ") + var + " not flagged");
  if (v.pass) v.detail = "a1b1 sign and split-signature matrices flagged; byte-identical";
  return v;
}

Verdict c11_repair() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  auto found = repair_search(Variant::Spin4);
  v.require(!found.empty() && found.front().mask == 0, "unmodified assignment missing");
  auto spec = ProductSpec::from_variant(Variant::Spin4);
  Rng rng(1101);
  auto flip = static_cast<std::uint16_t>(1u << uniform_int(rng, 0, 11));
  auto results = repair_search(spec.with_flips(flip));
  bool recovered = std::any_of(results.begin(), results.end(), [&](const SignAssignment& s) {
    return s.conj == spec.conj && s.form == spec.form;
  });
  v.require(recovered, "original not recovered from flip " + std::to_string(flip));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(secs < 30, "took " + std::to_string(secs) + " s");
  if (v.pass) {
    std::ostringstream os;
    os.precision(3);
    os << "mask 0 present; flip " << flip << " recovered; " << secs << " s";
    v.detail = os.str();
  }
  return v;
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Verdict (*run)();
  };
  static const std::string golden = SPINFORGE_GOLDEN_DIR "/verify_seed42.json";
  const Row rows[] = {
      {"C1 star associativity + mutation detection", c1_associativity},
      {"C2 cross product identities", c2_cross_identities},
      {"C3 representation coherence", c3_representations},
      {"C4 determinant factorization", c4_determinant},
      {"C5 Spin(4) membership and closure", c5_membership},
      {"C6 multiplicativity typing", c6_multiplicativity},
      {"C7 Lie verification", [] { return c7_lie(golden); }},
      {"C8 manifold and almost complex structure", c8_manifold},
      {"C9 EM antisymmetry audit", c9_em},
      {"C10 discrepancy report", c10_report},
      {"C11 repair search", c11_repair},
  };
  int failed = 0;
  for (const auto& row : rows) {
    Verdict v;
    try {
      v = row.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS " : "FAIL ") << row.name << ": " << v.detail << "\n";
  }
  std::cout << (failed ? "acceptance: FAILED " + std::to_string(failed) + " criteria"
                       : std::string("acceptance: all 11 criteria pass"))
            << "\n";
  return failed ? 1 : 0;
}
