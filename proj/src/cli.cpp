#include "spinforge/cli.hpp"

#include "spinforge/compose.hpp"
#include "spinforge/em_field.hpp"
#include "spinforge/manifold.hpp"
#include "spinforge/reps.hpp"
#include "spinforge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace spinforge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure of a checking command that still produced output.
struct CheckFailed {
  std::string payload;
};

Variant need_variant(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw UsageError("unknown variant '" + name + "'");
  return *v;
}

Group need_group(const std::string& name) {
  auto g = parse_group(name);
  if (!g) throw UsageError("unknown group '" + name + "'");
  return *g;
}

template <class T>
std::string scalar_text(const T& v) {
  return to_string(v);
}

template <class T>
std::string scalar_text(const Complex<T>& z) {
  return to_string(z);
}

template <class T, std::size_t R, std::size_t C>
Json matrix_json(const Matrix<T, R, C>& m) {
  Json rows = Json::array();
  for (const auto& row : m.m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(scalar_text(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class T>
std::string product_cmd(Variant v, const std::string& x, const std::string& y) {
  return format(star(parse_oct<T>(x), parse_oct<T>(y), v)) + "\n";
}

template <class T>
std::string bracket_cmd(Variant v, const std::string& a, const std::string& b) {
  return format(cross(parse_vec6<T>(a), parse_vec6<T>(b), v)) + "\n";
}

template <class T>
std::string rep_cmd(Variant v, Source s, const std::string& a) {
  return matrix_json(rep_matrix(parse_oct<T>(a), v, s)).dump(2) + "\n";
}

template <class T>
bool member_cmd(Group g, const std::string& a) {
  return is_group_member(parse_oct<T>(a), g);
}

template <class T>
std::string vectors_text(const std::array<Vec6<T>, 4>& vs) {
  std::string out;
  for (const auto& v : vs) out += format(v) + "\n";
  return out;
}

template <class T>
PointOnM<T> point_arg(const std::string& text) {
  auto p = PointOnM<T>::at(parse_vec6<T>(text));
  if (!p.on_manifold()) {
    throw CheckFailed{"point is not on M: residual " + to_string(p.residual.first) + "," +
                      to_string(p.residual.second) + "\n"};
  }
  return p;
}

template <class T>
std::string em_cmd(const std::string& what, const std::string& field) {
  auto f = parse_em_field<T>(field);
  if (what == "f") return matrix_json(field_matrix(f)).dump(2) + "\n";
  if (what == "spin") return matrix_json(spin_field_matrix(f)).dump(2) + "\n";
  auto d2 = antisymmetry_defect_squared(field_matrix(f));
  if constexpr (is_exact_v<T>) {
    return "defect^2 " + to_string(d2) + "\n";
  } else {
    return "defect " + to_string(std::sqrt(d2)) + "\n";
  }
}

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("SPINFORGE_SEED");
  if (!env || !*env) return kDefaultSeed;
  char* end = nullptr;
  auto v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : kDefaultSeed;
}

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact star products, Spin(4) representations and identity verification",
               "spinforge"};
  app.require_subcommand(1);

  std::string variant = "spin4", source = "derived", group = "spin4";
  std::vector<std::string> operands;
  bool use_float = false;
  std::uint64_t seed = default_seed();

  auto add_float = [&](CLI::App* c) { c->add_flag("--float", use_float, "floating-point mode"); };
  const std::vector<std::string> variants{"spin4", "b1", "b2", "b3"};
  const std::vector<std::string> groups{"spin4", "g1", "g2"};

  auto* product = app.add_subcommand("product", "star product X*Y");
  product->add_option("--variant", variant)->required()->check(CLI::IsMember(variants));
  product->add_option("operands", operands, "X Y")->required()->expected(2);
  add_float(product);

  auto* bracket = app.add_subcommand("bracket", "outer product [A,B]");
  bracket->add_option("--variant", variant)->required()->check(CLI::IsMember(variants));
  bracket->add_option("operands", operands, "A B")->required()->expected(2);
  add_float(bracket);

  auto* rep = app.add_subcommand("rep", "8x8 representation matrix of A");
  rep->add_option("--variant", variant)->required()->check(CLI::IsMember(variants));
  rep->add_option("--source", source)->check(CLI::IsMember({"derived", "printed"}));
  rep->add_option("operands", operands, "A")->required()->expected(1);
  add_float(rep);

  auto* member = app.add_subcommand("member", "group membership of A");
  member->add_option("--group", group)->required()->check(CLI::IsMember(groups));
  member->add_option("operands", operands, "A")->required()->expected(1);
  add_float(member);

  auto* sample = app.add_subcommand("sample", "seeded group element");
  sample->add_option("--group", group)->required()->check(CLI::IsMember(groups));
  sample->add_option("--seed", seed);

  auto* manifold = app.add_subcommand("manifold", "the submanifold M of R^6");
  manifold->require_subcommand(1);
  double tol = kManifoldTolerance;
  int max_iter = kNewtonMaxIterations;
  auto* m_project = manifold->add_subcommand("project", "Newton projection of X onto M");
  m_project->add_option("operands", operands, "X")->required()->expected(1);
  m_project->add_option("--tol", tol);
  m_project->add_option("--max-iter", max_iter);
  auto* m_sample = manifold->add_subcommand("sample", "seeded point of M");
  m_sample->add_option("--seed", seed);
  add_float(m_sample);
  auto* m_tangent = manifold->add_subcommand("tangent", "tangent basis at P");
  m_tangent->add_option("operands", operands, "P")->required()->expected(1);
  add_float(m_tangent);
  auto* m_j = manifold->add_subcommand("j", "almost complex structure J_P(V)");
  m_j->add_option("operands", operands, "P V")->required()->expected(2);
  add_float(m_j);

  auto* em = app.add_subcommand("em", "electromagnetic field matrices");
  em->require_subcommand(1);
  std::vector<CLI::App*> em_cmds;
  for (const char* name : {"f", "spin", "defect"}) {
    auto* c = em->add_subcommand(name, "field given as E1,E2,E3,B1,B2,B3[,E0[,B0]]");
    c->add_option("operands", operands, "FIELD")->required()->expected(1);
    add_float(c);
    em_cmds.push_back(c);
  }

  auto* verify = app.add_subcommand("verify", "identity suite and discrepancy audits");
  std::string json_path;
  bool text = false;
  verify->add_option("--variant", variant)->check(CLI::IsMember(variants));
  verify->add_option("--seed", seed);
  verify->add_option("--json", json_path, "also write the JSON report to PATH");
  verify->add_flag("--text", text, "print the table instead of JSON");

  auto* bench = app.add_subcommand("bench", "median ns/op of chain composition");
  std::vector<std::string> encodings{"mat8", "mat4c", "quatpair"};
  std::size_t n = 1'000'000;
  bench->add_option("--encodings", encodings)->delimiter(',')->check(
      CLI::IsMember({"mat8", "mat4c", "quatpair"}));
  bench->add_option("--n", n)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string(e.what()) + "\n" + "run with --help for usage\n"};
  }

  try {
    if (product->parsed()) {
      auto v = need_variant(variant);
      return {0, use_float ? product_cmd<double>(v, operands[0], operands[1])
                           : product_cmd<Rational>(v, operands[0], operands[1]), ""};
    }
    if (bracket->parsed()) {
      auto v = need_variant(variant);
      return {0, use_float ? bracket_cmd<double>(v, operands[0], operands[1])
                           : bracket_cmd<Rational>(v, operands[0], operands[1]), ""};
    }
    if (rep->parsed()) {
      auto v = need_variant(variant);
      auto s = source == "printed" ? Source::Printed : Source::Derived;
      return {0, use_float ? rep_cmd<double>(v, s, operands[0]) : rep_cmd<Rational>(v, s, operands[0]),
              ""};
    }
    if (member->parsed()) {
      auto g = need_group(group);
      bool ok = use_float ? member_cmd<double>(g, operands[0]) : member_cmd<Rational>(g, operands[0]);
      return {ok ? 0 : 1, ok ? "true\n" : "false\n", ""};
    }
    if (sample->parsed()) {
      return {0, format(sample_group_element(need_group(group), seed)) + "\n", ""};
    }
    if (m_project->parsed()) {
      auto r = project_to_manifold(parse_vec6<double>(operands[0]), tol, max_iter);
      return {0, format(r.point.x) + "\niterations " + std::to_string(r.iterations) + "\n", ""};
    }
    if (m_sample->parsed()) {
      if (use_float) {
        auto s = sample_manifold(seed);
        return {0, format(s.point.x) + "\n", ""};
      }
      return {0, format(sample_manifold_exact(seed).x) + "\n", ""};
    }
    if (m_tangent->parsed()) {
      return {0, use_float ? vectors_text(tangent_basis(point_arg<double>(operands[0])))
                           : vectors_text(tangent_basis(point_arg<Rational>(operands[0]))), ""};
    }
    if (m_j->parsed()) {
      if (use_float) {
        auto p = point_arg<double>(operands[0]);
        return {0, format(almost_complex_J(p, parse_vec6<double>(operands[1]))) + "\n", ""};
      }
      auto p = point_arg<Rational>(operands[0]);
      return {0, format(almost_complex_J(p, parse_vec6<Rational>(operands[1]))) + "\n", ""};
    }
    for (auto* c : em_cmds) {
      if (c->parsed()) {
        auto name = c->get_name();
        return {0, use_float ? em_cmd<double>(name, operands[0]) : em_cmd<Rational>(name, operands[0]),
                ""};
      }
    }
    if (verify->parsed()) {
      auto v = need_variant(variant);
      auto report = verify_identities(v, seed);
      auto audits = run_audits(seed);
      report.entries.insert(report.entries.end(), audits.entries.begin(), audits.entries.end());
      report.canonicalize();
      auto json = emit_report(report, ReportFormat::Json);
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + json_path + "'");
        out << json;
      }
      std::string payload = json;
      if (text) {
        report.timestamp = timestamp();
        payload = emit_report(report, ReportFormat::Text);
      }
      return {report.claims_pass() ? 0 : 1, payload, ""};
    }
    if (bench->parsed()) {
      std::vector<Encoding> encs;
      for (const auto& e : encodings) encs.push_back(*parse_encoding(e));
      std::ostringstream os;
      os << "# n " << n << ", threads " << parallel_threads() << "\n";
      for (const auto& r : bench_compose(encs, n, seed)) {
        os << encoding_name(r.encoding) << " " << r.median_ns_per_op << " ns/op\n";
      }
      return {0, os.str(), ""};
    }
  } catch (const UsageError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const CheckFailed& e) {
    return {1, e.payload, ""};
  } catch (const std::exception& e) {
    return {1, "", std::string(e.what()) + "\n"};
  }
  return {2, "", "no command\n"};
}

}  // namespace spinforge::cli
