#pragma once

#include "spinforge/kernels.hpp"
#include "spinforge/tables.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinforge {

/// Everything the identity suite evaluates, as integer tables. Built from the
/// closed-form definitions of a variant; mutation tests edit the tables.
struct AlgebraModel {
  Variant variant = Variant::Spin4;
  BracketTable bracket;
  SignedPermutation conj;
  FormTerms form;
  StarTable star;

  static AlgebraModel of(Variant v);

  /// Copy with one nonzero star-table coefficient negated (seeded choice).
  AlgebraModel with_star_sign_flip(std::uint64_t seed) const;
  /// Copy with [u_i, u_j] and [u_j, u_i] negated.
  AlgebraModel with_bracket_sign_flip(std::size_t i, std::size_t j) const;
};

StarTable flip_random_sign(const StarTable& t, std::uint64_t seed);

enum class Status { Pass, Fail };
enum class EntryKind { Claim, Audit };

struct ReportEntry {
  std::string identity;
  std::string variant;
  EntryKind kind = EntryKind::Claim;
  Status status = Status::Pass;
  std::optional<std::vector<std::string>> counterexample;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  std::uint64_t seed = 0;
  std::string mode = "exact";
  std::string timestamp;

  /// Sorts by (identity, variant); serialization relies on it.
  void canonicalize();
  bool claims_pass() const;
  std::size_t failures(EntryKind kind) const;
  const ReportEntry* find(std::string_view identity, std::string_view variant) const;
};

/// One test argument: a scalar (size 1), a Vec6 (size 6) or an Oct (size 8).
using Arg = std::vector<Rational>;

struct Outcome {
  bool holds = true;
  std::string lhs;
  std::string rhs;
};

struct IdentityDef {
  std::string id;
  EntryKind kind = EntryKind::Claim;
  /// Test tuples: exhaustive basis tuples where multilinearity suffices,
  /// seeded random tuples otherwise.
  std::function<std::vector<std::vector<Arg>>(const AlgebraModel&, Rng&)> tuples;
  std::function<Outcome(const AlgebraModel&, std::span<const Arg>)> eval;
};

/// Identities checked as claims for the model's variant.
std::vector<IdentityDef> claim_suite(Variant v);
/// Discrepancy audits of printed formulas, each paired with its variant.
std::vector<std::pair<IdentityDef, Variant>> audit_suite();

ReportEntry run_identity(const IdentityDef& def, const AlgebraModel& model, std::uint64_t seed);

VerificationReport verify_identities(Variant v, std::uint64_t seed);
VerificationReport verify_identities(const AlgebraModel& model, std::uint64_t seed);
/// Spin4 claims plus every audit.
VerificationReport default_verification(std::uint64_t seed);
/// Claims for every variant plus every audit.
VerificationReport full_verification(std::uint64_t seed);
VerificationReport run_audits(std::uint64_t seed);

/// Re-evaluates a stored counterexample; returns whether the identity holds
/// there. Throws std::invalid_argument for unknown identities.
bool replay(const ReportEntry& entry, const AlgebraModel& model);
bool replay(const ReportEntry& entry);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search over 2^12 sign flips of the conjugation and form
/// coefficients. Throws BudgetExceeded when budget < 4096.
std::vector<SignAssignment> repair_search(const ProductSpec& spec,
                                          std::uint32_t budget = kRepairSpaceSize);
std::vector<SignAssignment> repair_search(Variant v, std::uint32_t budget = kRepairSpaceSize);

enum class ReportFormat { Json, Text };

/// Deterministic serialization; JSON is byte-identical for identical reports.
std::string emit_report(const VerificationReport& r, ReportFormat format);

std::string_view status_name(Status s);
std::string_view kind_name(EntryKind k);

}  // namespace spinforge
