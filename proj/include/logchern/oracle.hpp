#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logchern/bundle.hpp"
#include "logchern/partition.hpp"

namespace logchern {

// Rewrites a symmetric total character in the r Chern roots (constant term =
// rank) as a BundleCharacter over e1..eD, using ch_k(E) = p_k(a)/k!.
BundleCharacter oracle_character(const GradedPoly& root_total, int r);

// ch(S^alpha E) by the splitting principle: s_alpha(exp a_1, ..., exp a_r).
BundleCharacter oracle_schur_ch(const Partition& alpha, int r, int D);
// ch(P_d) from p_d(exp a_1, ..., exp a_r) = sum_i exp(d a_i).
BundleCharacter oracle_power_sum_ch(int d, int r, int D);

struct VerificationRecord {
  Partition alpha;
  int r = 1;
  int D = 1;
  bool passed = true;
  // One line per failed check; both sides in canonical text form.
  std::vector<std::string> failures;
  // Measured Delta_k(S^alpha E) / Delta_k(E) for k = 1..D, in the root ring.
  // Absent when no scalar exists.
  std::vector<std::optional<Rational>> measured_factors;
};

// Compares the oracle against the closed formulas (Schur lines, and Svrtan or
// the exterior lines for rows and columns) and checks the Delta_1..Delta_D
// proportionality factors. D <= 3.
VerificationRecord verify_schur(const Partition& alpha, int r, int D);

// lambda with Delta(S^alpha V) = lambda Delta(V) in the rank-r root ring, for
// Delta = Delta_{4,t} or the plain Delta_4.
std::optional<Rational> delta4t_ratio(const Partition& alpha, int r, const Rational& t);
std::optional<Rational> plain_delta4_ratio(const Partition& alpha, int r);

struct ProportionalityResult {
  bool is_proportional = false;
  std::optional<Rational> lambda;
};

// Delta_{4,r}(S^m V) against Delta_{4,r}(V).
ProportionalityResult verify_delta4_proportionality(int m, int r);
// True when Delta_{4,t}(S^alpha V) is confirmed not to be a multiple of Delta_{4,t}(V).
bool verify_nonproportional_hook(const Partition& alpha, int r, const Rational& t);

enum class DiscrepancyStatus { confirmed, typo_suspected };
std::string to_string(DiscrepancyStatus status);

struct Discrepancy {
  std::string id;  // stable key used by the whitelist
  std::string claim;
  std::string paper_location;
  std::string printed_value;
  std::string measured_value;
  DiscrepancyStatus status = DiscrepancyStatus::confirmed;
};

// Printed formulas adjudicated against the oracle. Items with status
// typo_suspected are expected to be whitelisted.
std::vector<Discrepancy> audit_formulas();

// Data the printed statements leave open or get wrong in ways that are not typesetting
// slips: measured lambda(m, r) against the printed f4, the worked d_2
// non-additivity example, and Delta_{4,t} on the smallest hook. Reported,
// never counted against verify.
std::vector<Discrepancy> observations();

struct SweepReport {
  int cases = 0;
  int passed = 0;
  int failed = 0;
  std::vector<VerificationRecord> failures;
  std::vector<Discrepancy> discrepancies;
  std::vector<Discrepancy> observations;
};

struct SweepOptions {
  bool include_audit = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

// verify_schur over every r in min(2, max_r)..max_r and every alpha with
// 1 <= |alpha| <= max_size and at most r parts. Cases run in parallel and are
// merged in case order. Bounds: max_r <= 6, max_size <= 8, D <= 3.
SweepReport sweep(int max_r, int max_size, int D, const SweepOptions& options = {});

// Discrepancy ids treated as known typesetting errors.
std::vector<std::string> load_whitelist(const std::string& path);
std::string default_whitelist_path();
// Verification failures plus typo-suspected discrepancies not on the whitelist.
int gating_failures(const SweepReport& report, const std::vector<std::string>& whitelist);

}  // namespace logchern
