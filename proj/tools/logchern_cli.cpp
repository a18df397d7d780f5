// Command-line front end: compute characters and discriminants of Schur
// bundles, and run the oracle verification sweep.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "logchern/bundle.hpp"
#include "logchern/closed_forms.hpp"
#include "logchern/errors.hpp"
#include "logchern/io.hpp"
#include "logchern/mukai.hpp"
#include "logchern/oracle.hpp"

namespace {

using namespace logchern;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

Partition parse_fitting(const std::string& text, int rank) {
  if (rank < 1) throw UsageError("--rank must be positive");
  const Partition alpha = Partition::parse(text);
  if (alpha.length() > rank) {
    throw UsageError("partition " + alpha.to_string() + " has more than " + std::to_string(rank) + " parts");
  }
  return alpha;
}

std::string ratio_text(const std::optional<Rational>& q) { return q ? to_string(*q) : "not a multiple"; }

struct ChArgs {
  int rank = 2;
  std::string partition = "1";
  int max_degree = 3;
  std::string method = "oracle";
  std::string format = "text";
};

int run_ch(const ChArgs& args) {
  const Partition alpha = parse_fitting(args.partition, args.rank);
  if (args.max_degree < 1 || args.max_degree > 5) throw UsageError("--max-degree must lie in 1..5");
  const bool want_closed = args.method != "oracle";
  const bool want_oracle = args.method != "closed";
  if (want_closed) {
    const auto cap = closed_degree_cap(alpha, args.rank);
    if (cap && args.max_degree > *cap) {
      throw UsageError("the closed formulas for S^(" + alpha.to_string() + ") in rank " + std::to_string(args.rank) +
                       " stop at degree " + std::to_string(*cap) + " (only single-row partitions go further)");
    }
  }
  std::optional<BundleCharacter> closed, oracle;
  if (want_closed) closed = closed_schur_ch(alpha, args.rank, args.max_degree);
  if (want_oracle) oracle = oracle_schur_ch(alpha, args.rank, args.max_degree);
  const bool match = !(closed && oracle) || equal_on_rank(*closed, *oracle, args.rank);

  if (args.format == "json") {
    nlohmann::ordered_json out;
    if (closed && oracle) {
      out = {{"closed", character_to_json(*closed)}, {"oracle", character_to_json(*oracle)}, {"match", match}};
    } else {
      out = character_to_json(closed ? *closed : *oracle);
    }
    std::cout << out.dump(2) << '\n';
  } else if (closed && oracle) {
    std::cout << "closed:\n" << character_to_text(*closed) << "oracle:\n" << character_to_text(*oracle)
              << "match: " << (match ? "yes" : "no") << '\n';
  } else {
    std::cout << character_to_text(closed ? *closed : *oracle);
  }
  return match ? kOk : kVerificationFailure;
}

int run_delta(int rank, const std::string& partition, int k) {
  const Partition alpha = parse_fitting(partition, rank);
  if (k < 1 || k > 5) throw UsageError("--k must lie in 1..5");
  const auto w = oracle_schur_ch(alpha, rank, k);
  const auto v = base_bundle(rank, k);
  const GradedPoly dw = discriminants(w, k)[k];
  const GradedPoly dv = discriminants(v, k)[k];
  const auto factor = proportionality_factor(class_in_roots(dw, rank), class_in_roots(dv, rank));
  std::cout << "Delta_" << k << "(E) = " << dv.to_string() << '\n'
            << "Delta_" << k << "(S^(" << alpha.to_string() << ")E) = " << dw.to_string() << '\n'
            << "factor: " << ratio_text(factor) << '\n';
  if (k <= 3) {
    const auto predicted = fibrati_factor(schur_coefficients(alpha, rank), k);
    std::cout << "closed factor: " << (predicted ? to_string(*predicted) : "none (vanishing regime)") << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  int max_rank = 5;
  int max_size = 6;
  int max_degree = 3;
  std::string format = "text";
  std::string whitelist;
  unsigned threads = 0;
};

int run_verify(const VerifyArgs& args) {
  const auto whitelist = load_whitelist(args.whitelist.empty() ? default_whitelist_path() : args.whitelist);
  SweepOptions options;
  options.threads = args.threads;
  const SweepReport report = sweep(args.max_rank, args.max_size, args.max_degree, options);
  const int gating = gating_failures(report, whitelist);
  if (args.format == "json") {
    auto out = sweep_to_json(report);
    out["gating_failures"] = gating;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << sweep_to_text(report, whitelist) << (gating ? "verify: FAILED\n" : "verify: ok\n");
  }
  return gating ? kVerificationFailure : kOk;
}

int run_delta4(int rank, std::optional<int> m, const std::string& partition, const std::string& t_text) {
  if (rank < 2) throw UsageError("--rank must be at least 2");
  if (m && !partition.empty()) throw UsageError("give either --m or --partition");
  const Partition alpha = m ? Partition::row(*m) : parse_fitting(partition.empty() ? "1" : partition, rank);
  const Rational t = t_text.empty() ? Rational(rank) : parse_rational(t_text);
  const auto lambda = delta4t_ratio(alpha, rank, t);
  std::cout << "Delta_{4," << to_string(t) << "}(S^(" << alpha.to_string() << ")V) / Delta_{4," << to_string(t)
            << "}(V): " << ratio_text(lambda) << '\n';
  if (alpha.is_row() && t == Rational(rank)) {
    const int mm = alpha[0];
    const Rational q = Rational(binomial(mm + rank - 1, rank - 1)) / Rational(rank);
    std::cout << "printed f4 (r_m/r)^4: " << to_string(f4_sym(mm, rank) * q * q * q * q) << '\n';
  }
  std::cout << "plain Delta_4 ratio: " << ratio_text(plain_delta4_ratio(alpha, rank)) << '\n';
  return kOk;
}

int run_lowrank(int k, int rank) {
  if (k != 4 && k != 5) throw UsageError("--k must be 4 or 5");
  const auto e = chern_class_bundle(rank, k);
  const GradedPoly modified = modified_delta(e, k);
  if (modified.is_zero()) {
    std::cout << "modified Delta_" << k << " in rank " << rank << ": vanishes identically\n";
  } else {
    std::cout << "modified Delta_" << k << " in rank " << rank << ": " << modified.to_string() << '\n';
  }
  return kOk;
}

int run_mukai(const std::string& v_text, long d, const std::string& partition) {
  std::vector<std::string> fields;
  std::stringstream in(v_text);
  for (std::string item; std::getline(in, item, ',');) fields.push_back(item);
  if (fields.size() != 3) throw UsageError("--v expects r,c,s");
  MukaiVector v;
  v.r = to_integer(parse_rational(fields[0]));
  v.c = to_integer(parse_rational(fields[1]));
  v.s = parse_rational(fields[2]);
  v.d = d;
  if (!v.r.fits_sint_p() || v.r < 1) throw UsageError("--v: rank must be a positive integer");
  const MukaiVector out = mukai_schur(v, parse_fitting(partition, static_cast<int>(v.r.get_si())));
  std::cout << to_string(out);
  if (is_integer(out.s)) {
    std::cout << "  primitive: " << (is_primitive(out) ? "yes" : "no") << '\n';
  } else {
    std::cout << "  primitive: n/a (s not integral)\n";
  }
  return kOk;
}

int run_hc(std::optional<int> k, std::optional<int> rank, const std::string& format) {
  std::vector<int> ks = k ? std::vector<int>{*k} : std::vector<int>{2, 3};
  std::vector<int> ranks;
  if (rank) {
    ranks.push_back(*rank);
  } else {
    for (int r = 2; r <= 5; ++r) ranks.push_back(r);
  }
  bool ok = true;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (int kk : ks) {
    for (int r : ranks) {
      const auto report = hc_shift_check(kk, r);
      ok = ok && report.passed;
      if (format == "json") {
        all.push_back(hc_to_json(report));
        continue;
      }
      std::cout << "k=" << kk << " r=" << r << ": " << (report.passed ? "ok" : "FAIL") << " (symbolic "
                << (report.symbolic_ok ? "ok" : "FAIL") << ", " << report.points_checked << " points, "
                << report.translations_checked << " translations)";
      if (report.witness) std::cout << " witness: " << *report.witness;
      std::cout << '\n';
    }
  }
  if (format == "json") std::cout << all.dump(2) << '\n';
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic Chern characters and discriminants of Schur bundles, in exact arithmetic"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  ChArgs ch;
  auto* ch_cmd = app.add_subcommand("ch", "Chern character of S^alpha E");
  ch_cmd->add_option("--rank", ch.rank, "rank r of E")->required();
  ch_cmd->add_option("--partition", ch.partition, "partition, e.g. 2,1");
  ch_cmd->add_option("--max-degree", ch.max_degree, "truncation degree (<= 5)");
  ch_cmd->add_option("--method", ch.method)->check(CLI::IsMember({"closed", "oracle", "both"}));
  ch_cmd->add_option("--format", ch.format)->check(CLI::IsMember(formats));

  int delta_rank = 2, delta_k = 2;
  std::string delta_partition = "1";
  auto* delta_cmd = app.add_subcommand("delta", "Delta_k(S^alpha E) against Delta_k(E)");
  delta_cmd->add_option("--rank", delta_rank)->required();
  delta_cmd->add_option("--partition", delta_partition);
  delta_cmd->add_option("--k", delta_k, "degree, 1..5");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "oracle sweep against the closed formulas");
  verify_cmd->add_option("--max-rank", verify.max_rank);
  verify_cmd->add_option("--max-size", verify.max_size);
  verify_cmd->add_option("--max-degree", verify.max_degree);
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember(formats));
  verify_cmd->add_option("--whitelist", verify.whitelist, "known-typo file");
  verify_cmd->add_option("--threads", verify.threads);

  int d4_rank = 2;
  std::optional<int> d4_m;
  std::string d4_partition, d4_t;
  auto* d4_cmd = app.add_subcommand("delta4", "Delta_{4,t} proportionality for S^m V or a given partition");
  d4_cmd->add_option("--rank", d4_rank)->required();
  d4_cmd->add_option("--m", d4_m);
  d4_cmd->add_option("--partition", d4_partition);
  d4_cmd->add_option("--t", d4_t, "rational t (default: the rank)");

  int low_k = 4, low_rank = 3;
  auto* low_cmd = app.add_subcommand("lowrank", "modified Delta_4 / Delta_5 in terms of Chern classes");
  low_cmd->add_option("--k", low_k)->required();
  low_cmd->add_option("--rank", low_rank)->required();

  std::string mukai_v = "2,1,2", mukai_partition = "2";
  long mukai_d = 3;
  auto* mukai_cmd = app.add_subcommand("mukai", "Mukai vector of S^alpha E on a K3 surface");
  mukai_cmd->add_option("--v", mukai_v, "r,c,s");
  mukai_cmd->add_option("--d", mukai_d, "H^2 = 2d");
  mukai_cmd->add_option("--partition", mukai_partition);

  std::optional<int> hc_k, hc_rank;
  std::string hc_format = "text";
  auto* hc_cmd = app.add_subcommand("hc-check", "Harish-Chandra shift and translation invariance");
  hc_cmd->add_option("--k", hc_k)->check(CLI::IsMember({2, 3}));
  hc_cmd->add_option("--rank", hc_rank)->check(CLI::Range(2, 8));
  hc_cmd->add_option("--format", hc_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*ch_cmd) return run_ch(ch);
    if (*delta_cmd) return run_delta(delta_rank, delta_partition, delta_k);
    if (*verify_cmd) return run_verify(verify);
    if (*d4_cmd) return run_delta4(d4_rank, d4_m, d4_partition, d4_t);
    if (*low_cmd) return run_lowrank(low_k, low_rank);
    if (*mukai_cmd) return run_mukai(mukai_v, mukai_d, mukai_partition);
    if (*hc_cmd) return run_hc(hc_k, hc_rank, hc_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}
