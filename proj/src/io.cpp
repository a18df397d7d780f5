#include "logchern/io.hpp"

#include <algorithm>
#include <sstream>

#include "logchern/errors.hpp"

namespace logchern {

nlohmann::ordered_json character_to_json(const BundleCharacter& a) {
  nlohmann::ordered_json ch = nlohmann::ordered_json::object();
  for (int k = 1; k <= a.max_degree(); ++k) ch[std::to_string(k)] = a.ch(k).to_string();
  return {{"rank", to_string(a.rank())}, {"D", a.max_degree()}, {"ch", ch}};
}

BundleCharacter character_from_json(const nlohmann::ordered_json& doc) {
  try {
    const int D = doc.at("D").get<int>();
    if (D < 1) throw UsageError("character JSON: D must be at least 1");
    const auto gens = ch_symbols(D);
    const Rational rank = parse_rational(doc.at("rank").get<std::string>());
    const auto& ch = doc.at("ch");
    for (const auto& [key, value] : ch.items()) {
      const bool known = std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                         !key.empty() && std::stoi(key) >= 1 && std::stoi(key) <= D;
      if (!known) throw UsageError("character JSON: unexpected component key '" + key + "'");
    }
    std::vector<GradedPoly> comps;
    for (int k = 1; k <= D; ++k) {
      const auto it = ch.find(std::to_string(k));
      comps.push_back(it == ch.end() ? GradedPoly(gens, D) : GradedPoly::parse(it->get<std::string>(), gens, D));
    }
    return BundleCharacter(rank, std::move(comps));
  } catch (const nlohmann::ordered_json::exception& e) {
    throw UsageError(std::string("character JSON: ") + e.what());
  }
}

std::string character_to_text(const BundleCharacter& a) {
  std::ostringstream out;
  for (int k = 0; k <= a.max_degree(); ++k) out << "ch_" << k << " = " << a.ch(k).to_string() << '\n';
  return out.str();
}

nlohmann::ordered_json discrepancy_to_json(const Discrepancy& d) {
  return {{"id", d.id},
          {"claim", d.claim},
          {"paper_location", d.paper_location},
          {"printed_value", d.printed_value},
          {"measured_value", d.measured_value},
          {"status", to_string(d.status)}};
}

nlohmann::ordered_json record_to_json(const VerificationRecord& rec) {
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& f : rec.measured_factors) factors.push_back(f ? nlohmann::ordered_json(to_string(*f)) : nlohmann::ordered_json());
  return {{"alpha", rec.alpha.to_string()}, {"r", rec.r},           {"D", rec.D},
          {"passed", rec.passed},           {"failures", rec.failures}, {"measured_factors", factors}};
}

nlohmann::ordered_json sweep_to_json(const SweepReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& rec : report.failures) failures.push_back(record_to_json(rec));
  nlohmann::ordered_json discrepancies = nlohmann::ordered_json::array();
  for (const auto& d : report.discrepancies) discrepancies.push_back(discrepancy_to_json(d));
  nlohmann::ordered_json observations = nlohmann::ordered_json::array();
  for (const auto& d : report.observations) observations.push_back(discrepancy_to_json(d));
  return {{"cases", report.cases},     {"passed", report.passed},
          {"failed", report.failed},   {"failures", failures},
          {"discrepancies", discrepancies}, {"observations", observations}};
}

std::string sweep_to_text(const SweepReport& report, const std::vector<std::string>& whitelist) {
  std::ostringstream out;
  out << "cases " << report.cases << ", passed " << report.passed << ", failed " << report.failed << '\n';
  for (const auto& rec : report.failures) {
    for (const auto& line : rec.failures) out << "  FAIL alpha=" << rec.alpha.to_string() << " r=" << rec.r << ": " << line << '\n';
  }
  auto table = [&](const char* title, const std::vector<Discrepancy>& rows, bool mark) {
    if (rows.empty()) return;
    out << '\n' << title << '\n';
    for (const auto& d : rows) {
      const bool listed = std::find(whitelist.begin(), whitelist.end(), d.id) != whitelist.end();
      out << "  [" << to_string(d.status);
      if (mark && d.status == DiscrepancyStatus::typo_suspected) out << (listed ? ", whitelisted" : ", NOT whitelisted");
      out << "] " << d.claim << " (" << d.paper_location << ")\n"
          << "      printed:  " << d.printed_value << '\n'
          << "      measured: " << d.measured_value << '\n';
    }
  };
  table("discrepancies", report.discrepancies, true);
  table("observations (reported only)", report.observations, false);
  return out.str();
}

nlohmann::ordered_json hc_to_json(const HcShiftReport& report) {
  nlohmann::ordered_json j = {{"k", report.k},
                      {"r", report.r},
                      {"symbolic_ok", report.symbolic_ok},
                      {"points_checked", report.points_checked},
                      {"translations_checked", report.translations_checked},
                      {"passed", report.passed}};
  j["witness"] = report.witness ? nlohmann::ordered_json(*report.witness) : nlohmann::ordered_json();
  return j;
}

}  // namespace logchern
