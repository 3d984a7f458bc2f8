#include "atlas/report.hpp"

#include <algorithm>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Uncertified: return "uncertified";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "unknown";
}

Json ClaimRecord::to_json() const {
  Json j;
  j["claim_id"] = claim_id;
  j["description"] = description;
  j["expected"] = expected;
  j["computed"] = computed;
  j["status"] = claim_status_name(status);
  j["elapsed_ms"] = elapsed_ms;
  if (!certificate_tier.empty()) j["certificate_tier"] = certificate_tier;
  return j;
}

const std::vector<std::string>& claim_areas() {
  static const std::vector<std::string> areas = {
      "pauli", "clifford1", "clifford2", "outer", "geometry", "designs", "bridge", "oracle"};
  return areas;
}

void RunConfig::validate() const {
  if (qubit_scope != 0 && qubit_scope != 1 && qubit_scope != 2)
    throw ConfigError("qubit scope must be 1, 2 or both");
  if (budget_iso == 0 || budget_aut == 0) throw ConfigError("budgets must be positive");
  for (const auto& f : filters) {
    const auto& known = claim_areas();
    if (std::find(known.begin(), known.end(), f) == known.end())
      throw ConfigError("unknown filter: " + f);
  }
  if (format != "json" && format != "text") throw ConfigError("format must be json or text");
}

std::string render_report_json(const std::vector<ClaimRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(r.to_json());
  return arr.dump(2) + "\n";
}

std::string render_report_text(const std::vector<ClaimRecord>& records) {
  auto cell = [](const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
  };
  size_t wid = 8, wexp = 8, wcomp = 8, wstat = 6;
  for (const auto& r : records) {
    wid = std::max(wid, r.claim_id.size());
    wexp = std::max(wexp, cell(r.expected).size());
    wcomp = std::max(wcomp, cell(r.computed).size());
    wstat = std::max(wstat, std::string(claim_status_name(r.status)).size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, size_t w) {
    os << s;
    for (size_t i = s.size(); i < w + 2; ++i) os << ' ';
  };
  pad("claim_id", wid);
  pad("expected", wexp);
  pad("computed", wcomp);
  pad("status", wstat);
  os << "elapsed_ms\n";
  for (const auto& r : records) {
    pad(r.claim_id, wid);
    pad(cell(r.expected), wexp);
    pad(cell(r.computed), wcomp);
    pad(claim_status_name(r.status), wstat);
    os << r.elapsed_ms;
    if (!r.certificate_tier.empty()) os << "  [" << r.certificate_tier << "]";
    os << "\n";
  }
  return os.str();
}

std::vector<ClaimRecord> parse_report_json(const std::string& text) {
  Json arr = Json::parse(text);
  std::vector<ClaimRecord> out;
  for (const auto& j : arr) {
    ClaimRecord r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.expected = j.at("expected");
    r.computed = j.at("computed");
    std::string st = j.at("status").get<std::string>();
    if (st == "pass") r.status = ClaimStatus::Pass;
    else if (st == "fail") r.status = ClaimStatus::Fail;
    else if (st == "uncertified") r.status = ClaimStatus::Uncertified;
    else r.status = ClaimStatus::Skipped;
    r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    if (j.contains("certificate_tier"))
      r.certificate_tier = j.at("certificate_tier").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace atlas
