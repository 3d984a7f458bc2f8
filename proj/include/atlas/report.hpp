#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace atlas {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { Pass, Fail, Uncertified, Skipped };

const char* claim_status_name(ClaimStatus);

// One verified claim. Pass means computed equals expected exactly; all
// arithmetic is exact, so there are no tolerances anywhere.
struct ClaimRecord {
  std::string claim_id;
  std::string description;
  Json expected;
  Json computed;
  ClaimStatus status = ClaimStatus::Skipped;
  int64_t elapsed_ms = 0;
  std::string certificate_tier;  // empty when not applicable

  Json to_json() const;
};

struct RunConfig {
  int qubit_scope = 0;                // 0 = both, 1 or 2 restricts
  std::vector<std::string> filters;   // claim areas; empty = all
  uint64_t budget_iso = 50000000;     // extension attempts for isomorphism search
  uint64_t budget_aut = 200000000;    // extension attempts for automorphism enumeration
  std::string out_dir = ".";
  std::string cache_path;             // optional C2 closure cache
  std::string format = "json";        // report format
  unsigned threads = 0;               // 0 = auto

  void validate() const;              // throws ConfigError
};

// known filter names, in report order
const std::vector<std::string>& claim_areas();

std::string render_report_json(const std::vector<ClaimRecord>&);
std::string render_report_text(const std::vector<ClaimRecord>&);
std::vector<ClaimRecord> parse_report_json(const std::string&);

}  // namespace atlas
