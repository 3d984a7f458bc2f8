#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "atlas/group_core.hpp"
#include "atlas/group_id.hpp"
#include "atlas/matrix.hpp"
#include "atlas/pauli_geometry.hpp"
#include "atlas/perm.hpp"
#include "atlas/report.hpp"
#include "atlas/steiner.hpp"

namespace atlas {

// Shared computation context for the verification pipeline. Artifacts are
// built lazily, exactly once, under per-artifact locks; everything handed
// out is immutable afterwards, so claims can read concurrently.
class VerifyContext {
 public:
  explicit VerifyContext(RunConfig config);

  const RunConfig& config() const { return config_; }

  const MatGroup& pauli(int n);
  const MatGroup& clifford(int n);  // cache-aware for n = 2
  GroupPtr clifford_fg(int n);
  const Subgroup& clifford_center(int n);

  struct InnerData {
    GroupPtr fg;                      // permutation-realized inner group
    std::vector<Perm> elem_perms;     // Pauli-element action, one per C_n element
    uint64_t image_order = 0;
    uint64_t kernel_order = 0;
    uint64_t quotient_order = 0;      // literal quotient(C_n, center)
    bool kernel_is_center = false;
    bool kernel_all_scalar = false;
    bool quotient_map_verified = false;  // coset -> perm bijective hom (spot grid)
  };
  const InnerData& inner(int n);
  const std::vector<Subgroup>& inner_normals(int n);

  // named subgroups of the two-qubit inner group
  const Subgroup& inner2_n1();  // order 16
  const Subgroup& inner2_n2();  // order 5760
  GroupPtr u6_clifford();

  const Geometry& geometry(int n);

  const BinaryCode& golay();
  const SteinerSystem& octads();
  const SteinerSystem& s4723();
  const SteinerSystem& s3622();
  const PermGroup& design_aut();
  const PermGroup& m22();
  GroupPtr hexad_group();  // stabilizer of the first block

 private:
  RunConfig config_;

  std::mutex m_pauli_[3], m_cliff_[3], m_center_[3], m_inner_[3], m_normals_[3];
  std::mutex m_geom_[4], m_designs_, m_aut_, m_m22_, m_hexad_;
  std::shared_ptr<const MatGroup> pauli_shared_[3], cliff_shared_[3];
  GroupPtr pauli_fg_[3], cliff_fg_[3];
  std::optional<Subgroup> center_[3];
  std::optional<InnerData> inner_[3];
  std::optional<std::vector<Subgroup>> normals_[3];
  std::optional<Geometry> geom_[4];
  std::optional<BinaryCode> golay_;
  std::optional<SteinerSystem> octads_, s4723_, s3622_;
  std::optional<PermGroup> aut_, m22_;
  GroupPtr hexad_;

 public:
  GroupPtr pauli_fg(int n);
};

struct ClaimOutcome {
  Json computed;
  std::optional<ClaimStatus> status_override;  // default: computed == expected
  std::string tier;
};

struct Claim {
  std::string id;
  std::string description;
  std::string area;        // one of claim_areas()
  int requires_qubits = 0; // 0 = none, else 1 or 2
  Json expected;
  std::function<ClaimOutcome(VerifyContext&)> eval;
};

const std::vector<Claim>& claim_registry();

struct VerifyRunResult {
  std::vector<ClaimRecord> records;  // sorted by registry order
  int exit_code = 0;                 // 0 ok, 1 fail, 2 uncertified, 70 internal
};

VerifyRunResult run_verification(VerifyContext& ctx);

}  // namespace atlas
