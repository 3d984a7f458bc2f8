#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlas/finite_group.hpp"
#include "atlas/group_core.hpp"

namespace atlas {

// Isomorphism-invariant profile: a necessary condition used as a
// pre-filter. Equal fingerprints never prove isomorphism.
struct Fingerprint {
  uint64_t order = 0;
  std::vector<std::pair<uint32_t, uint64_t>> element_order_histogram;  // (order, count)
  std::vector<uint64_t> class_sizes;                                   // sorted
  std::vector<std::string> class_signatures;  // sorted per-class (order,size,power-map) strings
  std::vector<uint32_t> abelianization;       // invariant factors, largest first
  std::vector<uint64_t> derived_series;       // orders, |G| first
  uint64_t center_order = 0;

  bool operator==(const Fingerprint&) const = default;
  std::string canonical_text() const;
};

Fingerprint fingerprint(GroupPtr g);

struct IsoCertificate {
  std::vector<uint32_t> image;  // g index -> h index
  uint64_t verified_pairs = 0;  // re-verification volume
  bool exhaustive = false;      // all |G|^2 pairs checked (vs spot grid)
};

enum class IsoStatus { Certified, Refuted, Inconclusive };

struct IsoResult {
  IsoStatus status = IsoStatus::Inconclusive;
  std::optional<IsoCertificate> certificate;
  std::string detail;
};

// Refuted on fingerprint mismatch; otherwise generator-image backtrack with
// conjugacy-class pruning. A certificate is always independently
// re-verified (exhaustively for orders <= 10^4, spot grid above).
IsoResult isomorphic(GroupPtr g, GroupPtr h, uint64_t budget);

// independent certificate check: bijective + homomorphism
bool verify_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                        const std::vector<uint32_t>& image, uint64_t& pairs_checked,
                        bool& exhaustive);

struct Recognition {
  enum Kind {
    Trivial,
    Cyclic,
    Klein,
    ElementaryAbelian2,
    Symmetric,
    Alternating,
    Unknown
  } kind = Unknown;
  uint32_t parameter = 0;  // n for Z_n / S(n) / A(n), k for Z_2^k
  std::string name = "unknown";
  bool inconclusive_search = false;  // an internal isomorphism test ran out of budget
};

// tests in order: cyclic, Klein, elementary abelian 2-group, S(n)/A(n) for
// n <= 6 (certified against reference constructions)
Recognition recognize(GroupPtr g, uint64_t budget = 2000000);

// counts bijective homomorphisms g -> g by exhaustive generator-image
// backtrack (class-pruned); nullopt when the budget is exceeded
std::optional<uint64_t> automorphism_count(GroupPtr g, uint64_t budget);

struct OuterStructure {
  uint64_t aut_order = 0;
  uint64_t inner_order = 0;
  uint64_t out_order = 0;
  std::string out_name;  // "trivial", "Z2", "Z4", "Z2xZ2", or "order-k"
};

// Out(g) order and, for |Out| = 4, the Z4 / Klein distinction via squares
// of outer coset representatives
std::optional<OuterStructure> outer_structure(GroupPtr g, uint64_t budget);

// orbit lengths (sorted) of the conjugation action of g on the nonidentity
// elements of an elementary abelian normal subgroup
std::vector<uint32_t> module_orbit_signature(GroupPtr g, const Subgroup& n);

}  // namespace atlas
