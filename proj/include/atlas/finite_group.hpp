#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "atlas/errors.hpp"
#include "atlas/matrix.hpp"

namespace atlas {

// Abstract finite group: indexed elements with multiplication / inverse
// oracles. Implementations are immutable after construction and safe for
// concurrent reads.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual uint32_t order() const = 0;
  virtual uint32_t mul(uint32_t a, uint32_t b) const = 0;
  virtual uint32_t inv(uint32_t a) const = 0;
  virtual uint32_t id() const = 0;

  // a known generating set, possibly empty when none was recorded
  virtual std::vector<uint32_t> generators() const { return {}; }
  virtual std::string label(uint32_t a) const { return std::to_string(a); }

  uint32_t conj(uint32_t g, uint32_t x) const { return mul(mul(g, x), inv(g)); }
  uint32_t commutator(uint32_t x, uint32_t y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup of a parent group: sorted member indices plus a flag vector for
// O(1) membership.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<uint32_t> members,
           std::vector<uint32_t> generating_seeds = {});

  const GroupPtr& parent() const { return parent_; }
  uint32_t order() const { return static_cast<uint32_t>(members_.size()); }
  const std::vector<uint32_t>& members() const { return members_; }
  const std::vector<uint32_t>& generating_seeds() const { return seeds_; }
  bool contains(uint32_t x) const { return flags_[x] != 0; }

  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const { return parent_ && order() == parent_->order(); }

  // exhaustive closure / inverse / identity verification
  bool verify_subgroup() const;
  bool is_normal() const;  // against parent generators (conjugation-closed)

  // serialization with a parent fingerprint header to prevent cross-group misuse
  void write(std::ostream&) const;
  static Subgroup read(std::istream&, GroupPtr parent);

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<uint32_t> members_;
  std::vector<uint32_t> seeds_;
  std::vector<uint8_t> flags_;
};

// deterministic fingerprint of a group handle (order + multiplication sample)
uint64_t group_fingerprint_hash(const FiniteGroup& g);

// materialized |G|^2 multiplication table; only for order <= 5000
GroupPtr make_table_group(GroupPtr g);
constexpr uint32_t kTableLimit = 5000;
// wraps in a table when small enough, otherwise returns the input
GroupPtr maybe_table(GroupPtr g);

// FiniteGroup view of a matrix group (shared storage)
GroupPtr as_finite_group(std::shared_ptr<const MatGroup> g);

// subgroup re-indexed as a standalone group; generators mapped to local
// indices (greedily computed when the subgroup records no seeds)
GroupPtr as_group(const Subgroup& s);
// translate a subgroup of the parent into local indices of `sub` (which must
// contain it); both must share the parent of `local`
Subgroup restrict_to(GroupPtr local_group, const Subgroup& sub);

// quotient handle support (see group_core quotient())
class QuotientGroup final : public FiniteGroup {
 public:
  QuotientGroup(GroupPtr parent, const Subgroup& n);

  uint32_t order() const override { return static_cast<uint32_t>(reps_.size()); }
  uint32_t mul(uint32_t a, uint32_t b) const override {
    return coset_of_[parent_->mul(reps_[a], reps_[b])];
  }
  uint32_t inv(uint32_t a) const override { return inv_[a]; }
  uint32_t id() const override { return id_; }
  std::vector<uint32_t> generators() const override { return gens_; }
  std::string label(uint32_t a) const override {
    return "coset(" + parent_->label(reps_[a]) + ")";
  }

  uint32_t coset_of(uint32_t parent_elem) const { return coset_of_[parent_elem]; }
  uint32_t representative(uint32_t coset) const { return reps_[coset]; }
  const GroupPtr& parent() const { return parent_; }

 private:
  GroupPtr parent_;
  std::vector<uint32_t> coset_of_;
  std::vector<uint32_t> reps_;  // least member index per coset
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> gens_;
  uint32_t id_ = 0;
};

// group defined by explicit oracles (reference constructions in tests)
GroupPtr make_oracle_group(uint32_t order,
                           std::function<uint32_t(uint32_t, uint32_t)> mul,
                           std::vector<uint32_t> gens = {});

// cyclic group of order n as a table
GroupPtr cyclic_group(uint32_t n);
// direct product (table when small)
GroupPtr direct_product(GroupPtr a, GroupPtr b);

// multiplicative order of an element
uint32_t element_order(const FiniteGroup& g, uint32_t x);
// known generators, or a greedy set (descending element order) when unknown
std::vector<uint32_t> ensure_generators(const FiniteGroup& g);

// group-axiom spot check: identity/inverse laws on all elements,
// associativity on `triples` deterministic triples; throws on violation
void spot_check_axioms(const FiniteGroup& g, uint32_t triples = 1000);

}  // namespace atlas
