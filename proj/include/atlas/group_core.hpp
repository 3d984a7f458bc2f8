#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "atlas/finite_group.hpp"

namespace atlas {

// elements commuting with everything (computed against a generating set)
Subgroup center(GroupPtr g);

// orbits of the conjugation action; classes ordered by least member,
// members ascending; sizes sum to the order
std::vector<std::vector<uint32_t>> conjugacy_classes(const FiniteGroup& g);

// coset group with least-index representatives; throws NotNormal
std::shared_ptr<const QuotientGroup> quotient(GroupPtr g, const Subgroup& n);

// least subgroup containing the seeds (breadth-first closure)
Subgroup subgroup_generated(GroupPtr g, const std::vector<uint32_t>& seeds);

// least normal subgroup containing the seeds
Subgroup normal_closure(GroupPtr g, const std::vector<uint32_t>& seeds);

// the complete normal subgroup list (including trivial and full), computed
// as joins of conjugacy-class closures; every normal subgroup is a union of
// classes and equals the join of those classes' closures, so the join
// fixpoint is exhaustive
std::vector<Subgroup> normal_subgroups(GroupPtr g);

Subgroup derived_subgroup(GroupPtr g);
bool is_perfect(GroupPtr g);

// successive derived subgroup orders until stable (starts with |G|)
std::vector<uint64_t> derived_series_orders(GroupPtr g);

// invariant factors of an abelian group, largest first; throws if not abelian
std::vector<uint32_t> abelian_invariants(GroupPtr g);
bool is_abelian(const FiniteGroup& g);

struct ComplementResult {
  std::optional<Subgroup> complement;
  bool exhausted = false;   // searched every candidate tuple
  uint64_t attempts = 0;
};

// searches for k with k.order * n.order == g.order and trivial intersection.
// Correcting preimages of quotient generators by all elements of n finds a
// complement whenever one exists. NotFound (nullopt) with exhausted=false is
// only "uncertified", never a proof of non-splitness.
ComplementResult complement_search(GroupPtr g, const Subgroup& n, uint64_t budget);

}  // namespace atlas
