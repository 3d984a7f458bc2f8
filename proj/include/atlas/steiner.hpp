#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlas/group_id.hpp"
#include "atlas/perm.hpp"

namespace atlas {

// Binary linear code of length <= 32, stored as generator-row bitmasks.
struct BinaryCode {
  uint32_t length = 0;
  std::vector<uint32_t> rows;  // basis, reduced row echelon form

  uint32_t dimension() const { return static_cast<uint32_t>(rows.size()); }
  std::vector<uint32_t> codewords() const;  // all 2^dim words
  bool self_dual() const;                   // pairwise even intersections + dim = length/2
};

// extended binary Golay code from the quadratic-residue circulant mod 23
// plus a parity column; throws ConstructionFailed unless the weight
// enumerator comes out as {0:1, 8:759, 12:2576, 16:759, 24:1}
BinaryCode golay_code();

std::map<uint32_t, uint64_t> weight_enumerator(const BinaryCode&);

struct SteinerSystem {
  uint32_t a = 0, b = 0, c = 0;               // S(a, b, c)
  std::vector<std::vector<uint8_t>> blocks;   // sorted point lists, sorted
  std::vector<uint32_t> block_masks;          // bitmask per block

  void rebuild_masks();
};

struct SteinerReport {
  bool ok = false;
  uint64_t subsets_checked = 0;
  uint64_t uncovered = 0;
  uint64_t multiply_covered = 0;
};

// exhaustive a-subset coverage count; requires C(c, a) <= 10^6
SteinerReport verify_steiner(const SteinerSystem&);

// blocks = supports of weight-8 codewords; verified S(5,8,24)
SteinerSystem octad_design(const BinaryCode&);

// point-derived design: S(a-1, b-1, c-1), re-verified
SteinerSystem derive(const SteinerSystem&, uint32_t point);

// PG(2,q) as S(2, q+1, q^2+q+1); q in {2, 4}
SteinerSystem projective_plane(uint32_t q);

// all point permutations mapping blocks to blocks, by backtrack with
// block-incidence pruning; every returned automorphism is re-verified
PermGroup design_automorphisms(const SteinerSystem&);

// explicit isomorphism between two designs, if any (same backtrack engine)
std::optional<std::vector<uint8_t>> design_isomorphism(const SteinerSystem&,
                                                       const SteinerSystem&);

// derived subgroup of Aut(S(3,6,22)): simple of order 443520, perfect,
// index 2; throws UnexpectedStructure on any mismatch
PermGroup mathieu_m22(const PermGroup& aut);

// orbit of a block (as a sorted point set) under a permutation group
std::vector<std::vector<uint8_t>> block_orbit(const PermGroup& g,
                                              const std::vector<uint8_t>& block);

// setwise stabilizer of a block, as an abstract group (order 5760 for M22)
GroupPtr hexad_stabilizer(const PermGroup& m22, const std::vector<uint8_t>& block);

struct BridgeReport {
  bool fingerprints_equal = false;
  bool both_perfect = false;
  bool minimal_normal_match = false;  // unique minimal normal Z2^4, quotient = A6, both sides
  bool module_signatures_equal = false;
  bool both_split = false;
  bool tier1_certified = false;
  uint64_t iso_verified_pairs = 0;
  std::string tier;  // "tier-1" or "tier-2-structural" or "uncertified"
};

// two-tier identification of the Clifford-side N2 with the hexad stabilizer
BridgeReport bridge_check(GroupPtr u6_clifford, GroupPtr u6_hexad, uint64_t iso_budget);

// file formats: header "a b c", then one block per line
void write_design(const SteinerSystem&, std::ostream&);
SteinerSystem read_design(std::istream&);
void write_codewords(const BinaryCode&, std::ostream&);  // 24-char bitstrings

}  // namespace atlas
