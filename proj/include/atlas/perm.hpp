#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "atlas/finite_group.hpp"

namespace atlas {

// Permutations live on at most kMaxPermDegree points. Stabilizer-chain work
// stays at degree <= 24; the wider cap only gives the Pauli conjugation
// action room to be stored as permutations.
constexpr uint32_t kMaxPermDegree = 64;

class Perm {
 public:
  Perm() : deg_(0) {}
  explicit Perm(uint32_t degree) : deg_(degree) {
    if (degree > kMaxPermDegree) throw DegreeMismatch("Perm: degree too large");
    for (uint32_t i = 0; i < deg_; ++i) img_[i] = static_cast<uint8_t>(i);
  }
  static Perm from_images(const std::vector<uint32_t>& images);
  static Perm from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cycles);

  uint32_t degree() const { return deg_; }
  uint32_t apply(uint32_t x) const { return img_[x]; }
  uint32_t operator[](uint32_t x) const { return img_[x]; }

  // composition: (p * q)(x) = p(q(x)), q acts first
  friend Perm operator*(const Perm& p, const Perm& q) {
    Perm r(p.deg_);
    for (uint32_t i = 0; i < p.deg_; ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r(deg_);
    for (uint32_t i = 0; i < deg_; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  bool is_identity() const {
    for (uint32_t i = 0; i < deg_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    if (a.deg_ != b.deg_) return false;
    for (uint32_t i = 0; i < a.deg_; ++i)
      if (a.img_[i] != b.img_[i]) return false;
    return true;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {  // lexicographic on images
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (uint32_t i = 0; i < a.deg_; ++i)
      if (a.img_[i] != b.img_[i]) return a.img_[i] < b.img_[i];
    return false;
  }

  uint64_t hash64() const;
  std::string image_str() const;  // "p: 0->3 1->7 ..."
  std::string cycle_str() const;  // "(0 3)(1 7 2)" with fixed points omitted

  // raw byte access for flat storage
  const uint8_t* data() const { return img_.data(); }
  uint8_t* data() { return img_.data(); }
  void set(uint32_t i, uint32_t v) { img_[i] = static_cast<uint8_t>(v); }

 private:
  uint32_t deg_;
  std::array<uint8_t, kMaxPermDegree> img_{};
};

// Permutation group given by generators; a deterministic stabilizer chain
// (ascending base-point policy) is built on first use and answers order and
// membership queries.
class PermGroup {
 public:
  PermGroup(uint32_t degree, std::vector<Perm> generators);

  // builds a group from an explicit element list (must be closed); the
  // stored generators are the sifted non-members encountered
  static PermGroup from_elements(uint32_t degree, const std::vector<Perm>& elements);

  uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  uint64_t order() const;
  bool contains(const Perm& p) const;  // throws DegreeMismatch

  // all elements, deterministic order; throws TooLarge above 10^7
  std::vector<Perm> enumerate() const;

  // setwise stabilizer, computed by filtering the full enumeration
  PermGroup set_stabilizer(const std::vector<uint32_t>& points) const;

  PermGroup derived_subgroup() const;

  std::vector<uint32_t> orbit(uint32_t point) const;

  const std::vector<uint32_t>& base() const;
  std::vector<uint64_t> transversal_sizes() const;

 private:
  struct Level {
    uint32_t base_point = 0;
    std::vector<Perm> gens;
    std::vector<uint32_t> orbit;             // discovery order
    std::vector<int32_t> pos;                // point -> orbit position or -1
    std::vector<Perm> transversal;           // transversal[pos](base_point) = orbit[pos]
  };
  struct Chain {
    std::vector<Level> levels;
    std::vector<uint32_t> base_points;
  };

  void ensure_chain() const;
  static void chain_insert(Chain& c, uint32_t degree, const Perm& p, size_t from_level);
  static std::pair<Perm, size_t> chain_sift(const Chain& c, const Perm& p);
  static void chain_rebuild_orbit(Level& lev, uint32_t degree);
  static void chain_verify(Chain& c, uint32_t degree);

  uint32_t degree_;
  std::vector<Perm> gens_;
  // chain built once under the (copy-shared) mutex, then immutable
  std::shared_ptr<std::mutex> chain_mutex_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<const Chain> chain_;
};

PermGroup symmetric_group(uint32_t n);
PermGroup alternating_group(uint32_t n);

// full enumeration with index-based oracles; throws TooLarge above 10^7.
// Elements are sorted lexicographically, so index 0 is the identity.
GroupPtr as_finite_group(const PermGroup& g);

// The same backend for an explicit closed element set (e.g. a homomorphic
// image collected elsewhere). Closure is the caller's contract; identity
// membership and inverse-closure are verified.
GroupPtr finite_group_from_perms(std::vector<Perm> elements, const std::vector<Perm>& gens);

// index of an element in a finite_group_from_perms/as_finite_group handle
std::optional<uint32_t> perm_index_in(const GroupPtr& g, const Perm& p);
// the permutation stored at an index of such a handle
const Perm& perm_at(const GroupPtr& g, uint32_t index);

struct ActionResult {
  PermGroup image;
  Subgroup kernel;
  std::vector<Perm> element_perms;  // one permutation per group element
  uint64_t image_order = 0;
};

// permutation image and exact kernel of a group action; checks that each
// element acts bijectively, spot-checks the homomorphism property on 1000
// deterministic pairs, and enforces |image| * |kernel| = |G|
ActionResult action_homomorphism(GroupPtr g,
                                 const std::function<uint32_t(uint32_t, uint32_t)>& action,
                                 uint32_t degree);

}  // namespace atlas
