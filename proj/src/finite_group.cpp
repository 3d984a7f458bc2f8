#include "atlas/finite_group.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace atlas {

namespace {

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// closure of `seeds` under right multiplication (semigroup closure equals
// subgroup closure in a finite group)
std::vector<uint32_t> bfs_closure(const FiniteGroup& g, const std::vector<uint32_t>& gens,
                                  std::vector<uint8_t>& seen) {
  std::vector<uint32_t> elems;
  elems.push_back(g.id());
  seen.assign(g.order(), 0);
  seen[g.id()] = 1;
  for (uint32_t x : gens) {
    if (!seen[x]) {
      seen[x] = 1;
      elems.push_back(x);
    }
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (uint32_t s : gens) {
      uint32_t p = g.mul(elems[i], s);
      if (!seen[p]) {
        seen[p] = 1;
        elems.push_back(p);
      }
    }
  }
  return elems;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<uint32_t> members,
                   std::vector<uint32_t> generating_seeds)
    : parent_(std::move(parent)), members_(std::move(members)), seeds_(std::move(generating_seeds)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  flags_.assign(parent_->order(), 0);
  for (uint32_t m : members_) flags_[m] = 1;
}

bool Subgroup::verify_subgroup() const {
  if (!contains(parent_->id())) return false;
  for (uint32_t x : members_) {
    if (!contains(parent_->inv(x))) return false;
    for (uint32_t y : members_)
      if (!contains(parent_->mul(x, y))) return false;
  }
  return true;
}

bool Subgroup::is_normal() const {
  for (uint32_t ggen : ensure_generators(*parent_)) {
    for (uint32_t x : members_)
      if (!contains(parent_->conj(ggen, x))) return false;
  }
  return true;
}

void Subgroup::write(std::ostream& out) const {
  out << "subgroup parent " << group_fingerprint_hash(*parent_) << " order " << order() << "\n";
  for (uint32_t m : members_) out << m << "\n";
}

Subgroup Subgroup::read(std::istream& in, GroupPtr parent) {
  std::string word;
  uint64_t fp = 0;
  uint32_t count = 0;
  if (!(in >> word) || word != "subgroup") throw IoError("Subgroup::read: bad header");
  in >> word >> fp >> word >> count;
  if (fp != group_fingerprint_hash(*parent))
    throw IoError("Subgroup::read: parent fingerprint mismatch");
  std::vector<uint32_t> members(count);
  for (auto& m : members)
    if (!(in >> m)) throw IoError("Subgroup::read: short member list");
  return Subgroup(std::move(parent), std::move(members));
}

uint64_t group_fingerprint_hash(const FiniteGroup& g) {
  uint64_t h = mix64(0x5851f42d4c957f2dULL ^ g.order());
  h ^= mix64(g.id());
  uint32_t n = g.order();
  uint32_t step = n <= 50 ? 1 : n / 50;
  for (uint32_t i = 0; i < n; i += step)
    for (uint32_t j = 0; j < n; j += step) h = mix64(h ^ g.mul(i, j));
  return h;
}

namespace {

class TableGroup final : public FiniteGroup {
 public:
  TableGroup(const FiniteGroup& g) : n_(g.order()), id_(g.id()), gens_(g.generators()) {
    table_.resize(size_t(n_) * n_);
    for (uint32_t a = 0; a < n_; ++a)
      for (uint32_t b = 0; b < n_; ++b) table_[size_t(a) * n_ + b] = static_cast<uint16_t>(g.mul(a, b));
    inv_.resize(n_);
    for (uint32_t a = 0; a < n_; ++a) inv_[a] = static_cast<uint16_t>(g.inv(a));
  }

  uint32_t order() const override { return n_; }
  uint32_t mul(uint32_t a, uint32_t b) const override { return table_[size_t(a) * n_ + b]; }
  uint32_t inv(uint32_t a) const override { return inv_[a]; }
  uint32_t id() const override { return id_; }
  std::vector<uint32_t> generators() const override { return gens_; }

 private:
  uint32_t n_;
  uint32_t id_;
  std::vector<uint32_t> gens_;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inv_;
};

class MatBackedGroup final : public FiniteGroup {
 public:
  explicit MatBackedGroup(std::shared_ptr<const MatGroup> g) : g_(std::move(g)) {}

  uint32_t order() const override { return g_->order(); }
  uint32_t mul(uint32_t a, uint32_t b) const override { return g_->mul_index(a, b); }
  uint32_t inv(uint32_t a) const override { return g_->inv_index(a); }
  uint32_t id() const override { return g_->identity_index(); }
  std::vector<uint32_t> generators() const override { return g_->generator_indices(); }
  std::string label(uint32_t a) const override { return "m" + std::to_string(a); }

 private:
  std::shared_ptr<const MatGroup> g_;
};

class SubgroupGroup final : public FiniteGroup {
 public:
  SubgroupGroup(GroupPtr parent, std::vector<uint32_t> members, std::vector<uint32_t> local_gens)
      : parent_(std::move(parent)), members_(std::move(members)), gens_(std::move(local_gens)) {
    local_.assign(parent_->order(), UINT32_MAX);
    for (uint32_t i = 0; i < members_.size(); ++i) local_[members_[i]] = i;
    id_ = local_[parent_->id()];
    inv_.resize(members_.size());
    for (uint32_t i = 0; i < members_.size(); ++i) {
      uint32_t pi = local_[parent_->inv(members_[i])];
      if (pi == UINT32_MAX) throw UnexpectedStructure("SubgroupGroup: not inverse-closed");
      inv_[i] = pi;
    }
  }

  uint32_t order() const override { return static_cast<uint32_t>(members_.size()); }
  uint32_t mul(uint32_t a, uint32_t b) const override {
    uint32_t p = local_[parent_->mul(members_[a], members_[b])];
    if (p == UINT32_MAX) throw UnexpectedStructure("SubgroupGroup: not closed");
    return p;
  }
  uint32_t inv(uint32_t a) const override { return inv_[a]; }
  uint32_t id() const override { return id_; }
  std::vector<uint32_t> generators() const override { return gens_; }
  std::string label(uint32_t a) const override { return parent_->label(members_[a]); }

  const std::vector<uint32_t>& members() const { return members_; }
  uint32_t to_local(uint32_t parent_idx) const { return local_[parent_idx]; }
  const GroupPtr& parent() const { return parent_; }

 private:
  GroupPtr parent_;
  std::vector<uint32_t> members_;
  std::vector<uint32_t> local_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> gens_;
  uint32_t id_ = 0;
};

class OracleGroup final : public FiniteGroup {
 public:
  OracleGroup(uint32_t order, std::function<uint32_t(uint32_t, uint32_t)> mul,
              std::vector<uint32_t> gens)
      : n_(order), mul_(std::move(mul)), gens_(std::move(gens)) {
    // identity: unique e with e*x == x for a probe x
    id_ = UINT32_MAX;
    for (uint32_t e = 0; e < n_; ++e) {
      if (mul_(e, 0) == 0 && mul_(0, e) == 0) {
        id_ = e;
        break;
      }
    }
    if (id_ == UINT32_MAX) throw Error("OracleGroup: no identity found");
    inv_.assign(n_, UINT32_MAX);
    for (uint32_t a = 0; a < n_; ++a) {
      for (uint32_t b = 0; b < n_; ++b)
        if (mul_(a, b) == id_) {
          inv_[a] = b;
          break;
        }
      if (inv_[a] == UINT32_MAX) throw Error("OracleGroup: missing inverse");
    }
  }

  uint32_t order() const override { return n_; }
  uint32_t mul(uint32_t a, uint32_t b) const override { return mul_(a, b); }
  uint32_t inv(uint32_t a) const override { return inv_[a]; }
  uint32_t id() const override { return id_; }
  std::vector<uint32_t> generators() const override { return gens_; }

 private:
  uint32_t n_;
  std::function<uint32_t(uint32_t, uint32_t)> mul_;
  std::vector<uint32_t> gens_;
  std::vector<uint32_t> inv_;
  uint32_t id_;
};

}  // namespace

GroupPtr make_table_group(GroupPtr g) {
  if (g->order() > kTableLimit) throw TooLarge("make_table_group: order > 5000");
  return std::make_shared<TableGroup>(*g);
}

GroupPtr maybe_table(GroupPtr g) {
  if (g->order() <= kTableLimit) return std::make_shared<TableGroup>(*g);
  return g;
}

GroupPtr as_finite_group(std::shared_ptr<const MatGroup> g) {
  return std::make_shared<MatBackedGroup>(std::move(g));
}

GroupPtr as_group(const Subgroup& s) {
  std::vector<uint32_t> local_gens;
  if (!s.generating_seeds().empty()) {
    for (uint32_t seed : s.generating_seeds()) {
      auto it = std::lower_bound(s.members().begin(), s.members().end(), seed);
      local_gens.push_back(static_cast<uint32_t>(it - s.members().begin()));
    }
  }
  auto grp = std::make_shared<SubgroupGroup>(s.parent(), s.members(), local_gens);
  if (local_gens.empty()) {
    // compute a greedy generating set in local indices and rebuild with it
    auto gens = ensure_generators(*grp);
    grp = std::make_shared<SubgroupGroup>(s.parent(), s.members(), gens);
  }
  return grp;
}

Subgroup restrict_to(GroupPtr local_group, const Subgroup& sub) {
  // table-wrapped subgroups lose the member map, so this works on indices:
  // local_group must be the as_group() result built from a Subgroup whose
  // member list is available through `sub.parent()` ordering.
  auto sg = std::dynamic_pointer_cast<const SubgroupGroup>(local_group);
  if (!sg) throw Error("restrict_to: group is not a subgroup view");
  std::vector<uint32_t> local;
  for (uint32_t m : sub.members()) {
    uint32_t l = sg->to_local(m);
    if (l == UINT32_MAX) throw Error("restrict_to: subgroup not contained in view");
    local.push_back(l);
  }
  return Subgroup(local_group, std::move(local));
}

GroupPtr make_oracle_group(uint32_t order, std::function<uint32_t(uint32_t, uint32_t)> mul,
                           std::vector<uint32_t> gens) {
  return std::make_shared<OracleGroup>(order, std::move(mul), std::move(gens));
}

GroupPtr cyclic_group(uint32_t n) {
  return maybe_table(make_oracle_group(
      n, [n](uint32_t a, uint32_t b) { return (a + b) % n; }, n > 1 ? std::vector<uint32_t>{1} : std::vector<uint32_t>{}));
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
  uint32_t nb = b->order();
  uint32_t n = a->order() * nb;
  GroupPtr pa = a, pb = b;
  std::vector<uint32_t> gens;
  for (uint32_t g : a->generators()) gens.push_back(g * nb + b->id());
  for (uint32_t g : b->generators()) gens.push_back(a->id() * nb + g);
  return maybe_table(make_oracle_group(
      n,
      [pa, pb, nb](uint32_t x, uint32_t y) {
        return pa->mul(x / nb, y / nb) * nb + pb->mul(x % nb, y % nb);
      },
      gens));
}

uint32_t element_order(const FiniteGroup& g, uint32_t x) {
  uint32_t e = g.id();
  uint32_t y = x;
  uint32_t k = 1;
  while (y != e) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

std::vector<uint32_t> ensure_generators(const FiniteGroup& g) {
  auto known = g.generators();
  if (!known.empty()) return known;
  const uint32_t n = g.order();
  std::vector<uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<uint32_t> orders(n);
  for (uint32_t i = 0; i < n; ++i) orders[i] = element_order(g, i);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    return orders[a] != orders[b] ? orders[a] > orders[b] : a < b;
  });
  std::vector<uint32_t> gens;
  std::vector<uint8_t> seen(n, 0);
  seen[g.id()] = 1;
  size_t covered = 1;
  for (uint32_t x : idx) {
    if (seen[x]) continue;
    gens.push_back(x);
    auto elems = bfs_closure(g, gens, seen);
    covered = elems.size();
    if (covered == n) break;
  }
  return gens;
}

void spot_check_axioms(const FiniteGroup& g, uint32_t triples) {
  const uint32_t n = g.order();
  const uint32_t e = g.id();
  for (uint32_t x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) throw UnexpectedStructure("identity law fails");
    if (g.mul(x, g.inv(x)) != e || g.mul(g.inv(x), x) != e)
      throw UnexpectedStructure("inverse law fails");
  }
  uint64_t state = 0x2545f4914f6cdd1dULL;
  for (uint32_t t = 0; t < triples; ++t) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint32_t a = static_cast<uint32_t>((state >> 33) % n);
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint32_t b = static_cast<uint32_t>((state >> 33) % n);
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint32_t c = static_cast<uint32_t>((state >> 33) % n);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw UnexpectedStructure("associativity fails");
  }
}

QuotientGroup::QuotientGroup(GroupPtr parent, const Subgroup& n) : parent_(std::move(parent)) {
  const uint32_t pn = parent_->order();
  coset_of_.assign(pn, UINT32_MAX);
  for (uint32_t i = 0; i < pn; ++i) {
    if (coset_of_[i] != UINT32_MAX) continue;
    uint32_t c = static_cast<uint32_t>(reps_.size());
    reps_.push_back(i);  // ascending scan makes this the least member
    for (uint32_t m : n.members()) coset_of_[parent_->mul(i, m)] = c;
  }
  id_ = coset_of_[parent_->id()];
  inv_.resize(reps_.size());
  for (uint32_t c = 0; c < reps_.size(); ++c) inv_[c] = coset_of_[parent_->inv(reps_[c])];
  for (uint32_t ggen : ensure_generators(*parent_)) {
    uint32_t img = coset_of_[ggen];
    if (img != id_ && std::find(gens_.begin(), gens_.end(), img) == gens_.end())
      gens_.push_back(img);
  }
  if (gens_.empty()) gens_.push_back(id_);
}

}  // namespace atlas
