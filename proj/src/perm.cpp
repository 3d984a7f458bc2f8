#include "atlas/perm.hpp"

#include <algorithm>
#include <unordered_map>

namespace atlas {

Perm Perm::from_images(const std::vector<uint32_t>& images) {
  Perm p(static_cast<uint32_t>(images.size()));
  std::vector<uint8_t> seen(images.size(), 0);
  for (uint32_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || seen[images[i]])
      throw Error("Perm::from_images: not a bijection");
    seen[images[i]] = 1;
    p.img_[i] = static_cast<uint8_t>(images[i]);
  }
  return p;
}

Perm Perm::from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t from = cyc[i];
      uint32_t to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw Error("Perm::from_cycles: point out of range");
      p.img_[from] = static_cast<uint8_t>(to);
    }
  }
  // validate bijection
  std::vector<uint8_t> seen(degree, 0);
  for (uint32_t i = 0; i < degree; ++i) {
    if (seen[p.img_[i]]) throw Error("Perm::from_cycles: overlapping cycles");
    seen[p.img_[i]] = 1;
  }
  return p;
}

uint64_t Perm::hash64() const {
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ deg_;
  for (uint32_t i = 0; i < deg_; ++i) {
    h ^= img_[i];
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

std::string Perm::image_str() const {
  std::string s = "p:";
  for (uint32_t i = 0; i < deg_; ++i)
    s += " " + std::to_string(i) + "->" + std::to_string(img_[i]);
  return s;
}

std::string Perm::cycle_str() const {
  std::string s;
  std::vector<uint8_t> seen(deg_, 0);
  for (uint32_t i = 0; i < deg_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    uint32_t x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) s += " ";
      s += std::to_string(x);
      first = false;
      x = img_[x];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

PermGroup::PermGroup(uint32_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw DegreeMismatch("PermGroup: generator degree mismatch");
  gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                             [](const Perm& p) { return p.is_identity(); }),
              gens_.end());
}

void PermGroup::chain_rebuild_orbit(Level& lev, uint32_t degree) {
  lev.orbit.clear();
  lev.pos.assign(degree, -1);
  lev.transversal.clear();
  lev.orbit.push_back(lev.base_point);
  lev.pos[lev.base_point] = 0;
  lev.transversal.push_back(Perm(degree));
  for (size_t i = 0; i < lev.orbit.size(); ++i) {
    for (const Perm& g : lev.gens) {
      uint32_t q = g.apply(lev.orbit[i]);
      if (lev.pos[q] < 0) {
        lev.pos[q] = static_cast<int32_t>(lev.orbit.size());
        lev.orbit.push_back(q);
        lev.transversal.push_back(g * lev.transversal[i]);
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::chain_sift(const Chain& c, const Perm& p) {
  Perm r = p;
  for (size_t l = 0; l < c.levels.size(); ++l) {
    if (r.is_identity()) return {r, l};
    const Level& lev = c.levels[l];
    uint32_t x = r.apply(lev.base_point);
    if (x == lev.base_point) continue;
    if (lev.pos[x] < 0) return {r, l};
    r = lev.transversal[lev.pos[x]].inverse() * r;
  }
  return {r, c.levels.size()};
}

void PermGroup::chain_insert(Chain& c, uint32_t degree, const Perm& p, size_t) {
  auto [residue, level] = chain_sift(c, p);
  if (residue.is_identity()) return;
  if (level == c.levels.size()) {
    // new base point: smallest point moved by the residue
    uint32_t b = 0;
    while (residue.apply(b) == b) ++b;
    Level lev;
    lev.base_point = b;
    c.levels.push_back(lev);
    c.base_points.push_back(b);
  }
  c.levels[level].gens.push_back(residue);
  chain_rebuild_orbit(c.levels[level], degree);
  // Process Schreier generators of this level. Recursive inserts only touch
  // deeper levels but may reallocate the level vector, so re-index each time.
  for (size_t pos = 0; pos < c.levels[level].orbit.size(); ++pos) {
    for (size_t gi = 0; gi < c.levels[level].gens.size(); ++gi) {
      Perm sg;
      {
        const Level& lv = c.levels[level];
        sg = lv.transversal[lv.pos[lv.gens[gi].apply(lv.orbit[pos])]].inverse() *
             (lv.gens[gi] * lv.transversal[pos]);
      }
      if (!sg.is_identity()) chain_insert(c, degree, sg, level + 1);
    }
  }
}

void PermGroup::chain_verify(Chain& c, uint32_t degree) {
  // fixpoint pass: every Schreier generator of every level must sift to the
  // identity (Schreier's lemma certifies chain completeness)
  bool clean = false;
  while (!clean) {
    clean = true;
    for (size_t l = 0; l < c.levels.size(); ++l) {
      Level& lev = c.levels[l];
      for (size_t pos = 0; pos < lev.orbit.size() && clean; ++pos) {
        for (size_t gi = 0; gi < lev.gens.size() && clean; ++gi) {
          Perm sg = lev.transversal[lev.pos[lev.gens[gi].apply(lev.orbit[pos])]].inverse() *
                    (lev.gens[gi] * lev.transversal[pos]);
          auto [residue, rl] = chain_sift(c, sg);
          if (!residue.is_identity()) {
            chain_insert(c, degree, residue, rl);
            clean = false;
          }
        }
      }
      if (!clean) break;
    }
  }
}

void PermGroup::ensure_chain() const {
  std::lock_guard<std::mutex> lock(*chain_mutex_);
  if (chain_) return;
  auto c = std::make_shared<Chain>();
  for (const Perm& g : gens_) chain_insert(*c, degree_, g, 0);
  chain_verify(*c, degree_);
  chain_ = std::move(c);
}

uint64_t PermGroup::order() const {
  ensure_chain();
  uint64_t o = 1;
  for (const auto& lev : chain_->levels) o *= lev.orbit.size();
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DegreeMismatch("PermGroup::contains: degree mismatch");
  ensure_chain();
  auto [residue, level] = chain_sift(*chain_, p);
  return residue.is_identity();
}

const std::vector<uint32_t>& PermGroup::base() const {
  ensure_chain();
  return chain_->base_points;
}

std::vector<uint64_t> PermGroup::transversal_sizes() const {
  ensure_chain();
  std::vector<uint64_t> sizes;
  for (const auto& lev : chain_->levels) sizes.push_back(lev.orbit.size());
  return sizes;
}

std::vector<Perm> PermGroup::enumerate() const {
  if (order() > 10000000ull) throw TooLarge("PermGroup::enumerate: order above 10^7");
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(order()));
  // depth-first product of transversals, deterministic by orbit order
  std::vector<Perm> prefix{Perm(degree_)};
  std::function<void(size_t, const Perm&)> rec = [&](size_t level, const Perm& acc) {
    if (level == chain_->levels.size()) {
      out.push_back(acc);
      return;
    }
    for (const Perm& u : chain_->levels[level].transversal) rec(level + 1, acc * u);
  };
  rec(0, Perm(degree_));
  return out;
}

PermGroup PermGroup::from_elements(uint32_t degree, const std::vector<Perm>& elements) {
  PermGroup g(degree, {});
  auto c = std::make_shared<Chain>();
  std::vector<Perm> kept;
  for (const Perm& p : elements) {
    auto [residue, level] = chain_sift(*c, p);
    if (!residue.is_identity()) {
      chain_insert(*c, degree, p, 0);
      kept.push_back(p);
    }
  }
  chain_verify(*c, degree);
  g.gens_ = std::move(kept);
  g.chain_ = std::move(c);
  if (g.order() != elements.size())
    throw UnexpectedStructure("PermGroup::from_elements: element list is not a closed group");
  return g;
}

PermGroup PermGroup::set_stabilizer(const std::vector<uint32_t>& points) const {
  std::vector<uint8_t> in_set(degree_, 0);
  for (uint32_t p : points) {
    if (p >= degree_) throw Error("set_stabilizer: point out of range");
    in_set[p] = 1;
  }
  std::vector<Perm> stab;
  for (const Perm& g : enumerate()) {
    bool ok = true;
    for (uint32_t p : points)
      if (!in_set[g.apply(p)]) {
        ok = false;
        break;
      }
    if (ok) stab.push_back(g);
  }
  return from_elements(degree_, stab);
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> dgens;
  for (const Perm& a : gens_)
    for (const Perm& b : gens_) {
      Perm c = a.inverse() * (b.inverse() * (a * b));
      if (!c.is_identity()) dgens.push_back(c);
    }
  PermGroup d(degree_, dgens);
  // normal closure under conjugation by the original generators
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> add;
    for (const Perm& x : d.gens_)
      for (const Perm& g : gens_) {
        Perm c = g * (x * g.inverse());
        if (!d.contains(c)) add.push_back(c);
      }
    if (!add.empty()) {
      auto gen2 = d.gens_;
      gen2.insert(gen2.end(), add.begin(), add.end());
      d = PermGroup(degree_, gen2);
      grew = true;
    }
  }
  return d;
}

std::vector<uint32_t> PermGroup::orbit(uint32_t point) const {
  std::vector<uint32_t> orb{point};
  std::vector<uint8_t> seen(degree_, 0);
  seen[point] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      uint32_t q = g.apply(orb[i]);
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

PermGroup symmetric_group(uint32_t n) {
  if (n < 1 || n > 24) throw Error("symmetric_group: need 1 <= n <= 24");
  if (n == 1) return PermGroup(1, {});
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n > 2) {
    std::vector<uint32_t> cyc(n);
    for (uint32_t i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, gens);
}

PermGroup alternating_group(uint32_t n) {
  if (n < 3 || n > 24) throw Error("alternating_group: need 3 <= n <= 24");
  std::vector<Perm> gens;
  for (uint32_t i = 0; i + 2 < n; ++i) gens.push_back(Perm::from_cycles(n, {{i, i + 1, i + 2}}));
  return PermGroup(n, gens);
}

namespace {

// FiniteGroup over a flat, lexicographically sorted permutation store
class PermSetGroup final : public FiniteGroup {
 public:
  PermSetGroup(std::vector<Perm> elems, const std::vector<Perm>& gens)
      : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    if (!elems_.empty()) deg_ = elems_.front().degree();
    buckets_.reserve(elems_.size() * 2);
    for (uint32_t i = 0; i < elems_.size(); ++i) buckets_[elems_[i].hash64()].push_back(i);
    id_ = find(Perm(deg_));
    if (id_ == UINT32_MAX)
      throw UnexpectedStructure("PermSetGroup: identity missing from element set");
    inv_.resize(elems_.size());
    for (uint32_t i = 0; i < elems_.size(); ++i) {
      uint32_t j = find(elems_[i].inverse());
      if (j == UINT32_MAX) throw UnexpectedStructure("PermSetGroup: not inverse-closed");
      inv_[i] = j;
    }
    for (const Perm& g : gens) {
      uint32_t j = find(g);
      if (j == UINT32_MAX) throw UnexpectedStructure("PermSetGroup: generator outside set");
      if (j != id_ && std::find(gens_.begin(), gens_.end(), j) == gens_.end()) gens_.push_back(j);
    }
  }

  uint32_t order() const override { return static_cast<uint32_t>(elems_.size()); }
  uint32_t mul(uint32_t a, uint32_t b) const override {
    uint32_t r = find(elems_[a] * elems_[b]);
    if (r == UINT32_MAX) throw UnexpectedStructure("PermSetGroup: product escaped the set");
    return r;
  }
  uint32_t inv(uint32_t a) const override { return inv_[a]; }
  uint32_t id() const override { return id_; }
  std::vector<uint32_t> generators() const override { return gens_; }
  std::string label(uint32_t a) const override { return elems_[a].cycle_str(); }

  uint32_t find(const Perm& p) const {
    auto it = buckets_.find(p.hash64());
    if (it == buckets_.end()) return UINT32_MAX;
    for (uint32_t i : it->second)
      if (elems_[i] == p) return i;
    return UINT32_MAX;
  }
  const Perm& perm(uint32_t i) const { return elems_[i]; }

 private:
  std::vector<Perm> elems_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> gens_;
  uint32_t deg_ = 0;
  uint32_t id_ = UINT32_MAX;
};

}  // namespace

GroupPtr as_finite_group(const PermGroup& g) {
  auto elems = g.enumerate();  // TooLarge above 10^7
  auto fg = std::make_shared<PermSetGroup>(std::move(elems), g.generators());
  if (fg->order() <= kTableLimit) return make_table_group(fg);
  return fg;
}

GroupPtr finite_group_from_perms(std::vector<Perm> elements, const std::vector<Perm>& gens) {
  return std::make_shared<PermSetGroup>(std::move(elements), gens);
}

std::optional<uint32_t> perm_index_in(const GroupPtr& g, const Perm& p) {
  auto ps = std::dynamic_pointer_cast<const PermSetGroup>(g);
  if (!ps) throw Error("perm_index_in: not a permutation-backed group");
  uint32_t i = ps->find(p);
  if (i == UINT32_MAX) return std::nullopt;
  return i;
}

const Perm& perm_at(const GroupPtr& g, uint32_t index) {
  auto ps = std::dynamic_pointer_cast<const PermSetGroup>(g);
  if (!ps) throw Error("perm_at: not a permutation-backed group");
  return ps->perm(index);
}

ActionResult action_homomorphism(GroupPtr g,
                                 const std::function<uint32_t(uint32_t, uint32_t)>& action,
                                 uint32_t degree) {
  const uint32_t n = g->order();
  std::vector<Perm> perms(n);
  std::vector<uint8_t> hit(degree);
  for (uint32_t e = 0; e < n; ++e) {
    Perm p(degree);
    std::fill(hit.begin(), hit.end(), 0);
    for (uint32_t pt = 0; pt < degree; ++pt) {
      uint32_t q = action(e, pt);
      if (q >= degree || hit[q])
        throw ActionInconsistent("action_homomorphism: element does not act bijectively");
      hit[q] = 1;
      p.set(pt, q);
    }
    perms[e] = p;
  }
  // spot-check the homomorphism property on deterministic pairs
  uint64_t state = 0x853c49e6748fea9bULL;
  for (int t = 0; t < 1000; ++t) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint32_t a = static_cast<uint32_t>((state >> 33) % n);
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint32_t b = static_cast<uint32_t>((state >> 33) % n);
    if (perms[g->mul(a, b)] != perms[a] * perms[b])
      throw ActionInconsistent("action_homomorphism: action is not a homomorphism");
  }
  std::vector<uint32_t> kernel;
  for (uint32_t e = 0; e < n; ++e)
    if (perms[e].is_identity()) kernel.push_back(e);
  // image via distinct permutations
  std::vector<Perm> distinct = perms;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  uint64_t image_order = distinct.size();
  if (image_order * kernel.size() != n)
    throw ActionInconsistent("action_homomorphism: |image| * |kernel| != |G|");
  std::vector<Perm> image_gens;
  auto gens = ensure_generators(*g);
  for (uint32_t gi : gens)
    if (!perms[gi].is_identity()) image_gens.push_back(perms[gi]);
  PermGroup image(degree, image_gens);
  if (image.order() != image_order)
    throw ActionInconsistent("action_homomorphism: generator image order mismatch");
  ActionResult res{std::move(image), Subgroup(g, std::move(kernel)), std::move(perms),
                   image_order};
  return res;
}

}  // namespace atlas
