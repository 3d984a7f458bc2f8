#include "atlas/steiner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "atlas/group_core.hpp"

namespace atlas {

namespace {

// quadratic residues mod 23
constexpr uint32_t kQr23[] = {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18};

// GF(2) row reduction to reduced echelon form; returns the basis
std::vector<uint32_t> row_reduce(std::vector<uint32_t> rows) {
  std::vector<uint32_t> basis;
  for (int bit = 31; bit >= 0; --bit) {
    uint32_t mask = uint32_t(1) << bit;
    size_t pivot = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i] & mask) {
        pivot = i;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    uint32_t p = rows[pivot];
    rows.erase(rows.begin() + static_cast<long>(pivot));
    for (auto& r : rows)
      if (r & mask) r ^= p;
    for (auto& r : basis)
      if (r & mask) r ^= p;
    basis.push_back(p);
  }
  return basis;
}

uint64_t binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<uint32_t> BinaryCode::codewords() const {
  std::vector<uint32_t> words(size_t(1) << rows.size(), 0);
  for (size_t m = 1; m < words.size(); ++m) {
    uint32_t low = static_cast<uint32_t>(std::countr_zero(m));
    words[m] = words[m ^ (size_t(1) << low)] ^ rows[low];
  }
  return words;
}

bool BinaryCode::self_dual() const {
  if (dimension() * 2 != length) return false;
  for (uint32_t r1 : rows)
    for (uint32_t r2 : rows)
      if (std::popcount(r1 & r2) % 2 != 0) return false;
  return true;
}

BinaryCode golay_code() {
  // 23 cyclic shifts of the residue indicator, parity bit at position 23
  std::vector<uint32_t> rows;
  for (uint32_t i = 0; i < 23; ++i) {
    uint32_t v = 0;
    for (uint32_t q : kQr23) v |= uint32_t(1) << ((q + i) % 23);
    v |= uint32_t(1) << 23;  // residue sets have odd weight 11
    rows.push_back(v);
  }
  BinaryCode code;
  code.length = 24;
  code.rows = row_reduce(rows);
  if (code.dimension() != 12)
    throw ConstructionFailed("golay_code: rank " + std::to_string(code.dimension()) + " != 12");
  auto we = weight_enumerator(code);
  std::map<uint32_t, uint64_t> expect{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  if (we != expect) throw ConstructionFailed("golay_code: wrong weight enumerator");
  if (!code.self_dual()) throw ConstructionFailed("golay_code: not self-dual");
  return code;
}

std::map<uint32_t, uint64_t> weight_enumerator(const BinaryCode& code) {
  std::map<uint32_t, uint64_t> we;
  for (uint32_t w : code.codewords()) ++we[static_cast<uint32_t>(std::popcount(w))];
  return we;
}

void SteinerSystem::rebuild_masks() {
  block_masks.clear();
  for (const auto& blk : blocks) {
    uint32_t m = 0;
    for (uint8_t p : blk) m |= uint32_t(1) << p;
    block_masks.push_back(m);
  }
}

SteinerReport verify_steiner(const SteinerSystem& s) {
  if (binomial(s.c, s.a) > 1000000ull)
    throw TooLarge("verify_steiner: C(c,a) above 10^6");
  SteinerReport rep;
  // enumerate a-subsets as bitmasks and count covering blocks
  std::vector<uint32_t> subset(s.a);
  for (uint32_t i = 0; i < s.a; ++i) subset[i] = i;
  while (true) {
    uint32_t mask = 0;
    for (uint32_t p : subset) mask |= uint32_t(1) << p;
    uint32_t cover = 0;
    for (uint32_t bm : s.block_masks)
      if ((bm & mask) == mask) ++cover;
    ++rep.subsets_checked;
    if (cover == 0) ++rep.uncovered;
    if (cover > 1) ++rep.multiply_covered;
    // next combination
    int i = static_cast<int>(s.a) - 1;
    while (i >= 0 && subset[i] == s.c - s.a + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (uint32_t j = i + 1; j < s.a; ++j) subset[j] = subset[j - 1] + 1;
  }
  rep.ok = rep.uncovered == 0 && rep.multiply_covered == 0;
  return rep;
}

SteinerSystem octad_design(const BinaryCode& code) {
  SteinerSystem s;
  s.a = 5;
  s.b = 8;
  s.c = 24;
  for (uint32_t w : code.codewords()) {
    if (std::popcount(w) != 8) continue;
    std::vector<uint8_t> blk;
    for (uint8_t p = 0; p < 24; ++p)
      if (w & (uint32_t(1) << p)) blk.push_back(p);
    s.blocks.push_back(blk);
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  s.rebuild_masks();
  if (!verify_steiner(s).ok) throw NotSteiner("octad_design: S(5,8,24) verification failed");
  return s;
}

SteinerSystem derive(const SteinerSystem& s, uint32_t point) {
  if (s.a < 2) throw Error("derive: a must be at least 2");
  SteinerSystem d;
  d.a = s.a - 1;
  d.b = s.b - 1;
  d.c = s.c - 1;
  for (const auto& blk : s.blocks) {
    if (std::find(blk.begin(), blk.end(), point) == blk.end()) continue;
    std::vector<uint8_t> nb;
    for (uint8_t p : blk) {
      if (p == point) continue;
      nb.push_back(p < point ? p : static_cast<uint8_t>(p - 1));
    }
    std::sort(nb.begin(), nb.end());
    d.blocks.push_back(nb);
  }
  std::sort(d.blocks.begin(), d.blocks.end());
  d.rebuild_masks();
  if (!verify_steiner(d).ok) throw NotSteiner("derive: derived design is not Steiner");
  return d;
}

namespace {

// GF(4) = {0, 1, w, w+1} encoded 0..3 with w^2 = w + 1
uint32_t gf4_mul(uint32_t x, uint32_t y) {
  static const uint8_t table[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[x][y];
}

}  // namespace

SteinerSystem projective_plane(uint32_t q) {
  if (q != 2 && q != 4) throw Error("projective_plane: q must be 2 or 4");
  auto add = [q](uint32_t x, uint32_t y) { return q == 2 ? (x ^ y) & 1u : x ^ y; };
  auto mul = [q](uint32_t x, uint32_t y) { return q == 2 ? x & y : gf4_mul(x, y); };
  // normalized projective points: first nonzero coordinate = 1
  std::vector<std::array<uint32_t, 3>> pts;
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y)
      for (uint32_t z = 0; z < q; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        uint32_t lead = x ? x : (y ? y : z);
        if (lead != 1) continue;
        pts.push_back({x, y, z});
      }
  SteinerSystem s;
  s.a = 2;
  s.b = q + 1;
  s.c = q * q + q + 1;
  if (pts.size() != s.c) throw UnexpectedStructure("projective_plane: wrong point count");
  for (const auto& l : pts) {  // lines are also normalized triples (dual)
    std::vector<uint8_t> blk;
    for (uint8_t i = 0; i < pts.size(); ++i) {
      uint32_t dot = add(add(mul(l[0], pts[i][0]), mul(l[1], pts[i][1])), mul(l[2], pts[i][2]));
      if (dot == 0) blk.push_back(i);
    }
    s.blocks.push_back(blk);
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  s.rebuild_masks();
  if (!verify_steiner(s).ok) throw NotSteiner("projective_plane: plane is not Steiner");
  return s;
}

namespace {

// Backtrack over point images with block-incidence pruning: once `a` points
// of a block are placed, the image block is forced and pins down every later
// point of that block. Used for isomorphisms between two designs and, with a
// fixed identity prefix, for stabilizer-transversal representatives.
class DesignBacktrack {
 public:
  DesignBacktrack(const SteinerSystem& from, const SteinerSystem& to) : from_(from), to_(to) {
    // a-subset mask -> target block index (unique by the Steiner property)
    for (uint32_t bi = 0; bi < to_.blocks.size(); ++bi) {
      const auto& blk = to_.blocks[bi];
      std::vector<uint32_t> sel(to_.a);
      for (uint32_t i = 0; i < to_.a; ++i) sel[i] = i;
      while (true) {
        uint32_t key = 0;
        for (uint32_t s : sel) key |= uint32_t(1) << blk[s];
        subset_block_[key] = bi;
        int i = static_cast<int>(to_.a) - 1;
        while (i >= 0 && sel[i] == blk.size() - to_.a + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (uint32_t j = i + 1; j < to_.a; ++j) sel[j] = sel[j - 1] + 1;
      }
      target_masks_.insert(to_.block_masks[bi]);
    }
    blocks_through_.assign(from_.c, {});
    for (uint32_t bi = 0; bi < from_.blocks.size(); ++bi)
      for (uint8_t p : from_.blocks[bi]) blocks_through_[p].push_back(bi);
    // assignment order: greedily maximize co-block contact with prior points
    std::vector<uint8_t> placed(from_.c, 0);
    for (uint32_t step = 0; step < from_.c; ++step) {
      uint32_t best = UINT32_MAX, best_score = 0;
      for (uint32_t p = 0; p < from_.c; ++p) {
        if (placed[p]) continue;
        uint32_t score = 0;
        for (uint32_t bi : blocks_through_[p]) {
          uint32_t have = 0;
          for (uint8_t q : from_.blocks[bi]) have += placed[q];
          score += have >= from_.a ? 100 : have;
        }
        if (best == UINT32_MAX || score > best_score) {
          best = p;
          best_score = score;
        }
      }
      order_.push_back(best);
      placed[best] = 1;
    }
  }

  const std::vector<uint32_t>& order() const { return order_; }

  // first isomorphism, no prefix constraint
  std::optional<Perm> first_solution() { return first_with_prefix(0, UINT32_MAX); }

  // first automorphism/isomorphism fixing order()[0..level-1] pointwise and
  // mapping order()[level] to `image` (UINT32_MAX = unconstrained level 0)
  std::optional<Perm> first_with_prefix(uint32_t level, uint32_t image) {
    img_.assign(from_.c, 255);
    used_.assign(to_.c, 0);
    found_.reset();
    uint32_t depth = 0;
    for (; depth < level; ++depth) {
      uint32_t p = order_[depth];
      if (!(candidate_mask(p) & (uint32_t(1) << p))) return std::nullopt;
      img_[p] = static_cast<uint8_t>(p);
      used_[p] = 1;
    }
    if (image != UINT32_MAX) {
      uint32_t p = order_[level];
      if (used_[image] || !(candidate_mask(p) & (uint32_t(1) << image))) return std::nullopt;
      img_[p] = static_cast<uint8_t>(image);
      used_[image] = 1;
      ++depth;
    }
    rec(depth);
    return found_;
  }

 private:
  // intersection of forced image blocks over all blocks through p that
  // already have >= a placed images; 0 bits exclude candidates
  uint32_t candidate_mask(uint32_t p) const {
    uint32_t cand = (uint32_t(1) << to_.c) - 1;
    for (uint32_t q = 0; q < to_.c; ++q)
      if (used_[q]) cand &= ~(uint32_t(1) << q);
    for (uint32_t bi : blocks_through_[p]) {
      uint32_t placed_mask = 0;
      uint32_t placed = 0;
      for (uint8_t r : from_.blocks[bi]) {
        if (r != p && img_[r] != 255) {
          placed_mask |= uint32_t(1) << img_[r];
          ++placed;
        }
      }
      if (placed < from_.a) continue;
      // forced target = block through the a lowest placed images
      uint32_t key = 0, taken = 0, m = placed_mask;
      while (taken < from_.a) {
        uint32_t low = m & (~m + 1);
        key |= low;
        m ^= low;
        ++taken;
      }
      auto it = subset_block_.find(key);
      if (it == subset_block_.end()) return 0;
      uint32_t tb = to_.block_masks[it->second];
      if (placed_mask & ~tb) return 0;  // placed images escape the block
      cand &= tb;
    }
    return cand;
  }

  bool full_check() const {
    for (uint32_t bi = 0; bi < from_.blocks.size(); ++bi) {
      uint32_t mapped = 0;
      for (uint8_t p : from_.blocks[bi]) mapped |= uint32_t(1) << img_[p];
      if (!target_masks_.count(mapped)) return false;
    }
    return true;
  }

  void rec(uint32_t depth) {
    if (found_) return;
    if (depth == from_.c) {
      if (full_check()) {
        std::vector<uint32_t> images(img_.begin(), img_.end());
        found_ = Perm::from_images(images);
      }
      return;
    }
    uint32_t p = order_[depth];
    uint32_t cand = candidate_mask(p);
    while (cand) {
      uint32_t q = static_cast<uint32_t>(std::countr_zero(cand));
      cand &= cand - 1;
      img_[p] = static_cast<uint8_t>(q);
      used_[q] = 1;
      rec(depth + 1);
      img_[p] = 255;
      used_[q] = 0;
      if (found_) return;
    }
  }

  const SteinerSystem& from_;
  const SteinerSystem& to_;
  std::unordered_map<uint32_t, uint32_t> subset_block_;
  std::set<uint32_t> target_masks_;
  std::vector<std::vector<uint32_t>> blocks_through_;
  std::vector<uint32_t> order_;
  std::vector<uint8_t> img_;
  std::vector<uint8_t> used_;
  std::optional<Perm> found_;
};

}  // namespace

PermGroup design_automorphisms(const SteinerSystem& s) {
  if (s.c > 24) throw TooLarge("design_automorphisms: more than 24 points");
  DesignBacktrack bt(s, s);
  // One representative per stabilizer level and base-point image generates
  // the whole automorphism group (standard transversal argument).
  std::vector<Perm> gens;
  for (uint32_t level = 0; level < s.c; ++level) {
    for (uint32_t q = 0; q < s.c; ++q) {
      auto rep = bt.first_with_prefix(level, q);
      if (rep && !rep->is_identity()) gens.push_back(*rep);
    }
  }
  PermGroup g(s.c, gens);
  // exhaustive re-verification: every element maps every block to a block
  std::set<uint32_t> masks(s.block_masks.begin(), s.block_masks.end());
  for (const Perm& e : g.enumerate()) {
    for (uint32_t bm : s.block_masks) {
      uint32_t mapped = 0;
      for (uint32_t m = bm; m;) {
        int p = std::countr_zero(m);
        m &= m - 1;
        mapped |= uint32_t(1) << e.apply(static_cast<uint32_t>(p));
      }
      if (!masks.count(mapped))
        throw UnexpectedStructure("design_automorphisms: element fails block check");
    }
  }
  return g;
}

std::optional<std::vector<uint8_t>> design_isomorphism(const SteinerSystem& s1,
                                                       const SteinerSystem& s2) {
  if (s1.a != s2.a || s1.b != s2.b || s1.c != s2.c || s1.blocks.size() != s2.blocks.size())
    return std::nullopt;
  DesignBacktrack bt(s1, s2);
  auto found = bt.first_solution();
  if (!found) return std::nullopt;
  std::vector<uint8_t> img(s1.c);
  for (uint32_t i = 0; i < s1.c; ++i) img[i] = static_cast<uint8_t>(found->apply(i));
  return img;
}

PermGroup mathieu_m22(const PermGroup& aut) {
  PermGroup d = aut.derived_subgroup();
  if (d.order() != 443520)
    throw UnexpectedStructure("mathieu_m22: derived subgroup order " +
                              std::to_string(d.order()) + " != 443520");
  if (aut.order() != 2 * d.order())
    throw UnexpectedStructure("mathieu_m22: index of M22 in Aut is not 2");
  PermGroup dd = d.derived_subgroup();
  if (dd.order() != d.order()) throw UnexpectedStructure("mathieu_m22: not perfect");
  return d;
}

std::vector<std::vector<uint8_t>> block_orbit(const PermGroup& g,
                                              const std::vector<uint8_t>& block) {
  std::set<std::vector<uint8_t>> seen;
  std::vector<std::vector<uint8_t>> orbit{block};
  seen.insert(block);
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& p : g.generators()) {
      std::vector<uint8_t> img;
      for (uint8_t pt : orbit[i]) img.push_back(static_cast<uint8_t>(p.apply(pt)));
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) orbit.push_back(img);
    }
  }
  return orbit;
}

GroupPtr hexad_stabilizer(const PermGroup& m22, const std::vector<uint8_t>& block) {
  std::vector<uint32_t> pts(block.begin(), block.end());
  PermGroup stab = m22.set_stabilizer(pts);
  return as_finite_group(stab);
}

BridgeReport bridge_check(GroupPtr u6_clifford, GroupPtr u6_hexad, uint64_t iso_budget) {
  BridgeReport rep;
  Fingerprint fc = fingerprint(u6_clifford);
  Fingerprint fh = fingerprint(u6_hexad);
  rep.fingerprints_equal = fc == fh;
  rep.both_perfect = is_perfect(u6_clifford) && is_perfect(u6_hexad);

  auto analyze = [](GroupPtr g, std::optional<Subgroup>& minimal, bool& quot_a6) {
    auto normals = normal_subgroups(g);
    // unique minimal nontrivial normal subgroup of order 16, elementary abelian
    std::optional<Subgroup> min16;
    uint32_t proper_min = UINT32_MAX;
    for (const auto& n : normals) {
      if (n.order() == 1 || n.order() == g->order()) continue;
      proper_min = std::min(proper_min, n.order());
    }
    for (const auto& n : normals)
      if (n.order() == proper_min && n.order() == 16) min16 = n;
    quot_a6 = false;
    if (min16 && recognize(as_group(*min16)).kind == Recognition::ElementaryAbelian2) {
      auto q = quotient(g, *min16);
      auto iso = isomorphic(maybe_table(q), as_finite_group(alternating_group(6)), 2000000);
      quot_a6 = iso.status == IsoStatus::Certified;
    }
    minimal = min16;
  };
  std::optional<Subgroup> nc, nh;
  bool qa6c = false, qa6h = false;
  analyze(u6_clifford, nc, qa6c);
  analyze(u6_hexad, nh, qa6h);
  rep.minimal_normal_match = nc && nh && qa6c && qa6h;
  if (nc && nh) {
    rep.module_signatures_equal =
        module_orbit_signature(u6_clifford, *nc) == module_orbit_signature(u6_hexad, *nh);
    auto compc = complement_search(u6_clifford, *nc, 1u << 20);
    auto comph = complement_search(u6_hexad, *nh, 1u << 20);
    rep.both_split = compc.complement.has_value() && comph.complement.has_value();
  }
  auto iso = isomorphic(u6_clifford, u6_hexad, iso_budget);
  if (iso.status == IsoStatus::Certified) {
    rep.tier1_certified = true;
    rep.iso_verified_pairs = iso.certificate->verified_pairs;
    rep.tier = "tier-1";
  } else if (rep.fingerprints_equal && rep.both_perfect && rep.minimal_normal_match &&
             rep.module_signatures_equal && rep.both_split) {
    rep.tier = "tier-2-structural";
  } else {
    rep.tier = "uncertified";
  }
  return rep;
}

void write_design(const SteinerSystem& s, std::ostream& out) {
  out << s.a << " " << s.b << " " << s.c << "\n";
  for (const auto& blk : s.blocks) {
    for (size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << uint32_t(blk[i]);
    out << "\n";
  }
}

SteinerSystem read_design(std::istream& in) {
  SteinerSystem s;
  if (!(in >> s.a >> s.b >> s.c)) throw IoError("read_design: bad header");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<uint8_t> blk;
    uint32_t p;
    while (ls >> p) blk.push_back(static_cast<uint8_t>(p));
    if (blk.size() != s.b) throw IoError("read_design: block size mismatch");
    s.blocks.push_back(blk);
  }
  s.rebuild_masks();
  return s;
}

void write_codewords(const BinaryCode& code, std::ostream& out) {
  for (uint32_t w : code.codewords()) {
    std::string bits(code.length, '0');
    for (uint32_t p = 0; p < code.length; ++p)
      if (w & (uint32_t(1) << p)) bits[p] = '1';
    out << bits << "\n";
  }
}

}  // namespace atlas
