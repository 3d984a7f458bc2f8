#include "atlas/group_id.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "atlas/perm.hpp"

namespace atlas {

namespace {

struct ClassData {
  std::vector<std::vector<uint32_t>> classes;
  std::vector<uint32_t> class_of;       // element -> class index
  std::vector<uint32_t> element_order;  // element -> multiplicative order
  std::vector<std::string> signature;   // class -> invariant string
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d;
  d.classes = conjugacy_classes(g);
  d.class_of.assign(g.order(), 0);
  for (uint32_t c = 0; c < d.classes.size(); ++c)
    for (uint32_t x : d.classes[c]) d.class_of[x] = c;
  d.element_order.resize(g.order());
  for (uint32_t x = 0; x < g.order(); ++x) d.element_order[x] = element_order(g, x);
  d.signature.resize(d.classes.size());
  for (uint32_t c = 0; c < d.classes.size(); ++c) {
    uint32_t rep = d.classes[c].front();
    std::ostringstream os;
    os << "o" << d.element_order[rep] << ":s" << d.classes[c].size();
    // class invariants of power maps: (order, size) of the target class
    for (uint32_t p : {2u, 3u, 5u}) {
      uint32_t y = rep;
      for (uint32_t i = 1; i < p; ++i) y = g.mul(y, rep);
      uint32_t tc = d.class_of[y];
      os << ":p" << p << "o" << d.element_order[d.classes[tc].front()] << "s"
         << d.classes[tc].size();
    }
    d.signature[c] = os.str();
  }
  return d;
}

// BFS scaffold over the Cayley graph of g w.r.t. gens: assigning images of
// the generators determines images of every element, with every edge either
// defining or checking a value
struct Scaffold {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> bfs_order;  // id first
  std::vector<uint32_t> edges;      // |G| x k: edges[x*k+j] = mul(x, gens[j])
  uint32_t k = 0;
};

Scaffold build_scaffold(const FiniteGroup& g, const std::vector<uint32_t>& gens) {
  Scaffold s;
  s.gens = gens;
  s.k = static_cast<uint32_t>(gens.size());
  const uint32_t n = g.order();
  s.edges.assign(size_t(n) * s.k, 0);
  std::vector<uint8_t> seen(n, 0);
  s.bfs_order.push_back(g.id());
  seen[g.id()] = 1;
  for (size_t i = 0; i < s.bfs_order.size(); ++i) {
    uint32_t x = s.bfs_order[i];
    for (uint32_t j = 0; j < s.k; ++j) {
      uint32_t y = g.mul(x, gens[j]);
      s.edges[size_t(x) * s.k + j] = y;
      if (!seen[y]) {
        seen[y] = 1;
        s.bfs_order.push_back(y);
      }
    }
  }
  if (s.bfs_order.size() != n)
    throw Error("build_scaffold: generators do not generate the group");
  return s;
}

// extends generator images to a full map; empty on contradiction.
// On success the map respects every Cayley edge, which forces it to be a
// homomorphism, and distinct-image counting makes it bijective.
bool try_extend(const Scaffold& s, const FiniteGroup& h, const std::vector<uint32_t>& timg,
                std::vector<uint32_t>& img, std::vector<uint8_t>& scratch) {
  const uint32_t unset = UINT32_MAX;
  img.assign(s.bfs_order.size(), unset);
  // img indexed by g element id; g and h have equal order here
  img[s.bfs_order.front()] = h.id();
  for (uint32_t x : s.bfs_order) {
    uint32_t ix = img[x];
    for (uint32_t j = 0; j < s.k; ++j) {
      uint32_t y = s.edges[size_t(x) * s.k + j];
      uint32_t w = h.mul(ix, timg[j]);
      if (img[y] == unset) {
        img[y] = w;
      } else if (img[y] != w) {
        return false;
      }
    }
  }
  // bijectivity
  scratch.assign(img.size(), 0);
  for (uint32_t v : img) {
    if (scratch[v]) return false;
    scratch[v] = 1;
  }
  return true;
}

// orders of a few short words in the candidate images must match the words
// in the generators (cheap sound pre-filter)
bool word_signature_ok(size_t k, const FiniteGroup& h, const std::vector<uint32_t>& timg,
                       const std::vector<uint32_t>& word_orders) {
  size_t w = 0;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      uint32_t ab = h.mul(timg[i], timg[j]);
      if (element_order(h, ab) != word_orders[w++]) return false;
      if (element_order(h, h.mul(ab, timg[j])) != word_orders[w++]) return false;
    }
  return true;
}

std::vector<uint32_t> word_orders_of(const FiniteGroup& g, const std::vector<uint32_t>& gens) {
  std::vector<uint32_t> out;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      uint32_t ab = g.mul(gens[i], gens[j]);
      out.push_back(element_order(g, ab));
      out.push_back(element_order(g, g.mul(ab, gens[j])));
    }
  return out;
}

// candidate image lists per generator: members of h-classes whose invariant
// signature matches the generator's class
std::vector<std::vector<uint32_t>> candidate_images(const ClassData& cg,
                                                    const std::vector<uint32_t>& gens,
                                                    const ClassData& ch) {
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t gen : gens) {
    const std::string& sig = cg.signature[cg.class_of[gen]];
    std::vector<uint32_t> cand;
    for (uint32_t c = 0; c < ch.classes.size(); ++c)
      if (ch.signature[c] == sig)
        cand.insert(cand.end(), ch.classes[c].begin(), ch.classes[c].end());
    std::sort(cand.begin(), cand.end());
    out.push_back(std::move(cand));
  }
  return out;
}

// iterates candidate tuples in deterministic order; returns count of
// successful extensions, invoking sink on each; stops early when sink
// returns false; sets budget_hit when the extension budget ran out
uint64_t backtrack_images(const FiniteGroup& g, const std::vector<uint32_t>& gens,
                          const FiniteGroup& h, const ClassData& cg, const ClassData& ch,
                          uint64_t budget, bool& budget_hit,
                          const std::function<bool(const std::vector<uint32_t>&,
                                                   const std::vector<uint32_t>&)>& sink) {
  budget_hit = false;
  auto cands = candidate_images(cg, gens, ch);
  for (const auto& c : cands)
    if (c.empty()) return 0;
  Scaffold s = build_scaffold(g, gens);
  auto worders = word_orders_of(g, gens);
  const size_t k = gens.size();
  std::vector<size_t> pos(k, 0);
  std::vector<uint32_t> timg(k);
  std::vector<uint32_t> img;
  std::vector<uint8_t> scratch;
  uint64_t found = 0, tried = 0;
  while (true) {
    for (size_t i = 0; i < k; ++i) timg[i] = cands[i][pos[i]];
    if (word_signature_ok(k, h, timg, worders)) {
      if (++tried > budget) {
        budget_hit = true;
        return found;
      }
      if (try_extend(s, h, timg, img, scratch)) {
        ++found;
        if (!sink(timg, img)) return found;
      }
    }
    size_t i = 0;
    while (i < k && ++pos[i] == cands[i].size()) {
      pos[i] = 0;
      ++i;
    }
    if (i == k) return found;
  }
}

}  // namespace

std::string Fingerprint::canonical_text() const {
  std::ostringstream os;
  os << "order " << order << "\n";
  os << "element-orders";
  for (auto& [o, c] : element_order_histogram) os << " " << o << ":" << c;
  os << "\nclass-sizes";
  for (auto s : class_sizes) os << " " << s;
  os << "\nclass-signatures";
  for (auto& s : class_signatures) os << " " << s;
  os << "\nabelianization";
  for (auto v : abelianization) os << " " << v;
  os << "\nderived-series";
  for (auto v : derived_series) os << " " << v;
  os << "\ncenter " << center_order << "\n";
  return os.str();
}

Fingerprint fingerprint(GroupPtr g) {
  if (g->order() > 1000000u) throw TooLarge("fingerprint: order above 10^6");
  Fingerprint f;
  f.order = g->order();
  auto d = class_data(*g);
  std::map<uint32_t, uint64_t> hist;
  for (uint32_t o : d.element_order) ++hist[o];
  f.element_order_histogram.assign(hist.begin(), hist.end());
  for (const auto& c : d.classes) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  f.class_signatures = d.signature;
  std::sort(f.class_signatures.begin(), f.class_signatures.end());
  f.derived_series = derived_series_orders(g);
  Subgroup derived = derived_subgroup(g);
  GroupPtr ab = quotient(g, derived);
  f.abelianization = abelian_invariants(ab);
  f.center_order = center(g).order();
  return f;
}

bool verify_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                        const std::vector<uint32_t>& image, uint64_t& pairs_checked,
                        bool& exhaustive) {
  const uint32_t n = g.order();
  if (h.order() != n || image.size() != n) return false;
  std::vector<uint8_t> seen(n, 0);
  for (uint32_t v : image) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  pairs_checked = 0;
  exhaustive = n <= 10000;
  if (exhaustive) {
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y) {
        if (image[g.mul(x, y)] != h.mul(image[x], image[y])) return false;
        ++pairs_checked;
      }
  } else {
    uint64_t state = 0x6c078965ULL;
    for (uint32_t t = 0; t < 1000; ++t) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      uint32_t x = static_cast<uint32_t>((state >> 33) % n);
      for (uint32_t u = 0; u < 1000; ++u) {
        uint32_t y = static_cast<uint32_t>((uint64_t(x) * 2654435761u + u * 40503u) % n);
        if (image[g.mul(x, y)] != h.mul(image[x], image[y])) return false;
        ++pairs_checked;
      }
    }
  }
  return true;
}

IsoResult isomorphic(GroupPtr g, GroupPtr h, uint64_t budget) {
  IsoResult res;
  if (g->order() != h->order()) {
    res.status = IsoStatus::Refuted;
    res.detail = "orders differ";
    return res;
  }
  Fingerprint fg = fingerprint(g), fh = fingerprint(h);
  if (!(fg == fh)) {
    res.status = IsoStatus::Refuted;
    res.detail = "fingerprints differ";
    return res;
  }
  if (g->order() == 1) {
    res.status = IsoStatus::Certified;
    res.certificate = IsoCertificate{{g->id()}, 1, true};
    return res;
  }
  auto gens = ensure_generators(*g);
  auto cg = class_data(*g);
  auto ch = class_data(*h);
  bool budget_hit = false;
  std::optional<std::vector<uint32_t>> found_img;
  backtrack_images(*g, gens, *h, cg, ch, budget, budget_hit,
                   [&](const std::vector<uint32_t>&, const std::vector<uint32_t>& img) {
                     found_img = img;
                     return false;  // first hit suffices
                   });
  if (found_img) {
    IsoCertificate cert;
    cert.image = *found_img;
    if (!verify_isomorphism(*g, *h, cert.image, cert.verified_pairs, cert.exhaustive))
      throw UnexpectedStructure("isomorphic: certificate failed re-verification");
    res.status = IsoStatus::Certified;
    res.certificate = std::move(cert);
    return res;
  }
  res.status = IsoStatus::Inconclusive;
  res.detail = budget_hit ? "budget exhausted" : "no certificate found within candidate space";
  return res;
}

Recognition recognize(GroupPtr g, uint64_t budget) {
  Recognition r;
  const uint32_t n = g->order();
  if (n == 1) {
    r.kind = Recognition::Trivial;
    r.name = "trivial";
    return r;
  }
  uint32_t maxord = 0;
  for (uint32_t x = 0; x < n; ++x) maxord = std::max(maxord, element_order(*g, x));
  if (maxord == n) {
    r.kind = Recognition::Cyclic;
    r.parameter = n;
    r.name = "Z" + std::to_string(n);
    return r;
  }
  if (is_abelian(*g) && maxord == 2) {
    uint32_t k = 0;
    uint32_t m = n;
    while (m > 1 && m % 2 == 0) {
      m /= 2;
      ++k;
    }
    if (m == 1) {
      if (n == 4) {
        r.kind = Recognition::Klein;
        r.parameter = 2;
        r.name = "Z2xZ2";
      } else {
        r.kind = Recognition::ElementaryAbelian2;
        r.parameter = k;
        r.name = "Z2^" + std::to_string(k);
      }
      return r;
    }
  }
  static const uint32_t fact[7] = {1, 1, 2, 6, 24, 120, 720};
  for (uint32_t m = 3; m <= 6; ++m) {
    if (n == fact[m]) {
      auto iso = isomorphic(g, as_finite_group(symmetric_group(m)), budget);
      if (iso.status == IsoStatus::Certified) {
        r.kind = Recognition::Symmetric;
        r.parameter = m;
        r.name = "S" + std::to_string(m);
        return r;
      }
      if (iso.status == IsoStatus::Inconclusive) r.inconclusive_search = true;
    }
    if (m >= 4 && n == fact[m] / 2) {
      auto iso = isomorphic(g, as_finite_group(alternating_group(m)), budget);
      if (iso.status == IsoStatus::Certified) {
        r.kind = Recognition::Alternating;
        r.parameter = m;
        r.name = "A" + std::to_string(m);
        return r;
      }
      if (iso.status == IsoStatus::Inconclusive) r.inconclusive_search = true;
    }
  }
  return r;
}

std::optional<uint64_t> automorphism_count(GroupPtr g, uint64_t budget) {
  if (g->order() > 6000) throw TooLarge("automorphism_count: order above 6000");
  if (g->order() == 1) return 1;
  auto gens = ensure_generators(*g);
  auto cd = class_data(*g);
  bool budget_hit = false;
  uint64_t count = backtrack_images(*g, gens, *g, cd, cd, budget, budget_hit,
                                    [](const auto&, const auto&) { return true; });
  if (budget_hit) return std::nullopt;
  // inner automorphisms form a subgroup of everything counted
  uint64_t inner = g->order() / center(g).order();
  if (count % inner != 0)
    throw UnexpectedStructure("automorphism_count: |Inn| does not divide |Aut|");
  return count;
}

std::optional<OuterStructure> outer_structure(GroupPtr g, uint64_t budget) {
  if (g->order() > 6000) throw TooLarge("outer_structure: order above 6000");
  auto gens = ensure_generators(*g);
  const size_t k = gens.size();
  auto cd = class_data(*g);
  // gather all automorphisms as generator-image tuples
  std::vector<std::vector<uint32_t>> tuples;
  bool budget_hit = false;
  backtrack_images(*g, gens, *g, cd, cd, budget, budget_hit,
                   [&](const std::vector<uint32_t>& timg, const std::vector<uint32_t>&) {
                     tuples.push_back(timg);
                     return true;
                   });
  if (budget_hit) return std::nullopt;
  OuterStructure out;
  out.aut_order = tuples.size();
  Subgroup z = center(g);
  out.inner_order = g->order() / z.order();
  if (out.aut_order % out.inner_order != 0)
    throw UnexpectedStructure("outer_structure: |Inn| does not divide |Aut|");
  out.out_order = out.aut_order / out.inner_order;
  // inner tuple set
  auto tuple_key = [k](const std::vector<uint32_t>& t) {
    std::string s;
    for (size_t i = 0; i < k; ++i) {
      s.append(reinterpret_cast<const char*>(&t[i]), 4);
    }
    return s;
  };
  std::unordered_set<std::string> inner_set;
  for (uint32_t x = 0; x < g->order(); ++x) {
    std::vector<uint32_t> t(k);
    for (size_t i = 0; i < k; ++i) t[i] = g->conj(x, gens[i]);
    inner_set.insert(tuple_key(t));
  }
  if (inner_set.size() != out.inner_order)
    throw UnexpectedStructure("outer_structure: inner tuple count mismatch");
  switch (out.out_order) {
    case 1: out.out_name = "trivial"; break;
    case 2: out.out_name = "Z2"; break;
    case 3: out.out_name = "Z3"; break;
    case 4: {
      // Klein iff every outer coset squares into Inn (the square of a coset
      // is well-defined in Out, so testing one representative per coset is
      // enough). Cosets are swept: each chosen representative marks its
      // whole Inn-orbit as covered.
      Scaffold s = build_scaffold(*g, gens);
      std::vector<uint32_t> img;
      std::vector<uint8_t> scratch;
      bool all_squares_inner = true;
      std::unordered_set<std::string> covered = inner_set;
      for (const auto& t : tuples) {
        if (covered.count(tuple_key(t))) continue;
        for (uint32_t x = 0; x < g->order(); ++x) {
          std::vector<uint32_t> u(k);
          for (size_t i = 0; i < k; ++i) u[i] = g->conj(x, t[i]);
          covered.insert(tuple_key(u));
        }
        if (!try_extend(s, *g, t, img, scratch))
          throw UnexpectedStructure("outer_structure: stored automorphism failed to extend");
        std::vector<uint32_t> sq(k);
        for (size_t i = 0; i < k; ++i) sq[i] = img[t[i]];
        if (!inner_set.count(tuple_key(sq))) {
          all_squares_inner = false;
          break;
        }
      }
      out.out_name = all_squares_inner ? "Z2xZ2" : "Z4";
      break;
    }
    default: out.out_name = "order-" + std::to_string(out.out_order);
  }
  return out;
}

std::vector<uint32_t> module_orbit_signature(GroupPtr g, const Subgroup& n) {
  if (!n.is_normal()) throw NotNormal("module_orbit_signature: subgroup not normal");
  for (uint32_t x : n.members())
    if (x != g->id() && g->mul(x, x) != g->id())
      throw Error("module_orbit_signature: subgroup is not elementary abelian 2");
  auto gens = ensure_generators(*g);
  std::vector<uint32_t> lengths;
  std::set<uint32_t> unvisited(n.members().begin(), n.members().end());
  unvisited.erase(g->id());
  while (!unvisited.empty()) {
    uint32_t start = *unvisited.begin();
    std::vector<uint32_t> orbit{start};
    unvisited.erase(start);
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (uint32_t s : gens) {
        uint32_t y = g->conj(s, orbit[i]);
        if (unvisited.erase(y)) orbit.push_back(y);
      }
    }
    lengths.push_back(static_cast<uint32_t>(orbit.size()));
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace atlas
