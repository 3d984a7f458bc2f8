#include "atlas/group_core.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace atlas {

namespace {

std::vector<uint32_t> closure_elements(const FiniteGroup& g, const std::vector<uint32_t>& gens,
                                       std::vector<uint8_t>& seen, uint64_t limit = UINT64_MAX) {
  std::vector<uint32_t> elems;
  seen.assign(g.order(), 0);
  elems.push_back(g.id());
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
        if (elems.size() > limit) return elems;
      }
    }
  }
  return elems;
}

// incremental generator reduction: closing under a large seed set is done by
// adding only seeds not yet generated
Subgroup generated(GroupPtr g, const std::vector<uint32_t>& seeds) {
  std::vector<uint32_t> gens;
  std::vector<uint8_t> seen(g->order(), 0);
  seen[g->id()] = 1;
  std::vector<uint32_t> elems{g->id()};
  for (uint32_t s : seeds) {
    if (seen[s]) continue;
    gens.push_back(s);
    elems = closure_elements(*g, gens, seen);
  }
  return Subgroup(std::move(g), std::move(elems), std::move(gens));
}

uint64_t member_hash(const std::vector<uint32_t>& members) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint32_t m : members) {
    h ^= m;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Subgroup center(GroupPtr g) {
  auto gens = ensure_generators(*g);
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < g->order(); ++x) {
    bool central = true;
    for (uint32_t s : gens) {
      if (g->mul(x, s) != g->mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return Subgroup(std::move(g), std::move(members));
}

std::vector<std::vector<uint32_t>> conjugacy_classes(const FiniteGroup& g) {
  auto gens = ensure_generators(g);
  std::vector<uint8_t> seen(g.order(), 0);
  std::vector<std::vector<uint32_t>> classes;
  for (uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<uint32_t> orbit{x};
    seen[x] = 1;
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (uint32_t s : gens) {
        uint32_t y = g.conj(s, orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::shared_ptr<const QuotientGroup> quotient(GroupPtr g, const Subgroup& n) {
  if (n.parent().get() != g.get()) throw Error("quotient: subgroup of a different group");
  if (!n.is_normal()) throw NotNormal("quotient: subgroup is not normal");
  return std::make_shared<QuotientGroup>(std::move(g), n);
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<uint32_t>& seeds) {
  if (seeds.empty()) throw Error("subgroup_generated: empty seed set");
  return generated(std::move(g), seeds);
}

Subgroup normal_closure(GroupPtr g, const std::vector<uint32_t>& seeds) {
  auto ggens = ensure_generators(*g);
  std::vector<uint32_t> gens;
  std::vector<uint8_t> seen(g->order(), 0);
  seen[g->id()] = 1;
  std::vector<uint32_t> elems{g->id()};
  std::vector<uint32_t> pending = seeds;
  while (!pending.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t s : pending) {
      if (seen[s]) continue;
      gens.push_back(s);
      elems = closure_elements(*g, gens, seen);
    }
    // conjugates of the generating set must land inside; otherwise grow
    for (uint32_t x : gens)
      for (uint32_t s : ggens) {
        uint32_t c = g->conj(s, x);
        if (!seen[c]) next.push_back(c);
      }
    pending = std::move(next);
  }
  return Subgroup(std::move(g), std::move(elems), std::move(gens));
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) {
  auto classes = conjugacy_classes(*g);
  std::vector<Subgroup> found;
  std::unordered_set<uint64_t> seen_sets;
  auto add = [&](Subgroup s) {
    uint64_t h = member_hash(s.members());
    if (seen_sets.insert(h).second) {
      for (const auto& t : found)
        if (t.members() == s.members()) return false;  // hash collision guard
      found.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add(Subgroup(g, {g->id()}));
  // a subgroup generated by full conjugacy classes is normal
  for (const auto& cl : classes) add(generated(g, cl));
  // close under pairwise join
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = found.size();
    for (size_t i = 0; i < n && !changed; ++i)
      for (size_t j = i + 1; j < n && !changed; ++j) {
        std::vector<uint32_t> seeds = found[i].members();
        seeds.insert(seeds.end(), found[j].members().begin(), found[j].members().end());
        Subgroup join = generated(g, seeds);
        if (add(std::move(join))) changed = true;
      }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

Subgroup derived_subgroup(GroupPtr g) {
  auto gens = ensure_generators(*g);
  std::vector<uint32_t> comms;
  for (uint32_t x : gens)
    for (uint32_t y : gens) {
      uint32_t c = g->commutator(x, y);
      if (c != g->id()) comms.push_back(c);
    }
  if (comms.empty()) return Subgroup(std::move(g), {g->id()});
  return normal_closure(std::move(g), comms);
}

bool is_perfect(GroupPtr g) { return derived_subgroup(g).order() == g->order(); }

std::vector<uint64_t> derived_series_orders(GroupPtr g) {
  std::vector<uint64_t> orders{g->order()};
  GroupPtr cur = g;
  while (true) {
    Subgroup d = derived_subgroup(cur);
    if (d.order() == orders.back()) break;
    orders.push_back(d.order());
    if (d.order() == 1) break;
    cur = as_group(d);
  }
  return orders;
}

bool is_abelian(const FiniteGroup& g) {
  auto gens = ensure_generators(g);
  for (uint32_t a : gens)
    for (uint32_t b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<uint32_t> abelian_invariants(GroupPtr g) {
  if (!is_abelian(*g)) throw Error("abelian_invariants: group not abelian");
  std::vector<uint32_t> inv;
  GroupPtr cur = g;
  while (cur->order() > 1) {
    // in a finite abelian group an element of maximal order splits off
    uint32_t best = cur->id(), best_ord = 1;
    for (uint32_t x = 0; x < cur->order(); ++x) {
      uint32_t o = element_order(*cur, x);
      if (o > best_ord) {
        best_ord = o;
        best = x;
      }
    }
    inv.push_back(best_ord);
    Subgroup cyc = subgroup_generated(cur, {best});
    cur = quotient(cur, cyc);
  }
  return inv;
}

ComplementResult complement_search(GroupPtr g, const Subgroup& n, uint64_t budget) {
  ComplementResult res;
  auto q = quotient(g, n);  // verifies normality
  auto qgens = ensure_generators(*q);
  if (qgens.empty() || (qgens.size() == 1 && qgens[0] == q->id())) {
    // trivial quotient: the identity subgroup complements
    res.complement = Subgroup(g, {g->id()});
    res.exhausted = true;
    return res;
  }
  const uint64_t target = q->order();
  const size_t k = qgens.size();
  const auto& nm = n.members();
  std::vector<uint32_t> pre(k);
  for (size_t i = 0; i < k; ++i) pre[i] = q->representative(qgens[i]);

  std::vector<size_t> odo(k, 0);
  std::vector<uint8_t> seen;
  while (true) {
    if (res.attempts >= budget) return res;  // uncertified
    ++res.attempts;
    std::vector<uint32_t> cand(k);
    for (size_t i = 0; i < k; ++i) cand[i] = g->mul(nm[odo[i]], pre[i]);
    auto elems = closure_elements(*g, cand, seen, target);
    if (elems.size() == target) {
      bool trivial_meet = true;
      for (uint32_t x : elems)
        if (x != g->id() && n.contains(x)) {
          trivial_meet = false;
          break;
        }
      if (trivial_meet) {
        res.complement = Subgroup(g, std::move(elems), cand);
        return res;
      }
    }
    // advance odometer
    size_t pos = 0;
    while (pos < k && ++odo[pos] == nm.size()) {
      odo[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      res.exhausted = true;  // odometer wrapped: every correction tuple tried
      return res;
    }
  }
}

}  // namespace atlas
