#include "atlas/pauli_geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

const char* kFactorName[4] = {"I", "X", "Z", "Y"};  // indexed by (a<<1)|b per qubit

std::string point_label(uint8_t a, uint8_t b, uint32_t n) {
  std::string s;
  for (uint32_t q = 0; q < n; ++q) {
    uint32_t bit = n - 1 - q;  // leftmost factor = qubit 0
    s += kFactorName[(((a >> bit) & 1) << 1) | ((b >> bit) & 1)];
  }
  return s;
}

// maximal cliques of the commutation graph via recursive extension with
// an exclusion set (graphs here have at most 63 vertices)
void max_cliques(const std::vector<uint64_t>& adj, uint64_t r, uint64_t p, uint64_t x,
                 std::vector<std::vector<uint16_t>>& out) {
  if (p == 0 && x == 0) {
    std::vector<uint16_t> clique;
    for (uint64_t m = r; m;) {
      int v = std::countr_zero(m);
      clique.push_back(static_cast<uint16_t>(v));
      m &= m - 1;
    }
    out.push_back(std::move(clique));
    return;
  }
  uint64_t cand = p;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    uint64_t bit = uint64_t(1) << v;
    max_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

bool points_commute(const PauliPoint& p, const PauliPoint& q) {
  uint32_t s = std::popcount(static_cast<uint32_t>(p.a & q.b)) +
               std::popcount(static_cast<uint32_t>(q.a & p.b));
  return (s & 1) == 0;
}

uint64_t polar_line_formula(uint32_t n) {
  uint64_t r = 1;
  for (uint32_t j = 1; j <= n; ++j) r *= (uint64_t(1) << j) + 1;
  return r;
}

Geometry build_pauli_geometry(uint32_t n) {
  if (n < 1 || n > 3) throw Error("build_pauli_geometry: n must be 1, 2 or 3");
  Geometry g;
  g.n = n;
  const uint32_t mask = (1u << n) - 1;
  for (uint32_t v = 1; v < (1u << (2 * n)); ++v) {
    PauliPoint p;
    p.a = static_cast<uint8_t>(v >> n);
    p.b = static_cast<uint8_t>(v & mask);
    p.label = point_label(p.a, p.b, n);
    g.points.push_back(p);
  }
  const size_t np = g.points.size();
  std::vector<uint64_t> adj(np, 0);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j)
      if (points_commute(g.points[i], g.points[j])) {
        adj[i] |= uint64_t(1) << j;
        adj[j] |= uint64_t(1) << i;
      }
  uint64_t all = np == 64 ? ~uint64_t(0) : (uint64_t(1) << np) - 1;
  max_cliques(adj, 0, all, 0, g.lines);
  for (auto& l : g.lines) std::sort(l.begin(), l.end());
  std::sort(g.lines.begin(), g.lines.end());
  g.lines_through.assign(np, {});
  for (uint16_t li = 0; li < g.lines.size(); ++li)
    for (uint16_t pt : g.lines[li]) g.lines_through[pt].push_back(li);
  return g;
}

GqReport verify_gq_axioms(uint32_t point_count, const std::vector<std::vector<uint16_t>>& lines,
                          uint32_t s, uint32_t t) {
  GqReport rep;
  rep.line_size_ok = true;
  for (const auto& l : lines)
    if (l.size() != s + 1) rep.line_size_ok = false;
  std::vector<uint32_t> degree(point_count, 0);
  std::vector<std::vector<uint16_t>> through(point_count);
  for (uint16_t li = 0; li < lines.size(); ++li)
    for (uint16_t pt : lines[li]) {
      ++degree[pt];
      through[pt].push_back(li);
    }
  rep.point_degree_ok = true;
  for (uint32_t d : degree)
    if (d != t + 1) rep.point_degree_ok = false;
  rep.antiflag_ok = true;
  for (uint32_t pt = 0; pt < point_count; ++pt) {
    for (uint16_t li = 0; li < lines.size(); ++li) {
      const auto& line = lines[li];
      if (std::find(line.begin(), line.end(), pt) != line.end()) continue;
      ++rep.antiflag_count;
      // lines through pt meeting `line`
      uint32_t meets = 0;
      for (uint16_t mi : through[pt]) {
        const auto& other = lines[mi];
        bool intersects = false;
        for (uint16_t q : other)
          if (std::find(line.begin(), line.end(), q) != line.end()) {
            intersects = true;
            break;
          }
        if (intersects) ++meets;
      }
      if (meets != 1) {
        rep.antiflag_ok = false;
        ++rep.antiflag_failures;
      }
    }
  }
  return rep;
}

std::vector<std::vector<uint16_t>> spreads(const Geometry& geom) {
  std::vector<std::vector<uint16_t>> found;
  const size_t np = geom.points.size();
  std::vector<uint64_t> line_mask(geom.lines.size(), 0);
  for (size_t li = 0; li < geom.lines.size(); ++li)
    for (uint16_t pt : geom.lines[li]) line_mask[li] |= uint64_t(1) << pt;
  uint64_t all = np == 64 ? ~uint64_t(0) : (uint64_t(1) << np) - 1;
  std::vector<uint16_t> chosen;
  std::function<void(uint64_t)> rec = [&](uint64_t covered) {
    if (covered == all) {
      found.push_back(chosen);
      return;
    }
    // branch on the least uncovered point (canonical, no duplicates)
    int pt = std::countr_zero(~covered);
    for (uint16_t li : geom.lines_through[pt]) {
      if (line_mask[li] & covered) continue;
      chosen.push_back(li);
      rec(covered | line_mask[li]);
      chosen.pop_back();
    }
  };
  rec(0);
  for (auto& s : found) std::sort(s.begin(), s.end());
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<LineTag> classify_line_entanglement(const Geometry& geom) {
  std::vector<LineTag> tags;
  for (const auto& line : geom.lines) {
    bool all_nonlocal = true;
    for (uint16_t pt : line) {
      const PauliPoint& p = geom.points[pt];
      for (uint32_t q = 0; q < geom.n; ++q) {
        if ((((p.a >> q) & 1) | ((p.b >> q) & 1)) == 0) {
          all_nonlocal = false;
          break;
        }
      }
      if (!all_nonlocal) break;
    }
    tags.push_back(all_nonlocal ? LineTag::Entangled : LineTag::Product);
  }
  return tags;
}

UMatrix pauli_representative(const PauliPoint& p, uint32_t n) {
  UMatrix out(1);
  out.at(0, 0) = Cyclo8(1);
  for (uint32_t q = 0; q < n; ++q) {
    uint32_t bit = n - 1 - q;  // leftmost tensor factor = qubit 0
    uint32_t a = (p.a >> bit) & 1, b = (p.b >> bit) & 1;
    UMatrix f = a ? (b ? pauli_y() : pauli_x()) : (b ? pauli_z() : UMatrix::identity(2));
    out = out.dim() == 1 ? f : tensor(out, f);
  }
  return out;
}

SchmidtReport eigenbasis_schmidt_check(const Geometry& geom, uint32_t line_index) {
  if (geom.n != 2) throw Error("eigenbasis_schmidt_check: two-qubit geometry required");
  const auto& line = geom.lines[line_index];
  const UMatrix a = pauli_representative(geom.points[line[0]], 2);
  const UMatrix b = pauli_representative(geom.points[line[1]], 2);
  const UMatrix id = UMatrix::identity(4);
  SchmidtReport rep;
  UMatrix sum(4);
  int idx = 0;
  for (int e1 : {+1, -1}) {
    for (int e2 : {+1, -1}) {
      UMatrix pa = e1 > 0 ? id + a : id - a;
      UMatrix pb = e2 > 0 ? id + b : id - b;
      UMatrix proj = (pa * pb).scaled(Cyclo8(Dyadic(1).half(2), Dyadic(), Dyadic(), Dyadic()));
      if (!(proj.trace() == Cyclo8(1)))
        throw InconsistentLine("projector trace is not 1 (non-commuting line?)");
      if (!(proj * proj == proj))
        throw InconsistentLine("projector is not idempotent (non-commuting line?)");
      sum = sum + proj;
      // rank-1: any nonzero column is the common eigenvector
      uint32_t col = 4;
      for (uint32_t cc = 0; cc < 4 && col == 4; ++cc)
        for (uint32_t r = 0; r < 4; ++r)
          if (!proj.at(r, cc).is_zero()) {
            col = cc;
            break;
          }
      if (col == 4) throw InconsistentLine("projector vanished");
      // reshape (v0,v1,v2,v3) to [[v0,v1],[v2,v3]]; det = 0 iff product state
      Cyclo8 det = proj.at(0, col) * proj.at(3, col) - proj.at(1, col) * proj.at(2, col);
      rep.state_entangled[idx++] = !det.is_zero();
    }
  }
  rep.projectors_resolve_identity = sum.is_identity();
  rep.line_entangled =
      rep.state_entangled[0] && rep.state_entangled[1] && rep.state_entangled[2] &&
      rep.state_entangled[3];
  return rep;
}

namespace {

// counts (and optionally finds) adjacency-preserving bijections between two
// graphs given as adjacency bitmasks; deterministic vertex order
uint64_t graph_iso_backtrack(const std::vector<uint32_t>& adj_a, const std::vector<uint32_t>& adj_b,
                             bool count_all, std::vector<uint16_t>* out_map) {
  const size_t n = adj_a.size();
  std::vector<int> img(n, -1);
  std::vector<uint8_t> used(n, 0);
  uint64_t count = 0;
  std::function<bool(size_t)> rec = [&](size_t v) -> bool {
    if (v == n) {
      ++count;
      if (out_map && out_map->empty())
        for (size_t i = 0; i < n; ++i) out_map->push_back(static_cast<uint16_t>(img[i]));
      return !count_all;
    }
    for (size_t w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (std::popcount(adj_a[v]) != std::popcount(adj_b[w])) continue;
      bool ok = true;
      for (size_t u = 0; u < v; ++u) {
        bool ea = (adj_a[v] >> u) & 1;
        bool eb = (adj_b[w] >> img[u]) & 1;
        if (ea != eb) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      img[v] = static_cast<int>(w);
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
      img[v] = -1;
    }
    return false;
  };
  rec(0);
  return count;
}

}  // namespace

GraphModelReport graph_model_check(const Geometry& geom) {
  if (geom.n != 2) throw Error("graph_model_check: two-qubit geometry required");
  GraphModelReport rep;
  const size_t np = geom.points.size();
  std::vector<uint32_t> pauli_adj(np, 0);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < np; ++j)
      if (i != j && points_commute(geom.points[i], geom.points[j]))
        pauli_adj[i] |= uint32_t(1) << j;
  // complement of the line graph of K6: vertices are the 15 pairs of six
  // symbols, adjacent iff disjoint
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  std::vector<uint32_t> model_adj(15, 0);
  for (size_t i = 0; i < 15; ++i)
    for (size_t j = 0; j < 15; ++j) {
      if (i == j) continue;
      bool share = pairs[i].first == pairs[j].first || pairs[i].first == pairs[j].second ||
                   pairs[i].second == pairs[j].first || pairs[i].second == pairs[j].second;
      if (!share) model_adj[i] |= uint32_t(1) << j;
    }
  rep.pauli_six_regular = true;
  for (auto m : pauli_adj)
    if (std::popcount(m) != 6) rep.pauli_six_regular = false;
  rep.model_six_regular = true;
  for (auto m : model_adj)
    if (std::popcount(m) != 6) rep.model_six_regular = false;
  std::vector<uint16_t> map;
  rep.iso_found = graph_iso_backtrack(pauli_adj, model_adj, false, &map) > 0;
  rep.vertex_map = std::move(map);
  rep.automorphism_count = graph_iso_backtrack(pauli_adj, pauli_adj, true, nullptr);
  return rep;
}

ConjActionReport conjugation_action_check(const std::vector<Perm>& point_perms,
                                          const Geometry& geom) {
  ConjActionReport rep;
  std::set<Perm> distinct;
  for (const Perm& p : point_perms) {
    distinct.insert(p);
    if (p.is_identity()) ++rep.kernel_order;
  }
  rep.image_order = distinct.size();
  std::set<std::vector<uint16_t>> line_set(geom.lines.begin(), geom.lines.end());
  rep.lines_preserved = true;
  for (const Perm& p : distinct) {
    for (const auto& line : geom.lines) {
      std::vector<uint16_t> img;
      for (uint16_t pt : line) img.push_back(static_cast<uint16_t>(p.apply(pt)));
      std::sort(img.begin(), img.end());
      if (!line_set.count(img)) {
        rep.lines_preserved = false;
        break;
      }
    }
    if (!rep.lines_preserved) break;
  }
  return rep;
}

RingGridReport ring_projective_line_grid(const Geometry& geom) {
  if (geom.n != 2) throw Error("ring_projective_line_grid: two-qubit geometry required");
  RingGridReport rep;
  // R = GF(2) x GF(2); the only unit is (1,1), so projective points over R
  // are exactly the admissible pairs (x, y) in R^2: componentwise, (x_c, y_c)
  // must be nonzero in each factor. That leaves 3 x 3 = 9 points, indexed by
  // the pair of nonzero GF(2)^2 vectors.
  struct GridPoint {
    int u;  // nonzero (x_1, y_1) in {1,2,3}
    int v;  // nonzero (x_2, y_2)
  };
  std::vector<GridPoint> grid_points;
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) grid_points.push_back({u, v});
  rep.point_count = static_cast<uint32_t>(grid_points.size());
  // rows: fixed u (first-coordinate fibration); columns: fixed v
  std::vector<std::vector<uint16_t>> grid_lines;
  for (int u = 1; u <= 3; ++u) {
    std::vector<uint16_t> row;
    for (uint16_t i = 0; i < grid_points.size(); ++i)
      if (grid_points[i].u == u) row.push_back(i);
    grid_lines.push_back(row);
  }
  rep.row_line_count = 3;
  for (int v = 1; v <= 3; ++v) {
    std::vector<uint16_t> col;
    for (uint16_t i = 0; i < grid_points.size(); ++i)
      if (grid_points[i].v == v) col.push_back(i);
    grid_lines.push_back(col);
  }
  rep.col_line_count = 3;
  std::vector<uint32_t> on(grid_points.size(), 0);
  for (const auto& l : grid_lines)
    for (uint16_t p : l) ++on[p];
  rep.each_point_on_two_lines =
      std::all_of(on.begin(), on.end(), [](uint32_t d) { return d == 2; });

  // entangled-line sub-geometry on the 9 nonlocal points
  auto tags = classify_line_entanglement(geom);
  std::vector<uint16_t> nonlocal;  // geometry point indices
  std::vector<int> local_index(geom.points.size(), -1);
  for (uint16_t i = 0; i < geom.points.size(); ++i) {
    const auto& p = geom.points[i];
    bool nl = true;
    for (uint32_t q = 0; q < 2; ++q)
      if ((((p.a >> q) & 1) | ((p.b >> q) & 1)) == 0) nl = false;
    if (nl) {
      local_index[i] = static_cast<int>(nonlocal.size());
      nonlocal.push_back(i);
    }
  }
  std::vector<std::vector<uint16_t>> ent_lines;
  for (size_t li = 0; li < geom.lines.size(); ++li) {
    if (tags[li] != LineTag::Entangled) continue;
    std::vector<uint16_t> local;
    for (uint16_t pt : geom.lines[li]) local.push_back(static_cast<uint16_t>(local_index[pt]));
    std::sort(local.begin(), local.end());
    ent_lines.push_back(local);
  }
  if (nonlocal.size() != grid_points.size() || ent_lines.size() != grid_lines.size()) return rep;

  // incidence-preserving bijection grid -> nonlocal points (backtrack)
  std::set<std::vector<uint16_t>> target(ent_lines.begin(), ent_lines.end());
  std::vector<int> img(grid_points.size(), -1);
  std::vector<uint8_t> used(grid_points.size(), 0);
  std::function<bool(size_t)> rec = [&](size_t v) -> bool {
    if (v == grid_points.size()) {
      for (const auto& gl : grid_lines) {
        std::vector<uint16_t> mapped;
        for (uint16_t p : gl) mapped.push_back(static_cast<uint16_t>(img[p]));
        std::sort(mapped.begin(), mapped.end());
        if (!target.count(mapped)) return false;
      }
      return true;
    }
    for (size_t w = 0; w < grid_points.size(); ++w) {
      if (used[w]) continue;
      img[v] = static_cast<int>(w);
      used[w] = 1;
      // prune: any fully-assigned grid line must land on an entangled line
      bool ok = true;
      for (const auto& gl : grid_lines) {
        bool full = true;
        for (uint16_t p : gl)
          if (img[p] < 0) {
            full = false;
            break;
          }
        if (!full) continue;
        std::vector<uint16_t> mapped;
        for (uint16_t p : gl) mapped.push_back(static_cast<uint16_t>(img[p]));
        std::sort(mapped.begin(), mapped.end());
        if (!target.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(v + 1)) return true;
      used[w] = 0;
      img[v] = -1;
    }
    return false;
  };
  if (rec(0)) {
    rep.mapped_onto_entangled_lines = true;
    for (size_t i = 0; i < img.size(); ++i) rep.point_map.push_back(nonlocal[img[i]]);
  }
  return rep;
}

void write_commutation_dot(const Geometry& geom, const std::vector<LineTag>& tags,
                           std::ostream& out) {
  // edges inside entangled lines are boldfaced
  std::set<std::pair<uint16_t, uint16_t>> bold;
  for (size_t li = 0; li < geom.lines.size(); ++li) {
    if (tags[li] != LineTag::Entangled) continue;
    const auto& l = geom.lines[li];
    for (size_t i = 0; i < l.size(); ++i)
      for (size_t j = i + 1; j < l.size(); ++j) bold.insert({l[i], l[j]});
  }
  out << "graph pauli_commutation {\n";
  for (size_t i = 0; i < geom.points.size(); ++i)
    out << "  p" << i << " [label=\"" << geom.points[i].label << "\"];\n";
  for (size_t i = 0; i < geom.points.size(); ++i)
    for (size_t j = i + 1; j < geom.points.size(); ++j) {
      if (!points_commute(geom.points[i], geom.points[j])) continue;
      out << "  p" << i << " -- p" << j;
      if (bold.count({static_cast<uint16_t>(i), static_cast<uint16_t>(j)}))
        out << " [style=bold]";
      out << ";\n";
    }
  out << "}\n";
}

void write_geometry_json(const Geometry& geom, const std::vector<std::vector<uint16_t>>& spread_list,
                         const std::vector<LineTag>& tags, const RingGridReport& grid,
                         std::ostream& out) {
  nlohmann::ordered_json j;
  j["qubits"] = geom.n;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : geom.points) {
    nlohmann::ordered_json pj;
    pj["x_bits"] = p.a;
    pj["z_bits"] = p.b;
    pj["label"] = p.label;
    pts.push_back(pj);
  }
  auto& lines = j["lines"] = nlohmann::ordered_json::array();
  for (size_t li = 0; li < geom.lines.size(); ++li) {
    nlohmann::ordered_json lj;
    lj["points"] = geom.lines[li];
    if (li < tags.size())
      lj["tag"] = tags[li] == LineTag::Entangled ? "entangled" : "product";
    lines.push_back(lj);
  }
  j["spreads"] = spread_list;
  nlohmann::ordered_json gj;
  gj["point_count"] = grid.point_count;
  gj["row_lines"] = grid.row_line_count;
  gj["col_lines"] = grid.col_line_count;
  gj["mapped_onto_entangled_lines"] = grid.mapped_onto_entangled_lines;
  gj["point_map"] = grid.point_map;
  j["ring_line_grid"] = gj;
  out << j.dump(2) << "\n";
}

}  // namespace atlas
