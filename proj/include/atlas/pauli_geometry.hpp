#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/perm.hpp"

namespace atlas {

// Nonzero symplectic vector (a|b) over GF(2)^n x GF(2)^n: the Pauli
// operator X^a Z^b up to phase. Two points commute iff a.b' + a'.b = 0.
struct PauliPoint {
  uint8_t a = 0;  // X part, one bit per qubit
  uint8_t b = 0;  // Z part
  std::string label;
};

struct Geometry {
  uint32_t n = 0;  // qubits
  std::vector<PauliPoint> points;
  std::vector<std::vector<uint16_t>> lines;  // sorted point-index sets
  std::vector<std::vector<uint16_t>> lines_through;  // point -> incident line indices
};

bool points_commute(const PauliPoint& p, const PauliPoint& q);

// points = nonzero symplectic vectors, lines = maximal pairwise-commuting
// sets (exhaustive clique enumeration); n in {1,2,3}
Geometry build_pauli_geometry(uint32_t n);

// expected line count (2+1)(2^2+1)...(2^n+1)
uint64_t polar_line_formula(uint32_t n);

struct GqReport {
  bool line_size_ok = false;
  bool point_degree_ok = false;
  bool antiflag_ok = false;
  uint64_t antiflag_count = 0;
  uint64_t antiflag_failures = 0;
  bool pass() const { return line_size_ok && point_degree_ok && antiflag_ok; }
};

// GQ(s,t) axioms: lines of s+1 points, points on t+1 lines, unique
// transversal line per antiflag
GqReport verify_gq_axioms(uint32_t point_count, const std::vector<std::vector<uint16_t>>& lines,
                          uint32_t s, uint32_t t);

// all partitions of the point set into disjoint lines (exhaustive)
std::vector<std::vector<uint16_t>> spreads(const Geometry& geom);

enum class LineTag { Product, Entangled };

// combinatorial tag: a line is entangled iff all of its operators act
// nontrivially on every qubit
std::vector<LineTag> classify_line_entanglement(const Geometry& geom);

// Hermitian representative (tensor of I,X,Y,Z) of a point
UMatrix pauli_representative(const PauliPoint& p, uint32_t n);

struct SchmidtReport {
  std::array<bool, 4> state_entangled{};  // per sign vector
  bool line_entangled = false;            // all four states entangled
  bool projectors_resolve_identity = false;
};

// exact rank-1 projector analysis of a two-qubit line: for each sign pair
// P = (I + e1 A)(I + e2 B)/4 must have trace 1 and P^2 = P; the eigenvector
// column reshaped to 2x2 has determinant 0 iff the state is a product
// state. Throws InconsistentLine when the projectors fail their checks.
SchmidtReport eigenbasis_schmidt_check(const Geometry& geom, uint32_t line_index);

struct GraphModelReport {
  bool iso_found = false;
  std::vector<uint16_t> vertex_map;  // pauli vertex -> pair vertex
  bool pauli_six_regular = false;
  bool model_six_regular = false;
  uint64_t automorphism_count = 0;  // of the commutation graph
};

// commutation graph vs the complement of the line graph of K6
GraphModelReport graph_model_check(const Geometry& geom);

struct ConjActionReport {
  uint64_t image_order = 0;
  uint64_t kernel_order = 0;
  bool lines_preserved = false;
  bool matches_graph_automorphisms = false;
};

// conjugation action of the inner group on the 15 points: image/kernel
// sizes and exhaustive line preservation. `point_perms` holds one
// 15-point permutation per inner-group element.
ConjActionReport conjugation_action_check(const std::vector<Perm>& point_perms,
                                          const Geometry& geom);

struct RingGridReport {
  uint32_t point_count = 0;
  uint32_t row_line_count = 0;
  uint32_t col_line_count = 0;
  bool each_point_on_two_lines = false;
  bool mapped_onto_entangled_lines = false;
  std::vector<uint16_t> point_map;  // grid point -> geometry point index
};

// projective line over GF(2)xGF(2): 9 admissible pairs forming a 3x3 grid;
// an explicit incidence-preserving bijection onto the 9 nonlocal points and
// the 6 entangled lines is searched for
RingGridReport ring_projective_line_grid(const Geometry& geom);

// exports
void write_commutation_dot(const Geometry& geom, const std::vector<LineTag>& tags,
                           std::ostream& out);
void write_geometry_json(const Geometry& geom, const std::vector<std::vector<uint16_t>>& spread_list,
                         const std::vector<LineTag>& tags, const RingGridReport& grid,
                         std::ostream& out);

}  // namespace atlas
