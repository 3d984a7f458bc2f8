#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "atlas/cyclo.hpp"

namespace atlas {

using BigInt = boost::multiprecision::cpp_int;

// Square matrix over Q(zeta_8), row-major. Group elements are unitary; the
// closure code relies on dagger() being the inverse.
class UMatrix {
 public:
  UMatrix() : dim_(0) {}
  explicit UMatrix(uint32_t dim) : dim_(dim), e_(size_t(dim) * dim) {}

  static UMatrix identity(uint32_t dim);

  uint32_t dim() const { return dim_; }
  const Cyclo8& at(uint32_t r, uint32_t c) const { return e_[size_t(r) * dim_ + c]; }
  Cyclo8& at(uint32_t r, uint32_t c) { return e_[size_t(r) * dim_ + c]; }

  friend UMatrix operator*(const UMatrix& a, const UMatrix& b);
  friend UMatrix operator+(const UMatrix& a, const UMatrix& b);
  friend UMatrix operator-(const UMatrix& a, const UMatrix& b);
  UMatrix scaled(const Cyclo8& s) const;
  UMatrix dagger() const;  // conjugate transpose
  Cyclo8 trace() const;

  friend bool operator==(const UMatrix& a, const UMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const UMatrix& a, const UMatrix& b) { return !(a == b); }

  bool is_identity() const;
  bool is_zero() const;
  bool is_unitary() const { return (*this * dagger()).is_identity(); }
  bool is_scalar() const;  // lambda * I

  uint64_t hash64() const;
  std::string key() const;

  std::string dump_str() const;  // entries comma-separated, coefficients space-separated
  static UMatrix parse_dump(const std::string&, uint32_t dim);

 private:
  uint32_t dim_;
  std::vector<Cyclo8> e_;
};

UMatrix tensor(const UMatrix& a, const UMatrix& b);  // Kronecker product, row-major

// elementary gates and Pauli matrices
UMatrix pauli_x();
UMatrix pauli_y();
UMatrix pauli_z();
UMatrix hadamard();    // 1/sqrt2 [[1,1],[1,-1]]
UMatrix phase_gate();  // diag(1, i)
UMatrix cz_gate();     // diag(1,1,1,-1)

// n = 1: {H, P};  n = 2: {H(x)H, H(x)P, CZ}
std::vector<UMatrix> clifford_generators(int n);
// single-qubit Paulis embedded on each tensor factor
std::vector<UMatrix> pauli_generators(int n);

BigInt pauli_order_formula(int n);     // 2^(2n+2)
BigInt clifford_order_formula(int n);  // 2^(n^2+2n+3) * prod_j (4^j - 1)

// A finite matrix group stored as the breadth-first closure of its
// generators: element 0 is the identity, ordering is deterministic given
// the generator order, and lookup is by canonical entry-wise hash.
class MatGroup {
 public:
  // closure under products; throws LimitExceeded past `limit` elements
  static MatGroup close(const std::vector<UMatrix>& generators, uint64_t limit);

  uint32_t order() const { return static_cast<uint32_t>(elems_.size()); }
  uint32_t dim() const { return dim_; }
  const UMatrix& element(uint32_t i) const { return elems_[i]; }
  uint32_t identity_index() const { return 0; }
  const std::vector<uint32_t>& generator_indices() const { return gen_idx_; }

  std::optional<uint32_t> find(const UMatrix& m) const;
  uint32_t mul_index(uint32_t a, uint32_t b) const;
  uint32_t inv_index(uint32_t a) const { return inv_[a]; }

  // BFS provenance: elems_[i] == elems_[parent_[i]] * generator(via_[i]) for i > 0.
  // Absent on groups restored from a dump.
  bool has_provenance() const { return provenance_; }
  uint32_t bfs_parent(uint32_t i) const { return parent_[i]; }
  uint32_t bfs_via(uint32_t i) const { return via_[i]; }

  uint64_t sorted_key_hash() const;  // order-independent fingerprint of the element set

  void dump(std::ostream&) const;
  static MatGroup load(std::istream&);

 private:
  MatGroup() = default;
  uint32_t insert(const UMatrix& m);  // returns index, existing or new
  void finalize();                    // inverse table

  uint32_t dim_ = 0;
  bool provenance_ = true;
  std::vector<UMatrix> elems_;
  std::vector<uint32_t> gen_idx_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> parent_;
  std::vector<uint8_t> via_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> index_;
};

// closure of the Pauli generators; order 2^(2n+2)
MatGroup pauli_group(int n);

}  // namespace atlas
