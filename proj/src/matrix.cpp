#include "atlas/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

UMatrix UMatrix::identity(uint32_t dim) {
  UMatrix m(dim);
  for (uint32_t i = 0; i < dim; ++i) m.at(i, i) = Cyclo8(1);
  return m;
}

UMatrix operator*(const UMatrix& a, const UMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("UMatrix: dimension mismatch in product");
  const uint32_t n = a.dim_;
  UMatrix r(n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t k = 0; k < n; ++k) {
      const Cyclo8& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (uint32_t j = 0; j < n; ++j) {
        const Cyclo8& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  }
  return r;
}

UMatrix operator+(const UMatrix& a, const UMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("UMatrix: dimension mismatch in sum");
  UMatrix r(a.dim_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

UMatrix operator-(const UMatrix& a, const UMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("UMatrix: dimension mismatch in difference");
  UMatrix r(a.dim_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

UMatrix UMatrix::scaled(const Cyclo8& s) const {
  UMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

UMatrix UMatrix::dagger() const {
  UMatrix r(dim_);
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conjugate();
  return r;
}

Cyclo8 UMatrix::trace() const {
  Cyclo8 t;
  for (uint32_t i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

bool UMatrix::is_identity() const {
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = 0; j < dim_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool UMatrix::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

bool UMatrix::is_scalar() const {
  const Cyclo8& d = at(0, 0);
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = 0; j < dim_; ++j) {
      if (i == j ? at(i, j) != d : !at(i, j).is_zero()) return false;
    }
  return true;
}

uint64_t UMatrix::hash64() const {
  uint64_t h = 0x243f6a8885a308d3ULL ^ dim_;
  for (const auto& e : e_) {
    h ^= e.hash64();
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

std::string UMatrix::key() const {
  std::string s;
  s.reserve(e_.size() * 48);
  for (const auto& e : e_) e.append_key(s);
  return s;
}

std::string UMatrix::dump_str() const {
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ", ";
    out += e_[i].dump_str();
  }
  return out;
}

UMatrix UMatrix::parse_dump(const std::string& s, uint32_t dim) {
  UMatrix m(dim);
  size_t pos = 0;
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j) {
      size_t next = s.find(',', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
      m.at(i, j) = Cyclo8::parse_dump(tok);
      if (next == std::string::npos && (i + 1 < dim || j + 1 < dim))
        throw IoError("UMatrix::parse_dump: short entry list");
      pos = next + 2;
    }
  return m;
}

UMatrix tensor(const UMatrix& a, const UMatrix& b) {
  const uint32_t n = a.dim(), m = b.dim();
  UMatrix r(n * m);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      const Cyclo8& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (uint32_t k = 0; k < m; ++k)
        for (uint32_t l = 0; l < m; ++l) r.at(i * m + k, j * m + l) = aij * b.at(k, l);
    }
  return r;
}

UMatrix pauli_x() {
  UMatrix m(2);
  m.at(0, 1) = Cyclo8(1);
  m.at(1, 0) = Cyclo8(1);
  return m;
}

UMatrix pauli_y() {
  UMatrix m(2);
  m.at(0, 1) = -Cyclo8::i();
  m.at(1, 0) = Cyclo8::i();
  return m;
}

UMatrix pauli_z() {
  UMatrix m(2);
  m.at(0, 0) = Cyclo8(1);
  m.at(1, 1) = Cyclo8(-1);
  return m;
}

UMatrix hadamard() {
  UMatrix m(2);
  const Cyclo8 s = Cyclo8::inv_sqrt2();
  m.at(0, 0) = s;
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = -s;
  return m;
}

UMatrix phase_gate() {
  UMatrix m(2);
  m.at(0, 0) = Cyclo8(1);
  m.at(1, 1) = Cyclo8::i();
  return m;
}

UMatrix cz_gate() {
  UMatrix m = UMatrix::identity(4);
  m.at(3, 3) = Cyclo8(-1);
  return m;
}

std::vector<UMatrix> clifford_generators(int n) {
  if (n == 1) return {hadamard(), phase_gate()};
  if (n == 2) {
    return {tensor(hadamard(), hadamard()), tensor(hadamard(), phase_gate()), cz_gate()};
  }
  throw Error("clifford_generators: n must be 1 or 2");
}

std::vector<UMatrix> pauli_generators(int n) {
  std::vector<UMatrix> one = {pauli_x(), pauli_y(), pauli_z()};
  if (n == 1) return one;
  if (n == 2) {
    std::vector<UMatrix> out;
    const UMatrix id = UMatrix::identity(2);
    for (const auto& p : one) out.push_back(tensor(p, id));
    for (const auto& p : one) out.push_back(tensor(id, p));
    return out;
  }
  throw Error("pauli_generators: n must be 1 or 2");
}

BigInt pauli_order_formula(int n) {
  if (n < 1) throw Error("pauli_order_formula: n >= 1");
  return BigInt(1) << (2 * n + 2);
}

BigInt clifford_order_formula(int n) {
  if (n < 1) throw Error("clifford_order_formula: n >= 1");
  BigInt r = BigInt(1) << (n * n + 2 * n + 3);
  BigInt f = 4;
  for (int j = 1; j <= n; ++j) {
    r *= f - 1;
    f *= 4;
  }
  return r;
}

uint32_t MatGroup::insert(const UMatrix& m) {
  uint64_t h = m.hash64();
  auto it = index_.find(h);
  if (it != index_.end()) {
    for (uint32_t idx : it->second)
      if (elems_[idx] == m) return idx;
  }
  uint32_t idx = static_cast<uint32_t>(elems_.size());
  elems_.push_back(m);
  index_[h].push_back(idx);
  return idx;
}

MatGroup MatGroup::close(const std::vector<UMatrix>& generators, uint64_t limit) {
  if (generators.empty()) throw Error("MatGroup::close: no generators");
  MatGroup g;
  g.dim_ = generators.front().dim();
  for (const auto& m : generators) {
    if (m.dim() != g.dim_) throw Error("MatGroup::close: mixed dimensions");
    if (!m.is_unitary()) throw Error("MatGroup::close: generator is not unitary");
  }
  g.insert(UMatrix::identity(g.dim_));
  g.parent_.push_back(0);
  g.via_.push_back(0);
  for (const auto& m : generators) {
    uint32_t before = g.order();
    uint32_t idx = g.insert(m);
    g.gen_idx_.push_back(idx);
    if (g.order() > before) {
      g.parent_.push_back(0);
      g.via_.push_back(static_cast<uint8_t>(g.gen_idx_.size() - 1));
    }
  }
  for (uint32_t i = 0; i < g.order(); ++i) {
    for (size_t j = 0; j < generators.size(); ++j) {
      UMatrix p = g.elems_[i] * generators[j];
      uint32_t before = g.order();
      uint32_t idx = g.insert(p);
      if (idx >= before) {
        g.parent_.push_back(i);
        g.via_.push_back(static_cast<uint8_t>(j));
        if (g.order() > limit)
          throw LimitExceeded("MatGroup::close: limit " + std::to_string(limit) + " exceeded");
      }
    }
  }
  g.finalize();
  return g;
}

void MatGroup::finalize() {
  inv_.resize(elems_.size());
  for (uint32_t i = 0; i < order(); ++i) {
    auto idx = find(elems_[i].dagger());
    if (!idx) throw UnexpectedStructure("MatGroup: inverse missing from closure");
    inv_[i] = *idx;
  }
}

std::optional<uint32_t> MatGroup::find(const UMatrix& m) const {
  auto it = index_.find(m.hash64());
  if (it == index_.end()) return std::nullopt;
  for (uint32_t idx : it->second)
    if (elems_[idx] == m) return idx;
  return std::nullopt;
}

uint32_t MatGroup::mul_index(uint32_t a, uint32_t b) const {
  auto idx = find(elems_[a] * elems_[b]);
  if (!idx) throw UnexpectedStructure("MatGroup: product escaped the element store");
  return *idx;
}

uint64_t MatGroup::sorted_key_hash() const {
  std::vector<uint64_t> hs;
  hs.reserve(elems_.size());
  for (const auto& m : elems_) hs.push_back(m.hash64());
  std::sort(hs.begin(), hs.end());
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint64_t v : hs) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void MatGroup::dump(std::ostream& out) const {
  out << "matgroup dim " << dim_ << " order " << elems_.size() << " gens";
  for (uint32_t gi : gen_idx_) out << ' ' << gi;
  out << " hash " << sorted_key_hash() << "\n";
  for (uint32_t i = 0; i < order(); ++i) out << i << ": " << elems_[i].dump_str() << "\n";
}

MatGroup MatGroup::load(std::istream& in) {
  std::string word;
  uint32_t dim = 0;
  uint64_t count = 0, hash = 0;
  MatGroup g;
  if (!(in >> word) || word != "matgroup") throw IoError("MatGroup::load: bad header");
  in >> word >> dim >> word >> count >> word;
  if (word != "gens") throw IoError("MatGroup::load: bad header");
  std::string rest;
  std::getline(in, rest);
  {
    std::istringstream hs(rest);
    uint32_t gi;
    while (hs >> word) {
      if (word == "hash") {
        hs >> hash;
        break;
      }
      gi = static_cast<uint32_t>(std::stoul(word));
      g.gen_idx_.push_back(gi);
    }
  }
  g.dim_ = dim;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw IoError("MatGroup::load: bad element line");
    g.insert(UMatrix::parse_dump(line.substr(colon + 1), dim));
  }
  if (g.order() != count) throw IoError("MatGroup::load: element count mismatch");
  if (g.sorted_key_hash() != hash) throw IoError("MatGroup::load: element hash mismatch");
  for (uint32_t gi : g.gen_idx_)
    if (gi >= g.order()) throw IoError("MatGroup::load: generator index out of range");
  g.provenance_ = false;
  g.parent_.assign(g.order(), 0);
  g.via_.assign(g.order(), 0);
  g.finalize();
  return g;
}

MatGroup pauli_group(int n) {
  auto gens = pauli_generators(n);
  uint64_t expect = static_cast<uint64_t>(pauli_order_formula(n));
  return MatGroup::close(gens, 2 * expect);
}

}  // namespace atlas
