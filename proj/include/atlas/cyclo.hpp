#pragma once

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <string>

#include "atlas/errors.hpp"

namespace atlas {

// Dyadic rational num / 2^exp. Canonical form: exp > 0 implies num odd;
// zero is (0, 0). All arithmetic is overflow-checked and throws rather
// than wrapping; the matrix closures stay far below the int64 range.
class Dyadic {
 public:
  constexpr Dyadic() : num_(0), exp_(0) {}
  Dyadic(int64_t n) : num_(n), exp_(0) {}  // NOLINT: implicit integer lift

  // value = num / 2^exp, reduced on construction
  static Dyadic make(int64_t num, int32_t exp) {
    if (exp < 0) throw OverflowError("Dyadic: negative exponent");
    Dyadic d;
    if (num == 0) return d;
    int tz = std::countr_zero(static_cast<uint64_t>(num));
    int s = tz < exp ? tz : exp;
    d.num_ = num >> s;
    d.exp_ = exp - s;
    return d;
  }

  int64_t num() const { return num_; }
  int32_t exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && exp_ == 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    int32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    int64_t x = shifted(a.num_, e - a.exp_);
    int64_t y = shifted(b.num_, e - b.exp_);
    int64_t s;
    if (__builtin_add_overflow(x, y, &s)) throw OverflowError("Dyadic add");
    return make(s, e);
  }

  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

  Dyadic operator-() const {
    if (num_ == INT64_MIN) throw OverflowError("Dyadic negate");
    Dyadic d;
    d.num_ = -num_;
    d.exp_ = exp_;
    return d;
  }

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.num_ == 0 || b.num_ == 0) return Dyadic();
    int64_t p;
    if (__builtin_mul_overflow(a.num_, b.num_, &p)) throw OverflowError("Dyadic mul");
    // odd*odd stays odd; only exp 0 factors can carry twos
    return make(p, a.exp_ + b.exp_);
  }

  // division by 2^k (total within the dyadic ring)
  Dyadic half(int32_t k = 1) const { return make(num_, exp_ + k); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

  double to_double() const { return static_cast<double>(num_) / std::exp2(exp_); }

  std::string str() const;                 // "n" or "n/2^k"
  static Dyadic parse(const std::string&); // inverse of str()

 private:
  static int64_t shifted(int64_t n, int32_t k) {
    if (k == 0) return n;
    if (k >= 63) throw OverflowError("Dyadic shift");
    int64_t r;
    if (__builtin_mul_overflow(n, int64_t(1) << k, &r)) throw OverflowError("Dyadic shift");
    return r;
  }

  int64_t num_;
  int32_t exp_;
};

// Element of Q(zeta_8) over the basis {1, z, z^2, z^3}, z = primitive 8th
// root of unity, z^4 = -1. Coefficients are dyadic rationals, which is the
// subring all gate entries and their products live in. Values are immutable
// and the representation is unique, so equality and hashing are structural.
class Cyclo8 {
 public:
  Cyclo8() = default;
  Cyclo8(int64_t n) : c_{Dyadic(n), Dyadic(), Dyadic(), Dyadic()} {}  // NOLINT
  Cyclo8(Dyadic c0, Dyadic c1, Dyadic c2, Dyadic c3) : c_{c0, c1, c2, c3} {}

  // primitive k-th root of unity, k | 8
  static Cyclo8 root_of_unity(int k) {
    switch (k) {
      case 1: return Cyclo8(1);
      case 2: return Cyclo8(-1);
      case 4: return Cyclo8(Dyadic(0), Dyadic(0), Dyadic(1), Dyadic(0));
      case 8: return Cyclo8(Dyadic(0), Dyadic(1), Dyadic(0), Dyadic(0));
      default: throw Error("root_of_unity: k must be one of 1,2,4,8");
    }
  }

  static Cyclo8 i() { return root_of_unity(4); }
  // sqrt(2) = z - z^3
  static Cyclo8 sqrt2() { return Cyclo8(Dyadic(0), Dyadic(1), Dyadic(0), Dyadic(-1)); }
  // 1/sqrt(2) = (z - z^3)/2
  static Cyclo8 inv_sqrt2() {
    return Cyclo8(Dyadic(0), Dyadic(1).half(), Dyadic(0), Dyadic(-1).half());
  }

  const Dyadic& coeff(int k) const { return c_[k]; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const {
    return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }

  friend Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b) {
    return Cyclo8(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
  }
  friend Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b) {
    return Cyclo8(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
  }
  Cyclo8 operator-() const { return Cyclo8(-c_[0], -c_[1], -c_[2], -c_[3]); }

  // product with eager z^4 = -1 reduction
  friend Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    return Cyclo8(
        x[0] * y[0] - (x[1] * y[3] + x[2] * y[2] + x[3] * y[1]),
        x[0] * y[1] + x[1] * y[0] - (x[2] * y[3] + x[3] * y[2]),
        x[0] * y[2] + x[1] * y[1] + x[2] * y[0] - x[3] * y[3],
        x[0] * y[3] + x[1] * y[2] + x[2] * y[1] + x[3] * y[0]);
  }

  // complex conjugation: z -> z^-1 = -z^3, extended linearly
  Cyclo8 conjugate() const { return Cyclo8(c_[0], -c_[3], -c_[2], -c_[1]); }

  bool is_real() const { return conjugate() == *this; }

  friend bool operator==(const Cyclo8& a, const Cyclo8& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclo8& a, const Cyclo8& b) { return !(a.c_ == b.c_); }

  // canonical 48-byte key, injective on canonical forms
  void append_key(std::string& out) const {
    for (const auto& d : c_) {
      append_u64(out, static_cast<uint64_t>(d.num()));
      append_u32(out, static_cast<uint32_t>(d.exp()));
    }
  }
  std::string hash_key() const {
    std::string s;
    s.reserve(48);
    append_key(s);
    return s;
  }

  uint64_t hash64() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& d : c_) {
      h = mix(h ^ static_cast<uint64_t>(d.num()));
      h = mix(h ^ static_cast<uint64_t>(static_cast<uint32_t>(d.exp())));
    }
    return h;
  }

  std::string str() const;                 // "a + b*z + c*z^2 + d*z^3" (terms with 0 omitted)
  std::string dump_str() const;            // fixed 4-token form for files
  static Cyclo8 parse_dump(const std::string&);
  std::complex<double> approx() const {    // display only, never used in logic
    static const double s = std::sqrt(0.5);
    double re = c_[0].to_double() + (c_[1].to_double() - c_[3].to_double()) * s;
    double im = c_[2].to_double() + (c_[1].to_double() + c_[3].to_double()) * s;
    return {re, im};
  }

 private:
  static uint64_t mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }
  static void append_u64(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  static void append_u32(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }

  std::array<Dyadic, 4> c_{};
};

}  // namespace atlas
