#pragma once

// Exact arithmetic in odd-characteristic finite fields GF(p^m) and the
// degree-2 tower GF(q^2) < GF(q^4) that hosts the primitive 2n-th roots of
// unity used by the negacyclic constructions.
//
// An element with coordinate vector (c_0, ..., c_{m-1}) in the power basis of
// the modulus root is stored as the integer index sum_i c_i p^i. Fields with
// fewer than 2^20 elements carry discrete-log tables built once at
// construction (validated against coordinate arithmetic); larger fields fall
// back to schoolbook coordinate multiplication.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace negaconv {

class Field {
 public:
  // Interned accessor. The modulus is deterministic (lexicographically
  // smallest monic irreducible of degree m, coefficients ordered and compared
  // constant term first), so (p, m) pins one field representation for good.
  // Requires p an odd prime; characteristic 2 is not supported.
  static const Field& get(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  uint64_t size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  bool has_tables() const { return tables_; }

  // Least primitive generator of the multiplicative group in coordinate-
  // lexicographic order.
  uint32_t generator() const { return gen_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
      uint32_t s = a + b;
      return s >= up_ ? s - up_ : s;
    }
    uint32_t out = 0;
    for (int i = 0; i < m_; ++i) {
      uint32_t s = a % up_ + b % up_;
      if (s >= up_) s -= up_;
      out += s * pows_[i];
      a /= up_;
      b /= up_;
    }
    return out;
  }

  uint32_t neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : up_ - a;
    uint32_t out = 0;
    for (int i = 0; i < m_; ++i) {
      uint32_t d = a % up_;
      if (d) out += (up_ - d) * pows_[i];
      a /= up_;
    }
    return out;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[size_t(log_[a]) + size_t(log_[b])];
    return mul_schoolbook(a, b);
  }

  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const;

  // a^e; pow(0, 0) = 1 by convention.
  uint32_t pow(uint32_t a, uint64_t e) const;

  // x^e where e must be a power of the characteristic.
  uint32_t frobenius(uint32_t x, uint64_t e) const;

  // Image of an integer constant (the prime subfield element c mod p).
  uint32_t scalar(int64_t c) const;

  std::vector<int> coords(uint32_t idx) const;
  uint32_t from_coords(std::span<const int> c) const;

  // rank-th element when elements are ordered by coordinate vector
  // (c_0, ..., c_{m-1}) compared lexicographically.
  uint32_t lex_element(uint64_t rank) const;

  // Discrete log base generator(); requires a != 0 and tables.
  uint64_t dlog(uint32_t a) const;
  uint32_t from_dlog(uint64_t e) const;

  // Table-free multiplication; kept public as the validation oracle path.
  uint32_t mul_schoolbook(uint32_t a, uint32_t b) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(int p, int m);

  void find_modulus();
  void build_reduction_rows();
  void find_generator();
  void build_tables();

  int p_ = 0;
  int m_ = 0;
  uint64_t q_ = 0;
  uint32_t up_ = 0;                 // p as uint32
  std::vector<uint32_t> pows_;      // p^0 .. p^{m-1}
  std::vector<int> modulus_;        // m+1 coefficients, constant term first
  std::vector<std::vector<int>> red_;  // x^{m+t} mod modulus, t = 0..m-2
  bool tables_ = false;
  uint32_t gen_ = 0;
  std::vector<uint32_t> exp_;       // 2(q-1) entries, exp_[e] = g^e
  std::vector<int32_t> log_;        // log_[idx], -1 for zero
};

// Value-semantic element handle for API-level code; hot loops use raw
// indices through Field directly.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& f, uint32_t idx) : f_(&f), v_(idx) {
    if (idx >= f.size()) throw std::invalid_argument("element index out of range");
  }

  const Field& field() const;
  uint32_t index() const { return v_; }
  std::vector<int> coords() const { return field().coords(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator-() const { return {field(), field().neg(v_)}; }
  FieldElement inverse() const { return {field(), field().inv(v_)}; }
  FieldElement pow(uint64_t e) const { return {field(), field().pow(v_, e)}; }
  FieldElement frobenius(uint64_t e) const { return {field(), field().frobenius(v_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field().add(a.v_, b.v_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field().sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field().mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.same(b), a.field().div(a.v_, b.v_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  const Field& same(const FieldElement& b) const;

  const Field* f_ = nullptr;
  uint32_t v_ = 0;
};

enum class ArithKind { add, sub, mul, div, neg, inv, pow };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind,
                   uint64_t e = 0);

// field_create(p, m): validated entry point mirroring Field::get.
const Field& field_create(int p, int m);

// Injective ring homomorphism GF(q^2) -> GF(q^4) realized by mapping the
// source power-basis generator to the coordinate-lex smallest root of the
// source modulus inside the target field. Only relative degree 2 is
// supported: towers with ord_{2n}(q^2) != 2 are rejected upstream.
class SubfieldEmbedding {
 public:
  static SubfieldEmbedding make(const Field& src, const Field& dst);

  const Field& source() const { return *src_; }
  const Field& target() const { return *dst_; }
  uint32_t generator_image() const { return gen_image_; }

  uint32_t embed(uint32_t src_idx) const { return fwd_[src_idx]; }
  // Inverse on the embedded subfield; throws if x is not an embedded element.
  uint32_t unembed(uint32_t dst_idx) const;
  bool in_subfield(uint32_t dst_idx) const { return rev_[dst_idx] >= 0; }

  SubfieldEmbedding() = default;  // empty placeholder until make() fills one

 private:
  const Field* src_ = nullptr;
  const Field* dst_ = nullptr;
  uint32_t gen_image_ = 0;
  std::vector<uint32_t> fwd_;
  std::vector<int32_t> rev_;
};

// Ordered basis (b1, b2) of GF(q^4) over GF(q^2) with the 2x2 solve data
// needed to expand target elements into coordinate pairs.
class BasisExpansion {
 public:
  // Validates GF(q^2)-linear independence of (b1, b2).
  static BasisExpansion make(const SubfieldEmbedding& emb, uint32_t b1, uint32_t b2);
  // Default basis (1, x) where x is the power-basis generator of GF(q^4).
  static BasisExpansion default_basis(const SubfieldEmbedding& emb);

  const SubfieldEmbedding& embedding() const { return *emb_; }
  std::pair<uint32_t, uint32_t> basis() const { return {b1_, b2_}; }

  // x = c1*b1 + c2*b2 with c1, c2 returned as GF(q^2) indices.
  std::pair<uint32_t, uint32_t> expand(uint32_t x) const;
  uint32_t reconstruct(uint32_t c1, uint32_t c2) const;

  BasisExpansion() = default;  // empty placeholder until make() fills one

 private:
  const SubfieldEmbedding* emb_ = nullptr;
  uint32_t b1_ = 0, b2_ = 0;
  uint32_t sb1_ = 0, sb2_ = 0;  // q^2-Frobenius images
  uint32_t det_inv_ = 0;
  uint64_t q2_ = 0;
};

// beta = g^((|F|-1)/2n) for the least primitive generator g; checks that the
// order is exactly 2n and that beta^n = -1. Throws std::domain_error when
// 2n does not divide |F| - 1.
uint32_t primitive_2n_root(const Field& f4, int n);

}  // namespace negaconv
