#pragma once

// Univariate dense polynomials over a finite field. Coefficient vectors are
// constant term first; the zero polynomial is the empty vector, so the
// leading coefficient of a nonzero polynomial is always nonzero.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "negaconv/field.hpp"

namespace negaconv {

struct Poly {
  const Field* F = nullptr;
  std::vector<uint32_t> c;

  Poly() = default;
  explicit Poly(const Field& f) : F(&f) {}
  Poly(const Field& f, std::vector<uint32_t> coeffs) : F(&f), c(std::move(coeffs)) { trim(); }

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly one(const Field& f) { return Poly(f, {f.one()}); }
  static Poly constant(const Field& f, uint32_t v) { return Poly(f, {v}); }
  // x^n + 1
  static Poly x_n_plus_1(const Field& f, int n);

  int degree() const { return int(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  uint32_t coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : 0; }
  uint32_t lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  Poly monic() const;
  uint32_t eval(uint32_t x) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.F == b.F && a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(a, 0) is the monic multiple of a.
Poly poly_gcd(Poly a, Poly b);

// Monic minimal polynomial over the embedded subfield of x in the target
// field: the product of (X - sigma^j(x)) over the Frobenius orbit of x under
// sigma: y -> y^{q^2}. Coefficients are pulled back through the embedding;
// an orbit product with a coefficient outside the subfield signals a broken
// embedding and throws std::logic_error.
Poly minimal_polynomial(const SubfieldEmbedding& emb, uint32_t x);

// Product of the minimal polynomials of beta^rep over pairwise disjoint
// cosets. beta_pow[j] = beta^j for j mod 2n. Overlapping cosets throw.
Poly generator_from_cosets(const SubfieldEmbedding& emb,
                           std::span<const std::vector<int>> cosets,
                           std::span<const uint32_t> beta_pow);

}  // namespace negaconv
