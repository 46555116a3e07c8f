#include "negaconv/poly.hpp"

#include <set>
#include <stdexcept>

namespace negaconv {

Poly Poly::x_n_plus_1(const Field& f, int n) {
  std::vector<uint32_t> c(size_t(n) + 1, 0);
  c[0] = f.one();
  c[size_t(n)] = f.one();
  return Poly(f, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r(*F);
  r.c.resize(c.size());
  uint32_t linv = F->inv(lead());
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = F->mul(c[i], linv);
  return r;
}

uint32_t Poly::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = F->add(F->mul(acc, x), c[i]);
  return acc;
}

namespace {
const Field& same(const Poly& a, const Poly& b) {
  if (a.F != b.F) throw std::invalid_argument("mismatched polynomial fields");
  return *a.F;
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = same(a, b);
  Poly r(f);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.add(a.coeff(int(i)), b.coeff(int(i)));
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = same(a, b);
  Poly r(f);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.sub(a.coeff(int(i)), b.coeff(int(i)));
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& f = same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(f);
  Poly r(f);
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (!b.c[j]) continue;
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    }
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const Field& f = same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  Poly quot(f);
  int db = b.degree();
  if (rem.degree() >= db) quot.c.assign(size_t(rem.degree() - db) + 1, 0);
  uint32_t binv = f.inv(b.lead());
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    uint32_t c = f.mul(rem.lead(), binv);
    quot.c[size_t(shift)] = c;
    for (int j = 0; j <= db; ++j)
      rem.c[size_t(shift + j)] = f.sub(rem.c[size_t(shift + j)], f.mul(c, b.c[size_t(j)]));
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly minimal_polynomial(const SubfieldEmbedding& emb, uint32_t x) {
  const Field& dst = emb.target();
  const Field& src = emb.source();
  uint64_t q2 = src.size();
  uint32_t sx = dst.pow(x, q2);
  // orbit size is 1 or 2 in a relative degree-2 tower
  std::vector<uint32_t> dcoeffs;
  if (sx == x) {
    dcoeffs = {dst.neg(x), dst.one()};
  } else {
    if (dst.pow(sx, q2) != x) throw std::logic_error("Frobenius orbit size exceeds 2");
    // (X - x)(X - sx) = X^2 - (x + sx) X + x*sx
    dcoeffs = {dst.mul(x, sx), dst.neg(dst.add(x, sx)), dst.one()};
  }
  Poly out(src);
  out.c.resize(dcoeffs.size());
  for (size_t i = 0; i < dcoeffs.size(); ++i) {
    if (!emb.in_subfield(dcoeffs[i]))
      throw std::logic_error("minimal polynomial coefficient escaped the subfield");
    out.c[i] = emb.unembed(dcoeffs[i]);
  }
  return out;
}

Poly generator_from_cosets(const SubfieldEmbedding& emb,
                           std::span<const std::vector<int>> cosets,
                           std::span<const uint32_t> beta_pow) {
  const Field& src = emb.source();
  std::set<int> seen;
  for (const auto& cs : cosets)
    for (int z : cs)
      if (!seen.insert(z).second)
        throw std::invalid_argument("overlapping cosets in generator construction");
  Poly g = Poly::one(src);
  for (const auto& cs : cosets) {
    int rep = cs.front();
    g = g * minimal_polynomial(emb, beta_pow[size_t(rep)]);
  }
  return g;
}

}  // namespace negaconv
