#include "negaconv/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <memory>
#include <random>

namespace negaconv {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; int64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over Z_p used only for the modulus search. Coefficient
// vectors are constant-term first and kept trimmed.
using ZPoly = std::vector<int>;

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const ZPoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = int((c[i + j] + int64_t(a[i]) * b[j]) % p);
  // reduce mod f (monic)
  int m = int(f.size()) - 1;
  for (int t = int(c.size()) - 1; t >= m; --t) {
    int lead = c[t];
    if (lead == 0) continue;
    c[t] = 0;
    for (int j = 0; j < m; ++j) {
      int64_t v = c[t - m + j] - int64_t(lead) * f[j];
      c[t - m + j] = int(((v % p) + p) % p);
    }
  }
  c.resize(m);
  zp_trim(c);
  return c;
}

ZPoly zp_pow_x_mod(uint64_t e, const ZPoly& f, int p) {
  ZPoly result{1};
  ZPoly base{0, 1};
  while (e) {
    if (e & 1) result = zp_mul_mod(result, base, f, p);
    base = zp_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

ZPoly zp_mod(ZPoly a, const ZPoly& b, int p) {
  zp_trim(a);
  int db = int(b.size()) - 1;
  int lead_inv = 0;
  for (int t = 1; t < p; ++t)
    if (t * b[db] % p == 1) lead_inv = t;
  while (int(a.size()) - 1 >= db && !a.empty()) {
    int da = int(a.size()) - 1;
    int c = int(int64_t(a[da]) * lead_inv % p);
    for (int j = 0; j <= db; ++j) {
      int64_t v = a[da - db + j] - int64_t(c) * b[j];
      a[da - db + j] = int(((v % p) + p) % p);
    }
    zp_trim(a);
  }
  return a;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, int p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    ZPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility over Z_p: x^{p^m} = x mod f, and gcd(x^{p^{m/l}} - x, f)
// constant for every prime l dividing m.
bool zp_irreducible(const ZPoly& f, int p, int m) {
  auto pow_p = [&](int k) {
    uint64_t e = 1;
    for (int i = 0; i < k; ++i) e *= uint64_t(p);
    return e;
  };
  ZPoly xqm = zp_pow_x_mod(pow_p(m), f, p);
  ZPoly x{0, 1};
  ZPoly diff = xqm;
  diff.resize(std::max(diff.size(), x.size()), 0);
  for (size_t i = 0; i < x.size(); ++i) diff[i] = ((diff[i] - x[i]) % p + p) % p;
  zp_trim(diff);
  if (!diff.empty()) return false;
  for (uint64_t l : prime_factors(uint64_t(m))) {
    ZPoly xq = zp_pow_x_mod(pow_p(int(m / l)), f, p);
    ZPoly d = xq;
    d.resize(std::max(d.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) d[i] = ((d[i] - x[i]) % p + p) % p;
    zp_trim(d);
    ZPoly g = zp_gcd(f, d, p);
    if (int(g.size()) - 1 != 0) return false;
  }
  return true;
}

constexpr uint64_t kTableLimit = uint64_t(1) << 20;

}  // namespace

Field::Field(int p, int m) : p_(p), m_(m), up_(uint32_t(p)) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("characteristic must be an odd prime");
  if (m < 1) throw std::invalid_argument("extension degree must be positive");
  q_ = 1;
  pows_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    pows_[i] = uint32_t(q_);
    q_ *= uint64_t(p_);
    if (q_ > (uint64_t(1) << 31)) throw std::invalid_argument("field too large");
  }
  find_modulus();
  build_reduction_rows();
  find_generator();
  if (q_ < kTableLimit) build_tables();
}

void Field::find_modulus() {
  // Lexicographically smallest monic irreducible: enumerate coefficient
  // vectors (c_0, ..., c_{m-1}) in lex ascending order (c_0 is the most
  // significant digit of the enumeration rank).
  uint64_t count = 1;
  for (int i = 0; i < m_; ++i) count *= uint64_t(p_);
  for (uint64_t r = 0; r < count; ++r) {
    ZPoly g(m_ + 1, 0);
    g[m_] = 1;
    uint64_t div = count / uint64_t(p_);
    uint64_t rem = r;
    for (int i = 0; i < m_; ++i) {
      g[i] = int(rem / div);
      rem %= div;
      if (i + 1 < m_) div /= uint64_t(p_);
    }
    if (m_ == 1) {
      // linear polynomials are always irreducible
      modulus_ = g;
      return;
    }
    if (g[0] == 0) continue;  // divisible by x
    if (zp_irreducible(g, p_, m_)) {
      modulus_ = g;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

void Field::build_reduction_rows() {
  if (m_ == 1) return;
  red_.assign(m_ - 1, std::vector<int>(m_, 0));
  // x^m = -sum f_i x^i
  for (int j = 0; j < m_; ++j) red_[0][j] = ((-modulus_[j]) % p_ + p_) % p_;
  for (int t = 1; t < m_ - 1; ++t) {
    // x^{m+t} = x * x^{m+t-1}
    std::vector<int> shifted(m_ + 1, 0);
    for (int j = 0; j < m_; ++j) shifted[j + 1] = red_[t - 1][j];
    int lead = shifted[m_];
    for (int j = 0; j < m_; ++j)
      red_[t][j] = int(((shifted[j] + int64_t(lead) * red_[0][j]) % p_));
  }
}

uint32_t Field::mul_schoolbook(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return uint32_t(uint64_t(a) * b % up_);
  int ca[16], cb[16];
  int64_t conv[31] = {0};
  uint32_t ta = a, tb = b;
  for (int i = 0; i < m_; ++i) {
    ca[i] = int(ta % up_);
    cb[i] = int(tb % up_);
    ta /= up_;
    tb /= up_;
  }
  for (int i = 0; i < m_; ++i) {
    if (!ca[i]) continue;
    for (int j = 0; j < m_; ++j) conv[i + j] += int64_t(ca[i]) * cb[j];
  }
  for (int t = 2 * m_ - 2; t >= m_; --t) {
    int64_t lead = conv[t] % p_;
    if (!lead) continue;
    // x^t = x^{m+s} with s = t - m expands into absolute positions 0..m-1
    for (int j = 0; j < m_; ++j) conv[j] += lead * red_[t - m_][j];
  }
  uint32_t out = 0;
  for (int i = 0; i < m_; ++i) out += uint32_t(((conv[i] % p_) + p_) % p_) * pows_[i];
  return out;
}

namespace {
uint32_t pow_schoolbook(const Field& f, uint32_t a, uint64_t e) {
  uint32_t result = f.one();
  uint32_t base = a;
  while (e) {
    if (e & 1) result = f.mul_schoolbook(result, base);
    base = f.mul_schoolbook(base, base);
    e >>= 1;
  }
  return result;
}
}  // namespace

void Field::find_generator() {
  uint64_t order = q_ - 1;
  auto primes = prime_factors(order);
  for (uint64_t r = 1; r < q_; ++r) {
    uint32_t g = lex_element(r);
    if (g == 0) continue;
    bool ok = true;
    for (uint64_t pr : primes) {
      if (pow_schoolbook(*this, g, order / pr) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = g;
      return;
    }
  }
  throw std::logic_error("no generator found");
}

void Field::build_tables() {
  uint64_t order = q_ - 1;
  exp_.resize(2 * order);
  log_.assign(q_, -1);
  uint32_t cur = one();
  for (uint64_t e = 0; e < order; ++e) {
    exp_[e] = cur;
    exp_[e + order] = cur;
    if (log_[cur] != -1) throw std::logic_error("generator order defect");
    log_[cur] = int32_t(e);
    cur = mul_schoolbook(cur, gen_);
  }
  if (cur != one()) throw std::logic_error("generator does not close cycle");
  tables_ = true;
  // validate on deterministic pseudo-random pairs
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < 10000; ++t) {
    uint32_t a = uint32_t(rng() % q_);
    uint32_t b = uint32_t(rng() % q_);
    if (mul(a, b) != mul_schoolbook(a, b)) throw std::logic_error("log table validation failed");
  }
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  if (tables_) return exp_[(q_ - 1) - uint64_t(log_[a])];
  return pow_schoolbook(*this, a, q_ - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const {
  if (b == 0) throw std::domain_error("division by zero");
  return mul(a, inv(b));
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  if (e == 0) return one();
  if (a == 0) return 0;
  uint64_t r = e % (q_ - 1);
  if (tables_) {
    if (r == 0) return one();
    return exp_[uint64_t(log_[a]) * r % (q_ - 1)];
  }
  return pow_schoolbook(*this, a, r == 0 ? q_ - 1 : r);
}

uint32_t Field::frobenius(uint32_t x, uint64_t e) const {
  uint64_t t = e;
  while (t > 1) {
    if (t % uint64_t(p_) != 0) throw std::invalid_argument("frobenius exponent must be a power of p");
    t /= uint64_t(p_);
  }
  if (t != 1) throw std::invalid_argument("frobenius exponent must be a power of p");
  return pow(x, e);
}

uint32_t Field::scalar(int64_t c) const {
  int64_t r = c % p_;
  if (r < 0) r += p_;
  return uint32_t(r);
}

std::vector<int> Field::coords(uint32_t idx) const {
  std::vector<int> out(m_);
  for (int i = 0; i < m_; ++i) {
    out[i] = int(idx % up_);
    idx /= up_;
  }
  return out;
}

uint32_t Field::from_coords(std::span<const int> c) const {
  if (int(c.size()) != m_) throw std::invalid_argument("coordinate vector has wrong length");
  uint32_t out = 0;
  for (int i = 0; i < m_; ++i) {
    int d = c[i];
    if (d < 0 || d >= p_) throw std::invalid_argument("coordinate out of range");
    out += uint32_t(d) * pows_[i];
  }
  return out;
}

uint32_t Field::lex_element(uint64_t rank) const {
  if (rank >= q_) throw std::invalid_argument("lex rank out of range");
  // c_0 is the most significant digit under lexicographic comparison
  uint32_t out = 0;
  uint64_t div = q_ / uint64_t(p_);
  for (int i = 0; i < m_; ++i) {
    out += uint32_t(rank / div) * pows_[i];
    rank %= div;
    if (i + 1 < m_) div /= uint64_t(p_);
  }
  return out;
}

uint64_t Field::dlog(uint32_t a) const {
  if (a == 0) throw std::domain_error("dlog of zero");
  if (!tables_) throw std::logic_error("dlog requires tables");
  return uint64_t(log_[a]);
}

uint32_t Field::from_dlog(uint64_t e) const {
  if (!tables_) throw std::logic_error("from_dlog requires tables");
  return exp_[e % (q_ - 1)];
}

const Field& Field::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, m))).first;
  return *it->second;
}

const Field& field_create(int p, int m) { return Field::get(p, m); }

const Field& FieldElement::field() const {
  if (!f_) throw std::logic_error("default-constructed field element");
  return *f_;
}

const Field& FieldElement::same(const FieldElement& b) const {
  if (f_ != b.f_) throw std::invalid_argument("mismatched field specs");
  return field();
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind,
                   uint64_t e) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
    case ArithKind::neg: return -a;
    case ArithKind::inv: return a.inverse();
    case ArithKind::pow: return a.pow(e);
  }
  throw std::invalid_argument("unknown arith kind");
}

SubfieldEmbedding SubfieldEmbedding::make(const Field& src, const Field& dst) {
  if (src.characteristic() != dst.characteristic())
    throw std::invalid_argument("embedding requires equal characteristic");
  if (dst.degree() != 2 * src.degree())
    throw std::invalid_argument("only relative degree 2 towers are supported");
  SubfieldEmbedding emb;
  emb.src_ = &src;
  emb.dst_ = &dst;
  // coordinate-lex smallest root of the source modulus in the target field
  const auto& f = src.modulus();
  uint32_t root = 0;
  bool found = false;
  for (uint64_t r = 0; r < dst.size(); ++r) {
    uint32_t x = dst.lex_element(r);
    uint32_t acc = dst.zero();
    uint32_t xp = dst.one();
    for (size_t i = 0; i < f.size(); ++i) {
      acc = dst.add(acc, dst.mul(dst.scalar(f[i]), xp));
      xp = dst.mul(xp, x);
    }
    if (acc == dst.zero()) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("source modulus has no root in target field");
  emb.gen_image_ = root;

  emb.fwd_.resize(src.size());
  emb.rev_.assign(dst.size(), -1);
  std::vector<uint32_t> wpow(src.degree());
  uint32_t wp = dst.one();
  for (int i = 0; i < src.degree(); ++i) {
    wpow[i] = wp;
    wp = dst.mul(wp, root);
  }
  for (uint64_t s = 0; s < src.size(); ++s) {
    auto c = src.coords(uint32_t(s));
    uint32_t img = dst.zero();
    for (int i = 0; i < src.degree(); ++i)
      img = dst.add(img, dst.mul(dst.scalar(c[i]), wpow[i]));
    emb.fwd_[s] = img;
    if (emb.rev_[img] != -1) throw std::logic_error("embedding is not injective");
    emb.rev_[img] = int32_t(s);
  }
  // structural sanity: embedded elements are fixed by x -> x^{q^2}
  uint64_t q2 = src.size();
  for (uint64_t s = 0; s < src.size(); ++s) {
    uint32_t img = emb.fwd_[s];
    if (dst.pow(img, q2) != img) throw std::logic_error("embedded element not Frobenius-fixed");
  }
  return emb;
}

uint32_t SubfieldEmbedding::unembed(uint32_t dst_idx) const {
  int32_t s = rev_[dst_idx];
  if (s < 0) throw std::domain_error("element is not in the embedded subfield");
  return uint32_t(s);
}

BasisExpansion BasisExpansion::make(const SubfieldEmbedding& emb, uint32_t b1, uint32_t b2) {
  const Field& dst = emb.target();
  BasisExpansion be;
  be.emb_ = &emb;
  be.b1_ = b1;
  be.b2_ = b2;
  be.q2_ = emb.source().size();
  be.sb1_ = dst.pow(b1, be.q2_);
  be.sb2_ = dst.pow(b2, be.q2_);
  uint32_t det = dst.sub(dst.mul(b1, be.sb2_), dst.mul(b2, be.sb1_));
  if (det == dst.zero())
    throw std::invalid_argument("basis elements are GF(q^2)-dependent");
  be.det_inv_ = dst.inv(det);
  return be;
}

BasisExpansion BasisExpansion::default_basis(const SubfieldEmbedding& emb) {
  const Field& dst = emb.target();
  // (1, x): x is the power-basis generator, never in a proper subfield
  return make(emb, dst.one(), uint32_t(dst.characteristic()));
}

std::pair<uint32_t, uint32_t> BasisExpansion::expand(uint32_t x) const {
  const Field& dst = emb_->target();
  uint32_t sx = dst.pow(x, q2_);
  uint32_t c1 = dst.mul(dst.sub(dst.mul(x, sb2_), dst.mul(b2_, sx)), det_inv_);
  uint32_t c2 = dst.mul(dst.sub(dst.mul(b1_, sx), dst.mul(x, sb1_)), det_inv_);
  return {emb_->unembed(c1), emb_->unembed(c2)};
}

uint32_t BasisExpansion::reconstruct(uint32_t c1, uint32_t c2) const {
  const Field& dst = emb_->target();
  return dst.add(dst.mul(emb_->embed(c1), b1_), dst.mul(emb_->embed(c2), b2_));
}

uint32_t primitive_2n_root(const Field& f4, int n) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  uint64_t order = f4.size() - 1;
  uint64_t two_n = 2 * uint64_t(n);
  if (order % two_n != 0)
    throw std::domain_error("2n does not divide q^4 - 1: invalid (q, n) pairing");
  uint32_t beta = f4.pow(f4.generator(), order / two_n);
  for (uint64_t pr : prime_factors(two_n))
    if (f4.pow(beta, two_n / pr) == f4.one())
      throw std::logic_error("primitive root candidate has small order");
  if (f4.pow(beta, two_n) != f4.one()) throw std::logic_error("root order defect");
  if (f4.pow(beta, uint64_t(n)) != f4.neg(f4.one()))
    throw std::logic_error("beta^n != -1");
  return beta;
}

}  // namespace negaconv
