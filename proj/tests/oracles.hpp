#pragma once

// Brute-force oracles for tests: independent of the library paths they
// check. Expected values asserted by the suites are computed here (or taken
// from the reference tables) and frozen into the tests.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "negaconv/field.hpp"
#include "negaconv/matrix.hpp"
#include "negaconv/negacyclic.hpp"
#include "negaconv/poly.hpp"

namespace oracle {

// --- integer polynomials over Z_p, constant term first ---

inline std::vector<int> zp_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<int> zp_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = int((c[i + j] + int64_t(a[i]) * b[j]) % p);
  return zp_trim(std::move(c));
}

// full trial division by every monic polynomial of degree 1..deg/2
inline bool is_irreducible_trial_division(const std::vector<int>& f, int p) {
  std::vector<int> ft = zp_trim(f);
  int deg = int(ft.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisor candidates of degree d
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= uint64_t(p);
    for (uint64_t r = 0; r < count; ++r) {
      std::vector<int> g(size_t(d) + 1, 0);
      g[size_t(d)] = 1;
      uint64_t t = r;
      for (int i = 0; i < d; ++i) {
        g[size_t(i)] = int(t % uint64_t(p));
        t /= uint64_t(p);
      }
      // long division remainder
      std::vector<int> rem = ft;
      while (int(rem.size()) - 1 >= d && !rem.empty()) {
        int shift = int(rem.size()) - 1 - d;
        int lead = rem.back();
        for (int j = 0; j <= d; ++j) {
          int64_t v = rem[size_t(shift + j)] - int64_t(lead) * g[size_t(j)];
          rem[size_t(shift + j)] = int(((v % p) + p) % p);
        }
        rem = zp_trim(std::move(rem));
      }
      if (rem.empty()) return false;
    }
  }
  return true;
}

inline std::vector<int> lex_smallest_irreducible(int p, int m) {
  uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= uint64_t(p);
  for (uint64_t r = 0; r < count; ++r) {
    std::vector<int> g(size_t(m) + 1, 0);
    g[size_t(m)] = 1;
    uint64_t div = count / uint64_t(p);
    uint64_t rem = r;
    for (int i = 0; i < m; ++i) {
      g[size_t(i)] = int(rem / div);
      rem %= div;
      if (i + 1 < m) div /= uint64_t(p);
    }
    if (m == 1) return g;
    if (g[0] == 0) continue;
    if (is_irreducible_trial_division(g, p)) return g;
  }
  return {};
}

// --- code-side oracles ---

// exact minimum weight by iterating every nonzero message polynomial and
// reducing u(x) g(x) mod x^n + 1: independent of the generator-matrix path
inline int min_weight_by_poly_route(const negaconv::NegacyclicCode& code) {
  const negaconv::Field& f = *code.ctx->f2;
  int n = code.n();
  int k = code.k;
  uint64_t q = f.size();
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  negaconv::Poly xn1 = negaconv::Poly::x_n_plus_1(f, n);
  int best = n + 1;
  for (uint64_t msg = 1; msg < total; ++msg) {
    negaconv::Poly u(f);
    uint64_t t = msg;
    u.c.resize(size_t(k));
    for (int i = 0; i < k; ++i) {
      u.c[size_t(i)] = uint32_t(t % q);
      t /= q;
    }
    u.trim();
    negaconv::Poly w = divmod(u * code.g, xn1).second;
    int weight = 0;
    for (uint32_t c : w.c)
      if (c) ++weight;
    best = std::min(best, weight);
  }
  return best;
}

// designed distance by trying every possible run start and length directly
inline int designed_distance_all_starts(const negaconv::DefiningSet& z) {
  if (z.empty()) return 1;
  int two_n = 2 * z.n;
  int best = 0;
  for (int start = 1; start < two_n; start += 2) {
    int len = 0;
    int cur = start;
    while (len < z.n && z.contains(cur)) {
      ++len;
      cur = (cur + 2) % two_n;
    }
    best = std::max(best, len);
  }
  return best + 1;
}

inline uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
  return r;
}

// ordinary (non-Hermitian) block dual distance by enumerating the null
// space code of the generator matrix
inline int block_dual_distance(const negaconv::NegacyclicCode& code) {
  const negaconv::Field& f = *code.ctx->f2;
  negaconv::Mat dual = negaconv::nullspace(negaconv::generator_matrix(code));
  int n = code.n();
  uint64_t q = f.size();
  uint64_t total = 1;
  for (int i = 0; i < dual.rows; ++i) total *= q;
  int best = n + 1;
  std::vector<uint32_t> word(static_cast<size_t>(n));
  for (uint64_t msg = 1; msg < total; ++msg) {
    std::fill(word.begin(), word.end(), 0);
    uint64_t t = msg;
    for (int r = 0; r < dual.rows; ++r) {
      uint32_t c = uint32_t(t % q);
      t /= q;
      if (!c) continue;
      for (int j = 0; j < n; ++j) word[size_t(j)] = f.add(word[size_t(j)], f.mul(c, dual.at(r, j)));
    }
    int weight = 0;
    for (uint32_t v : word)
      if (v) ++weight;
    best = std::min(best, weight);
  }
  return best;
}

}  // namespace oracle
