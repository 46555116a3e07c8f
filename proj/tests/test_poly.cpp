#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "negaconv/negacyclic.hpp"
#include "negaconv/poly.hpp"
#include "oracles.hpp"

using namespace negaconv;

namespace {

Poly random_poly(const Field& f, int max_deg, std::mt19937_64& rng) {
  Poly p(f);
  int deg = int(rng() % uint64_t(max_deg + 1));
  p.c.resize(size_t(deg) + 1);
  for (auto& c : p.c) c = uint32_t(rng() % f.size());
  p.trim();
  return p;
}

// gcd-based lcm, kept purely as a test-side cross-check of the product rule
Poly lcm_via_gcd(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  return divmod(a * b, g).first.monic();
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
  const Field& f = Field::get(3, 2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Poly a = random_poly(f, 6, rng);
    Poly b = random_poly(f, 6, rng);
    Poly c = random_poly(f, 6, rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE(a * Poly::one(f) == a);
    if (!b.is_zero()) {
      auto [quot, rem] = divmod(a, b);
      REQUIRE(quot * b + rem == a);
      REQUIRE((rem.is_zero() || rem.degree() < b.degree()));
    }
  }
  CHECK_THROWS_AS(divmod(Poly::one(f), Poly::zero(f)), std::domain_error);
}

TEST_CASE("gcd conventions") {
  const Field& f = Field::get(3, 2);
  Poly a(f, {2, 0, 1});  // x^2 + 2, not monic after scaling below
  Poly scaled(f);
  scaled.c = a.c;
  for (auto& c : scaled.c) c = f.mul(c, 5);
  CHECK(poly_gcd(scaled, Poly::zero(f)) == a.monic());
  // gcd of coprime polynomials is 1
  Poly x1(f, {1, 1});
  Poly x2(f, {2, 1});
  CHECK(poly_gcd(x1, x2) == Poly::one(f));
}

TEST_CASE("divmod example: x^5 + 1 by x + 1 over GF(9)") {
  const Field& f = Field::get(3, 2);
  Poly x5(f, {1, 0, 0, 0, 0, 1});
  Poly xp1(f, {1, 1});
  auto [quot, rem] = divmod(x5, xp1);
  CHECK(rem.is_zero());  // -1 is a root of x^5 + 1
  CHECK(quot.degree() == 4);
  CHECK(quot * xp1 == x5);  // re-multiply oracle
}

TEST_CASE("minimal polynomials against the root-evaluation oracle") {
  SUBCASE("embedded elements have degree-1 minimal polynomials") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    for (uint32_t s = 0; s < ctx.f2->size(); ++s) {
      Poly m = minimal_polynomial(ctx.emb, ctx.emb.embed(s));
      REQUIRE(m.degree() == 1);
      REQUIRE(m.c[0] == ctx.f2->neg(s));
    }
  }
  SUBCASE("q=3, n=5: minimal polynomial of beta^5 is X + 1") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    Poly m = minimal_polynomial(ctx.emb, ctx.beta_pow[5]);
    CHECK(m == Poly(*ctx.f2, {ctx.f2->one(), ctx.f2->one()}));
  }
  SUBCASE("q=5, n=26: minimal polynomial of beta^11 has roots exactly {beta^11, beta^15}") {
    const CodeContext& ctx = CodeContext::get(5, 26);
    Poly m = minimal_polynomial(ctx.emb, ctx.beta_pow[11]);
    CHECK(m.degree() == 2);
    // evaluate at all 52 powers of beta inside GF(q^4)
    const Field& f4 = *ctx.f4;
    std::vector<int> roots;
    for (int j = 0; j < 52; ++j) {
      uint32_t acc = f4.zero();
      for (size_t t = m.c.size(); t-- > 0;)
        acc = f4.add(f4.mul(acc, ctx.beta_pow[size_t(j)]), ctx.emb.embed(m.c[t]));
      if (acc == f4.zero()) roots.push_back(j);
    }
    CHECK(roots == std::vector<int>{11, 15});
  }
  SUBCASE("conjugate-root property on random powers") {
    const CodeContext& ctx = CodeContext::get(5, 26);
    const Field& f4 = *ctx.f4;
    uint64_t q2 = ctx.f2->size();
    for (int j = 1; j < 52; j += 2) {
      Poly m = minimal_polynomial(ctx.emb, ctx.beta_pow[size_t(j)]);
      uint32_t conj = f4.pow(ctx.beta_pow[size_t(j)], q2);
      uint32_t acc = f4.zero();
      for (size_t t = m.c.size(); t-- > 0;)
        acc = f4.add(f4.mul(acc, conj), ctx.emb.embed(m.c[t]));
      REQUIRE(acc == f4.zero());
    }
  }
}

TEST_CASE("generator_from_cosets") {
  SUBCASE("empty list gives the constant 1") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    Poly g = generator_from_cosets(ctx.emb, {}, ctx.beta_pow);
    CHECK(g == Poly::one(*ctx.f2));
  }
  SUBCASE("q=3, n=5, coset {1,9}: degree-2 divisor of x^5 + 1 over GF(9)") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    std::vector<std::vector<int>> cosets{{1, 9}};
    Poly g = generator_from_cosets(ctx.emb, cosets, ctx.beta_pow);
    CHECK(g.degree() == 2);
    CHECK(divmod(Poly::x_n_plus_1(*ctx.f2, 5), g).second.is_zero());  // trial division
  }
  SUBCASE("q=5, n=26, cosets of 13, 11, 9: degree-5 divisor of x^26 + 1") {
    const CodeContext& ctx = CodeContext::get(5, 26);
    std::vector<std::vector<int>> cosets{coset_of(13, 26, 5), coset_of(11, 26, 5),
                                         coset_of(9, 26, 5)};
    Poly g = generator_from_cosets(ctx.emb, cosets, ctx.beta_pow);
    CHECK(g.degree() == 5);  // dimension 21 = 26 - 5
    CHECK(divmod(Poly::x_n_plus_1(*ctx.f2, 26), g).second.is_zero());
  }
  SUBCASE("overlapping cosets are rejected") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    std::vector<std::vector<int>> cosets{{1, 9}, {1, 9}};
    CHECK_THROWS_AS(generator_from_cosets(ctx.emb, cosets, ctx.beta_pow),
                    std::invalid_argument);
  }
}

TEST_CASE("complete factorization: product over all odd cosets equals x^n + 1") {
  for (auto [q, n] : {std::pair<int, int>{3, 5}, {5, 13}, {5, 26}, {7, 25}}) {
    const CodeContext& ctx = CodeContext::get(q, n);
    auto cosets = all_odd_cosets(n, q);
    Poly g = generator_from_cosets(ctx.emb, cosets, ctx.beta_pow);
    REQUIRE(g == Poly::x_n_plus_1(*ctx.f2, n));
  }
}

TEST_CASE("lcm of minimal polynomials over distinct cosets equals their product") {
  const CodeContext& ctx = CodeContext::get(5, 26);
  Poly m13 = minimal_polynomial(ctx.emb, ctx.beta_pow[13]);
  Poly m11 = minimal_polynomial(ctx.emb, ctx.beta_pow[11]);
  Poly m9 = minimal_polynomial(ctx.emb, ctx.beta_pow[9]);
  Poly product = (m13 * m11) * m9;
  CHECK(lcm_via_gcd(lcm_via_gcd(m13, m11), m9) == product.monic());
}
