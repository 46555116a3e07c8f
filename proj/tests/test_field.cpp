#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "negaconv/field.hpp"
#include "oracles.hpp"

using namespace negaconv;

TEST_CASE("field_create validates inputs") {
  CHECK_THROWS_AS(field_create(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(field_create(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(field_create(15, 1), std::invalid_argument);
  CHECK_THROWS_AS(field_create(5, 0), std::invalid_argument);
}

TEST_CASE("deterministic moduli") {
  const Field& f81 = field_create(3, 4);
  CHECK(f81.size() == 81);
  CHECK(f81.modulus().size() == 5);

  const Field& f5 = field_create(5, 1);
  CHECK(f5.size() == 5);
  CHECK(f5.modulus().size() == 2);

  // GF(625): irreducible by full trial division, and the lex-smallest one
  const Field& f625 = field_create(5, 4);
  CHECK(oracle::is_irreducible_trial_division(f625.modulus(), 5));
  CHECK(oracle::lex_smallest_irreducible(5, 4) == f625.modulus());
  CHECK(oracle::lex_smallest_irreducible(3, 4) == f81.modulus());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240811);
  for (auto [p, m] : {std::pair<int, int>{3, 2}, {3, 4}, {5, 2}, {5, 4}, {7, 2}, {7, 4}}) {
    const Field& f = Field::get(p, m);
    for (int t = 0; t < 1000; ++t) {
      uint32_t a = uint32_t(rng() % f.size());
      uint32_t b = uint32_t(rng() % f.size());
      uint32_t c = uint32_t(rng() % f.size());
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.add(a, 0) == a);
      REQUIRE(f.mul(a, f.one()) == a);
      REQUIRE(f.add(a, f.neg(a)) == 0);
      if (a) REQUIRE(f.mul(a, f.inv(a)) == f.one());
      REQUIRE(f.mul(a, b) == f.mul_schoolbook(a, b));
    }
  }
}

TEST_CASE("arith dispatch and element API") {
  const Field& f = Field::get(3, 2);
  FieldElement a(f, 5), b(f, 7);
  CHECK(arith(a, b, ArithKind::add) == a + b);
  CHECK(arith(a, b, ArithKind::sub) == a - b);
  CHECK(arith(a, b, ArithKind::mul) == a * b);
  CHECK(arith(a, b, ArithKind::div) == a / b);
  CHECK(arith(a, b, ArithKind::neg) == -a);
  CHECK(arith(a, b, ArithKind::inv) == a.inverse());
  CHECK(arith(a, b, ArithKind::pow, 8) == FieldElement(f, f.one()));  // Lagrange
  CHECK_THROWS_AS(FieldElement(f, 0).inverse(), std::domain_error);
  const Field& g = Field::get(5, 2);
  CHECK_THROWS_AS(a + FieldElement(g, 1), std::invalid_argument);
}

TEST_CASE("Lagrange: a^(q-1) = 1 for random nonzero a") {
  std::mt19937_64 rng(99);
  for (auto [p, m] : {std::pair<int, int>{3, 4}, {5, 4}, {7, 2}}) {
    const Field& f = Field::get(p, m);
    for (int t = 0; t < 200; ++t) {
      uint32_t a = uint32_t(1 + rng() % (f.size() - 1));
      CHECK(f.pow(a, f.size() - 1) == f.one());
    }
  }
}

TEST_CASE("frobenius") {
  const Field& f81 = Field::get(3, 4);
  SUBCASE("prime field elements are fixed by x -> x^p") {
    for (uint32_t c = 0; c < 3; ++c) CHECK(f81.frobenius(c, 3) == c);
  }
  SUBCASE("x -> x^9 fixes exactly 9 elements of GF(81)") {
    int fixed = 0;
    for (uint32_t x = 0; x < 81; ++x)
      if (f81.frobenius(x, 9) == x) ++fixed;
    CHECK(fixed == 9);
    // so x^9 != x for any generator of the multiplicative group
    CHECK(f81.frobenius(f81.generator(), 9) != f81.generator());
  }
  SUBCASE("order-2 relative Galois group") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      uint32_t x = uint32_t(rng() % 81);
      CHECK(f81.frobenius(f81.frobenius(x, 9), 9) == x);
    }
  }
  SUBCASE("exponent must be a power of p") {
    CHECK_THROWS_AS(f81.frobenius(5, 6), std::invalid_argument);
  }
}

TEST_CASE("primitive 2n-th roots") {
  SUBCASE("q=3, n=5 in GF(81)") {
    const Field& f = Field::get(3, 4);
    uint32_t beta = primitive_2n_root(f, 5);
    CHECK(f.pow(beta, 10) == f.one());
    CHECK(f.pow(beta, 5) == f.neg(f.one()));
    // alpha = beta^2 is a primitive 5th root
    uint32_t alpha = f.mul(beta, beta);
    CHECK(f.pow(alpha, 5) == f.one());
    for (int d = 1; d < 5; ++d) CHECK(f.pow(alpha, d) != f.one());
  }
  SUBCASE("q=5, n=26 in GF(625): full divisor test") {
    const Field& f = Field::get(5, 4);
    uint32_t beta = primitive_2n_root(f, 26);
    CHECK(f.pow(beta, 52) == f.one());
    CHECK(f.pow(beta, 26) == f.neg(f.one()));
    for (int d = 1; d < 52; ++d)
      if (52 % d == 0) CHECK(f.pow(beta, d) != f.one());
  }
  SUBCASE("q=5, n=27 rejected: 54 does not divide 624") {
    CHECK_THROWS_AS(primitive_2n_root(Field::get(5, 4), 27), std::domain_error);
  }
}

TEST_CASE("subfield embedding is a ring homomorphism with q^2 fixed points") {
  std::mt19937_64 rng(17);
  for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field& f2 = Field::get(p, 2 * e);
    const Field& f4 = Field::get(p, 4 * e);
    SubfieldEmbedding emb = SubfieldEmbedding::make(f2, f4);
    CHECK(emb.embed(f2.zero()) == f4.zero());
    CHECK(emb.embed(f2.one()) == f4.one());
    for (int t = 0; t < 500; ++t) {
      uint32_t a = uint32_t(rng() % f2.size());
      uint32_t b = uint32_t(rng() % f2.size());
      REQUIRE(emb.embed(f2.add(a, b)) == f4.add(emb.embed(a), emb.embed(b)));
      REQUIRE(emb.embed(f2.mul(a, b)) == f4.mul(emb.embed(a), emb.embed(b)));
    }
    // fixed points of x -> x^{q^2} in GF(q^4) are exactly the embedded copy
    uint64_t q2 = f2.size();
    int fixed = 0;
    for (uint64_t x = 0; x < f4.size(); ++x) {
      bool is_fixed = f4.pow(uint32_t(x), q2) == uint32_t(x);
      if (is_fixed) ++fixed;
      CHECK(is_fixed == emb.in_subfield(uint32_t(x)));
    }
    CHECK(uint64_t(fixed) == q2);
  }
}

TEST_CASE("basis expansion") {
  const Field& f2 = Field::get(5, 2);
  const Field& f4 = Field::get(5, 4);
  SubfieldEmbedding emb = SubfieldEmbedding::make(f2, f4);
  BasisExpansion basis = BasisExpansion::default_basis(emb);

  SUBCASE("basis vectors and zero expand canonically") {
    auto [b1, b2] = basis.basis();
    CHECK(basis.expand(b1) == std::pair<uint32_t, uint32_t>{f2.one(), f2.zero()});
    CHECK(basis.expand(b2) == std::pair<uint32_t, uint32_t>{f2.zero(), f2.one()});
    CHECK(basis.expand(f4.zero()) == std::pair<uint32_t, uint32_t>{0u, 0u});
  }
  SUBCASE("round trips both ways") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 1000; ++t) {
      uint32_t c1 = uint32_t(rng() % f2.size());
      uint32_t c2 = uint32_t(rng() % f2.size());
      CHECK(basis.expand(basis.reconstruct(c1, c2)) == std::pair<uint32_t, uint32_t>{c1, c2});
      uint32_t x = uint32_t(rng() % f4.size());
      auto [d1, d2] = basis.expand(x);
      CHECK(basis.reconstruct(d1, d2) == x);
    }
  }
  SUBCASE("dependent bases are rejected") {
    uint32_t b1 = f4.one();
    uint32_t scalar_multiple = emb.embed(7);  // a GF(q^2) multiple of b1
    CHECK_THROWS_AS(BasisExpansion::make(emb, b1, scalar_multiple), std::invalid_argument);
  }
}

TEST_CASE("fieldspec serialization pins the representation") {
  const Field& f = Field::get(3, 2);
  CHECK(f.characteristic() == 3);
  CHECK(f.degree() == 2);
  CHECK(f.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1
  // canonical form: equal coordinates iff equal elements
  std::set<std::vector<int>> seen;
  for (uint32_t x = 0; x < f.size(); ++x) seen.insert(f.coords(x));
  CHECK(seen.size() == f.size());
}
