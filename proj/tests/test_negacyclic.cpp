#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "negaconv/negacyclic.hpp"
#include "oracles.hpp"

using namespace negaconv;

namespace {

// random defining set as a union of randomly chosen cosets
DefiningSet random_defining_set(int n, int q, std::mt19937_64& rng, int max_cosets = -1) {
  auto cosets = all_odd_cosets(n, q);
  std::vector<int> residues;
  int limit = max_cosets < 0 ? int(cosets.size()) : max_cosets;
  for (const auto& cs : cosets) {
    if (int(residues.size()) / 2 >= limit) break;
    if (rng() % 2)
      residues.insert(residues.end(), cs.begin(), cs.end());
  }
  return make_defining_set(n, q, std::move(residues));
}

}  // namespace

TEST_CASE("cosets") {
  SUBCASE("q=5, n=26") {
    CHECK(coset_of(13, 26, 5) == std::vector<int>{13});
    CHECK(coset_of(11, 26, 5) == std::vector<int>{11, 15});  // 11*25 = 275 = 15 mod 52
    CHECK(coset_of(9, 26, 5) == std::vector<int>{9, 17});
  }
  SUBCASE("q=3, n=5") {
    CHECK(coset_of(3, 5, 3) == std::vector<int>{3, 7});  // 3*9 = 27 = 7 mod 10
    CHECK(coset_of(1, 5, 3) == std::vector<int>{1, 9});
    CHECK(coset_of(5, 5, 3) == std::vector<int>{5});  // the singleton {n}
  }
  SUBCASE("even representatives are rejected") {
    CHECK_THROWS_AS(coset_of(4, 5, 3), std::invalid_argument);
  }
}

TEST_CASE("coset closed forms") {
  SUBCASE("q=5 full-length: 1 + 1 + 12 cosets covering all 26 odd residues") {
    auto rep = verify_coset_structure(5, CosetPattern::kFullLength);
    CHECK(rep.pass);
    CHECK(rep.coset_count == 14);
    CHECK(rep.n == 26);
  }
  SUBCASE("q=3 half-length: {5}, {1,9}, {3,7}") {
    auto rep = verify_coset_structure(3, CosetPattern::kHalfLength);
    CHECK(rep.pass);
    CHECK(rep.coset_count == 3);
    auto cosets = all_odd_cosets(5, 3);
    std::set<std::vector<int>> got(cosets.begin(), cosets.end());
    CHECK(got == std::set<std::vector<int>>{{5}, {1, 9}, {3, 7}});
  }
  SUBCASE("q=7 rejected for full-length pattern") {
    CHECK_THROWS_AS(verify_coset_structure(7, CosetPattern::kFullLength),
                    std::invalid_argument);
  }
}

TEST_CASE("bch defining sets") {
  SUBCASE("q=5, n=26, b=13, delta=4 gives {9,11,13,15,17}") {
    DefiningSet z = bch_defining_set(26, 5, 13, 4);
    CHECK(z.residues == std::vector<int>{9, 11, 13, 15, 17});
  }
  SUBCASE("q=3, n=5, b=1, delta=3 gives {1,3,7,9}") {
    DefiningSet z = bch_defining_set(5, 3, 1, 3);
    CHECK(z.residues == std::vector<int>{1, 3, 7, 9});
  }
  SUBCASE("delta=2 is a single coset") {
    DefiningSet z = bch_defining_set(5, 3, 3, 2);
    CHECK(z.residues == coset_of(3, 5, 3));
  }
  SUBCASE("closure is validated") {
    CHECK_THROWS_AS(make_defining_set(5, 3, {1}), std::invalid_argument);  // missing 9
    CHECK_THROWS_AS(make_defining_set(5, 3, {2, 8}), std::invalid_argument);  // even
  }
}

TEST_CASE("designed distance") {
  SUBCASE("q=3, n=5, Z={1,3,7,9}: cyclic run 7,9,1,3 gives 5") {
    CHECK(bch_designed_distance(make_defining_set(5, 3, {1, 3, 7, 9})) == 5);
  }
  SUBCASE("q=5, n=26, Z={9..17} gives 6") {
    CHECK(bch_designed_distance(bch_defining_set(26, 5, 13, 4)) == 6);
  }
  SUBCASE("singleton coset gives 2") {
    CHECK(bch_designed_distance(bch_defining_set(26, 5, 13, 2)) == 2);
  }
  SUBCASE("matches the all-starts oracle on random sets") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
      for (auto [q, n] : {std::pair<int, int>{3, 5}, {5, 13}, {5, 26}}) {
        DefiningSet z = random_defining_set(n, q, rng);
        if (z.empty()) continue;
        REQUIRE(bch_designed_distance(z) == oracle::designed_distance_all_starts(z));
      }
    }
  }
}

TEST_CASE("build_code") {
  const CodeContext& ctx5 = CodeContext::get(5, 26);
  SUBCASE("empty defining set gives the full code") {
    NegacyclicCode c = build_code(ctx5, make_defining_set(26, 5, {}));
    CHECK(c.k == 26);
    CHECK(c.designed_distance == 1);
    CHECK(c.g == Poly::one(*ctx5.f2));
  }
  SUBCASE("q=5, n=26, Z={9..17} has dimension 21") {
    NegacyclicCode c = build_code(ctx5, bch_defining_set(26, 5, 13, 4));
    CHECK(c.k == 21);
  }
  SUBCASE("q=3, n=5, Z={1,3,7,9} has dimension 1") {
    const CodeContext& ctx3 = CodeContext::get(3, 5);
    NegacyclicCode c = build_code(ctx3, make_defining_set(5, 3, {1, 3, 7, 9}));
    CHECK(c.k == 1);
  }
}

TEST_CASE("parity-check matrices") {
  SUBCASE("q=5, n=26, b=13, delta=4: rank 5 after removing one dependent row") {
    const CodeContext& ctx = CodeContext::get(5, 26);
    NegacyclicCode c = build_bch_code(ctx, 13, 4);
    ParityMatrix pm = parity_check_matrix(c);
    CHECK(pm.H.rows == 5);
    CHECK(pm.removed_rows == 1);
    CHECK(pm.raw_rows == 6);
  }
  SUBCASE("q=3, n=5, b=1, delta=2: rank 2") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_bch_code(ctx, 1, 2);
    ParityMatrix pm = parity_check_matrix(c);
    CHECK(pm.H.rows == 2);
    CHECK(pm.removed_rows == 0);
  }
  SUBCASE("G H^T = 0 and generator has full rank for a grid of codes") {
    std::mt19937_64 rng(41);
    int cases = 0;
    while (cases < 1000) {
      for (auto [q, n] : {std::pair<int, int>{3, 5}, {5, 13}, {5, 26}, {7, 25}}) {
        const CodeContext& ctx = CodeContext::get(q, n);
        int b = 1 + 2 * int(rng() % uint64_t(n));
        int delta = 2 + int(rng() % 4);
        NegacyclicCode c = build_bch_code(ctx, b, delta);
        if (c.k == 0) continue;
        ParityMatrix pm = parity_check_matrix(c);
        Mat G = generator_matrix(c);
        REQUIRE((G * pm.H.transpose()).is_zero());
        REQUIRE(rank_of(G) == c.k);
        ++cases;
      }
    }
  }
  SUBCASE("generator rows are annihilated by every defining-set root") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_bch_code(ctx, 1, 3);
    Mat G = generator_matrix(c);
    const Field& f4 = *ctx.f4;
    for (int r = 0; r < G.rows; ++r)
      for (int z : c.Z.residues) {
        uint32_t acc = f4.zero();
        for (int col = 0; col < G.cols; ++col)
          acc = f4.add(acc, f4.mul(ctx.emb.embed(G.at(r, col)),
                                   ctx.beta_pow[size_t(int64_t(z) * col % 10)]));
        REQUIRE(acc == f4.zero());
      }
  }
  SUBCASE("parity rank is basis independent") {
    std::mt19937_64 rng(43);
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_bch_code(ctx, 1, 3);
    int trials = 0;
    while (trials < 1000) {
      uint32_t b1 = uint32_t(rng() % ctx.f4->size());
      uint32_t b2 = uint32_t(rng() % ctx.f4->size());
      BasisExpansion alt;
      try {
        alt = BasisExpansion::make(ctx.emb, b1, b2);
      } catch (const std::invalid_argument&) {
        continue;  // dependent pair, resample
      }
      ParityMatrix pm = parity_check_matrix(c, alt);
      REQUIRE(pm.H.rows == c.Z.size());
      ++trials;
    }
  }
}

TEST_CASE("exact distances") {
  SUBCASE("q=3, n=5, Z={1,9}: enumeration over 729 words gives d = 3") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_bch_code(ctx, 1, 2);
    CHECK(c.k == 3);
    CHECK(min_weight_enumerated(c, 1000) == 3);
    CHECK(oracle::min_weight_by_poly_route(c) == 3);  // independent route
  }
  SUBCASE("q=5, n=26, k=21: column independence over C(26,5) subsets confirms d = 6") {
    const CodeContext& ctx = CodeContext::get(5, 26);
    NegacyclicCode c = build_bch_code(ctx, 13, 4);
    ParityMatrix pm = parity_check_matrix(c);
    CHECK(oracle::binomial(26, 5) == 65780);
    CHECK(mds_by_column_independence(pm.H, 100000));
    DistanceResult d = block_distance(c, pm, 1000000, 1000000);
    CHECK(d.exact());
    CHECK(d.lower == 6);
    CHECK(d.method == DistanceMethod::kMdsColumns);
  }
  SUBCASE("full code has d = 1") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_code(ctx, make_defining_set(5, 3, {}));
    CHECK(min_weight_enumerated(c, 100000) == 1);
  }
  SUBCASE("budget exhaustion throws") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_bch_code(ctx, 1, 2);
    CHECK_THROWS_AS(min_weight_enumerated(c, 10), std::domain_error);
    ParityMatrix pm = parity_check_matrix(c);
    CHECK_THROWS_AS(mds_by_column_independence(pm.H, 2), std::domain_error);
  }
}

TEST_CASE("BCH bound: enumerated distance >= designed distance") {
  std::mt19937_64 rng(53);
  int cases = 0;
  while (cases < 1000) {
    // q=3, n=5 exhaustively enumerable for every k
    DefiningSet z = random_defining_set(5, 3, rng);
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_code(ctx, std::move(z));
    if (c.k == 0) continue;
    int d = min_weight_enumerated(c, 100000);
    REQUIRE(d >= c.designed_distance);
    ++cases;
  }
  // a few larger instances within the 10^5 word budget
  for (int delta = 2; delta <= 6; ++delta) {
    const CodeContext& ctx = CodeContext::get(5, 13);
    NegacyclicCode c = build_bch_code(ctx, 13, delta);
    if (c.k > 0 && c.k <= 3) {
      int d = min_weight_enumerated(c, 100000);
      REQUIRE(d >= c.designed_distance);
    }
  }
}

TEST_CASE("generator divides x^n + 1 for random defining sets") {
  std::mt19937_64 rng(61);
  int cases = 0;
  while (cases < 1000) {
    for (auto [q, n] : {std::pair<int, int>{3, 5}, {5, 13}, {5, 26}, {7, 25}}) {
      const CodeContext& ctx = CodeContext::get(q, n);
      NegacyclicCode c = build_code(ctx, random_defining_set(n, q, rng));
      REQUIRE(divmod(Poly::x_n_plus_1(*ctx.f2, n), c.g).second.is_zero());
      REQUIRE(c.g.degree() == c.Z.size());
      ++cases;
    }
  }
}

TEST_CASE("hermitian dual containment") {
  SUBCASE("q=5, n=26, Z={9..17}: -5Z = {7,49,39,29,19} disjoint, contained") {
    const CodeContext& ctx = CodeContext::get(5, 26);
    NegacyclicCode c = build_bch_code(ctx, 13, 4);
    ContainmentResult r = hermitian_dual_containment(c, 1000000);
    CHECK(r.contained);
    CHECK(r.by_defining_set);
    REQUIRE(r.by_explicit.has_value());
    CHECK(*r.by_explicit);
    CHECK(r.methods_agree);
  }
  SUBCASE("q=3, n=5, Z={1,3,7,9}: 7 = -3 mod 10 lies in Z, not contained") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_code(ctx, make_defining_set(5, 3, {1, 3, 7, 9}));
    ContainmentResult r = hermitian_dual_containment(c, 1000000);
    CHECK_FALSE(r.contained);
    REQUIRE(r.by_explicit.has_value());
    CHECK_FALSE(*r.by_explicit);
    CHECK(r.methods_agree);
  }
  SUBCASE("empty defining set: contained vacuously") {
    const CodeContext& ctx = CodeContext::get(3, 5);
    NegacyclicCode c = build_code(ctx, make_defining_set(5, 3, {}));
    ContainmentResult r = hermitian_dual_containment(c, 1000000);
    CHECK(r.contained);
  }
}

TEST_CASE("MDS witness codeword") {
  const CodeContext& ctx = CodeContext::get(5, 26);
  NegacyclicCode c = build_bch_code(ctx, 13, 4);
  ParityMatrix pm = parity_check_matrix(c);
  auto w = mds_min_weight_codeword(c, pm);
  int weight = 0;
  for (uint32_t v : w)
    if (v) ++weight;
  CHECK(weight == 6);
  // really a codeword: annihilated by H
  const Field& f = *ctx.f2;
  for (int r = 0; r < pm.H.rows; ++r) {
    uint32_t acc = 0;
    for (int col = 0; col < 26; ++col) acc = f.add(acc, f.mul(pm.H.at(r, col), w[size_t(col)]));
    REQUIRE(acc == 0);
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(CodeContext::get(5, 27), std::domain_error);   // 54 does not divide 624
  CHECK_THROWS_AS(CodeContext::get(4, 5), std::invalid_argument);  // even q
  CHECK_THROWS_AS(CodeContext::get(15, 4), std::invalid_argument);  // not a prime power
  CHECK_THROWS_AS(CodeContext::get(3, 6), std::invalid_argument);   // gcd(n, q) != 1
  CHECK_THROWS_AS(CodeContext::get(3, 4), std::domain_error);  // ord_8(9) = 1 tower degenerates
}
