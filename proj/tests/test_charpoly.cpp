#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "thresh/charpoly.hpp"
#include "thresh/errors.hpp"
#include "thresh/oracle.hpp"

using namespace thresh;

namespace {

ThresholdGraph graph(const char* bits) { return ThresholdGraph(parse_sequence(bits)); }

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

WeightedThresholdMatrix random_weighted(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<mpz_class> b(n - 1), d(n);
  for (auto& x : b) x = dist(rng);
  for (auto& x : d) x = dist(rng);
  return WeightedThresholdMatrix(std::move(b), std::move(d));
}

}  // namespace

TEST_CASE("weighted matrix shape checks") {
  CHECK_THROWS_AS(WeightedThresholdMatrix(ints({}), ints({})), DomainError);
  CHECK_THROWS_AS(WeightedThresholdMatrix(ints({1}), ints({1})), DomainError);
  CHECK_THROWS_AS(WeightedThresholdMatrix(ints({}), ints({1, 2})), DomainError);
  const WeightedThresholdMatrix m(ints({4, 5}), ints({1, 2, 3}));
  CHECK(m.at(1, 3) == 4);
  CHECK(m.at(3, 2) == 5);
  CHECK(m.at(2, 2) == 2);
  const auto dense = m.to_dense();
  CHECK(dense(2, 0) == 4);
  CHECK(dense(1, 2) == 5);
}

TEST_CASE("det_weighted examples") {
  CHECK(det_weighted(WeightedThresholdMatrix(ints({}), ints({7}))) == 7);
  CHECK(det_weighted(WeightedThresholdMatrix(ints({1}), ints({0, 0}))) == -1);
  CHECK(det_weighted(WeightedThresholdMatrix(ints({1, 1}), ints({0, 0, 0}))) == 2);
  // Cross-check the frozen values against the independent references.
  const WeightedThresholdMatrix k3(ints({1, 1}), ints({0, 0, 0}));
  CHECK(testing::cofactor_det(k3.to_dense()) == 2);
  CHECK(oracle::bareiss_det(k3.to_dense()) == 2);
}

TEST_CASE("det_weighted agrees with Leibniz on small random matrices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto m = random_weighted(rng, n, -9, 9);
    CHECK(det_weighted(m) == testing::leibniz_det(m.to_dense()));
  }
}

TEST_CASE("det_weighted agrees with Bareiss up to n = 64") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const auto m = random_weighted(rng, n, -9, 9);
    CHECK(det_weighted(m) == oracle::bareiss_det(m.to_dense()));
  }
}

TEST_CASE("charpoly_eval examples") {
  CHECK(charpoly_eval(graph("1"), 2) == 3);
  CHECK(charpoly_eval(graph("1"), 1) == 0);
  CHECK(charpoly_eval(graph("1"), -1) == 0);
  CHECK(charpoly_eval(graph(""), 5) == 5);
  // K3 = (x+1)^2 (x-2) vanishes at 2 and -1.
  CHECK(charpoly_eval(graph("11"), 2) == 0);
  CHECK(charpoly_eval(graph("11"), -1) == 0);
}

TEST_CASE("charpoly_quadratic examples") {
  CHECK(charpoly_quadratic(graph("")) == IntPoly::lambda());
  CHECK(charpoly_quadratic(graph("0")) == IntPoly{0, 0, 1});
  const IntPoly k3{-2, -3, 0, 1};
  CHECK(oracle::dense_charpoly(to_dense_adjacency(graph("11"))) == k3);
  CHECK(charpoly_quadratic(graph("11")) == k3);
}

TEST_CASE("build_factor entries") {
  const PolyMatrix2 zero = build_factor(0);
  CHECK(zero.e11 == IntPoly{0, 2});
  CHECK(zero.e12 == IntPoly{0, 0, -1});
  const PolyMatrix2 one = build_factor(1);
  CHECK(one.e11 == IntPoly{2, 2});
  CHECK(one.e12 == IntPoly{-1, -2, -1});
  for (const auto& f : {zero, one}) {
    CHECK(f.e21 == IntPoly{1});
    CHECK(f.e22.is_zero());
  }
  CHECK_THROWS_AS((void)build_factor(2), DomainError);
  CHECK_THROWS_AS((void)build_factor(-1), DomainError);
}

TEST_CASE("unnegated factors produce det(lambda I + A)") {
  // Plugging b directly (instead of -b) into the step matrix computes the
  // determinant of lambda I + A = (-1)^n chi(-lambda). On K3 that is
  // lambda^3 - 3 lambda + 2, not chi = lambda^3 - 3 lambda - 2.
  const PolyMatrix2 plain{IntPoly{-2, 2}, IntPoly{-1, 2, -1}, IntPoly{1}, IntPoly{}};
  const auto d3 = apply_to_vector(matmul2(plain, plain), {IntPoly::lambda(), IntPoly{1}}).first;
  CHECK(d3 == IntPoly{2, -3, 0, 1});
  CHECK(d3 != charpoly_balanced(graph("11")));
}

TEST_CASE("charpoly_balanced examples") {
  CHECK(charpoly_balanced(graph("")) == IntPoly::lambda());
  CHECK(charpoly_balanced(graph("1")) == IntPoly{-1, 0, 1});
  CHECK(charpoly_balanced(graph("101")) == charpoly_quadratic(graph("101")));
}

TEST_CASE("balanced_product keeps factor order") {
  // Non-commuting constant matrices; compare with a left-to-right fold.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (std::size_t m = 0; m <= 19; ++m) {
    std::vector<PolyMatrix2> fs;
    for (std::size_t i = 0; i < m; ++i) {
      fs.push_back({IntPoly{dist(rng), dist(rng)}, IntPoly{dist(rng)}, IntPoly{dist(rng)},
                    IntPoly{dist(rng), 0, dist(rng)}});
    }
    PolyMatrix2 fold = PolyMatrix2::identity();
    for (const auto& f : fs) fold = matmul2(fold, f);
    CHECK(balanced_product(fs) == fold);
    CHECK(balanced_product(fs, 3) == fold);
  }
}

TEST_CASE("balanced result does not depend on thread count") {
  std::mt19937_64 rng(9);
  const ThresholdGraph g(testing::random_bits(rng, 300));
  const auto one = charpoly_balanced(g, 1);
  CHECK(charpoly_balanced(g, 2) == one);
  CHECK(charpoly_balanced(g, 7) == one);
  CHECK(charpoly_balanced(g, 0) == one);
  CHECK(charpoly_quadratic(g) == one);
}

TEST_CASE("quadratic, balanced and dense oracle agree for n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& seq : testing::all_sequences(n)) {
      const ThresholdGraph g(seq);
      const auto expect = oracle::dense_charpoly(to_dense_adjacency(g));
      REQUIRE(charpoly_quadratic(g) == expect);
      REQUIRE(charpoly_balanced(g) == expect);
    }
  }
}

TEST_CASE("charpoly_weighted examples") {
  CHECK(charpoly_weighted(WeightedThresholdMatrix(ints({}), ints({5}))) == IntPoly{-5, 1});
  CHECK(charpoly_weighted(WeightedThresholdMatrix(ints({0}), ints({2, 3}))) == IntPoly{6, -5, 1});
  CHECK(charpoly_weighted(WeightedThresholdMatrix(ints({1}), ints({1, 1}))) == IntPoly{0, -2, 1});
}

TEST_CASE("charpoly_weighted matches the dense oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const auto m = random_weighted(rng, n, -9, 9);
    const auto p = charpoly_weighted(m);
    CHECK(p == oracle::dense_charpoly(m.to_dense()));
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == 1);
    const mpz_class x = static_cast<long>(rng() % 21) - 10;
    CHECK(poly_eval(p, x) == det_weighted(WeightedThresholdMatrix(
                                 [&] {
                                   std::vector<mpz_class> b = m.off_diagonal();
                                   for (auto& v : b) v = -v;
                                   return b;
                                 }(),
                                 [&] {
                                   std::vector<mpz_class> d = m.diagonal();
                                   for (auto& v : d) v = x - v;
                                   return d;
                                 }())));
  }
}

TEST_CASE("charpoly_weighted with zero diagonal and 0/1 weights is the graph charpoly") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const ThresholdGraph g(testing::random_bits(rng, 1 + rng() % 80));
    CHECK(charpoly_weighted(WeightedThresholdMatrix::adjacency(g)) == charpoly_balanced(g));
  }
}

TEST_CASE("determinant and chi(0) sign relation") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const ThresholdGraph g(testing::random_bits(rng, n));
    const mpz_class sign = (n % 2) ? -1 : 1;
    CHECK(det_weighted(WeightedThresholdMatrix::adjacency(g)) ==
          sign * poly_eval(charpoly_balanced(g), 0));
  }
}

TEST_CASE("coefficients are bounded by n!") {
  std::mt19937_64 rng(44);
  auto check_bound = [](const ThresholdGraph& g) {
    const mpz_class bound = testing::factorial(g.vertex_count());
    const IntPoly p = charpoly_balanced(g);
    for (const auto& c : p.coeffs()) REQUIRE(abs(c) <= bound);
  };
  for (std::size_t n = 1; n <= 11; ++n)
    for (const auto& s : testing::all_sequences(n)) check_bound(ThresholdGraph(s));
  for (std::size_t n = 12; n <= 20; ++n) {
    check_bound(ThresholdGraph(CreationSequence(std::vector<std::uint8_t>(n - 1, 1))));
    for (int trial = 0; trial < 50; ++trial) check_bound(ThresholdGraph(testing::random_bits(rng, n)));
  }
}

TEST_CASE("algorithm dispatch") {
  const auto g = graph("1101");
  const auto expect = charpoly_quadratic(g);
  for (auto a : {Algorithm::Auto, Algorithm::Quadratic, Algorithm::Balanced, Algorithm::Oracle,
                 Algorithm::Interpolation}) {
    CHECK(charpoly(g, a) == expect);
  }
  const std::size_t saved = auto_crossover();
  set_auto_crossover(2);
  CHECK(charpoly(g, Algorithm::Auto) == expect);
  set_auto_crossover(saved);
  CHECK(auto_crossover() == saved);

  const std::size_t cap = oracle_cap();
  set_oracle_cap(3);
  CHECK_THROWS_AS((void)charpoly(g, Algorithm::Oracle), CapExceeded);
  set_oracle_cap(cap);
}
