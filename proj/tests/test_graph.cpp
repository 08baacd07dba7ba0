#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "thresh/errors.hpp"
#include "thresh/graph.hpp"

using namespace thresh;

TEST_CASE("parse_sequence transcribes bits") {
  const auto single = parse_sequence("");
  CHECK(single.vertex_count() == 1);
  CHECK(single.bits().empty());

  const auto k2 = parse_sequence("1");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.bits() == std::vector<std::uint8_t>{1});

  const auto g = parse_sequence("101");
  CHECK(g.vertex_count() == 4);
  CHECK(g.bits() == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(g.to_string() == "101");
}

TEST_CASE("parse_sequence names the offending position") {
  try {
    (void)parse_sequence("10x1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_sequence(" 1"), ParseError);
  CHECK_THROWS_AS((void)parse_sequence("2"), ParseError);
  CHECK_THROWS_AS(CreationSequence(std::vector<std::uint8_t>{0, 2}), DomainError);
}

TEST_CASE("edge_query follows the lower endpoint's bit") {
  const ThresholdGraph k2(parse_sequence("1"));
  CHECK(k2.edge_query(1, 2));
  const ThresholdGraph e2(parse_sequence("0"));
  CHECK_FALSE(e2.edge_query(2, 1));

  const ThresholdGraph g(parse_sequence("101"));
  CHECK_FALSE(g.edge_query(2, 4));
  CHECK(g.edge_query(3, 4));
  CHECK(g.edge_query(4, 1));
}

TEST_CASE("edge_query rejects bad vertices") {
  const ThresholdGraph g(parse_sequence("11"));
  CHECK_THROWS_AS((void)g.edge_query(0, 1), DomainError);
  CHECK_THROWS_AS((void)g.edge_query(1, 4), DomainError);
  CHECK_THROWS_AS((void)g.edge_query(2, 2), DomainError);
}

TEST_CASE("edge_count") {
  CHECK(ThresholdGraph(parse_sequence("1")).edge_count() == 1);
  CHECK(ThresholdGraph(parse_sequence("11")).edge_count() == 3);
  const ThresholdGraph g(parse_sequence("101"));
  std::uint64_t enumerated = 0;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) enumerated += g.edge_query(i, j);
  CHECK(enumerated == 4);
  CHECK(g.edge_count() == 4);
  CHECK(ThresholdGraph(parse_sequence("")).edge_count() == 0);
}

TEST_CASE("to_dense_adjacency small cases") {
  const auto a = to_dense_adjacency(ThresholdGraph(parse_sequence("1")));
  CHECK(a.size() == 2);
  CHECK(a(0, 1) == 1);
  CHECK(a(1, 0) == 1);
  CHECK(a(0, 0) == 0);
  CHECK(a(1, 1) == 0);

  const auto one = to_dense_adjacency(ThresholdGraph(parse_sequence("")));
  CHECK(one.size() == 1);
  CHECK(one(0, 0) == 0);

  const auto k3 = to_dense_adjacency(ThresholdGraph(parse_sequence("11")));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 0 : 1));
}

TEST_CASE("to_dense_adjacency honours the size cap") {
  const ThresholdGraph g(parse_sequence(std::string(9, '1')));
  CHECK_THROWS_AS((void)to_dense_adjacency(g, 9), CapExceeded);
  CHECK(to_dense_adjacency(g, 10).size() == 10);

  const std::size_t saved = oracle_cap();
  set_oracle_cap(5);
  CHECK_THROWS_AS((void)to_dense_adjacency(g), CapExceeded);
  set_oracle_cap(saved);
  CHECK(to_dense_adjacency(g).size() == 10);
}

TEST_CASE("adjacency structure properties on random graphs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const ThresholdGraph g(testing::random_bits(rng, n));
    const auto a = to_dense_adjacency(g);
    mpz_class total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(a(i - 1, i - 1) == 0);
      for (std::size_t j = 1; j <= n; ++j) {
        total += a(i - 1, j - 1);
        CHECK(a(i - 1, j - 1) == a(j - 1, i - 1));
        if (i != j) {
          CHECK(g.edge_query(i, j) == g.edge_query(j, i));
          CHECK(a(i - 1, j - 1) == (g.edge_query(i, j) ? 1 : 0));
        }
      }
    }
    CHECK(total == 2 * mpz_class(static_cast<unsigned long>(g.edge_count())));
    if (n >= 2) {
      bool isolated = true;
      for (std::size_t j = 2; j <= n; ++j) isolated = isolated && !g.edge_query(1, j);
      CHECK(isolated == (g.sequence().bit(1) == 0));
    }
  }
}

TEST_CASE("distinct sequences give distinct graphs") {
  CHECK(ThresholdGraph(parse_sequence("10")) == ThresholdGraph(parse_sequence("10")));
  CHECK_FALSE(ThresholdGraph(parse_sequence("10")) == ThresholdGraph(parse_sequence("01")));
}
