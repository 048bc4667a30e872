#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "nbtsp/instance.hpp"
#include "nbtsp/rng.hpp"

using namespace nbtsp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimalTsp =
    "NAME : tiny\n"
    "TYPE : TSP\n"
    "DIMENSION : 3\n"
    "EDGE_WEIGHT_TYPE : EUC_2D\n"
    "NODE_COORD_SECTION\n"
    "1 0.0 0.0\n"
    "2 1.0 0.0\n"
    "3 0.0 1.0\n"
    "EOF\n";

}  // namespace

TEST_CASE("construction rejects tiny or duplicated inputs") {
  CHECK_THROWS_AS(CityInstance::make("x", {{0, 0}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(CityInstance::make("x", {{0, 0}, {1, 0}, {1, 0}}), ValidationError);
  const CityInstance ok = CityInstance::make("x", {{0, 0}, {1, 0}, {0, 1}});
  CHECK(ok.n() == 3);
}

TEST_CASE("minimal TSPLIB file parses") {
  const CityInstance inst = parse_tsplib(kMinimalTsp);
  CHECK(inst.name == "tiny");
  CHECK(inst.n() == 3);
  CHECK(inst.cities[1].x == 1.0);
  CHECK(inst.metric == Metric::Euclid2D);
}

TEST_CASE("att48 parses to 48 cities with an ATT warning") {
  std::vector<std::string> warnings;
  const CityInstance inst = parse_tsplib(read_file(DATA_DIR "/att48.tsp"), &warnings);
  CHECK(inst.n() == 48);
  CHECK(inst.name == "att48");
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("ATT") != std::string::npos);
  CHECK(inst.cities[0].x == 6734.0);
  CHECK(inst.cities[47].y == 1942.0);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("dimension mismatch") {
    const char* text =
        "TYPE : TSP\nDIMENSION : 5\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
        "1 0 0\n2 1 0\n3 0 1\n4 1 1\nEOF\n";
    CHECK_THROWS_AS(parse_tsplib(text), ParseError);
  }
  SUBCASE("missing NODE_COORD_SECTION") {
    CHECK_THROWS_AS(parse_tsplib("TYPE : TSP\nDIMENSION : 3\nEOF\n"), ParseError);
  }
  SUBCASE("unsupported metric") {
    CHECK_THROWS_AS(parse_tsplib("TYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : GEO\n"),
                    ParseError);
  }
  SUBCASE("wrong type") {
    CHECK_THROWS_AS(parse_tsplib("TYPE : ATSP\n"), ParseError);
  }
  SUBCASE("non-contiguous indices") {
    const char* text =
        "TYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
        "1 0 0\n3 1 0\n2 0 1\nEOF\n";
    CHECK_THROWS_AS(parse_tsplib(text), ParseError);
  }
  SUBCASE("duplicate coordinates") {
    const char* text =
        "TYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
        "1 0 0\n2 0 0\n3 0 1\nEOF\n";
    try {
      parse_tsplib(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line > 0);
    }
  }
}

TEST_CASE("parser tolerates missing colon and extra whitespace") {
  const char* text =
      "NAME tiny2\nTYPE TSP\nCOMMENT ignored stuff\nDIMENSION 3\n"
      "EDGE_WEIGHT_TYPE EUC_2D\nNODE_COORD_SECTION\n"
      "  1   0 0 \n 2  1.5   0\n3 0 1\n";
  const CityInstance inst = parse_tsplib(text);
  CHECK(inst.n() == 3);
  CHECK(inst.cities[1].x == 1.5);
}

TEST_CASE("generated instances serialize and re-parse bit-exactly") {
  SplitMix64 rng(7);
  for (int n : {3, 10, 57}) {
    const CityInstance inst = gen_random_uniform(n, rng.next_u64());
    const CityInstance back = parse_tsplib(to_tsplib(inst));
    REQUIRE(back.n() == inst.n());
    for (int i = 0; i < inst.n(); ++i) {
      CHECK(back.cities[i].x == inst.cities[i].x);
      CHECK(back.cities[i].y == inst.cities[i].y);
    }
  }
}

TEST_CASE("random generation is deterministic and in the unit square") {
  const CityInstance a = gen_random_uniform(8, 42);
  const CityInstance b = gen_random_uniform(8, 42);
  REQUIRE(a.n() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(a.cities[i] == b.cities[i]);
  }
  const CityInstance c = gen_random_uniform(12, 5);
  CHECK(c.n() == 12);
  for (const Vec2& p : c.cities) {
    CHECK(p.x >= 0.0);
    CHECK(p.x < 1.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y < 1.0);
  }
  CHECK(gen_random_uniform(8, 1).cities != gen_random_uniform(8, 2).cities);
  CHECK_THROWS_AS(gen_random_uniform(2, 0), DomainError);
}

TEST_CASE("grid generation attaches known optima") {
  const CityInstance g44 = gen_grid(4, 4);
  CHECK(g44.n() == 16);
  REQUIRE(g44.optimal_cost.has_value());
  CHECK(*g44.optimal_cost == 16.0);

  const CityInstance g22 = gen_grid(2, 2);
  REQUIRE(g22.optimal_cost.has_value());
  CHECK(*g22.optimal_cost == 4.0);

  const CityInstance row = gen_grid(1, 3);
  CHECK(row.n() == 3);
  REQUIRE(row.optimal_cost.has_value());
  CHECK(*row.optimal_cost == 4.0);  // out-and-back along the line

  const CityInstance g33 = gen_grid(3, 3);
  REQUIRE(g33.optimal_cost.has_value());
  CHECK(*g33.optimal_cost == doctest::Approx(8.0 + std::sqrt(2.0)));

  CHECK_THROWS_AS(gen_grid(1, 2), DomainError);
}

TEST_CASE("distance matrix is symmetric with zero diagonal") {
  const CityInstance square = CityInstance::make("sq", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const DistanceMatrix d = distance_matrix(square);
  std::set<double> offdiag;
  for (int i = 0; i < 4; ++i) {
    CHECK(d(i, i) == 0.0);
    for (int j = 0; j < 4; ++j) {
      CHECK(d(i, j) == d(j, i));
      if (i != j) offdiag.insert(d(i, j));
    }
  }
  CHECK(offdiag == std::set<double>{1.0, std::sqrt(2.0)});

  const DistanceMatrix g = distance_matrix(gen_grid(4, 4));
  double min_off = 1e300;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) min_off = std::min(min_off, g(i, j));
  CHECK(min_off == 1.0);
}

TEST_CASE("sampled triples satisfy the triangle inequality") {
  const CityInstance inst = gen_random_uniform(40, 99);
  const DistanceMatrix d = distance_matrix(inst);
  SplitMix64 rng(100);
  for (int it = 0; it < 2000; ++it) {
    const int a = static_cast<int>(rng.next_u64() % 40);
    const int b = static_cast<int>(rng.next_u64() % 40);
    const int c = static_cast<int>(rng.next_u64() % 40);
    CHECK(d(a, c) <= d(a, b) + d(b, c) + 1e-12);
  }
}

TEST_CASE("enclosing geometry centers and covers") {
  const CityInstance square = CityInstance::make("sq", {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto [center, radius] = enclosing_geometry(square);
  CHECK(center.x == doctest::Approx(0.5));
  CHECK(center.y == doctest::Approx(0.5));
  CHECK(radius == doctest::Approx(std::sqrt(2.0) / 2.0));

  // Translation moves the center identically.
  std::vector<Vec2> shifted;
  for (const Vec2& c : square.cities) shifted.push_back(c + Vec2{10.0, 10.0});
  const auto g2 = enclosing_geometry(CityInstance::make("sq2", shifted));
  CHECK(g2.center.x == doctest::Approx(10.5));
  CHECK(g2.center.y == doctest::Approx(10.5));
  CHECK(g2.radius == doctest::Approx(radius));

  const auto g44 = enclosing_geometry(gen_grid(4, 4));
  CHECK(g44.center.x == doctest::Approx(1.5));
  CHECK(g44.center.y == doctest::Approx(1.5));
  CHECK(g44.radius == doctest::Approx(1.5 * std::sqrt(2.0)));

  // Coverage over random instances.
  for (std::uint64_t seed : {1, 2, 3}) {
    const CityInstance inst = gen_random_uniform(25, seed);
    const auto g = enclosing_geometry(inst);
    for (const Vec2& c : inst.cities) CHECK(distance(c, g.center) <= g.radius + 1e-12);
  }
}
